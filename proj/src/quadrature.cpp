#include "symdom/quadrature.hpp"

#include "symdom/errors.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace symdom {

// Golub-Welsch on the symmetric tridiagonal Jacobi matrix for the weight
// (1-x)^A (1+x)^B on [-1,1], mapped to (0,1) with t = (1+x)/2 so that
// A = power_one_minus_t and B = power_t.
GaussJacobiRule gauss_jacobi01(int n, double power_t, double power_one_minus_t) {
  if (n < 1) throw QuadratureError("need at least one quadrature node");
  const double A = power_one_minus_t, B = power_t;
  if (A <= -1.0 || B <= -1.0) throw QuadratureError("non-integrable weight exponent");

  Eigen::VectorXd diag(n), sub(n > 1 ? n - 1 : 1);
  const double ab = A + B;
  diag(0) = (B - A) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double den = (2.0 * k + ab) * (2.0 * k + ab + 2.0);
    diag(k) = (B * B - A * A) / den;
  }
  // k = 1 separately: the generic formula is 0/0 when A + B = -1
  if (n > 1)
    sub(0) = std::sqrt(4.0 * (1.0 + A) * (1.0 + B) /
                       ((ab + 2.0) * (ab + 2.0) * (ab + 3.0)));
  for (int k = 2; k < n; ++k) {
    double num = 4.0 * k * (k + A) * (k + B) * (k + ab);
    double den = (2.0 * k + ab) * (2.0 * k + ab) * (2.0 * k + ab + 1.0) * (2.0 * k + ab - 1.0);
    sub(k - 1) = std::sqrt(num / den);
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, n > 1 ? sub.head(n - 1) : Eigen::VectorXd(),
                            Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success) throw QuadratureError("tridiagonal eigensolve failed");

  // total mass on (0,1): Beta(B+1, A+1)
  const double logmass = std::lgamma(B + 1.0) + std::lgamma(A + 1.0) - std::lgamma(ab + 2.0);
  const double mass = std::exp(logmass);

  GaussJacobiRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int k = 0; k < n; ++k) {
    rule.nodes[k] = 0.5 * (1.0 + es.eigenvalues()(k));
    const double v0 = es.eigenvectors()(0, k);
    rule.weights[k] = mass * v0 * v0;
  }
  return rule;
}

}  // namespace symdom
