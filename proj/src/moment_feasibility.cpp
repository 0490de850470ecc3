#include "symdom/moment_feasibility.hpp"

#include "symdom/errors.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace symdom {

MomentSequence radial_moments(int d, const HypergeomType& type, int M) {
  if (d < 1) throw ParameterError("ball dimension must be positive");
  if (type.ell < 1) throw ParameterError("rank-1 type required");
  MomentSequence seq;
  seq.d = d;
  seq.type = type;
  for (int m = 0; m <= M; ++m) {
    Partition mu = (m == 0) ? Partition() : Partition({m});
    seq.values.push_back(rising(Rat(d), m) * type.coefficient(mu));
  }
  return seq;
}

namespace {

// Cyclic Jacobi eigenvalue sweep in extended precision; n is tiny here.
double jacobi_min_eig(std::vector<std::vector<long double>> A) {
  const std::size_t n = A.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    long double off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += A[i][j] * A[i][j];
    if (off < 1e-36L) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (A[p][q] == 0) continue;
        long double theta = (A[q][q] - A[p][p]) / (2 * A[p][q]);
        long double t = (theta >= 0 ? 1.0L : -1.0L) /
                        (std::abs(theta) + std::sqrt(theta * theta + 1));
        long double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          long double akp = A[k][p], akq = A[k][q];
          A[k][p] = c * akp - s * akq;
          A[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          long double apk = A[p][k], aqk = A[q][k];
          A[p][k] = c * apk - s * aqk;
          A[q][k] = s * apk + c * aqk;
        }
      }
  }
  long double m = A[0][0];
  for (std::size_t i = 1; i < n; ++i) m = std::min(m, A[i][i]);
  return static_cast<double>(m);
}

double hankel_min_eig(const std::vector<Rat>& seq, int size, double tol) {
  Eigen::MatrixXd H(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      H(i, j) = to_double(seq[static_cast<std::size_t>(i + j)]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H, Eigen::EigenvaluesOnly);
  double m = es.eigenvalues().minCoeff();
  if (std::abs(m) < 10 * tol) {
    // near the decision boundary: redo in extended precision
    std::vector<std::vector<long double>> A(
        static_cast<std::size_t>(size), std::vector<long double>(static_cast<std::size_t>(size)));
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j)
        A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            to_long_double(seq[static_cast<std::size_t>(i + j)]);
    m = jacobi_min_eig(std::move(A));
  }
  return m;
}

}  // namespace

HausdorffResult hausdorff_test(const MomentSequence& seq, int size, double tol) {
  if (2 * size > static_cast<int>(seq.values.size()))
    throw ParameterError("Hankel size needs moments up to 2*size-1");
  HausdorffResult res;
  res.min_eig_H = hankel_min_eig(seq.values, size, tol);
  std::vector<Rat> diff;
  for (int m = 0; m + 1 < static_cast<int>(seq.values.size()); ++m)
    diff.push_back(seq.values[static_cast<std::size_t>(m)] -
                   seq.values[static_cast<std::size_t>(m) + 1]);
  res.min_eig_DH = hankel_min_eig(diff, size, tol);
  res.feasible = res.min_eig_H >= -tol && res.min_eig_DH >= -tol;
  return res;
}

std::vector<FeasibilityRow> w_sub_scan(int d, std::span<const Rat> nu_grid,
                                       int size, double tol) {
  std::vector<FeasibilityRow> rows;
  for (const Rat& nu : nu_grid) {
    if (nu <= 0) throw ParameterError("weight grid must be positive");
    HypergeomType t = make_hypergeom_type({}, {nu}, 2, 1);
    MomentSequence seq = radial_moments(d, t, 2 * size);
    HausdorffResult h = hausdorff_test(seq, size, tol);
    rows.push_back(FeasibilityRow{nu, h.feasible, h.min_eig_H, h.min_eig_DH});
  }
  return rows;
}

std::string feasibility_table_json(int d, int size, double tol,
                                   std::span<const FeasibilityRow> rows) {
  std::ostringstream os;
  char buf[64];
  os << "{\"d\":" << d << ",\"size\":" << size;
  std::snprintf(buf, sizeof buf, ",\"tol\":%.12e,", tol);
  os << buf << "\"rows\":[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) os << ",";
    os << "{\"nu\":\"" << rat_to_string(rows[i].nu) << "\",\"feasible\":"
       << (rows[i].feasible ? "true" : "false");
    std::snprintf(buf, sizeof buf, ",\"min_eig_H\":%.12e", rows[i].min_eig_H);
    os << buf;
    std::snprintf(buf, sizeof buf, ",\"min_eig_DH\":%.12e}", rows[i].min_eig_DH);
    os << buf;
  }
  os << "]}";
  return os.str();
}

}  // namespace symdom
