#pragma once

#include <vector>

namespace symdom {

// Gauss-Jacobi rule on (0,1) for the weight t^power_t (1-t)^power_one_minus_t.
// The weight is absorbed: sum_i w_i f(t_i) ~ int_0^1 t^pt (1-t)^pm f(t) dt,
// exact for polynomials f of degree <= 2n-1. Exponents must exceed -1.
struct GaussJacobiRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussJacobiRule gauss_jacobi01(int n, double power_t, double power_one_minus_t);

}  // namespace symdom
