#pragma once

#include "symdom/domain_params.hpp"
#include "symdom/rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace symdom {

// Required [0,1]-moments rho_m = (d)_m coefficient((m)) of the radial profile
// of any measure realizing a rank-1 hypergeometric type on the ball C^d.
struct MomentSequence {
  int d = 1;
  HypergeomType type;
  std::vector<Rat> values;  // rho_0 .. rho_M, rho_0 = 1
};

MomentSequence radial_moments(int d, const HypergeomType& type, int M);

struct HausdorffResult {
  bool feasible = false;
  double min_eig_H = 0;   // Hankel of (rho_m)
  double min_eig_DH = 0;  // Hankel of (rho_m - rho_{m+1})
};

// Classical Hausdorff criterion: a [0,1]-measure with these moments exists
// iff both Hankel matrices are positive semidefinite (up to tol).
HausdorffResult hausdorff_test(const MomentSequence& seq, int size, double tol);

struct FeasibilityRow {
  Rat nu;
  bool feasible = false;
  double min_eig_H = 0, min_eig_DH = 0;
};

// Scans weights nu over a grid; feasible exactly on {d} union (d, oo).
std::vector<FeasibilityRow> w_sub_scan(int d, std::span<const Rat> nu_grid,
                                       int size = 12, double tol = 1e-10);

std::string feasibility_table_json(int d, int size, double tol,
                                   std::span<const FeasibilityRow> rows);

}  // namespace symdom
