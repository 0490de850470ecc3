#pragma once

#include "symdom/isotype.hpp"
#include "symdom/matrix_poly.hpp"
#include "symdom/toeplitz.hpp"

#include <map>
#include <vector>

namespace symdom {

struct IsotypeComponent {
  Partition mu;
  MatrixPoly poly;
};

// Exact Peter-Weyl decomposition for the scalable models: the ball C^{1 x d}
// (one isotype per degree) and C^{2 x 2} (multiplicity-free torus weight
// spaces, bases from lowering operators and determinant shifts). Unlike the
// Gram-system route in ModelContext, this stays cheap at degree ~10^2.
std::vector<IsotypeComponent> peirce_decompose(const MatrixPoly& f);

struct ResidualOptions {
  int degree_cap = 0;         // 0 = smallest cap meeting the tail target
  double tail_target = 1e-3;  // bound on the neglected relative tail mass
  int max_degree_cap = 2000;
};

struct ResidualPoint {
  int n = 0;
  double residual = 0;
  double tail_rel = 0;  // proven bound on the truncated peaking-series tail
  int degree_cap = 0;
};

// Boundary-representation residual at the minimal diagonal tripotent c = e_11:
//   || T(sym)(h_c^n q) - h_c^n T^c(sym^{(c)}) q || / || h_c^n q ||
// in the type norm, with h_c^n the degree-capped series for exp(n (z|c)) and
// T^c the Toeplitz operator of the limit type on the Peirce-0 model.
// Structural decompositions are exact; only the n-dependent series scalars
// and final norms are floating point.
class ResidualExperiment {
 public:
  // sym: holomorphic polynomial, or the conjugate of a homogeneous linear
  // form. q: polynomial supported on the Peirce-0 block of e_11.
  ResidualExperiment(const HypergeomType& type, Symbol sym, MatrixPoly q);

  ResidualPoint run(int n, const ResidualOptions& opts = {});

 private:
  struct Keyed {
    double scale;
    const MatrixPoly* poly;
  };

  void ensure_depth(int cap);
  int choose_cap(int n, const ResidualOptions& opts, double* tail_rel) const;
  double weighted_pairing(const Partition& mu, const MatrixPoly* a, const MatrixPoly* b);

  HypergeomType type_;
  Symbol sym_;
  MatrixPoly q_;
  int rows_, cols_;
  MatrixPoly little_image_;  // T^c(sym^{(c)}) q, embedded back into V
  std::vector<std::vector<IsotypeComponent>> fam_w_, fam_l_, fam_r_;
  std::vector<double> log_coef_row_;  // log coefficient((s)) for the tail rule
  std::map<std::pair<const MatrixPoly*, const MatrixPoly*>, std::pair<Partition, double>>
      pair_cache_;
};

ResidualPoint boundary_residual(const HypergeomType& type, const Symbol& sym,
                                const MatrixPoly& q, int n,
                                const ResidualOptions& opts = {});

}  // namespace symdom
