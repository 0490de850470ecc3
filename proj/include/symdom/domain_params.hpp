#pragma once

#include "symdom/partition.hpp"
#include "symdom/rational.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace symdom {

// Structure constants of an irreducible hermitian Jordan triple: rank r,
// characteristic multiplicities (a, b), with derived dimension d and genus p.
struct StructureParams {
  int r = 1;
  Rat a = 2;
  Rat b = 0;
  Rat d = 1;  // d = r + b r + a r(r-1)/2
  Rat p = 2;  // p = 2 + a(r-1) + b

  Rat dim_over_rank() const { return d / r; }
  // Genus p_k = 2 + a(r-k-1) + b of the rank r-k Peirce-0 triple.
  Rat genus_of_rank(int k) const;
  // Peirce-0 triple of a rank-k tripotent: rank r-k, same multiplicities.
  StructureParams reduced(int k) const;
  // (rows, cols) of the concrete polynomial model when one exists:
  // the ball C^d as C^{1 x d}, or the matrix triple C^{r x s} at a = 2.
  std::optional<std::pair<int, int>> matrix_shape() const;
};

StructureParams derive_params(int r, const Rat& a, const Rat& b);

// Embedded Wallach parameter nu_k = d/r + (a/2)(r-k) for 1 <= k <= r.
// k = 0 returns the degenerate-reading placeholder p - 1 + a/2; it is never
// used implicitly by the rest of the library.
Rat nu_k(const StructureParams& P, int k);

// Multivariate Pochhammer symbol (nu)_mu = prod_j (nu - (a/2)(j-1))_{m_j}.
// Poles simply yield a zero factor; callers test finiteness/positivity.
Rat pochhammer(const Rat& nu, const Partition& mu, const Rat& a);

// Parameter lists of a hypergeometric measure: isotype norms rescale the
// Fischer norms by coefficient(mu) = prod_i (x_i)_mu / prod_i (y_i)_mu for
// partitions mu of length <= ell.
struct HypergeomType {
  std::vector<Rat> x;  // numerator, length h
  std::vector<Rat> y;  // denominator, length h + 1 (before cancellation: h+1)
  Rat a = 2;
  int ell = 0;

  Rat coefficient(const Partition& mu) const;
  friend bool operator==(const HypergeomType&, const HypergeomType&) = default;
  std::string to_string() const;
};

// Validates positivity (every parameter must exceed a(ell-1)/2), cancels
// identical numerator/denominator entries and sorts the lists.
HypergeomType make_hypergeom_type(std::vector<Rat> x, std::vector<Rat> y, Rat a, int ell);

// Type of the measure on the boundary-orbit/Kepler set with k pinned
// coordinates and rank bound lambda: x = {nu_lambda, a lambda/2},
// y = {nu_k, d/r, a r/2}. k = 0 requires an explicit nu > p - 1.
HypergeomType make_type(const StructureParams& P, int k, int lambda,
                        std::optional<Rat> nu = std::nullopt);

// Peaking limit at a minimal tripotent: all parameters drop by a/2 and the
// rank bound by one.
HypergeomType limit_type(const HypergeomType& t);

// Stratum label of a boundary point: i unit singular values, rank j.
struct StratumLabel {
  int i = 0, j = 0;
  friend auto operator<=>(const StratumLabel&, const StratumLabel&) = default;
};

// Classifies a descending singular-value tuple within the closed set
// with k pinned units and rank bound lambda; nullopt means Outside.
// Ties at the tolerance boundary resolve toward the smaller stratum index.
std::optional<StratumLabel> classify_stratum(std::span<const double> sv, int k,
                                             int lambda, double tol = 1e-9);

// Subnormality parameter set: the embedded values {nu_j : 1 <= j <= r}
// together with the open ray (p-1, oo). Always nu_1 = p - 1.
struct SubnormalitySet {
  std::vector<Rat> embedded;  // nu_1 >= ... >= nu_r
  Rat ray_start;              // p - 1
  bool contains(const Rat& nu) const;
};

SubnormalitySet w_sub(const StructureParams& P);

}  // namespace symdom
