#pragma once

#include "symdom/domain_params.hpp"
#include "symdom/partition.hpp"
#include "symdom/rational.hpp"

#include <map>
#include <span>
#include <vector>

namespace symdom {

// Symmetric polynomial with exact rational coefficients over the monomial
// symmetric basis {m_mu}. Zero coefficients are never stored.
struct SymPoly {
  int nvars = 0;
  std::map<Partition, Rat> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  int degree() const;
  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator*=(const Rat& c);
  friend bool operator==(const SymPoly&, const SymPoly&) = default;
  std::string to_string() const;
};

SymPoly sym_mul(const SymPoly& f, const SymPoly& g);

// Schur polynomial s_mu in n variables, by semistandard tableau enumeration.
SymPoly schur(const Partition& mu, int n);

// Principal specialization s_mu(1,...,1) by the hook-content product.
Rat principal_spec(const Partition& mu, int n);

// Spherical polynomial Phi_mu for multiplicity a: the Jack polynomial with
// parameter alpha = 2/a, normalized so that Phi_mu(1,...,1) = 1. Computed by
// solving the Sekiguchi-Debiard eigenvalue problem triangularly over the
// dominance order, exactly.
SymPoly jack_spherical(const Partition& mu, int n, const Rat& a);
// Shared memoized variant (thread-safe).
const SymPoly& jack_spherical_cached(const Partition& mu, int n, const Rat& a);

// dim P_mu for the concrete models: C(d+m-1, m) on the ball, and
// s_mu(1^r) s_mu(1^s) on the matrix triple C^{r x s}.
Rat dim_isotype(const Partition& mu, const StructureParams& P);

Rat eval(const SymPoly& f, std::span<const Rat> point);
double eval(const SymPoly& f, std::span<const double> point);

// Monomial-expanded form for fast repeated floating evaluation.
struct SymPolyTable {
  explicit SymPolyTable(const SymPoly& f);
  double operator()(std::span<const double> point) const;

 private:
  int nvars_;
  std::vector<std::vector<int>> expo_;
  std::vector<double> coef_;
};

}  // namespace symdom
