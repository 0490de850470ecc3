#pragma once

#include "symdom/partition.hpp"
#include "symdom/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace symdom {

// Dense little matrix of Gaussian rationals (row-major), used for symbol
// vectors v and sample points w.
struct GMat {
  int rows = 0, cols = 0;
  std::vector<GRat> a;

  GMat() = default;
  GMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  GRat& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const GRat& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  static GMat unit(int r, int c, int i, int j);
};

// Polynomial on the matrix Jordan triple C^{rows x cols} with Gaussian
// rational coefficients, indexed by exponent matrices (row-major vectors).
class MatrixPoly {
 public:
  MatrixPoly() = default;
  MatrixPoly(int rows, int cols) : rows_(rows), cols_(cols) {}

  static MatrixPoly constant(int rows, int cols, GRat c);
  static MatrixPoly coordinate(int rows, int cols, int i, int j);
  // v*(z) = (z|v) = sum_ij conj(v_ij) z_ij
  static MatrixPoly linear_form(const GMat& v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int nvars() const { return rows_ * cols_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const;
  const std::map<std::vector<int>, GRat>& coeffs() const { return coeffs_; }
  void set(const std::vector<int>& expo, GRat c);
  void add_term(const std::vector<int>& expo, const GRat& c);

  MatrixPoly& operator+=(const MatrixPoly& o);
  MatrixPoly& operator-=(const MatrixPoly& o);
  friend MatrixPoly operator+(MatrixPoly a, const MatrixPoly& b) { return a += b; }
  friend MatrixPoly operator-(MatrixPoly a, const MatrixPoly& b) { return a -= b; }
  friend MatrixPoly operator*(const MatrixPoly& a, const MatrixPoly& b);
  MatrixPoly& operator*=(const GRat& c);
  friend bool operator==(const MatrixPoly&, const MatrixPoly&) = default;

  MatrixPoly homogeneous_part(int deg) const;
  std::map<int, MatrixPoly> by_degree() const;
  MatrixPoly partial(int i, int j) const;
  // sum_ij v_ij d/dz_ij
  MatrixPoly directional_derivative(const GMat& v) const;
  // p*(z) = conj(p(conj z)): coefficients conjugated.
  MatrixPoly conj_dual() const;
  // Rescales by a positive rational so all coefficients become coprime
  // Gaussian integers; keeps exact arithmetic from inflating.
  MatrixPoly primitive() const;
  GRat eval(const GMat& z) const;
  std::string to_string() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::map<std::vector<int>, GRat> coeffs_;
};

// Fischer-Fock pairing (p|q) = (q*(d) p)(0) = sum_b conj(q_b) p_b b!,
// linear in p, conjugate-linear in q, positive definite.
GRat fischer_pairing(const MatrixPoly& p, const MatrixPoly& q);
Rat fischer_norm2(const MatrixPoly& p);

// g*(d) applied to f: the Fischer adjoint of multiplication by g.
MatrixPoly fischer_adjoint_mult(const MatrixPoly& g, const MatrixPoly& f);

// Reproducing kernel E^mu(., w) of the isotype P_mu on C^{rows x cols},
// realized as (f^mu / |mu|!) s_mu(spec(w* z)). Summing over |mu| = n gives
// (z|w)^n / n! exactly.
MatrixPoly fock_kernel(const Partition& mu, const GMat& w);

// f^{(c)}(zeta) = f(c + zeta) for the diagonal tripotent c = e_11+...+e_ii,
// with zeta on the complementary Peirce-0 block; output lives on
// C^{(rows-i) x (cols-i)}.
MatrixPoly restrict_symbol(const MatrixPoly& f, int tripotent_rank);

// Inclusion P(V^c) -> P(V) along the Peirce-0 projection (index shift).
MatrixPoly embed_peirce0(const MatrixPoly& f, int tripotent_rank, int rows, int cols);

}  // namespace symdom
