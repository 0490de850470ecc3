#pragma once

#include "symdom/domain_params.hpp"
#include "symdom/isotype.hpp"
#include "symdom/matrix_poly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace symdom {

// Toeplitz symbol: a holomorphic polynomial p or its conjugate.
struct Symbol {
  MatrixPoly p;
  bool conjugated = false;
};

// Truncated Toeplitz operator, blocked by Peter-Weyl isotype in the
// unnormalized IsotypeBasis coordinates. Retained entries are exact.
struct ToeplitzBlockMatrix {
  HypergeomType type;
  int degree_cap = 0;
  // (mu_out, mu_in) -> entries[row_out][col_in]
  std::map<std::pair<Partition, Partition>, std::vector<std::vector<GRat>>> blocks;
};

// T(symbol) phi for the hypergeometric type: exact multiplication followed by
// the length-<= ell projection for holomorphic symbols, the variational
// adjoint for conjugated ones.
MatrixPoly toeplitz_apply(ModelContext& ctx, const HypergeomType& type,
                          const Symbol& sym, const MatrixPoly& phi);

ToeplitzBlockMatrix toeplitz_matrix(ModelContext& ctx, const HypergeomType& type,
                                    const Symbol& sym, int degree_cap);

// Adjoint of multiplication by v* on P_mu, by the rank-structure formula:
// T(conj v*) p = sum_j [prod_i (x_i - (a/2)(j-1) + m_j - 1)
//                     / prod_i (y_i - (a/2)(j-1) + m_j - 1)] (d_v p)_{mu-eps_j}.
MatrixPoly adjoint_closed_form(ModelContext& ctx, const HypergeomType& type,
                               const GMat& v, const Partition& mu, const MatrixPoly& p);

// Same operator solved variationally from (T(conj v*) p | q) = (p | v* q)
// over bases of the candidate isotypes; the independent oracle.
MatrixPoly adjoint_brute_force(ModelContext& ctx, const HypergeomType& type,
                               const GMat& v, const Partition& mu, const MatrixPoly& p);

// T(pq) phi == T(p) (T(q) phi), exactly.
bool check_multiplicativity(ModelContext& ctx, const HypergeomType& type,
                            const MatrixPoly& p, const MatrixPoly& q,
                            const MatrixPoly& phi, int degree_cap);

// JSON dump: blocks as nested arrays of "a+bi" strings keyed "[mu_out]|[mu_in]".
std::string toeplitz_to_json(const ToeplitzBlockMatrix& T);

}  // namespace symdom
