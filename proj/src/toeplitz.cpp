#include "symdom/toeplitz.hpp"

#include "symdom/errors.hpp"

#include <sstream>

namespace symdom {

namespace {

// Expansion coefficients of f (inside P_mu) over the unnormalized basis.
std::vector<GRat> coords_in_basis(ModelContext& ctx, const Partition& mu,
                                  const MatrixPoly& f) {
  const IsotypeBasis& B = ctx.basis(mu);
  std::vector<GRat> c(static_cast<std::size_t>(B.dim()));
  for (int t = 0; t < B.dim(); ++t)
    c[static_cast<std::size_t>(t)] =
        fischer_pairing(f, B.vectors[static_cast<std::size_t>(t)]) /
        GRat(B.gram[static_cast<std::size_t>(t)]);
  return c;
}

// The conjugate-symbol Toeplitz operator on a single isotype component
// phi in P_mu, for a homogeneous holomorphic g: lands in isotypes of degree
// |mu| - deg g, with coefficients fixed by (T(conj g) phi | w) = (phi | g w).
MatrixPoly apply_conj_homogeneous(ModelContext& ctx, const HypergeomType& type,
                                  const MatrixPoly& g, const Partition& mu,
                                  const MatrixPoly& phi) {
  MatrixPoly out(ctx.rows(), ctx.cols());
  const int dg = g.degree();
  const int dout = mu.weight() - dg;
  if (dout < 0) return out;
  const Rat coef_mu = type.coefficient(mu);
  for (const Partition& nu : ctx.isotypes_of_degree(dout)) {
    if (nu.length() > type.ell) continue;
    const Rat scale = coef_mu / type.coefficient(nu);
    const IsotypeBasis& B = ctx.basis(nu);
    for (int t = 0; t < B.dim(); ++t) {
      GRat c = fischer_pairing(phi, g * B.vectors[static_cast<std::size_t>(t)]);
      if (c.is_zero()) continue;
      MatrixPoly v = B.vectors[static_cast<std::size_t>(t)];
      v *= c * GRat(scale / B.gram[static_cast<std::size_t>(t)]);
      out += v;
    }
  }
  return out;
}

}  // namespace

MatrixPoly toeplitz_apply(ModelContext& ctx, const HypergeomType& type,
                          const Symbol& sym, const MatrixPoly& phi) {
  if (!sym.conjugated) return ctx.project_to_max_length(sym.p * phi, type.ell);
  MatrixPoly out(ctx.rows(), ctx.cols());
  for (auto& [dg, gpart] : sym.p.by_degree()) {
    for (auto& [dphi, comp] : phi.by_degree()) {
      for (const Partition& mu : ctx.isotypes_of_degree(dphi)) {
        if (mu.length() > type.ell) continue;
        MatrixPoly part = ctx.isotypic_project(comp, mu);
        if (part.is_zero()) continue;
        out += apply_conj_homogeneous(ctx, type, gpart, mu, part);
      }
    }
  }
  return out;
}

ToeplitzBlockMatrix toeplitz_matrix(ModelContext& ctx, const HypergeomType& type,
                                    const Symbol& sym, int degree_cap) {
  if (degree_cap < sym.p.degree())
    throw TruncationError("degree cap below the symbol degree");
  ToeplitzBlockMatrix T;
  T.type = type;
  T.degree_cap = degree_cap;

  // Holomorphic blocks (mu_out, mu_in): expansion of p v_i over the bases.
  const MatrixPoly& p = sym.p;
  for (int din = 0; din <= degree_cap; ++din) {
    for (const Partition& mu_in : ctx.isotypes_of_degree(din)) {
      if (mu_in.length() > type.ell) continue;
      const IsotypeBasis& Bin = ctx.basis(mu_in);
      for (auto& [dp, ppart] : p.by_degree()) {
        const int dout = din + dp;
        if (dout > degree_cap) continue;
        for (const Partition& mu_out : ctx.isotypes_of_degree(dout)) {
          if (mu_out.length() > type.ell) continue;
          const IsotypeBasis& Bout = ctx.basis(mu_out);
          std::vector<std::vector<GRat>> entries(
              static_cast<std::size_t>(Bout.dim()),
              std::vector<GRat>(static_cast<std::size_t>(Bin.dim()), GRat(0)));
          bool nonzero = false;
          for (int i = 0; i < Bin.dim(); ++i) {
            MatrixPoly img = ctx.isotypic_project(
                ppart * Bin.vectors[static_cast<std::size_t>(i)], mu_out);
            if (img.is_zero()) continue;
            auto col = coords_in_basis(ctx, mu_out, img);
            for (int t = 0; t < Bout.dim(); ++t) {
              if (!col[static_cast<std::size_t>(t)].is_zero()) nonzero = true;
              entries[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)] =
                  col[static_cast<std::size_t>(t)];
            }
          }
          if (!nonzero) continue;
          auto key = std::make_pair(mu_out, mu_in);
          auto it = T.blocks.find(key);
          if (it == T.blocks.end()) {
            T.blocks.emplace(key, std::move(entries));
          } else {
            for (std::size_t a = 0; a < entries.size(); ++a)
              for (std::size_t b = 0; b < entries[a].size(); ++b)
                it->second[a][b] += entries[a][b];
          }
        }
      }
    }
  }
  if (!sym.conjugated) return T;

  // Conjugated symbol: adjoint of the holomorphic matrix in the type-weighted
  // Gram; block(T(conj p))_{nu,mu} = conj-transpose of block(T(p))_{mu,nu}
  // scaled entrywise by (coef(mu) g_i(mu)) / (coef(nu) g_t(nu)).
  ToeplitzBlockMatrix A;
  A.type = type;
  A.degree_cap = degree_cap;
  for (auto& [key, entries] : T.blocks) {
    const auto& [mu, nu] = key;  // holomorphic block maps nu -> mu
    const IsotypeBasis& Bmu = ctx.basis(mu);
    const IsotypeBasis& Bnu = ctx.basis(nu);
    const Rat cmu = type.coefficient(mu), cnu = type.coefficient(nu);
    std::vector<std::vector<GRat>> adj(
        static_cast<std::size_t>(Bnu.dim()),
        std::vector<GRat>(static_cast<std::size_t>(Bmu.dim()), GRat(0)));
    for (std::size_t i = 0; i < entries.size(); ++i)
      for (std::size_t t = 0; t < entries[i].size(); ++t) {
        const GRat& e = entries[i][t];
        if (e.is_zero()) continue;
        Rat scale = cmu * Bmu.gram[i] / (cnu * Bnu.gram[t]);
        adj[t][i] = e.conj() * GRat(scale);
      }
    A.blocks.emplace(std::make_pair(nu, mu), std::move(adj));
  }
  return A;
}

MatrixPoly adjoint_closed_form(ModelContext& ctx, const HypergeomType& type,
                               const GMat& v, const Partition& mu, const MatrixPoly& p) {
  if (mu.length() > type.ell)
    throw ParameterError("partition length exceeds the type's rank bound");
  MatrixPoly dv = p.directional_derivative(v);
  MatrixPoly out(ctx.rows(), ctx.cols());
  if (dv.is_zero()) return out;
  for (int j = 1; j <= type.ell; ++j) {
    auto nu = mu.bump(j - 1, -1);
    if (!nu) continue;
    Rat num = 1, den = 1;
    const Rat shift = -type.a / 2 * (j - 1) + mu.part(j - 1) - 1;
    for (const Rat& xi : type.x) num *= xi + shift;
    for (const Rat& yi : type.y) den *= yi + shift;
    if (den == 0) throw ParameterError("pole in adjoint coefficient");
    MatrixPoly comp = ctx.isotypic_project(dv, *nu);
    comp *= GRat(num / den);
    out += comp;
  }
  return out;
}

MatrixPoly adjoint_brute_force(ModelContext& ctx, const HypergeomType& type,
                               const GMat& v, const Partition& mu, const MatrixPoly& p) {
  if (mu.length() > type.ell)
    throw ParameterError("partition length exceeds the type's rank bound");
  MatrixPoly vstar = MatrixPoly::linear_form(v);
  MatrixPoly out(ctx.rows(), ctx.cols());
  const Rat coef_mu = type.coefficient(mu);
  for (int j = 1; j <= type.ell; ++j) {
    auto nu = mu.bump(j - 1, -1);
    if (!nu) continue;
    const IsotypeBasis& B = ctx.basis(*nu);
    const Rat scale = coef_mu / type.coefficient(*nu);
    for (int t = 0; t < B.dim(); ++t) {
      GRat c = fischer_pairing(p, vstar * B.vectors[static_cast<std::size_t>(t)]);
      if (c.is_zero()) continue;
      MatrixPoly w = B.vectors[static_cast<std::size_t>(t)];
      w *= c * GRat(scale / B.gram[static_cast<std::size_t>(t)]);
      out += w;
    }
  }
  return out;
}

bool check_multiplicativity(ModelContext& ctx, const HypergeomType& type,
                            const MatrixPoly& p, const MatrixPoly& q,
                            const MatrixPoly& phi, int degree_cap) {
  if (p.degree() + q.degree() + phi.degree() > degree_cap)
    throw TruncationError("degree cap below the product degree");
  MatrixPoly lhs = toeplitz_apply(ctx, type, Symbol{p * q, false}, phi);
  MatrixPoly rhs = toeplitz_apply(ctx, type, Symbol{p, false},
                                  toeplitz_apply(ctx, type, Symbol{q, false}, phi));
  return lhs == rhs;
}

std::string toeplitz_to_json(const ToeplitzBlockMatrix& T) {
  std::ostringstream os;
  os << "{\"type\":\"" << T.type.to_string() << "\",\"degree_cap\":" << T.degree_cap
     << ",\"blocks\":{";
  bool first = true;
  for (auto& [key, entries] : T.blocks) {
    if (!first) os << ",";
    first = false;
    os << "\"" << key.first.to_string() << "|" << key.second.to_string() << "\":[";
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i) os << ",";
      os << "[";
      for (std::size_t j = 0; j < entries[i].size(); ++j) {
        if (j) os << ",";
        os << "\"" << grat_to_string(entries[i][j]) << "\"";
      }
      os << "]";
    }
    os << "]";
  }
  os << "}}";
  return os.str();
}

}  // namespace symdom
