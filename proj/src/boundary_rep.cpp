#include "symdom/boundary_rep.hpp"

#include "symdom/errors.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <tuple>

namespace symdom {

namespace {

std::vector<IsotypeComponent> decompose_ball(const MatrixPoly& f) {
  std::vector<IsotypeComponent> out;
  for (auto& [deg, comp] : f.by_degree()) {
    Partition mu = (deg == 0) ? Partition() : Partition({deg});
    out.push_back(IsotypeComponent{mu, comp});
  }
  return out;
}

MatrixPoly det22() {
  return MatrixPoly::coordinate(2, 2, 0, 0) * MatrixPoly::coordinate(2, 2, 1, 1) -
         MatrixPoly::coordinate(2, 2, 0, 1) * MatrixPoly::coordinate(2, 2, 1, 0);
}

MatrixPoly lower_rows22(const MatrixPoly& g) {
  return MatrixPoly::coordinate(2, 2, 1, 0) * g.partial(0, 0) +
         MatrixPoly::coordinate(2, 2, 1, 1) * g.partial(0, 1);
}

MatrixPoly lower_cols22(const MatrixPoly& g) {
  return MatrixPoly::coordinate(2, 2, 0, 1) * g.partial(0, 0) +
         MatrixPoly::coordinate(2, 2, 1, 1) * g.partial(1, 0);
}

// Torus weight vector of P_(m1,m2) at row weight (m1+m2-r2, r2) and column
// weight (m1+m2-c2, c2): det^{m2} F_row^{r2-m2} F_col^{c2-m2} z11^{m1-m2}.
// Weight spaces of C^{2x2} isotypes are multiplicity-free, so these span.
struct WeightVec {
  MatrixPoly poly;
  Rat gram;
};

const WeightVec& weight_vector22(int m1, int m2, int i, int j) {
  static std::mutex mtx;
  static std::map<std::tuple<int, int, int, int>, WeightVec> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_tuple(m1, m2, i, j);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  MatrixPoly u = MatrixPoly::constant(2, 2, GRat(1));
  {
    MatrixPoly z11 = MatrixPoly::coordinate(2, 2, 0, 0);
    for (int t = 0; t < m1 - m2; ++t) u = u * z11;
  }
  for (int t = 0; t < i; ++t) u = lower_rows22(u);
  for (int t = 0; t < j; ++t) u = lower_cols22(u);
  if (m2 > 0) {
    MatrixPoly det = det22();
    for (int t = 0; t < m2; ++t) u = u * det;
  }
  if (u.is_zero()) throw Error("internal: vanishing weight vector");
  WeightVec wv{u, fischer_norm2(u)};
  return cache.emplace(key, std::move(wv)).first->second;
}

std::vector<IsotypeComponent> decompose22(const MatrixPoly& f) {
  // group terms by torus weight
  std::map<std::array<int, 4>, MatrixPoly> groups;
  for (auto& [e, c] : f.coeffs()) {
    std::array<int, 4> w = {e[0] + e[1], e[2] + e[3], e[0] + e[2], e[1] + e[3]};
    auto it = groups.find(w);
    if (it == groups.end()) it = groups.emplace(w, MatrixPoly(2, 2)).first;
    it->second.add_term(e, c);
  }
  std::map<Partition, MatrixPoly> comps;
  for (auto& [w, fw] : groups) {
    const int r1 = w[0], r2 = w[1], c2 = w[3];
    const int tot = r1 + r2;
    const int m2max = std::min(std::min(w[0], w[1]), std::min(w[2], w[3]));
    MatrixPoly rem = fw;
    for (int m2 = 0; m2 <= m2max; ++m2) {
      const int m1 = tot - m2;
      const WeightVec& u = weight_vector22(m1, m2, r2 - m2, c2 - m2);
      GRat c = fischer_pairing(fw, u.poly) / GRat(u.gram);
      if (c.is_zero()) continue;
      MatrixPoly contrib = u.poly;
      contrib *= c;
      rem -= contrib;
      Partition mu = (m2 == 0) ? Partition({m1}) : Partition({m1, m2});
      auto it = comps.find(mu);
      if (it == comps.end()) {
        comps.emplace(mu, std::move(contrib));
      } else {
        it->second += contrib;
      }
    }
    if (!rem.is_zero()) throw Error("internal: weight space not exhausted by isotypes");
  }
  std::vector<IsotypeComponent> out;
  for (auto& [mu, poly] : comps) {
    if (mu.weight() == 0) {
      out.push_back(IsotypeComponent{Partition(), poly});
    } else {
      out.push_back(IsotypeComponent{mu, poly});
    }
  }
  return out;
}

std::vector<IsotypeComponent> filter_length(std::vector<IsotypeComponent> comps, int ell) {
  comps.erase(std::remove_if(comps.begin(), comps.end(),
                             [&](const IsotypeComponent& c) { return c.mu.length() > ell; }),
              comps.end());
  return comps;
}

bool supported_on_peirce0(const MatrixPoly& q) {
  for (auto& [e, c] : q.coeffs()) {
    for (int i = 0; i < q.rows(); ++i)
      for (int j = 0; j < q.cols(); ++j)
        if ((i == 0 || j == 0) && e[static_cast<std::size_t>(i) * q.cols() + j] != 0)
          return false;
  }
  return true;
}

// T^c(conj g) on a polynomial of the little (rank <= 1) model, degree by
// degree: the adjoint of multiplication scales g*(d) by a coefficient ratio.
MatrixPoly little_conj_apply(const HypergeomType& lt, const MatrixPoly& g,
                             const MatrixPoly& phi) {
  MatrixPoly out(phi.rows(), phi.cols());
  for (auto& [dg, gpart] : g.by_degree()) {
    for (auto& [m, comp] : phi.by_degree()) {
      if (m < dg) continue;
      Partition pm = (m == 0) ? Partition() : Partition({m});
      Partition pout = (m == dg) ? Partition() : Partition({m - dg});
      if (pm.length() > lt.ell || pout.length() > lt.ell) continue;
      Rat scale = lt.coefficient(pm) / lt.coefficient(pout);
      MatrixPoly term = fischer_adjoint_mult(gpart, comp);
      term *= GRat(scale);
      out += term;
    }
  }
  return out;
}

GMat vector_of_linear_form(const MatrixPoly& p) {
  // p = v*(z) = sum conj(v_ij) z_ij
  GMat v(p.rows(), p.cols());
  for (auto& [e, c] : p.coeffs()) {
    int pos = -1;
    for (std::size_t t = 0; t < e.size(); ++t) {
      if (e[t] == 1 && pos < 0) {
        pos = static_cast<int>(t);
      } else if (e[t] != 0) {
        throw ParameterError("conjugate symbol must be a linear form");
      }
    }
    if (pos < 0) throw ParameterError("conjugate symbol must be a linear form");
    v.a[static_cast<std::size_t>(pos)] = c.conj();
  }
  return v;
}

}  // namespace

std::vector<IsotypeComponent> peirce_decompose(const MatrixPoly& f) {
  if (f.rows() == 1) return decompose_ball(f);
  if (f.rows() == 2 && f.cols() == 2) return decompose22(f);
  throw ModelError("exact decomposition implemented for the ball and C^{2x2}");
}

ResidualExperiment::ResidualExperiment(const HypergeomType& type, Symbol sym, MatrixPoly q)
    : type_(type), sym_(std::move(sym)), q_(std::move(q)) {
  rows_ = sym_.p.rows();
  cols_ = sym_.p.cols();
  if (q_.rows() != rows_ || q_.cols() != cols_)
    throw ParameterError("symbol and q live on different models");
  if (!(rows_ == 1 || (rows_ == 2 && cols_ == 2)))
    throw ModelError("boundary residuals implemented for the ball and C^{2x2}");
  if (type_.ell < 1) throw ParameterError("type must have positive rank bound");
  if (q_.is_zero()) throw ParameterError("q must be nonzero");
  if (!supported_on_peirce0(q_))
    throw ParameterError("q must be supported on the Peirce-0 block of e_11");
  if (sym_.conjugated && sym_.p.degree() == 0) {
    sym_.p = sym_.p.conj_dual();  // conjugate of a constant symbol
    sym_.conjugated = false;
  }
  if (sym_.conjugated && !(sym_.p.degree() == 1 && sym_.p.homogeneous_part(1) == sym_.p))
    throw ParameterError("conjugated symbols must be homogeneous linear forms");

  // T^c(sym^{(c)}) q on the Peirce-0 model, with the limit type.
  MatrixPoly p_c = restrict_symbol(sym_.p, 1);
  MatrixPoly q_c = restrict_symbol(q_, 1);
  HypergeomType lt = limit_type(type_);
  if (lt.ell == 0 && q_c.degree() > 0)
    throw ParameterError("q exceeds the little space for this type");
  MatrixPoly img;
  if (!sym_.conjugated) {
    img = p_c * q_c;
    if (lt.ell == 0) img = img.homogeneous_part(0);
  } else {
    img = little_conj_apply(lt, p_c, q_c);
  }
  little_image_ = embed_peirce0(img, 1, rows_, cols_);
}

void ResidualExperiment::ensure_depth(int cap) {
  MatrixPoly z11 = MatrixPoly::coordinate(rows_, cols_, 0, 0);
  MatrixPoly z11s = MatrixPoly::constant(rows_, cols_, GRat(1));
  for (int s = 0; s < static_cast<int>(fam_w_.size()); ++s) z11s = z11s * z11;
  GMat v;
  if (sym_.conjugated) v = vector_of_linear_form(sym_.p);

  for (int s = static_cast<int>(fam_w_.size()); s <= cap; ++s) {
    MatrixPoly base = z11s * q_;
    auto W = filter_length(peirce_decompose(base), type_.ell);

    std::vector<IsotypeComponent> L;
    if (!sym_.conjugated) {
      L = filter_length(peirce_decompose(sym_.p * base), type_.ell);
    } else {
      // closed-form adjoint on each exact component
      std::map<Partition, MatrixPoly> acc;
      for (const auto& comp : W) {
        MatrixPoly dv = comp.poly.directional_derivative(v);
        if (dv.is_zero()) continue;
        for (auto& piece : peirce_decompose(dv)) {
          int row = -1;
          for (int jj = 1; jj <= type_.ell; ++jj) {
            auto nu = comp.mu.bump(jj - 1, -1);
            if (nu && *nu == piece.mu) {
              row = jj;
              break;
            }
          }
          if (row < 0) throw Error("internal: derivative leaves the expected isotypes");
          Rat num = 1, den = 1;
          const Rat shift = -type_.a / 2 * (row - 1) + comp.mu.part(row - 1) - 1;
          for (const Rat& xi : type_.x) num *= xi + shift;
          for (const Rat& yi : type_.y) den *= yi + shift;
          if (den == 0) throw ParameterError("pole in adjoint coefficient");
          piece.poly *= GRat(num / den);
          auto it = acc.find(piece.mu);
          if (it == acc.end()) {
            acc.emplace(piece.mu, std::move(piece.poly));
          } else {
            it->second += piece.poly;
          }
        }
      }
      for (auto& [mu, poly] : acc)
        if (!poly.is_zero()) L.push_back(IsotypeComponent{mu, poly});
    }

    auto R = filter_length(peirce_decompose(z11s * little_image_), type_.ell);

    fam_w_.push_back(std::move(W));
    fam_l_.push_back(std::move(L));
    fam_r_.push_back(std::move(R));
    z11s = z11s * z11;
  }
}

int ResidualExperiment::choose_cap(int n, const ResidualOptions& opts,
                                   double* tail_rel) const {
  // log || n^s (z|c)^s / s! ||^2 = 2 s log n - lgamma(s+1) + log coefficient((s))
  auto log_coef_row = [&](int s) {
    double lc = 0;
    for (const Rat& xi : type_.x)
      for (int t = 0; t < s; ++t) lc += std::log(to_double(xi) + t);
    for (const Rat& yi : type_.y)
      for (int t = 0; t < s; ++t) lc -= std::log(to_double(yi) + t);
    return lc;
  };
  std::vector<double> lt;
  double max_lt = -1e300;
  const double ln_n = std::log(static_cast<double>(n));
  for (int s = 0;; ++s) {
    double v = 2.0 * s * ln_n - std::lgamma(s + 1.0) + log_coef_row(s);
    lt.push_back(v);
    max_lt = std::max(max_lt, v);
    if (s > 2 * n + 8 && v < max_lt - 130.0) break;
    if (s > opts.max_degree_cap + 400)
      throw TruncationError("peaking series too wide for the degree budget");
  }
  std::vector<double> tail(lt.size() + 1, 0.0);
  for (int s = static_cast<int>(lt.size()) - 1; s >= 0; --s)
    tail[static_cast<std::size_t>(s)] = tail[static_cast<std::size_t>(s) + 1] +
                                        std::exp(lt[static_cast<std::size_t>(s)] - max_lt);
  const double total = tail[0];
  auto rel = [&](int cap) {
    std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(cap) + 1, tail.size() - 1);
    return std::sqrt(tail[i] / total);
  };
  int lo = sym_.p.degree() + q_.degree() + 1;
  if (opts.degree_cap > 0) {
    double tr = rel(opts.degree_cap);
    if (tr > opts.tail_target)
      throw TruncationError("tail bound violated at the requested degree cap");
    if (tail_rel) *tail_rel = tr;
    return opts.degree_cap;
  }
  for (int cap = lo;; ++cap) {
    if (cap > opts.max_degree_cap)
      throw TruncationError("tail target unreachable within max_degree_cap");
    double tr = rel(cap);
    if (tr <= opts.tail_target) {
      if (tail_rel) *tail_rel = tr;
      return cap;
    }
  }
}

double ResidualExperiment::weighted_pairing(const Partition& mu, const MatrixPoly* a,
                                            const MatrixPoly* b) {
  auto key = (a <= b) ? std::make_pair(a, b) : std::make_pair(b, a);
  auto it = pair_cache_.find(key);
  if (it == pair_cache_.end()) {
    GRat pr = fischer_pairing(*key.first, *key.second);
    double val = to_double(type_.coefficient(mu) * pr.re);
    it = pair_cache_.emplace(key, std::make_pair(mu, val)).first;
  }
  return it->second.second;
}

ResidualPoint ResidualExperiment::run(int n, const ResidualOptions& opts) {
  if (n < 1) throw ParameterError("peaking index must be positive");
  ResidualPoint pt;
  pt.n = n;
  pt.degree_cap = choose_cap(n, opts, &pt.tail_rel);
  ensure_depth(pt.degree_cap);

  const double ln_n = std::log(static_cast<double>(n));
  std::map<Partition, std::vector<Keyed>> num, den;
  for (int s = 0; s <= pt.degree_cap; ++s) {
    // e^{-n}-normalized series scalar keeps everything in double range
    const double cs = std::exp(s * ln_n - std::lgamma(s + 1.0) - n);
    for (const auto& c : fam_w_[static_cast<std::size_t>(s)])
      den[c.mu].push_back(Keyed{cs, &c.poly});
    for (const auto& c : fam_l_[static_cast<std::size_t>(s)])
      num[c.mu].push_back(Keyed{cs, &c.poly});
    for (const auto& c : fam_r_[static_cast<std::size_t>(s)])
      num[c.mu].push_back(Keyed{-cs, &c.poly});
  }
  auto norm2 = [&](const std::map<Partition, std::vector<Keyed>>& m) {
    double out = 0;
    for (auto& [mu, items] : m) {
      for (std::size_t i = 0; i < items.size(); ++i) {
        out += items[i].scale * items[i].scale * weighted_pairing(mu, items[i].poly, items[i].poly);
        for (std::size_t j = i + 1; j < items.size(); ++j)
          out += 2.0 * items[i].scale * items[j].scale *
                 weighted_pairing(mu, items[i].poly, items[j].poly);
      }
    }
    return out;
  };
  const double den2 = norm2(den);
  if (!(den2 > 0)) throw Error("vanishing peaking vector norm");
  double num2 = norm2(num);
  pt.residual = std::sqrt(std::max(0.0, num2) / den2);
  return pt;
}

ResidualPoint boundary_residual(const HypergeomType& type, const Symbol& sym,
                                const MatrixPoly& q, int n, const ResidualOptions& opts) {
  ResidualExperiment exp(type, sym, q);
  return exp.run(n, opts);
}

}  // namespace symdom
