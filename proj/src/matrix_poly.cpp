#include "symdom/matrix_poly.hpp"

#include "symdom/errors.hpp"

#include <algorithm>
#include <numeric>

namespace symdom {

GMat GMat::unit(int r, int c, int i, int j) {
  GMat m(r, c);
  m.at(i, j) = GRat(1);
  return m;
}

MatrixPoly MatrixPoly::constant(int rows, int cols, GRat c) {
  MatrixPoly p(rows, cols);
  p.add_term(std::vector<int>(static_cast<std::size_t>(rows) * cols, 0), c);
  return p;
}

MatrixPoly MatrixPoly::coordinate(int rows, int cols, int i, int j) {
  MatrixPoly p(rows, cols);
  std::vector<int> e(static_cast<std::size_t>(rows) * cols, 0);
  e[static_cast<std::size_t>(i) * cols + j] = 1;
  p.add_term(e, GRat(1));
  return p;
}

MatrixPoly MatrixPoly::linear_form(const GMat& v) {
  MatrixPoly p(v.rows, v.cols);
  for (int i = 0; i < v.rows; ++i)
    for (int j = 0; j < v.cols; ++j)
      if (!v.at(i, j).is_zero()) {
        std::vector<int> e(static_cast<std::size_t>(v.rows) * v.cols, 0);
        e[static_cast<std::size_t>(i) * v.cols + j] = 1;
        p.add_term(e, v.at(i, j).conj());
      }
  return p;
}

int MatrixPoly::degree() const {
  int d = 0;
  for (auto& [e, c] : coeffs_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

void MatrixPoly::set(const std::vector<int>& expo, GRat c) {
  if (c.is_zero()) {
    coeffs_.erase(expo);
  } else {
    coeffs_[expo] = std::move(c);
  }
}

void MatrixPoly::add_term(const std::vector<int>& expo, const GRat& c) {
  if (c.is_zero()) return;
  auto it = coeffs_.find(expo);
  if (it == coeffs_.end()) {
    coeffs_.emplace(expo, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

MatrixPoly& MatrixPoly::operator+=(const MatrixPoly& o) {
  if (is_zero() && coeffs_.empty() && rows_ == 0) {
    rows_ = o.rows_;
    cols_ = o.cols_;
  }
  if (o.rows_ != rows_ || o.cols_ != cols_)
    throw ParameterError("matrix polynomial shape mismatch");
  for (auto& [e, c] : o.coeffs_) add_term(e, c);
  return *this;
}

MatrixPoly& MatrixPoly::operator-=(const MatrixPoly& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_)
    throw ParameterError("matrix polynomial shape mismatch");
  for (auto& [e, c] : o.coeffs_) add_term(e, -c);
  return *this;
}

MatrixPoly operator*(const MatrixPoly& a, const MatrixPoly& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw ParameterError("matrix polynomial shape mismatch");
  MatrixPoly out(a.rows_, a.cols_);
  for (auto& [e1, c1] : a.coeffs_)
    for (auto& [e2, c2] : b.coeffs_) {
      std::vector<int> e = e1;
      for (std::size_t t = 0; t < e.size(); ++t) e[t] += e2[t];
      out.add_term(e, c1 * c2);
    }
  return out;
}

MatrixPoly& MatrixPoly::operator*=(const GRat& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [e, v] : coeffs_) v *= c;
  return *this;
}

MatrixPoly MatrixPoly::homogeneous_part(int deg) const {
  MatrixPoly out(rows_, cols_);
  for (auto& [e, c] : coeffs_)
    if (std::accumulate(e.begin(), e.end(), 0) == deg) out.add_term(e, c);
  return out;
}

std::map<int, MatrixPoly> MatrixPoly::by_degree() const {
  std::map<int, MatrixPoly> out;
  for (auto& [e, c] : coeffs_) {
    int d = std::accumulate(e.begin(), e.end(), 0);
    auto it = out.find(d);
    if (it == out.end()) it = out.emplace(d, MatrixPoly(rows_, cols_)).first;
    it->second.add_term(e, c);
  }
  return out;
}

MatrixPoly MatrixPoly::partial(int i, int j) const {
  MatrixPoly out(rows_, cols_);
  const std::size_t pos = static_cast<std::size_t>(i) * cols_ + j;
  for (auto& [e, c] : coeffs_) {
    if (e[pos] == 0) continue;
    std::vector<int> e2 = e;
    --e2[pos];
    out.add_term(e2, c * GRat(Rat(e[pos])));
  }
  return out;
}

MatrixPoly MatrixPoly::directional_derivative(const GMat& v) const {
  MatrixPoly out(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!v.at(i, j).is_zero()) {
        MatrixPoly d = partial(i, j);
        d *= v.at(i, j);
        out += d;
      }
  return out;
}

MatrixPoly MatrixPoly::conj_dual() const {
  MatrixPoly out(rows_, cols_);
  for (auto& [e, c] : coeffs_) out.add_term(e, c.conj());
  return out;
}

MatrixPoly MatrixPoly::primitive() const {
  Int g = 0, l = 1;
  for (auto& [e, c] : coeffs_) {
    for (const Rat* part : {&c.re, &c.im}) {
      if (*part == 0) continue;
      g = gcd(g, Int(abs(numerator(*part))));
      l = lcm(l, Int(denominator(*part)));
    }
  }
  if (g == 0) return *this;
  MatrixPoly out = *this;
  out *= GRat(Rat(l, g));
  return out;
}

GRat MatrixPoly::eval(const GMat& z) const {
  if (z.rows != rows_ || z.cols != cols_) throw ParameterError("evaluation point shape mismatch");
  GRat out(0);
  for (auto& [e, c] : coeffs_) {
    GRat term = c;
    for (std::size_t t = 0; t < e.size(); ++t)
      for (int k = 0; k < e[t]; ++k) term *= z.a[t];
    out += term;
  }
  return out;
}

std::string MatrixPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (auto& [e, c] : coeffs_) {
    if (!s.empty()) s += " + ";
    s += "(" + grat_to_string(c) + ")";
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        int k = e[static_cast<std::size_t>(i) * cols_ + j];
        if (k == 0) continue;
        s += "*z" + std::to_string(i + 1) + std::to_string(j + 1);
        if (k > 1) s += "^" + std::to_string(k);
      }
  }
  return s;
}

GRat fischer_pairing(const MatrixPoly& p, const MatrixPoly& q) {
  if (p.rows() != q.rows() || p.cols() != q.cols())
    throw ParameterError("Fischer pairing shape mismatch");
  GRat out(0);
  const auto& qa = q.coeffs();
  for (auto& [e, c] : p.coeffs()) {
    auto it = qa.find(e);
    if (it == qa.end()) continue;
    Rat fact = 1;
    for (int v : e) fact *= rising(1, v);
    out += c * it->second.conj() * GRat(fact);
  }
  return out;
}

Rat fischer_norm2(const MatrixPoly& p) {
  GRat n = fischer_pairing(p, p);
  return n.re;  // imaginary part vanishes identically
}

MatrixPoly fischer_adjoint_mult(const MatrixPoly& g, const MatrixPoly& f) {
  // g*(d) f = sum_b conj(g_b) d^b f
  MatrixPoly out(f.rows(), f.cols());
  for (auto& [e, c] : g.coeffs()) {
    MatrixPoly d = f;
    for (int i = 0; i < f.rows() && !d.is_zero(); ++i)
      for (int j = 0; j < f.cols(); ++j)
        for (int k = 0; k < e[static_cast<std::size_t>(i) * f.cols() + j]; ++k)
          d = d.partial(i, j);
    d *= c.conj();
    out += d;
  }
  return out;
}

namespace {

// Power sums p_t = tr(M^t) for the matrix M = w* z of linear polynomials.
std::vector<MatrixPoly> power_sums(const GMat& w, int tmax) {
  const int r = w.rows, s = w.cols;
  // M has shape s x s with entries M_uv = sum_i conj(w_iu) z_iv
  auto entry = [&](int u, int v) {
    MatrixPoly e(r, s);
    for (int i = 0; i < r; ++i) {
      if (w.at(i, u).is_zero()) continue;
      MatrixPoly z = MatrixPoly::coordinate(r, s, i, v);
      z *= w.at(i, u).conj();
      e += z;
    }
    return e;
  };
  std::vector<std::vector<MatrixPoly>> M(static_cast<std::size_t>(s));
  for (int u = 0; u < s; ++u)
    for (int v = 0; v < s; ++v) M[static_cast<std::size_t>(u)].push_back(entry(u, v));
  std::vector<MatrixPoly> ps;
  auto Mk = M;
  for (int t = 1; t <= tmax; ++t) {
    MatrixPoly tr(r, s);
    for (int u = 0; u < s; ++u) tr += Mk[static_cast<std::size_t>(u)][static_cast<std::size_t>(u)];
    ps.push_back(tr);
    if (t == tmax) break;
    std::vector<std::vector<MatrixPoly>> next(static_cast<std::size_t>(s));
    for (int u = 0; u < s; ++u)
      for (int v = 0; v < s; ++v) {
        MatrixPoly acc(r, s);
        for (int m = 0; m < s; ++m)
          acc += Mk[static_cast<std::size_t>(u)][static_cast<std::size_t>(m)] *
                 M[static_cast<std::size_t>(m)][static_cast<std::size_t>(v)];
        next[static_cast<std::size_t>(u)].push_back(acc);
      }
    Mk = std::move(next);
  }
  return ps;
}

MatrixPoly determinant(std::vector<std::vector<MatrixPoly>>& m, int rows, int cols) {
  const std::size_t n = m.size();
  if (n == 0) return MatrixPoly::constant(rows, cols, GRat(1));
  if (n == 1) return m[0][0];
  MatrixPoly out(rows, cols);
  // Laplace expansion along the first row; sizes here are tiny.
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<MatrixPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<MatrixPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    MatrixPoly term = m[0][j] * determinant(minor, rows, cols);
    if (j % 2 == 1) term *= GRat(Rat(-1));
    out += term;
  }
  return out;
}

}  // namespace

MatrixPoly fock_kernel(const Partition& mu, const GMat& w) {
  const int r = w.rows, s = w.cols;
  if (mu.length() > std::min(r, s))
    throw ParameterError("partition longer than the model rank");
  const int n = mu.weight();
  if (n == 0) return MatrixPoly::constant(r, s, GRat(1));

  // h_k(spec(w* z)) from Newton's identities: k h_k = sum_{t<=k} h_{k-t} p_t
  auto ps = power_sums(w, n);
  std::vector<MatrixPoly> h;
  h.push_back(MatrixPoly::constant(r, s, GRat(1)));
  for (int k = 1; k <= n; ++k) {
    MatrixPoly acc(r, s);
    for (int t = 1; t <= k; ++t)
      acc += h[static_cast<std::size_t>(k - t)] * ps[static_cast<std::size_t>(t - 1)];
    acc *= GRat(Rat(1, k));
    h.push_back(acc);
  }

  // Jacobi-Trudi: s_mu = det(h_{mu_i - i + j})
  const int l = mu.length();
  std::vector<std::vector<MatrixPoly>> jt(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      int idx = mu.part(i) - i + j;
      jt[static_cast<std::size_t>(i)].push_back(
          (idx < 0 || idx > n) ? MatrixPoly(r, s) : h[static_cast<std::size_t>(idx)]);
    }
  MatrixPoly smu = determinant(jt, r, s);

  // f^mu / |mu|! = 1 / prod hooks
  Partition conj = mu.conjugate();
  Rat hooks = 1;
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < mu.part(i); ++j)
      hooks *= (mu.part(i) - j) + (conj.part(j) - i) - 1;
  smu *= GRat(Rat(1) / hooks);
  return smu;
}

MatrixPoly restrict_symbol(const MatrixPoly& f, int tripotent_rank) {
  const int r = f.rows(), s = f.cols(), i0 = tripotent_rank;
  if (i0 < 0 || i0 > std::min(r, s)) throw ParameterError("invalid tripotent rank");
  if (i0 == 0) return f;
  MatrixPoly out(r - i0, s - i0);
  for (auto& [e, c] : f.coeffs()) {
    GRat coef = c;
    std::vector<int> e2(static_cast<std::size_t>(r - i0) * (s - i0), 0);
    bool dead = false;
    for (int i = 0; i < r && !dead; ++i)
      for (int j = 0; j < s; ++j) {
        int k = e[static_cast<std::size_t>(i) * s + j];
        if (k == 0) continue;
        if (i < i0 && j < i0) {
          if (i != j) dead = true;  // off-diagonal of the pinned block is 0
        } else if (i < i0 || j < i0) {
          dead = true;  // Peirce-1 coordinates vanish at c + zeta
        } else {
          e2[static_cast<std::size_t>(i - i0) * (s - i0) + (j - i0)] = k;
        }
        if (dead) break;
      }
    if (!dead) out.add_term(e2, coef);
  }
  return out;
}

MatrixPoly embed_peirce0(const MatrixPoly& f, int tripotent_rank, int rows, int cols) {
  const int i0 = tripotent_rank;
  if (f.rows() != rows - i0 || f.cols() != cols - i0)
    throw ParameterError("embedding shape mismatch");
  MatrixPoly out(rows, cols);
  for (auto& [e, c] : f.coeffs()) {
    std::vector<int> e2(static_cast<std::size_t>(rows) * cols, 0);
    for (int i = 0; i < f.rows(); ++i)
      for (int j = 0; j < f.cols(); ++j)
        e2[static_cast<std::size_t>(i + i0) * cols + (j + i0)] =
            e[static_cast<std::size_t>(i) * f.cols() + j];
    out.add_term(e2, c);
  }
  return out;
}

}  // namespace symdom
