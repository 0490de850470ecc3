#include "symdom/sympoly.hpp"

#include "symdom/errors.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <tuple>

namespace symdom {

namespace {

using Mono = std::vector<int>;
using Dense = std::map<Mono, Rat>;

void add_to(Dense& d, const Mono& e, const Rat& c) {
  if (c == 0) return;
  auto it = d.find(e);
  if (it == d.end()) {
    d.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) d.erase(it);
  }
}

// All distinct permutations of mu padded to n slots.
std::vector<Mono> distinct_perms(const Partition& mu, int n) {
  Mono e(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < mu.length(); ++i) e[static_cast<std::size_t>(i)] = mu.part(i);
  std::sort(e.begin(), e.end());
  std::vector<Mono> out;
  do {
    out.push_back(e);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

Rat count_perms(const Partition& mu, int n) {
  // n! / prod over value multiplicities (zeros included)
  std::map<int, int> mult;
  for (int i = 0; i < n; ++i) ++mult[mu.part(i)];
  Rat out = rising(1, n);
  for (auto& [v, m] : mult) out /= rising(1, m);
  return out;
}

Dense expand(const SymPoly& f) {
  Dense d;
  for (auto& [mu, c] : f.coeffs)
    for (auto& e : distinct_perms(mu, f.nvars)) add_to(d, e, c);
  return d;
}

SymPoly collect(const Dense& d, int n) {
  SymPoly f;
  f.nvars = n;
  for (auto& [e, c] : d) {
    if (!std::is_sorted(e.rbegin(), e.rend())) continue;
    Mono t = e;
    while (!t.empty() && t.back() == 0) t.pop_back();
    f.coeffs.emplace(Partition(std::move(t)), c);
  }
  return f;
}

// In-place exact division of g by (x_i - x_j); g must be divisible.
Dense divide_linear(const Dense& g, int i, int j) {
  std::map<int, Dense> by_deg;  // x_i-degree -> coefficient (key has e[i] = 0)
  int top = 0;
  for (auto& [e, c] : g) {
    int k = e[static_cast<std::size_t>(i)];
    top = std::max(top, k);
    Mono e0 = e;
    e0[static_cast<std::size_t>(i)] = 0;
    add_to(by_deg[k], e0, c);
  }
  Dense out, carry;
  for (int m = top; m >= 1; --m) {
    Dense qm1 = by_deg.count(m) ? by_deg[m] : Dense{};
    for (auto& [e, c] : carry) {
      Mono e2 = e;
      ++e2[static_cast<std::size_t>(j)];
      add_to(qm1, e2, c);
    }
    for (auto& [e, c] : qm1) {
      Mono e2 = e;
      e2[static_cast<std::size_t>(i)] = m - 1;
      add_to(out, e2, c);
    }
    carry = std::move(qm1);
  }
  // remainder g_0 + x_j q_0 must vanish
  Dense rem = by_deg.count(0) ? by_deg[0] : Dense{};
  for (auto& [e, c] : carry) {
    Mono e2 = e;
    ++e2[static_cast<std::size_t>(j)];
    add_to(rem, e2, c);
  }
  if (!rem.empty()) throw Error("internal: inexact division by (x_i - x_j)");
  return out;
}

// Sekiguchi-Debiard operator (alpha/2) sum x_i^2 d_i^2
//                            + sum_{i<j} (x_i^2 d_i - x_j^2 d_j)/(x_i - x_j),
// applied to a symmetric polynomial given in dense form.
Dense apply_sekiguchi(const Dense& f, int n, const Rat& alpha) {
  Dense out;
  for (auto& [e, c] : f) {
    Rat s = 0;
    for (int v : e) s += Rat(v) * (v - 1);
    if (s != 0) add_to(out, e, c * alpha / 2 * s);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Dense g;
      for (auto& [e, c] : f) {
        int bi = e[static_cast<std::size_t>(i)], bj = e[static_cast<std::size_t>(j)];
        if (bi > 0) {
          Mono e2 = e;
          ++e2[static_cast<std::size_t>(i)];
          add_to(g, e2, c * bi);
        }
        if (bj > 0) {
          Mono e2 = e;
          ++e2[static_cast<std::size_t>(j)];
          add_to(g, e2, -c * bj);
        }
      }
      if (g.empty()) continue;
      for (auto& [e, c] : divide_linear(g, i, j)) add_to(out, e, c);
    }
  }
  return out;
}

Mono padded_key(const Partition& mu, int n) {
  Mono e(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < mu.length(); ++i) e[static_cast<std::size_t>(i)] = mu.part(i);
  return e;
}

}  // namespace

int SymPoly::degree() const {
  int d = 0;
  for (auto& [mu, c] : coeffs) d = std::max(d, mu.weight());
  return d;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  if (nvars == 0 && coeffs.empty()) nvars = o.nvars;
  if (o.nvars != nvars && !o.coeffs.empty())
    throw ParameterError("symmetric polynomial variable count mismatch");
  for (auto& [mu, c] : o.coeffs) {
    auto it = coeffs.find(mu);
    if (it == coeffs.end()) {
      coeffs.emplace(mu, c);
    } else {
      it->second += c;
      if (it->second == 0) coeffs.erase(it);
    }
  }
  return *this;
}

SymPoly& SymPoly::operator*=(const Rat& c) {
  if (c == 0) {
    coeffs.clear();
    return *this;
  }
  for (auto& [mu, v] : coeffs) v *= c;
  return *this;
}

std::string SymPoly::to_string() const {
  if (coeffs.empty()) return "0";
  std::string s;
  for (auto& [mu, c] : coeffs) {
    if (!s.empty()) s += " + ";
    s += rat_to_string(c) + "*m" + mu.to_string();
  }
  return s;
}

SymPoly sym_mul(const SymPoly& f, const SymPoly& g) {
  if (f.nvars != g.nvars) throw ParameterError("symmetric polynomial variable count mismatch");
  Dense df = expand(f), dg = expand(g), prod;
  for (auto& [e1, c1] : df)
    for (auto& [e2, c2] : dg) {
      Mono e = e1;
      for (std::size_t t = 0; t < e.size(); ++t) e[t] += e2[t];
      add_to(prod, e, c1 * c2);
    }
  return collect(prod, f.nvars);
}

namespace {
void fill_ssyt(const Partition& mu, int n, int row, int col, int min_entry,
               std::vector<std::vector<int>>& tab, Dense& acc, Mono& weight) {
  if (row == mu.length()) {
    add_to(acc, weight, 1);
    return;
  }
  if (col == mu.part(row)) {
    fill_ssyt(mu, n, row + 1, 0, 1, tab, acc, weight);
    return;
  }
  int lo = min_entry;
  if (row > 0) lo = std::max(lo, tab[static_cast<std::size_t>(row) - 1][static_cast<std::size_t>(col)] + 1);
  for (int v = lo; v <= n; ++v) {
    tab[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = v;
    ++weight[static_cast<std::size_t>(v - 1)];
    fill_ssyt(mu, n, row, col + 1, v, tab, acc, weight);
    --weight[static_cast<std::size_t>(v - 1)];
  }
}
}  // namespace

SymPoly schur(const Partition& mu, int n) {
  if (mu.length() > n) throw ParameterError("partition longer than the variable count");
  Dense acc;
  std::vector<std::vector<int>> tab;
  for (int i = 0; i < mu.length(); ++i)
    tab.emplace_back(static_cast<std::size_t>(mu.part(i)), 0);
  Mono weight(static_cast<std::size_t>(n), 0);
  fill_ssyt(mu, n, 0, 0, 1, tab, acc, weight);
  return collect(acc, n);
}

Rat principal_spec(const Partition& mu, int n) {
  if (mu.length() > n) throw ParameterError("partition longer than the variable count");
  Partition conj = mu.conjugate();
  Rat out = 1;
  for (int i = 0; i < mu.length(); ++i) {
    for (int j = 0; j < mu.part(i); ++j) {
      int hook = (mu.part(i) - j) + (conj.part(j) - i) - 1;
      out *= Rat(n + j - i) / hook;
    }
  }
  return out;
}

SymPoly jack_spherical(const Partition& mu, int n, const Rat& a) {
  if (mu.length() > n) throw ParameterError("partition longer than the variable count");
  if (a <= 0) throw ParameterError("multiplicity a must be positive");
  const Rat alpha = Rat(2) / a;
  const int w = mu.weight();
  auto plist = partitions_of_weight(w, n);  // dominance-compatible, top first

  // D m_nu expansions for every nu dominated by mu.
  std::map<Partition, Dense> dm;
  std::map<Partition, Rat> eig;
  for (auto& nu : plist) {
    if (!mu.dominates(nu)) continue;
    SymPoly m;
    m.nvars = n;
    m.coeffs.emplace(nu, 1);
    Dense d = apply_sekiguchi(expand(m), n, alpha);
    auto it = d.find(padded_key(nu, n));
    eig[nu] = (it == d.end()) ? Rat(0) : it->second;
    dm[nu] = std::move(d);
  }

  std::map<Partition, Rat> c;
  c[mu] = 1;
  const Rat e_mu = eig.at(mu);
  bool seen_mu = false;
  for (auto& sigma : plist) {
    if (sigma == mu) {
      seen_mu = true;
      continue;
    }
    if (!seen_mu || !mu.dominates(sigma)) continue;
    Rat num = 0;
    Mono key = padded_key(sigma, n);
    for (auto& [nu, cn] : c) {
      if (cn == 0 || nu == sigma) continue;
      auto it = dm.at(nu).find(key);
      if (it != dm.at(nu).end()) num += cn * it->second;
    }
    if (num == 0) continue;
    Rat gap = e_mu - eig.at(sigma);
    if (gap == 0) throw Error("degenerate Sekiguchi-Debiard spectrum");
    c[sigma] = num / gap;
  }

  SymPoly J;
  J.nvars = n;
  Rat at_ones = 0;
  for (auto& [nu, cn] : c) {
    if (cn == 0) continue;
    J.coeffs.emplace(nu, cn);
    at_ones += cn * count_perms(nu, n);
  }
  if (at_ones == 0) throw Error("degenerate Jack normalization");
  J *= Rat(1) / at_ones;
  return J;
}

const SymPoly& jack_spherical_cached(const Partition& mu, int n, const Rat& a) {
  static std::mutex m;
  static std::map<std::tuple<int, Rat, Partition>, SymPoly> cache;
  std::lock_guard<std::mutex> lock(m);
  auto key = std::make_tuple(n, a, mu);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, jack_spherical(mu, n, a)).first;
  return it->second;
}

Rat dim_isotype(const Partition& mu, const StructureParams& P) {
  auto shape = P.matrix_shape();
  if (!shape) throw ModelError("dimension formula needs a concrete polynomial model");
  auto [r, s] = *shape;
  if (mu.length() > r) throw ParameterError("partition longer than the model rank");
  return principal_spec(mu, r) * principal_spec(mu, s);
}

Rat eval(const SymPoly& f, std::span<const Rat> point) {
  if (static_cast<int>(point.size()) != f.nvars)
    throw ParameterError("evaluation point has wrong dimension");
  Rat out = 0;
  for (auto& [mu, c] : f.coeffs) {
    Rat msum = 0;
    for (auto& e : distinct_perms(mu, f.nvars)) {
      Rat term = 1;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int t = 0; t < e[i]; ++t) term *= point[i];
      msum += term;
    }
    out += c * msum;
  }
  return out;
}

double eval(const SymPoly& f, std::span<const double> point) {
  return SymPolyTable(f)(point);
}

SymPolyTable::SymPolyTable(const SymPoly& f) : nvars_(f.nvars) {
  for (auto& [mu, c] : f.coeffs) {
    double cd = to_double(c);
    for (auto& e : distinct_perms(mu, f.nvars)) {
      expo_.push_back(e);
      coef_.push_back(cd);
    }
  }
}

double SymPolyTable::operator()(std::span<const double> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw ParameterError("evaluation point has wrong dimension");
  double out = 0;
  for (std::size_t t = 0; t < expo_.size(); ++t) {
    double term = coef_[t];
    const auto& e = expo_[t];
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 1) {
        term *= point[i];
      } else if (e[i] > 1) {
        term *= std::pow(point[i], e[i]);
      }
    }
    out += term;
  }
  return out;
}

}  // namespace symdom
