#include "symdom/domain_params.hpp"

#include "symdom/errors.hpp"

#include <algorithm>

namespace symdom {

StructureParams derive_params(int r, const Rat& a, const Rat& b) {
  if (r < 1) throw ParameterError("rank must be a positive integer");
  if (a <= 0) throw ParameterError("multiplicity a must be positive");
  if (b < 0) throw ParameterError("multiplicity b must be nonnegative");
  StructureParams P;
  P.r = r;
  P.a = a;
  P.b = b;
  P.d = Rat(r) + b * r + a * r * (r - 1) / 2;
  P.p = Rat(2) + a * (r - 1) + b;
  return P;
}

Rat StructureParams::genus_of_rank(int k) const { return Rat(2) + a * (r - k - 1) + b; }

StructureParams StructureParams::reduced(int k) const {
  if (k < 0 || k > r - 1) throw ParameterError("reduced rank out of range");
  return derive_params(r - k, a, b);
}

std::optional<std::pair<int, int>> StructureParams::matrix_shape() const {
  if (!is_nonneg_integer(b)) return std::nullopt;
  if (r != 1 && a != 2) return std::nullopt;
  int s = r + b.convert_to<int>();
  return std::make_pair(r, s);
}

Rat nu_k(const StructureParams& P, int k) {
  if (k < 0 || k > P.r) throw ParameterError("nu_k index out of range");
  if (k == 0) return P.p - 1 + P.a / 2;
  return P.dim_over_rank() + P.a / 2 * (P.r - k);
}

Rat pochhammer(const Rat& nu, const Partition& mu, const Rat& a) {
  Rat out = 1;
  for (int j = 0; j < mu.length(); ++j) out *= rising(nu - a / 2 * j, mu.part(j));
  return out;
}

Rat HypergeomType::coefficient(const Partition& mu) const {
  if (mu.length() > ell)
    throw ParameterError("partition length exceeds the type's rank bound");
  Rat out = 1;
  for (const Rat& xi : x) out *= pochhammer(xi, mu, a);
  for (const Rat& yi : y) {
    Rat q = pochhammer(yi, mu, a);
    if (q == 0) throw ParameterError("pole in hypergeometric coefficient");
    out /= q;
  }
  return out;
}

std::string HypergeomType::to_string() const {
  auto list = [](const std::vector<Rat>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += rat_to_string(v[i]);
    }
    return s + "}";
  };
  return "x=" + list(x) + " y=" + list(y) + " a=" + rat_to_string(a) +
         " ell=" + std::to_string(ell);
}

HypergeomType make_hypergeom_type(std::vector<Rat> x, std::vector<Rat> y, Rat a, int ell) {
  if (a <= 0) throw ParameterError("multiplicity a must be positive");
  if (ell < 0) throw ParameterError("rank bound must be nonnegative");
  if (ell == 0) {
    // only the empty partition survives; canonicalize to the trivial type
    return HypergeomType{{}, {}, std::move(a), 0};
  }
  Rat floor = a * (ell - 1) / 2;
  for (const Rat& v : x)
    if (ell >= 1 && v <= floor) throw ParameterError("type parameter too small for rank bound");
  for (const Rat& v : y)
    if (ell >= 1 && v <= floor) throw ParameterError("type parameter too small for rank bound");
  // cancel identical parameters across the fraction
  for (auto it = x.begin(); it != x.end();) {
    auto jt = std::find(y.begin(), y.end(), *it);
    if (jt != y.end()) {
      y.erase(jt);
      it = x.erase(it);
    } else {
      ++it;
    }
  }
  std::sort(x.rbegin(), x.rend());
  std::sort(y.rbegin(), y.rend());
  return HypergeomType{std::move(x), std::move(y), std::move(a), ell};
}

HypergeomType make_type(const StructureParams& P, int k, int lambda, std::optional<Rat> nu) {
  if (k < 0 || k > lambda || lambda > P.r)
    throw ParameterError("need 0 <= k <= lambda <= rank");
  if (lambda == 0) return make_hypergeom_type({}, {}, P.a, 0);
  Rat y0;
  if (k == 0) {
    if (!nu) throw ParameterError("k = 0 requires an explicit weight nu > p - 1");
    if (*nu <= P.p - 1) throw ParameterError("weight nu must exceed p - 1");
    y0 = *nu;
  } else {
    y0 = nu_k(P, k);
  }
  std::vector<Rat> x = {nu_k(P, lambda), P.a * lambda / 2};
  std::vector<Rat> y = {y0, P.dim_over_rank(), P.a * P.r / 2};
  return make_hypergeom_type(std::move(x), std::move(y), P.a, lambda);
}

HypergeomType limit_type(const HypergeomType& t) {
  if (t.ell < 1) throw ParameterError("cannot take the peaking limit of a rank-0 type");
  std::vector<Rat> x = t.x, y = t.y;
  for (Rat& v : x) v -= t.a / 2;
  for (Rat& v : y) v -= t.a / 2;
  return make_hypergeom_type(std::move(x), std::move(y), t.a, t.ell - 1);
}

std::optional<StratumLabel> classify_stratum(std::span<const double> sv, int k,
                                             int lambda, double tol) {
  if (k < 0 || k > lambda) throw ParameterError("need 0 <= k <= lambda");
  int i = 0, j = 0;
  double prev = 1.0 + tol;
  for (double v : sv) {
    if (v > prev) throw ParameterError("singular values must be sorted descending and <= 1");
    if (v < 0) throw ParameterError("singular values must be nonnegative");
    prev = v;
    if (v > 1.0 - tol) ++i;  // strict: boundary ties go to the smaller stratum
    if (v > tol) ++j;
  }
  if (k <= i && i <= j && j <= lambda) return StratumLabel{i, j};
  return std::nullopt;
}

bool SubnormalitySet::contains(const Rat& nu) const {
  if (nu > ray_start) return true;
  return std::find(embedded.begin(), embedded.end(), nu) != embedded.end();
}

SubnormalitySet w_sub(const StructureParams& P) {
  SubnormalitySet w;
  for (int j = 1; j <= P.r; ++j) w.embedded.push_back(nu_k(P, j));
  w.ray_start = P.p - 1;
  return w;
}

}  // namespace symdom
