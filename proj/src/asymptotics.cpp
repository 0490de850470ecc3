#include "symdom/asymptotics.hpp"

#include "symdom/errors.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace symdom {

Rat WrightSeriesSpec::theta() const {
  Rat t = Rat(static_cast<int>(mu.size()) - static_cast<int>(beta.size()), 2);
  for (const Rat& b : beta) t += b;
  for (const Rat& m : mu) t -= m;
  return t;
}

double wright_log_eval(const WrightSeriesSpec& spec, double x) {
  if (x < 0) throw ParameterError("series argument must be nonnegative");
  for (const Rat& b : spec.beta)
    if (b <= 0) throw ParameterError("Gamma pole in numerator parameter");
  for (const Rat& m : spec.mu)
    if (m <= 0) throw ParameterError("Gamma pole in denominator parameter");

  auto log_term = [&](long n) {
    double lt = (x > 0) ? n * std::log(x) : (n == 0 ? 0.0 : -std::numeric_limits<double>::infinity());
    lt -= std::lgamma(static_cast<double>(n) + 1.0);
    for (const Rat& b : spec.beta) lt += std::lgamma(static_cast<double>(n) + to_double(b));
    for (const Rat& m : spec.mu) lt -= std::lgamma(static_cast<double>(n) + to_double(m));
    return lt;
  };

  double max_lt = log_term(0);
  double sum = 1.0, comp = 0.0;  // sum of exp(lt - max_lt), Kahan-compensated
  int below = 0;
  const double cutoff = std::log(1e-18);
  for (long n = 1; n <= 1000000; ++n) {
    double lt = log_term(n);
    if (lt > max_lt) {
      double scale = std::exp(max_lt - lt);
      sum *= scale;
      comp *= scale;
      max_lt = lt;
    }
    const double y = std::exp(lt - max_lt) - comp;
    const double s = sum + y;
    comp = (s - sum) - y;
    sum = s;
    if (lt - max_lt < cutoff) {
      if (++below >= 20) return max_lt + std::log(sum);
    } else {
      below = 0;
    }
  }
  throw Error("series did not converge within 1e6 terms");
}

double wright_eval(const WrightSeriesSpec& spec, double x) {
  double lv = wright_log_eval(spec, x);
  if (lv > 700.0) throw Error("series value exceeds the floating range; use wright_log_eval");
  return std::exp(lv);
}

ScaledLimitResult wright_scaled_limit(const WrightSeriesSpec& spec,
                                      std::vector<double> x_grid) {
  if (spec.kappa() != 2)
    throw ParameterError("scaled limit requires one more denominator than numerator parameter");
  const double theta = to_double(spec.theta());
  ScaledLimitResult out;
  double prev = 0;
  for (std::size_t i = 0; i < x_grid.size(); ++i) {
    const double x = x_grid[i];
    if (x <= 0) throw ParameterError("scaled-limit grid must be positive");
    double lv = wright_log_eval(spec, x) - 2.0 * std::sqrt(x) - 0.5 * theta * std::log(x);
    ScaledLimitPoint pt;
    pt.x = x;
    pt.value = std::exp(lv);
    pt.delta = (i == 0) ? 0.0 : pt.value - prev;
    prev = pt.value;
    out.points.push_back(pt);
  }
  out.cauchy = out.points.size() >= 3;
  for (std::size_t i = 2; i < out.points.size(); ++i)
    if (!(std::abs(out.points[i].delta) <= std::abs(out.points[i - 1].delta)))
      out.cauchy = false;
  if (!out.points.empty() && !std::isfinite(out.points.back().value)) out.cauchy = false;
  return out;
}

std::vector<double> geometric_grid(int j_lo, int j_hi) {
  std::vector<double> g;
  for (int j = j_lo; j <= j_hi; ++j) g.push_back(std::pow(4.0, j));
  return g;
}

void write_scaled_limit_csv(std::ostream& os, const ScaledLimitResult& r) {
  os << "x,scaled_value,delta\n";
  char buf[96];
  for (const auto& p : r.points) {
    std::snprintf(buf, sizeof buf, "%.12e,%.12e,%.12e\n", p.x, p.value, p.delta);
    os << buf;
  }
}

Rat theta_of_type(const HypergeomType& type) {
  Rat t(1, 2);
  for (const Rat& xi : type.x) t += xi;
  for (const Rat& yi : type.y) t -= yi;
  return t;
}

namespace {

WrightSeriesSpec assemble_peaking(const HypergeomType& type, const Partition& lam) {
  const int ell = type.ell;
  const Rat a = type.a;
  const Rat l1 = lam.part(0);
  WrightSeriesSpec w;
  // numerator: {lam1 + x_i}, {lam1 + 1 + (a/2)(ell-1)},
  //            {lam1 - lam_j + 1 + (a/2)(j-1), j = 1..ell-1}
  for (const Rat& xi : type.x) w.beta.push_back(l1 + xi);
  w.beta.push_back(l1 + 1 + a / 2 * (ell - 1));
  for (int j = 1; j <= ell - 1; ++j)
    w.beta.push_back(l1 - lam.part(j - 1) + 1 + a / 2 * (j - 1));
  // denominator: {lam1 + y_i}, {lam1 - lam_j + 1 + (a/2) j, j = 1..ell-1}
  for (const Rat& yi : type.y) w.mu.push_back(l1 + yi);
  for (int j = 1; j <= ell - 1; ++j)
    w.mu.push_back(l1 - lam.part(j - 1) + 1 + a / 2 * j);
  // one numerator Gamma(s+1) cancels against a factor s!
  bool removed = false;
  for (auto it = w.beta.begin(); it != w.beta.end(); ++it)
    if (*it == 1) {
      w.beta.erase(it);
      removed = true;
      break;
    }
  if (!removed) throw ParameterError("peaking series misses its canceling Gamma(s+1) factor");
  return w;
}

}  // namespace

WrightSeriesSpec wright_spec_of_peaking(const PeakingMomentSpec& spec) {
  if (spec.lam.length() > spec.type.ell - 1 && !(spec.type.ell == 0 && spec.lam.empty()))
    throw ParameterError("peaking partition longer than ell - 1");
  return assemble_peaking(spec.type, spec.lam);
}

WrightSeriesSpec wright_spec_of_peaking_base(const PeakingMomentSpec& spec) {
  return assemble_peaking(spec.type, Partition());
}

Rat peaking_target(const PeakingMomentSpec& spec) {
  return limit_type(spec.type).coefficient(spec.lam);
}

double peaking_moment_ratio(const PeakingMomentSpec& spec, int n) {
  if (n < 1) throw ParameterError("peaking index must be positive");
  if (spec.lam.empty()) return to_double(peaking_target(spec));  // self-normalized
  WrightSeriesSpec num = wright_spec_of_peaking(spec);
  WrightSeriesSpec den = wright_spec_of_peaking_base(spec);
  const double x = static_cast<double>(n) * n;
  double ratio = std::exp(wright_log_eval(num, x) - wright_log_eval(den, x));
  return to_double(peaking_target(spec)) * ratio;
}

}  // namespace symdom
