#pragma once

#include "symdom/domain_params.hpp"
#include "symdom/partition.hpp"
#include "symdom/rational.hpp"

#include <iosfwd>
#include <vector>

namespace symdom {

// Entire generalized hypergeometric series
//   F(x) = sum_n [prod Gamma(n + beta_i) / prod Gamma(n + mu_i)] x^n / n!.
struct WrightSeriesSpec {
  std::vector<Rat> beta;  // numerator parameters
  std::vector<Rat> mu;    // denominator parameters

  Rat kappa() const { return Rat(1) + static_cast<int>(mu.size()) - static_cast<int>(beta.size()); }
  Rat theta() const;  // (q-p)/2 + sum beta - sum mu
};

// log F(x), summed in log-scale with compensated accumulation. Terms stop
// once 20 consecutive ones fall below 1e-18 of the running maximum; a hard
// cap of 1e6 terms raises an error.
double wright_log_eval(const WrightSeriesSpec& spec, double x);
// F(x) itself; throws if the value exceeds the double range.
double wright_eval(const WrightSeriesSpec& spec, double x);

struct ScaledLimitPoint {
  double x = 0, value = 0, delta = 0;  // value = x^{-theta/2} e^{-2 sqrt x} F(x)
};
struct ScaledLimitResult {
  std::vector<ScaledLimitPoint> points;
  bool cauchy = false;  // successive deltas shrink monotonically
};

// Requires q = p + 1. Evaluates the scaled sequence over the grid and flags
// divergence via the Cauchy test on successive differences.
ScaledLimitResult wright_scaled_limit(const WrightSeriesSpec& spec,
                                      std::vector<double> x_grid);

// Default geometric grid x = 4^j, doubling sqrt(x) per step.
std::vector<double> geometric_grid(int j_lo, int j_hi);

void write_scaled_limit_csv(std::ostream& os, const ScaledLimitResult& r);

// Peaking-moment data: a hypergeometric type together with the little-space
// partition lam of length ell - 1.
struct PeakingMomentSpec {
  HypergeomType type;
  Partition lam;
};

// theta = 1/2 + sum x_i - sum y_i, independent of lam.
Rat theta_of_type(const HypergeomType& type);

// The gamma-ratio factor B(t) of the peaking series, as an explicit Wright
// spec in the summation index (the canceled s! accounted for).
WrightSeriesSpec wright_spec_of_peaking(const PeakingMomentSpec& spec);
// Same with lam = 0 (the normalizing series F_0).
WrightSeriesSpec wright_spec_of_peaking_base(const PeakingMomentSpec& spec);

// Normalized peaking moment R(n) of |N_{lam^+}|^2 against |H_c^n|^2/||H_c^n||^2;
// R(n) -> target = limit_type(type).coefficient(lam).
double peaking_moment_ratio(const PeakingMomentSpec& spec, int n);
Rat peaking_target(const PeakingMomentSpec& spec);

}  // namespace symdom
