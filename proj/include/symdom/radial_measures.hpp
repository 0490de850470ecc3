#pragma once

#include "symdom/domain_params.hpp"
#include "symdom/partition.hpp"
#include "symdom/sympoly.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <string>

namespace symdom {

enum class MeasureFamily {
  lebesgue,         // flat measure on the closed ball, radial part t^b |Delta|^a
  kepler_riemann,   // Riemann measure of the rank-lambda Kepler set
  boundary_orbit,   // boundary G-orbit with k pinned units, full rank
  bergman_weighted, // weighted Bergman measure, weight nu > p-1, rank lambda
  boundary_kepler,  // boundary orbit intersected with the Kepler set
};

std::string family_name(MeasureFamily f);

// Radial density on squared singular-value coordinates: k coordinates pinned
// at 1, lambda-k free in the ordered cell 1 > t_{k+1} >= ... >= t_lambda > 0,
// r-lambda zero. Densities pair with K-averages f(sqrt t).
struct RadialMeasureSpec {
  MeasureFamily family = MeasureFamily::lebesgue;
  StructureParams params;
  int k = 0;
  int lambda = 0;
  std::optional<Rat> nu;  // Bergman weight (k = 0 families)
  Rat power_t = 0;
  Rat power_one_minus_t = 0;
  Rat vandermonde = 2;  // always the multiplicity a
  double norm_const = 1.0;
  bool normalized = false;
  bool exactness_warning = false;  // odd a: |Delta|^a is not a polynomial

  int free_count() const { return lambda - k; }
  bool point_mass() const { return lambda == k; }
};

RadialMeasureSpec make_radial_spec(MeasureFamily family, const StructureParams& P,
                                   int k, int lambda,
                                   std::optional<Rat> nu = std::nullopt);

// The hypergeometric type realized by the measure.
HypergeomType type_of(const RadialMeasureSpec& spec);

// Unnormalized density at an interior point of the ordered cell (free
// coordinates only).
double density(const RadialMeasureSpec& spec, std::span<const double> t);

// Computes norm_const so the measure has total mass 1. nodes = 0 picks the
// family's rule: exact degree count for even a, 200 per coordinate otherwise.
double normalize(RadialMeasureSpec& spec, int nodes = 0);

// int spec(dt) Phi_mu(1^k, t, 0^{r-lambda}) with Phi_mu spherical in r
// variables; deterministic for a given node count.
double moment_spherical(const RadialMeasureSpec& spec, const Partition& mu, int nodes = 0);

// Relative error of the dimension-free moment identity
//   int Phi_mu dmu = (d/r)_mu coefficient(mu).
double check_radial_moment_identity(const RadialMeasureSpec& spec,
                                    const HypergeomType& type, const Partition& mu,
                                    int nodes = 0);

// Relative error of the reproducing-kernel moment identity on the boundary
// orbit (full rank, exact dim P_mu): int E_e^mu dmu = d_mu / (nu_k)_mu.
double check_isotype_moment_identity(const StructureParams& P, int k,
                                     const Partition& mu, int nodes = 0);

struct MomentRow {
  RadialMeasureSpec spec;
  Partition mu;
  double moment = 0, target = 0, rel_err = 0;
};

void write_moment_csv(std::ostream& os, std::span<const MomentRow> rows);

}  // namespace symdom
