#include "symdom/radial_measures.hpp"

#include "symdom/errors.hpp"
#include "symdom/quadrature.hpp"

#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

namespace symdom {

std::string family_name(MeasureFamily f) {
  switch (f) {
    case MeasureFamily::lebesgue: return "lebesgue";
    case MeasureFamily::kepler_riemann: return "kepler_riemann";
    case MeasureFamily::boundary_orbit: return "boundary_orbit";
    case MeasureFamily::bergman_weighted: return "bergman_weighted";
    case MeasureFamily::boundary_kepler: return "boundary_kepler";
  }
  return "?";
}

RadialMeasureSpec make_radial_spec(MeasureFamily family, const StructureParams& P,
                                   int k, int lambda, std::optional<Rat> nu) {
  RadialMeasureSpec s;
  s.family = family;
  s.params = P;
  s.k = k;
  s.lambda = lambda;
  s.vandermonde = P.a;
  switch (family) {
    case MeasureFamily::lebesgue:
      if (k != 0 || lambda != P.r) throw ParameterError("lebesgue family has k = 0, lambda = r");
      break;
    case MeasureFamily::kepler_riemann:
      if (k != 0 || lambda < 0 || lambda > P.r)
        throw ParameterError("kepler_riemann family has k = 0, 0 <= lambda <= r");
      break;
    case MeasureFamily::boundary_orbit:
      if (k < 1 || k > P.r || lambda != P.r)
        throw ParameterError("boundary_orbit family has 1 <= k <= r, lambda = r");
      break;
    case MeasureFamily::bergman_weighted:
      if (k != 0 || lambda < 0 || lambda > P.r)
        throw ParameterError("bergman_weighted family has k = 0, 0 <= lambda <= r");
      if (!nu) throw ParameterError("bergman_weighted family requires a weight nu");
      if (*nu <= P.p - 1) throw ParameterError("weight nu must exceed p - 1");
      s.nu = nu;
      break;
    case MeasureFamily::boundary_kepler:
      if (k < 1 || k > lambda || lambda > P.r)
        throw ParameterError("boundary_kepler family has 1 <= k <= lambda <= r");
      break;
  }
  s.power_t = P.b + P.a * (P.r - lambda);
  switch (family) {
    case MeasureFamily::lebesgue:
    case MeasureFamily::kepler_riemann:
      s.power_one_minus_t = 0;
      break;
    case MeasureFamily::bergman_weighted:
      s.power_one_minus_t = *s.nu - P.p;
      break;
    case MeasureFamily::boundary_orbit:
    case MeasureFamily::boundary_kepler:
      s.power_one_minus_t = nu_k(P, k) - P.genus_of_rank(k);
      break;
  }
  if (s.power_one_minus_t <= -1 || s.power_t <= -1)
    throw QuadratureError("non-integrable density exponent");
  s.exactness_warning = !(is_integer(P.a) && numerator(P.a) % 2 == 0);
  if (s.point_mass()) {
    s.norm_const = 1.0;
    s.normalized = true;
  }
  return s;
}

HypergeomType type_of(const RadialMeasureSpec& spec) {
  const StructureParams& P = spec.params;
  switch (spec.family) {
    case MeasureFamily::lebesgue:
    case MeasureFamily::kepler_riemann:
      return make_type(P, 0, spec.lambda, P.p);
    case MeasureFamily::bergman_weighted:
      return make_type(P, 0, spec.lambda, spec.nu);
    case MeasureFamily::boundary_orbit:
    case MeasureFamily::boundary_kepler:
      return make_type(P, spec.k, spec.lambda);
  }
  throw ParameterError("unknown measure family");
}

double density(const RadialMeasureSpec& spec, std::span<const double> t) {
  const int m = spec.free_count();
  if (m == 0) throw QuadratureError("point-mass measure has no density");
  if (static_cast<int>(t.size()) != m)
    throw QuadratureError("density point has wrong dimension");
  double prev = 1.0;
  for (double v : t) {
    if (!(v > 0.0) || !(v < 1.0) || v > prev)
      throw QuadratureError("point outside the open ordered cell");
    prev = v;
  }
  const double pt = to_double(spec.power_t);
  const double pm = to_double(spec.power_one_minus_t);
  const double a = to_double(spec.vandermonde);
  double out = 1.0;
  for (int i = 0; i < m; ++i) {
    out *= std::pow(t[static_cast<std::size_t>(i)], pt) *
           std::pow(1.0 - t[static_cast<std::size_t>(i)], pm);
    for (int j = i + 1; j < m; ++j)
      out *= std::pow(t[static_cast<std::size_t>(i)] - t[static_cast<std::size_t>(j)], a);
  }
  return out;
}

namespace {

// Odd integer a with nonnegative-integer endpoint exponents: the integrand is
// a polynomial on the ordered cell, so a nested mapped Gauss rule is exact.
bool ordered_cell_exact(const RadialMeasureSpec& spec) {
  return is_integer(spec.vandermonde) && numerator(spec.vandermonde) % 2 != 0 &&
         is_nonneg_integer(spec.power_t) && is_nonneg_integer(spec.power_one_minus_t);
}

int auto_nodes(const RadialMeasureSpec& spec, int poly_degree) {
  const int m = spec.free_count();
  if (!spec.exactness_warning) {
    const int av = spec.vandermonde.convert_to<int>();
    return (poly_degree + av * (m > 0 ? m - 1 : 0)) / 2 + 2;
  }
  if (ordered_cell_exact(spec)) {
    const int av = spec.vandermonde.convert_to<int>();
    const int pt = spec.power_t.convert_to<int>();
    const int pm = spec.power_one_minus_t.convert_to<int>();
    return m * (poly_degree + pt + pm + av * (m - 1) + 1) / 2 + 4;
  }
  return 200;  // genuinely kinked |Delta|^a: dense rule, looser tolerance
}

// Iterated integral over 1 > t_1 > ... > t_m > 0 via t_j = t_{j-1} u_j with
// plain Gauss-Legendre per level; weights and Vandermonde enter the smooth
// integrand directly.
double integrate_ordered(const RadialMeasureSpec& spec, int nodes,
                         const std::function<double(std::span<const double>)>& f) {
  const int m = spec.free_count();
  auto rule = gauss_jacobi01(nodes, 0.0, 0.0);
  const double pt = to_double(spec.power_t);
  const double pm = to_double(spec.power_one_minus_t);
  const double a = to_double(spec.vandermonde);
  std::vector<double> t(static_cast<std::size_t>(m));
  std::vector<int> idx(static_cast<std::size_t>(m), 0);
  double total = 0.0, comp = 0.0;
  while (true) {
    double jac = 1.0;
    for (int i = 0; i < m; ++i) {
      double u = rule.nodes[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
      t[static_cast<std::size_t>(i)] = (i == 0) ? u : t[static_cast<std::size_t>(i) - 1] * u;
      if (i > 0) jac *= t[static_cast<std::size_t>(i) - 1];
      jac *= rule.weights[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    }
    double dens = 1.0;
    for (int i = 0; i < m; ++i) {
      dens *= std::pow(t[static_cast<std::size_t>(i)], pt) *
              std::pow(1.0 - t[static_cast<std::size_t>(i)], pm);
      for (int j = i + 1; j < m; ++j)
        dens *= std::pow(t[static_cast<std::size_t>(i)] - t[static_cast<std::size_t>(j)], a);
    }
    const double y = jac * dens * f(t) - comp;
    const double s = total + y;
    comp = (s - total) - y;
    total = s;
    int pos = 0;
    while (pos < m) {
      if (++idx[static_cast<std::size_t>(pos)] < nodes) break;
      idx[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == m) break;
  }
  return total;
}

// Symmetrized tensor Gauss-Jacobi integral of a symmetric integrand against
// the unnormalized measure, over the ordered cell (divides the cube by m!).
double integrate_sym(const RadialMeasureSpec& spec, int nodes,
                     const std::function<double(std::span<const double>)>& f) {
  const int m = spec.free_count();
  if (m == 0) throw QuadratureError("point mass has no quadrature");
  if (spec.exactness_warning && ordered_cell_exact(spec))
    return integrate_ordered(spec, nodes, f);
  auto rule = gauss_jacobi01(nodes, to_double(spec.power_t), to_double(spec.power_one_minus_t));
  const double a = to_double(spec.vandermonde);
  std::vector<int> idx(static_cast<std::size_t>(m), 0);
  std::vector<double> t(static_cast<std::size_t>(m));
  double total = 0.0, comp = 0.0;  // Kahan
  while (true) {
    double w = 1.0;
    for (int i = 0; i < m; ++i) {
      t[static_cast<std::size_t>(i)] = rule.nodes[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
      w *= rule.weights[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    }
    double vdm = 1.0;
    for (int i = 0; i < m && vdm != 0.0; ++i)
      for (int j = i + 1; j < m; ++j)
        vdm *= std::pow(std::abs(t[static_cast<std::size_t>(i)] - t[static_cast<std::size_t>(j)]), a);
    if (vdm != 0.0) {
      const double y = w * vdm * f(t) - comp;
      const double s = total + y;
      comp = (s - total) - y;
      total = s;
    }
    int pos = 0;
    while (pos < m) {
      if (++idx[static_cast<std::size_t>(pos)] < nodes) break;
      idx[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == m) break;
  }
  double mfact = 1.0;
  for (int i = 2; i <= m; ++i) mfact *= i;
  return total / mfact;
}

std::vector<double> padded_point(const RadialMeasureSpec& spec, std::span<const double> t) {
  std::vector<double> pt(static_cast<std::size_t>(spec.params.r), 0.0);
  for (int i = 0; i < spec.k; ++i) pt[static_cast<std::size_t>(i)] = 1.0;
  for (int i = 0; i < spec.free_count(); ++i)
    pt[static_cast<std::size_t>(spec.k + i)] = t[static_cast<std::size_t>(i)];
  return pt;
}

}  // namespace

double normalize(RadialMeasureSpec& spec, int nodes) {
  if (spec.point_mass()) {
    spec.norm_const = 1.0;
    spec.normalized = true;
    return spec.norm_const;
  }
  if (nodes <= 0) nodes = auto_nodes(spec, 0);
  double mass = integrate_sym(spec, nodes, [](std::span<const double>) { return 1.0; });
  if (!(mass > 0.0) || !std::isfinite(mass)) throw QuadratureError("measure has no finite positive mass");
  spec.norm_const = 1.0 / mass;
  spec.normalized = true;
  return spec.norm_const;
}

double moment_spherical(const RadialMeasureSpec& spec, const Partition& mu, int nodes) {
  if (mu.length() > spec.lambda)
    throw ParameterError("moment partition longer than the active rank");
  const SymPoly& phi = jack_spherical_cached(mu, spec.params.r, spec.params.a);
  if (spec.point_mass()) {
    std::vector<double> pt(static_cast<std::size_t>(spec.params.r), 0.0);
    for (int i = 0; i < spec.k; ++i) pt[static_cast<std::size_t>(i)] = 1.0;
    return eval(phi, std::span<const double>(pt));
  }
  if (!spec.normalized) throw QuadratureError("normalize the measure before taking moments");
  if (nodes <= 0) nodes = auto_nodes(spec, mu.weight());
  SymPolyTable table(phi);
  double val = integrate_sym(spec, nodes, [&](std::span<const double> t) {
    auto pt = padded_point(spec, t);
    return table(std::span<const double>(pt));
  });
  return spec.norm_const * val;
}

double check_radial_moment_identity(const RadialMeasureSpec& spec,
                                    const HypergeomType& type, const Partition& mu,
                                    int nodes) {
  Rat target_exact =
      pochhammer(spec.params.dim_over_rank(), mu, spec.params.a) * type.coefficient(mu);
  double target = to_double(target_exact);
  double got = moment_spherical(spec, mu, nodes);
  return std::abs(got - target) / std::abs(target);
}

double check_isotype_moment_identity(const StructureParams& P, int k,
                                     const Partition& mu, int nodes) {
  Rat dmu = dim_isotype(mu, P);
  auto spec = make_radial_spec(MeasureFamily::boundary_orbit, P, k, P.r);
  normalize(spec, nodes);
  // E_e^mu = (d_mu / (d/r)_mu) Phi_mu
  double scale = to_double(dmu / pochhammer(P.dim_over_rank(), mu, P.a));
  double lhs = scale * moment_spherical(spec, mu, nodes);
  double target = to_double(dmu / pochhammer(nu_k(P, k), mu, P.a));
  return std::abs(lhs - target) / std::abs(target);
}

void write_moment_csv(std::ostream& os, std::span<const MomentRow> rows) {
  os << "family,r,a,b,k,lambda,nu,mu,moment,target,rel_err\n";
  char buf[64];
  for (const auto& row : rows) {
    os << family_name(row.spec.family) << ',' << row.spec.params.r << ','
       << rat_to_string(row.spec.params.a) << ',' << rat_to_string(row.spec.params.b) << ','
       << row.spec.k << ',' << row.spec.lambda << ','
       << (row.spec.nu ? rat_to_string(*row.spec.nu) : "") << ',' << '"'
       << row.mu.to_string() << '"';
    std::snprintf(buf, sizeof buf, ",%.12e", row.moment);
    os << buf;
    std::snprintf(buf, sizeof buf, ",%.12e", row.target);
    os << buf;
    std::snprintf(buf, sizeof buf, ",%.12e", row.rel_err);
    os << buf << '\n';
  }
}

}  // namespace symdom
