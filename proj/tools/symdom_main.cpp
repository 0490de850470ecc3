// Batch driver: every verification is a subcommand emitting a deterministic
// JSON report on stdout. Exit code 0 = all cases pass, 1 = some case failed,
// 2 = usage or parameter error.

#include "symdom/asymptotics.hpp"
#include "symdom/boundary_rep.hpp"
#include "symdom/domain_params.hpp"
#include "symdom/errors.hpp"
#include "symdom/moment_feasibility.hpp"
#include "symdom/radial_measures.hpp"
#include "symdom/report.hpp"
#include "symdom/toeplitz.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>

using namespace symdom;

namespace {

struct CommonOpts {
  std::string csv_path;
  std::uint64_t seed = 0;
  bool timing = false;
};

Rat parse_rat_arg(const std::string& s, const char* what) {
  auto v = parse_rational(s);
  if (!v) throw ParameterError(std::string("cannot parse rational ") + what + ": " + s);
  return *v;
}

std::pair<int, int> parse_model(const std::string& s) {
  auto x = s.find('x');
  if (x == std::string::npos || x == 0 || x + 1 >= s.size())
    throw ParameterError("model must look like 2x2, 2x3 or 1x4 (1xd = ball C^d)");
  int r = std::stoi(s.substr(0, x)), c = std::stoi(s.substr(x + 1));
  if (r < 1 || c < r) throw ParameterError("model needs 1 <= rows <= cols");
  return {r, c};
}

HypergeomType type_from_cli(const StructureParams& P, int k, int lambda,
                            const std::string& nu_str, RunReport& rep) {
  rep.add_param("k", std::to_string(k));
  rep.add_param("lambda", std::to_string(lambda));
  if (k >= 1) {
    if (!nu_str.empty())
      throw ParameterError("--nu applies only to k = 0 (weighted Bergman) types");
    return make_type(P, k, lambda);
  }
  Rat nu = nu_str.empty() ? Rat(P.p + 1) : parse_rat_arg(nu_str, "nu");
  rep.add_param("nu", rat_to_string(nu));
  return make_type(P, 0, lambda, nu);
}

void emit(RunReport& rep, const CommonOpts& common,
          std::chrono::steady_clock::time_point t0, const std::string& csv_override = "") {
  rep.finalize();
  rep.seed = common.seed;
  rep.with_timing = common.timing;
  rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  std::cout << rep.to_json() << "\n";
  if (!common.csv_path.empty()) {
    std::ofstream os(common.csv_path);
    if (!os) throw ParameterError("cannot open csv path " + common.csv_path);
    os << (csv_override.empty() ? rep.to_csv() : csv_override);
  }
}

int finish(const RunReport& rep) { return rep.pass ? 0 : 1; }

// ---- params ----

int cmd_params(int r, const std::string& a_s, const std::string& b_s, int k, int lambda,
               const CommonOpts& common) {
  auto t0 = std::chrono::steady_clock::now();
  Rat a = parse_rat_arg(a_s, "a"), b = parse_rat_arg(b_s, "b");
  auto P = derive_params(r, a, b);
  RunReport rep;
  rep.check = "params";
  rep.add_param("r", std::to_string(r));
  rep.add_param("a", rat_to_string(a));
  rep.add_param("b", rat_to_string(b));
  rep.add_flag("d=" + rat_to_string(P.d), true, to_double(P.d));
  rep.add_flag("p=" + rat_to_string(P.p), true, to_double(P.p));
  for (int j = 1; j <= P.r; ++j)
    rep.add_flag("nu_" + std::to_string(j) + "=" + rat_to_string(nu_k(P, j)), true,
                 to_double(nu_k(P, j)));
  auto w = w_sub(P);
  std::string ws = "W_sub = {";
  for (std::size_t i = 0; i < w.embedded.size(); ++i)
    ws += (i ? "," : "") + rat_to_string(w.embedded[i]);
  ws += "} U (" + rat_to_string(w.ray_start) + ",oo)";
  rep.notes.push_back(ws);
  if (lambda < 0) lambda = P.r;
  if (k < 0) k = 0;
  if (k > lambda || lambda > P.r) throw ParameterError("need 0 <= k <= lambda <= r");
  std::string strata = "strata of the closed set (k=" + std::to_string(k) +
                       ",lambda=" + std::to_string(lambda) + "):";
  for (int i = k; i <= lambda; ++i)
    for (int j = i; j <= lambda; ++j)
      strata += " (" + std::to_string(i) + "," + std::to_string(j) + ")";
  rep.notes.push_back(strata);
  emit(rep, common, t0);
  return finish(rep);
}

// ---- radial-check ----

int cmd_radial_check(int r, const std::string& a_s, const std::string& b_s, int k,
                     int lambda, const std::string& nu_str, int max_weight, int nodes,
                     double tol, const CommonOpts& common) {
  auto t0 = std::chrono::steady_clock::now();
  auto P = derive_params(r, parse_rat_arg(a_s, "a"), parse_rat_arg(b_s, "b"));
  if (lambda < 0) lambda = P.r;
  RunReport rep;
  rep.check = "radial-check";
  rep.add_param("r", std::to_string(r));
  rep.add_param("a", rat_to_string(P.a));
  rep.add_param("b", rat_to_string(P.b));
  rep.add_param("k", std::to_string(k));
  rep.add_param("lambda", std::to_string(lambda));
  std::optional<Rat> nu;
  if (k == 0) nu = nu_str.empty() ? Rat(P.p + 1) : parse_rat_arg(nu_str, "nu");
  if (nu) rep.add_param("nu", rat_to_string(*nu));
  RadialMeasureSpec spec =
      (k == 0) ? make_radial_spec(MeasureFamily::bergman_weighted, P, 0, lambda, nu)
               : make_radial_spec(MeasureFamily::boundary_kepler, P, k, lambda);
  if (tol <= 0) tol = spec.exactness_warning ? 1e-6 : 1e-8;
  rep.add_param("max_weight", std::to_string(max_weight));
  rep.add_param("nodes", std::to_string(nodes));
  rep.add_param("tol", format_double(tol));
  if (spec.exactness_warning)
    rep.notes.push_back("odd multiplicity: dense quadrature, loosened tolerance");
  normalize(spec, nodes);
  auto type = type_of(spec);
  std::vector<MomentRow> rows;
  for (auto& mu : partitions_up_to(max_weight, lambda)) {
    MomentRow row;
    row.spec = spec;
    row.mu = mu;
    row.moment = moment_spherical(spec, mu, nodes);
    row.target = to_double(pochhammer(P.dim_over_rank(), mu, P.a) * type.coefficient(mu));
    row.rel_err = check_radial_moment_identity(spec, type, mu, nodes);
    rows.push_back(row);
    rep.add_case("mu=" + mu.to_string(), row.moment, row.target, tol);
  }
  std::ostringstream csv;
  write_moment_csv(csv, rows);
  emit(rep, common, t0, csv.str());
  return finish(rep);
}

// ---- toeplitz-check ----

int cmd_toeplitz_check(const std::string& model, int k, int lambda,
                       const std::string& nu_str, int cap, int triples,
                       const CommonOpts& common) {
  auto t0 = std::chrono::steady_clock::now();
  auto [rows, cols] = parse_model(model);
  ModelContext ctx(rows, cols, common.seed);
  const auto& P = ctx.params();
  if (lambda < 0) lambda = P.r;
  RunReport rep;
  rep.check = "toeplitz-check";
  rep.add_param("model", model);
  auto type = type_from_cli(P, k, lambda, nu_str, rep);
  rep.add_param("degree_cap", std::to_string(cap));
  if (cap < 1) throw ParameterError("degree cap must be positive");

  // adjoint equivalence on every isotype up to the cap, all matrix units
  const int mu_max = std::min(cap, 4);
  for (auto& mu : partitions_up_to(mu_max, std::min(type.ell, ctx.rank()))) {
    if (mu.empty()) continue;
    const auto& B = ctx.basis(mu);
    std::mt19937_64 rng(common.seed ^ (static_cast<std::uint64_t>(mu.weight()) << 8));
    std::uniform_int_distribution<int> coin(-2, 2);
    MatrixPoly p(rows, cols);
    for (int i = 0; i < B.dim(); ++i) {
      auto w = B.vectors[static_cast<std::size_t>(i)];
      w *= GRat(Rat(coin(rng)), Rat(coin(rng), 2));
      p += w;
    }
    if (p.is_zero()) p = B.vectors[0];
    bool all_ok = true;
    for (int vi = 0; vi < rows && all_ok; ++vi)
      for (int vj = 0; vj < cols && all_ok; ++vj) {
        GMat v = GMat::unit(rows, cols, vi, vj);
        all_ok = adjoint_closed_form(ctx, type, v, mu, p) ==
                 adjoint_brute_force(ctx, type, v, mu, p);
      }
    rep.add_flag("adjoint mu=" + mu.to_string(), all_ok, all_ok ? 1 : 0);
  }

  // ball models: explicit shift weights m/(nu + m - 1)
  if (rows == 1 && type.x.empty() && type.y.size() == 1) {
    bool ok = true;
    for (int m = 1; m <= std::min(cap, 8); ++m) {
      MatrixPoly p = MatrixPoly::constant(1, cols, GRat(1));
      for (int i = 0; i < m; ++i) p = p * MatrixPoly::coordinate(1, cols, 0, 0);
      MatrixPoly want = MatrixPoly::constant(1, cols, GRat(1));
      for (int i = 0; i < m - 1; ++i) want = want * MatrixPoly::coordinate(1, cols, 0, 0);
      want *= GRat(Rat(m) / (type.y[0] + m - 1));
      ok = ok &&
           adjoint_closed_form(ctx, type, GMat::unit(1, cols, 0, 0), Partition({m}), p) == want;
    }
    rep.add_flag("shift weights m/(nu+m-1)", ok, ok ? 1 : 0);
  }

  // block sparsity of linear symbols
  {
    Symbol v{MatrixPoly::linear_form(GMat::unit(rows, cols, 0, 0)), false};
    auto T = toeplitz_matrix(ctx, type, v, std::min(cap, 3));
    bool ok = true;
    for (auto& [key, entries] : T.blocks) {
      bool raises = false;
      for (int j = 0; j < ctx.rank(); ++j) {
        auto up = key.second.bump(j, +1);
        if (up && *up == key.first) raises = true;
      }
      ok = ok && raises;
    }
    rep.add_flag("block sparsity raises one box", ok, ok ? 1 : 0);
  }

  // multiplicativity on seeded triples
  {
    std::mt19937_64 rng(common.seed + 1);
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3), slot(0, rows * cols - 1);
    const int each = std::max(1, cap / 3);
    auto rnd = [&](int maxdeg) {
      MatrixPoly p(rows, cols);
      std::uniform_int_distribution<int> dd(0, maxdeg);
      for (int t = 0; t < 3; ++t) {
        std::vector<int> e(static_cast<std::size_t>(rows) * cols, 0);
        int deg = dd(rng);
        for (int bb = 0; bb < deg; ++bb) ++e[static_cast<std::size_t>(slot(rng))];
        p.add_term(e, GRat(Rat(num(rng), den(rng))));
      }
      return p;
    };
    bool ok = true;
    for (int t = 0; t < triples && ok; ++t)
      ok = check_multiplicativity(ctx, type, rnd(each), rnd(each), rnd(cap - 2 * each), cap);
    rep.add_flag("multiplicativity on " + std::to_string(triples) + " seeded triples", ok,
                 ok ? 1 : 0);
  }
  emit(rep, common, t0);
  return finish(rep);
}

// ---- peaking ----

int cmd_peaking(const std::string& model, int k, int lambda, const std::string& nu_str,
                const std::string& lam_str, int n_max, double tol, const CommonOpts& common) {
  auto t0 = std::chrono::steady_clock::now();
  auto [rows, cols] = parse_model(model);
  auto P = derive_params(rows, 2, cols - rows);
  if (lambda < 0) lambda = P.r;
  RunReport rep;
  rep.check = "peaking";
  rep.add_param("model", model);
  auto type = type_from_cli(P, k, lambda, nu_str, rep);
  std::vector<int> parts;
  if (!lam_str.empty()) {
    std::stringstream ss(lam_str);
    std::string tok;
    while (std::getline(ss, tok, ',')) parts.push_back(std::stoi(tok));
  }
  Partition lam(parts);
  rep.add_param("lam", lam.to_string());
  rep.add_param("n_max", std::to_string(n_max));
  rep.add_param("tol", format_double(tol));
  PeakingMomentSpec spec{type, lam};
  const double target = to_double(peaking_target(spec));
  rep.notes.push_back("target = limit-type coefficient = " +
                      rat_to_string(peaking_target(spec)));
  if (k >= 1 && lambda >= 1) {
    auto lim = limit_type(type);
    auto want = (k == 1) ? make_type(P.reduced(1), 0, lambda - 1, nu_k(P, 1) - P.a / 2)
                         : make_type(P.reduced(1), k - 1, lambda - 1);
    rep.add_flag("limit type equals the reduced-model type", lim == want, lim == want ? 1 : 0);
  }
  double prev_gap = -1;
  bool halving = true;
  for (int n = std::max(1, n_max / 8); n <= n_max; n *= 2) {
    double rn = peaking_moment_ratio(spec, n);
    double gap = std::abs(rn - target);
    if (prev_gap >= 0 && gap >= prev_gap && gap > 1e-14) halving = false;
    prev_gap = gap;
    if (2 * n > n_max) {
      rep.add_case("R(" + std::to_string(n) + ")", rn, target, tol);
      break;
    }
    rep.add_flag("R(" + std::to_string(n) + ")", true, rn);
  }
  rep.add_flag("successive gaps shrink", halving, halving ? 1 : 0);
  emit(rep, common, t0);
  return finish(rep);
}

// ---- boundary-rep ----

Symbol parse_symbol(const std::string& tok, int rows, int cols) {
  std::string body = tok;
  bool conj = false;
  if (body.rfind("zbar", 0) == 0) {
    conj = true;
    body = body.substr(4);
  } else if (body.rfind("z", 0) == 0) {
    body = body.substr(1);
  } else {
    throw ParameterError("symbol must look like z11, zbar22, or z1 on the ball");
  }
  int i = 0, j = 0;
  if (rows == 1 && body.size() == 1) {
    j = body[0] - '1';
  } else if (body.size() == 2) {
    i = body[0] - '1';
    j = body[1] - '1';
    if (rows == 1) j = body[1] - '1';  // ball also accepts z1<j>
  } else {
    throw ParameterError("cannot parse symbol coordinates: " + tok);
  }
  if (i < 0 || i >= rows || j < 0 || j >= cols)
    throw ParameterError("symbol coordinate out of range: " + tok);
  return Symbol{MatrixPoly::coordinate(rows, cols, i, j), conj};
}

int cmd_boundary_rep(const std::string& model, int k, int lambda, const std::string& nu_str,
                     const std::string& symbols, int n_max, int cap, double tail,
                     const CommonOpts& common) {
  auto t0 = std::chrono::steady_clock::now();
  auto [rows, cols] = parse_model(model);
  auto P = derive_params(rows, 2, cols - rows);
  if (lambda < 0) lambda = P.r;
  RunReport rep;
  rep.check = "boundary-rep";
  rep.add_param("model", model);
  auto type = type_from_cli(P, k, lambda, nu_str, rep);
  rep.add_param("symbols", symbols);
  rep.add_param("n_max", std::to_string(n_max));
  rep.add_param("degree_cap", std::to_string(cap));
  rep.add_param("tail_target", format_double(tail));
  rep.add_param("tripotent", "e11");
  auto q = MatrixPoly::constant(rows, cols, GRat(1));
  ResidualOptions opts;
  opts.degree_cap = cap;
  opts.tail_target = tail;
  std::stringstream ss(symbols);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    Symbol sym = parse_symbol(tok, rows, cols);
    ResidualExperiment exp(type, sym, q);
    std::vector<ResidualPoint> pts;
    for (int n = 1; n <= n_max; ++n) pts.push_back(exp.run(n, opts));
    // eventually decreasing: non-increasing over the trailing half
    bool decreasing = true;
    for (std::size_t i = pts.size() / 2 + 1; i < pts.size(); ++i)
      decreasing = decreasing && pts[i].residual <= pts[i - 1].residual + 1e-15;
    double worst_tail = 0;
    for (auto& p : pts) worst_tail = std::max(worst_tail, p.tail_rel);
    rep.add_flag(tok + ": residual eventually decreasing", decreasing, pts.back().residual);
    rep.add_flag(tok + ": tail bound below target", worst_tail <= tail, worst_tail);
    rep.notes.push_back(tok + ": residual(" + std::to_string(n_max) +
                        ") = " + format_double(pts.back().residual) + ", degree cap " +
                        std::to_string(pts.back().degree_cap));
  }
  emit(rep, common, t0);
  return finish(rep);
}

// ---- moments ----

int cmd_moments(int d, const std::string& grid_str, int size, double tol,
                const CommonOpts& common) {
  auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.check = "moments";
  rep.add_param("d", std::to_string(d));
  rep.add_param("nu_grid", grid_str);
  rep.add_param("size", std::to_string(size));
  rep.add_param("tol", format_double(tol));
  std::vector<Rat> grid;
  std::stringstream ss(grid_str);
  std::string tok;
  while (std::getline(ss, tok, ',')) grid.push_back(parse_rat_arg(tok, "nu grid entry"));
  if (grid.empty()) throw ParameterError("empty weight grid");
  auto rows = w_sub_scan(d, grid, size, tol);
  for (auto& row : rows) {
    bool expected = (row.nu == d) || (row.nu > d);
    rep.add_flag("nu=" + rat_to_string(row.nu) + (row.feasible ? " feasible" : " infeasible"),
                 row.feasible == expected, row.min_eig_DH);
  }
  rep.notes.push_back(feasibility_table_json(d, size, tol, rows));
  emit(rep, common, t0);
  return finish(rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symdom: verification toolkit for hypergeometric measures, Toeplitz\n"
               "operators, and boundary limits on symmetric domains and Kepler varieties"};
  app.require_subcommand(0, 1);
  CommonOpts common;
  app.add_option("--csv", common.csv_path, "write the per-case table to this path");
  app.add_option("--seed", common.seed, "seed for randomized test polynomials");
  app.add_flag("--timing", common.timing, "include wall-clock runtime in the report");
  bool list = false;
  app.add_flag("--list", list, "list all checks and exit");

  int r = 2, k = -1, lambda = -1, max_weight = 4, nodes = 0, cap = 4, nmax = 20, d = 2,
      size = 12, triples = 20;
  std::string a = "2", b = "0", nu, model = "2x2", lam, symbols = "z11,zbar11",
              grid = "2,3,4";
  double tol = -1, peak_tol = 1e-3, tail = 1e-3, mtol = 1e-10;

  auto* c_params = app.add_subcommand("params", "structure constants, Wallach table, strata");
  c_params->fallthrough();
  c_params->add_option("-r,--rank", r);
  c_params->add_option("-a", a);
  c_params->add_option("-b", b);
  c_params->add_option("-k", k);
  c_params->add_option("-L,--lambda", lambda);

  auto* c_radial =
      app.add_subcommand("radial-check", "spherical-moment identities by quadrature");
  c_radial->fallthrough();
  c_radial->add_option("-r,--rank", r);
  c_radial->add_option("-a", a);
  c_radial->add_option("-b", b);
  c_radial->add_option("-k", k)->default_val(1);
  c_radial->add_option("-L,--lambda", lambda);
  c_radial->add_option("--nu", nu);
  c_radial->add_option("--max-weight", max_weight);
  c_radial->add_option("--nodes", nodes);
  c_radial->add_option("--tol", tol);

  auto* c_toe =
      app.add_subcommand("toeplitz-check", "adjoint equivalence, sparsity, multiplicativity");
  c_toe->fallthrough();
  c_toe->add_option("--model", model);
  c_toe->add_option("-k", k)->default_val(1);
  c_toe->add_option("-L,--lambda", lambda);
  c_toe->add_option("--nu", nu);
  c_toe->add_option("-D,--degree-cap", cap);
  c_toe->add_option("--triples", triples);

  auto* c_peak = app.add_subcommand("peaking", "peaking-moment convergence to the limit type");
  c_peak->fallthrough();
  c_peak->add_option("--model", model);
  c_peak->add_option("-k", k)->default_val(1);
  c_peak->add_option("-L,--lambda", lambda);
  c_peak->add_option("--nu", nu);
  c_peak->add_option("--lam", lam);
  c_peak->add_option("--n-max", nmax)->default_val(200);
  c_peak->add_option("--tol", peak_tol);

  auto* c_brep = app.add_subcommand("boundary-rep", "boundary-representation residuals");
  c_brep->fallthrough();
  c_brep->add_option("--model", model);
  c_brep->add_option("-k", k)->default_val(1);
  c_brep->add_option("-L,--lambda", lambda);
  c_brep->add_option("--nu", nu);
  c_brep->add_option("--symbols", symbols);
  c_brep->add_option("--n-max", nmax);
  c_brep->add_option("-D,--degree-cap", cap)->default_val(0);
  c_brep->add_option("--tail-target", tail);

  auto* c_mom = app.add_subcommand("moments", "rank-1 moment-problem feasibility scan");
  c_mom->fallthrough();
  c_mom->add_option("-d,--dim", d);
  c_mom->add_option("--nu-grid", grid);
  c_mom->add_option("--size", size);
  c_mom->add_option("--tol", mtol);

  CLI11_PARSE(app, argc, argv);

  if (list) {
    std::cout << "params\nradial-check\ntoeplitz-check\npeaking\nboundary-rep\nmoments\n";
    return 0;
  }
  try {
    if (c_params->parsed()) return cmd_params(r, a, b, k, lambda, common);
    if (c_radial->parsed())
      return cmd_radial_check(r, a, b, k, lambda, nu, max_weight, nodes, tol, common);
    if (c_toe->parsed()) return cmd_toeplitz_check(model, k, lambda, nu, cap, triples, common);
    if (c_peak->parsed()) return cmd_peaking(model, k, lambda, nu, lam, nmax, peak_tol, common);
    if (c_brep->parsed())
      return cmd_boundary_rep(model, k, lambda, nu, symbols, nmax, cap, tail, common);
    if (c_mom->parsed()) return cmd_moments(d, grid, size, mtol, common);
    std::cout << app.help();
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
