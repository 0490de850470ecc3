#include "symdom/errors.hpp"
#include "symdom/toeplitz.hpp"

#include <doctest.h>

#include <random>

using namespace symdom;

namespace {

MatrixPoly coord(int r, int s, int i, int j) { return MatrixPoly::coordinate(r, s, i, j); }

MatrixPoly zpow(int r, int s, int i, int j, int n) {
  MatrixPoly out = MatrixPoly::constant(r, s, GRat(1));
  for (int t = 0; t < n; ++t) out = out * coord(r, s, i, j);
  return out;
}

MatrixPoly seeded_poly(std::mt19937_64& rng, int r, int s, int deg, int terms) {
  MatrixPoly p(r, s);
  std::uniform_int_distribution<int> dd(0, deg), num(-3, 3), den(1, 3),
      slot(0, r * s - 1);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(static_cast<std::size_t>(r) * s, 0);
    int d = dd(rng);
    for (int b = 0; b < d; ++b) ++e[static_cast<std::size_t>(slot(rng))];
    p.add_term(e, GRat(Rat(num(rng), den(rng))));
  }
  return p;
}

}  // namespace

TEST_SUITE("fock-toeplitz") {

TEST_CASE("isotype dimensions fill the polynomial space") {
  ModelContext m22(2, 2), m23(2, 3);
  for (int n = 0; n <= 5; ++n) {
    Rat total = 0;
    for (auto& mu : m22.isotypes_of_degree(n)) total += dim_isotype(mu, m22.params());
    CHECK(total == rising(Rat(4), n) / rising(1, n));  // dim Sym^n(C^4)
  }
  for (int n = 0; n <= 4; ++n) {
    Rat total = 0;
    for (auto& mu : m23.isotypes_of_degree(n)) total += dim_isotype(mu, m23.params());
    CHECK(total == rising(Rat(6), n) / rising(1, n));
  }
}

TEST_CASE("isotype bases are orthogonal with the declared dimension") {
  ModelContext ctx(2, 3);
  for (auto& mu : partitions_up_to(3, 2)) {
    const auto& B = ctx.basis(mu);
    CHECK(B.dim() == dim_isotype(mu, ctx.params()).convert_to<int>());
    for (int i = 0; i < B.dim(); ++i) {
      CHECK(B.gram[static_cast<std::size_t>(i)] > 0);
      for (int j = i + 1; j < B.dim(); ++j)
        CHECK(fischer_pairing(B.vectors[static_cast<std::size_t>(i)],
                              B.vectors[static_cast<std::size_t>(j)]) == GRat(0));
    }
  }
}

TEST_CASE("isotypic projection: determinant component of z11 z22") {
  ModelContext ctx(2, 2);
  auto f = coord(2, 2, 0, 0) * coord(2, 2, 1, 1);
  auto det = coord(2, 2, 0, 0) * coord(2, 2, 1, 1) - coord(2, 2, 0, 1) * coord(2, 2, 1, 0);
  auto p11 = ctx.isotypic_project(f, Partition({1, 1}));
  auto half_det = det;
  half_det *= GRat(Rat(1, 2));
  CHECK(p11 == half_det);
  auto p2 = ctx.isotypic_project(f, Partition({2}));
  CHECK(p2 + p11 == f);
  // idempotence and orthogonality
  CHECK(ctx.isotypic_project(p2, Partition({2})) == p2);
  CHECK(ctx.isotypic_project(p2, Partition({1, 1})).is_zero());
  // z11 is already isotypic
  CHECK(ctx.isotypic_project(coord(2, 2, 0, 0), Partition({1})) == coord(2, 2, 0, 0));
}

TEST_CASE("projections sum to the identity degreewise") {
  ModelContext ctx(2, 2);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 5; ++t) {
    auto f = seeded_poly(rng, 2, 2, 4, 5);
    MatrixPoly sum(2, 2);
    for (int d = 0; d <= f.degree(); ++d)
      for (auto& mu : ctx.isotypes_of_degree(d)) sum += ctx.isotypic_project(f, mu);
    CHECK(sum == f);
  }
}

TEST_CASE("ball shift weights m/(nu+m-1)") {
  ModelContext ball(1, 3);
  GMat e1 = GMat::unit(1, 3, 0, 0);
  for (Rat nu : {Rat(3), Rat(9, 2), Rat(5)}) {
    auto type = make_hypergeom_type({}, {nu}, 2, 1);
    for (int m = 1; m <= 6; ++m) {
      auto p = zpow(1, 3, 0, 0, m);
      auto want = zpow(1, 3, 0, 0, m - 1);
      want *= GRat(Rat(m) / (nu + m - 1));
      CHECK(adjoint_closed_form(ball, type, e1, Partition({m}), p) == want);
      CHECK(adjoint_brute_force(ball, type, e1, Partition({m}), p) == want);
    }
  }
}

TEST_CASE("identity symbol acts as the identity") {
  ModelContext ctx(2, 2);
  auto type = make_type(ctx.params(), 1, 2);
  std::mt19937_64 rng(17);
  auto phi = seeded_poly(rng, 2, 2, 3, 4);
  auto one = MatrixPoly::constant(2, 2, GRat(1));
  CHECK(toeplitz_apply(ctx, type, Symbol{one, false}, phi) == phi);
  auto T = toeplitz_matrix(ctx, type, Symbol{one, false}, 2);
  for (auto& [key, entries] : T.blocks) CHECK(key.first == key.second);
}

TEST_CASE("block structure of linear symbols raises/lowers one box") {
  ModelContext ctx(2, 2);
  auto type = make_type(ctx.params(), 1, 2);
  Symbol v{MatrixPoly::linear_form(GMat::unit(2, 2, 0, 0)), false};
  auto T = toeplitz_matrix(ctx, type, v, 3);
  CHECK(!T.blocks.empty());
  for (auto& [key, entries] : T.blocks) {
    const auto& [out, in] = key;
    bool raises = false;
    for (int j = 0; j < 2; ++j) {
      auto up = in.bump(j, +1);
      if (up && *up == out) raises = true;
    }
    CHECK(raises);
  }
  Symbol vbar{v.p, true};
  auto A = toeplitz_matrix(ctx, type, vbar, 3);
  for (auto& [key, entries] : A.blocks) {
    const auto& [out, in] = key;
    bool lowers = false;
    for (int j = 0; j < 2; ++j) {
      auto dn = in.bump(j, -1);
      if (dn && *dn == out) lowers = true;
    }
    CHECK(lowers);
  }
}

TEST_CASE("conjugate blocks agree with the variational adjoint") {
  ModelContext ctx(2, 2);
  auto type = make_type(ctx.params(), 1, 2);
  GMat v = GMat::unit(2, 2, 1, 1);
  Symbol vbar{MatrixPoly::linear_form(v), true};
  auto A = toeplitz_matrix(ctx, type, vbar, 3);
  for (auto& [key, entries] : A.blocks) {
    const auto& [out, in] = key;
    const auto& Bin = ctx.basis(in);
    for (int i = 0; i < Bin.dim(); ++i) {
      MatrixPoly want =
          adjoint_brute_force(ctx, type, v, in, Bin.vectors[static_cast<std::size_t>(i)]);
      MatrixPoly got(2, 2);
      const auto& Bout = ctx.basis(out);
      for (int t = 0; t < Bout.dim(); ++t) {
        auto w = Bout.vectors[static_cast<std::size_t>(t)];
        w *= entries[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)];
        got += w;
      }
      // `want` can also hit isotypes other than `out`; compare components
      CHECK(ctx.isotypic_project(want, out) == got);
    }
  }
}

TEST_CASE("closed-form and brute-force adjoints agree on matrix models") {
  std::mt19937_64 rng(23);
  for (auto [r, s] : {std::pair<int, int>{2, 2}, {2, 3}}) {
    ModelContext ctx(r, s);
    std::vector<HypergeomType> types = {make_type(ctx.params(), 1, 2),
                                        make_type(ctx.params(), 1, 1),
                                        make_type(ctx.params(), 0, 2, Rat(9, 2))};
    for (auto& type : types)
      for (auto& mu : partitions_up_to(3, std::min(type.ell, 2))) {
        if (mu.empty()) continue;
        const auto& B = ctx.basis(mu);
        // random exact element of P_mu
        std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
        MatrixPoly p(r, s);
        for (int i = 0; i < B.dim(); ++i) {
          auto w = B.vectors[static_cast<std::size_t>(i)];
          w *= GRat(Rat(num(rng), den(rng)), Rat(num(rng), 5));
          p += w;
        }
        for (int vi = 0; vi < r; ++vi)
          for (int vj = 0; vj < s; ++vj) {
            GMat v = GMat::unit(r, s, vi, vj);
            CHECK(adjoint_closed_form(ctx, type, v, mu, p) ==
                  adjoint_brute_force(ctx, type, v, mu, p));
          }
      }
  }
}

TEST_CASE("multiplicativity, including the rank-truncated case") {
  ModelContext ctx(2, 2);
  auto full = make_type(ctx.params(), 1, 2);
  auto kepler = make_type(ctx.params(), 1, 1);  // projections onto length <= 1
  auto z11 = coord(2, 2, 0, 0);
  auto one = MatrixPoly::constant(2, 2, GRat(1));
  CHECK(check_multiplicativity(ctx, full, z11, z11, one, 6));
  std::mt19937_64 rng(31);
  for (int t = 0; t < 8; ++t) {
    auto p = seeded_poly(rng, 2, 2, 2, 3);
    auto q = seeded_poly(rng, 2, 2, 2, 3);
    auto phi = seeded_poly(rng, 2, 2, 2, 3);
    CHECK(check_multiplicativity(ctx, full, p, q, phi, 8));
    CHECK(check_multiplicativity(ctx, kepler, p, q, phi, 8));
  }
  // the length-1 projection genuinely truncates: T(det) kills constants
  auto det = coord(2, 2, 0, 0) * coord(2, 2, 1, 1) - coord(2, 2, 0, 1) * coord(2, 2, 1, 0);
  CHECK(toeplitz_apply(ctx, kepler, Symbol{det, false}, one).is_zero());
  CHECK(!toeplitz_apply(ctx, full, Symbol{det, false}, one).is_zero());
}

TEST_CASE("degree cap errors") {
  ModelContext ctx(2, 2);
  auto type = make_type(ctx.params(), 1, 2);
  auto z = coord(2, 2, 0, 0);
  CHECK_THROWS_AS(toeplitz_matrix(ctx, type, Symbol{z * z, false}, 1), TruncationError);
  CHECK_THROWS_AS(check_multiplicativity(ctx, type, z * z, z, z, 3), TruncationError);
}

TEST_CASE("json dump of a truncated operator") {
  ModelContext ctx(2, 2);
  auto type = make_type(ctx.params(), 2, 2);
  Symbol v{MatrixPoly::linear_form(GMat::unit(2, 2, 0, 0)), false};
  auto T = toeplitz_matrix(ctx, type, v, 2);
  auto js = toeplitz_to_json(T);
  CHECK(js.find("\"blocks\"") != std::string::npos);
  CHECK(js.find("|()\"") != std::string::npos);  // block keyed by partition pair
}

}  // TEST_SUITE
