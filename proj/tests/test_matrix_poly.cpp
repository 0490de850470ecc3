#include "symdom/errors.hpp"
#include "symdom/matrix_poly.hpp"
#include "symdom/sympoly.hpp"

#include <doctest.h>

#include <random>

using namespace symdom;

namespace {

MatrixPoly coord(int r, int s, int i, int j) { return MatrixPoly::coordinate(r, s, i, j); }

std::mt19937_64 g_rng(1234);

GRat random_grat(int span = 4) {
  std::uniform_int_distribution<int> num(-span, span), den(1, 4), flip(0, 3);
  Rat re(num(g_rng), den(g_rng));
  Rat im = (flip(g_rng) == 0) ? Rat(num(g_rng), den(g_rng)) : Rat(0);
  return GRat(re, im);
}

GMat random_gmat(int r, int s) {
  GMat w(r, s);
  for (auto& v : w.a) v = random_grat();
  return w;
}

MatrixPoly random_poly(int r, int s, int deg, int terms) {
  MatrixPoly p(r, s);
  std::uniform_int_distribution<int> dd(0, deg);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(static_cast<std::size_t>(r) * s, 0);
    int d = dd(g_rng);
    std::uniform_int_distribution<int> slot(0, r * s - 1);
    for (int b = 0; b < d; ++b) ++e[static_cast<std::size_t>(slot(g_rng))];
    p.add_term(e, random_grat());
  }
  return p;
}

MatrixPoly pow_linear(const MatrixPoly& z, int n, int r, int s) {
  MatrixPoly out = MatrixPoly::constant(r, s, GRat(1));
  for (int i = 0; i < n; ++i) out = out * z;
  return out;
}

}  // namespace

TEST_SUITE("fischer-fock") {

TEST_CASE("Fischer pairing on monomials") {
  auto z11 = coord(2, 2, 0, 0);
  CHECK(fischer_pairing(z11, z11) == GRat(1));
  for (int m = 1; m <= 6; ++m) {
    auto p = pow_linear(z11, m, 2, 2);
    CHECK(fischer_pairing(p, p) == GRat(rising(1, m)));  // m!
  }
  auto a = coord(2, 2, 0, 0) * coord(2, 2, 1, 1);
  auto b = coord(2, 2, 0, 1) * coord(2, 2, 1, 0);
  CHECK(fischer_pairing(a, b) == GRat(0));
}

TEST_CASE("Fischer pairing is conjugate-symmetric and positive") {
  for (int t = 0; t < 20; ++t) {
    auto p = random_poly(2, 2, 3, 4);
    auto q = random_poly(2, 2, 3, 4);
    CHECK(fischer_pairing(p, q) == fischer_pairing(q, p).conj());
    if (!p.is_zero()) CHECK(fischer_norm2(p) > 0);
  }
}

TEST_CASE("multiplication adjoint is differentiation") {
  // (g p | q) = (p | g*(d) applied the other way): check (z_ij p | q) = (p | d_ij q)
  for (int t = 0; t < 10; ++t) {
    auto p = random_poly(2, 3, 3, 4);
    auto q = random_poly(2, 3, 4, 4);
    auto z = coord(2, 3, 1, 2);
    CHECK(fischer_pairing(z * p, q) == fischer_pairing(p, q.partial(1, 2)));
  }
}

TEST_CASE("fock kernel: degree-one case") {
  GMat w(2, 2);
  w.at(0, 0) = GRat(1);
  CHECK(fock_kernel(Partition({1}), w) == coord(2, 2, 0, 0));
}

TEST_CASE("fock kernel sums to the exponential kernel degreewise") {
  for (auto [r, s] : {std::pair<int, int>{2, 2}, {2, 3}}) {
    GMat w = random_gmat(r, s);
    MatrixPoly zw(r, s);  // (z|w) = sum conj(w_ij) z_ij
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < s; ++j) {
        auto c = coord(r, s, i, j);
        c *= w.at(i, j).conj();
        zw += c;
      }
    for (int n = 1; n <= 4; ++n) {
      MatrixPoly sum(r, s);
      for (auto& mu : partitions_of_weight(n, std::min(r, s))) sum += fock_kernel(mu, w);
      MatrixPoly want = pow_linear(zw, n, r, s);
      want *= GRat(Rat(1) / rising(1, n));
      CHECK(sum == want);
    }
  }
}

TEST_CASE("fock kernel reproduces") {
  // (E^mu(., w') | E^mu(., w)) = E^mu(., w') evaluated at w
  for (auto [r, s] : {std::pair<int, int>{2, 2}, {2, 3}}) {
    for (auto& mu : partitions_up_to(3, 2)) {
      if (mu.empty()) continue;
      GMat w = random_gmat(r, s), w2 = random_gmat(r, s);
      auto k1 = fock_kernel(mu, w2);
      auto k2 = fock_kernel(mu, w);
      CHECK(fischer_pairing(k1, k2) == k1.eval(w));
    }
  }
}

TEST_CASE("fock kernel at the maximal tripotent matches dim / (d/r)_mu") {
  for (auto [r, s] : {std::pair<int, int>{2, 2}, {2, 3}}) {
    auto P = derive_params(r, 2, s - r);
    GMat e(r, s);
    for (int i = 0; i < r; ++i) e.at(i, i) = GRat(1);
    for (auto& mu : partitions_up_to(4, r)) {
      GRat val = fock_kernel(mu, e).eval(e);
      Rat want = dim_isotype(mu, P) / pochhammer(P.dim_over_rank(), mu, 2);
      CHECK(val == GRat(want));
    }
  }
}

TEST_CASE("restrict_symbol") {
  auto z11 = coord(2, 2, 0, 0);
  auto det = coord(2, 2, 0, 0) * coord(2, 2, 1, 1) - coord(2, 2, 0, 1) * coord(2, 2, 1, 0);
  CHECK(restrict_symbol(z11, 1) == MatrixPoly::constant(1, 1, GRat(1)));
  CHECK(restrict_symbol(det, 1) == coord(1, 1, 0, 0));  // zeta_22
  CHECK(restrict_symbol(det, 0) == det);
  CHECK(restrict_symbol(det, 2) == MatrixPoly::constant(0, 0, GRat(1)));  // det(I) = 1
  CHECK_THROWS_AS(restrict_symbol(det, 3), ParameterError);
  // embedding inverts restriction on Peirce-0 polynomials
  auto z22 = coord(2, 2, 1, 1);
  auto q = z22 * z22;
  CHECK(embed_peirce0(restrict_symbol(q, 1), 1, 2, 2) == q);
}

TEST_CASE("gaussian rational strings") {
  CHECK(grat_to_string(GRat(Rat(3, 2))) == "3/2");
  CHECK(grat_to_string(GRat(Rat(0), Rat(-1, 4))) == "-1/4i");
  CHECK(grat_to_string(GRat(Rat(2), Rat(5))) == "2+5i");
  CHECK(grat_to_string(GRat(Rat(2), Rat(-5))) == "2-5i");
}

}  // TEST_SUITE
