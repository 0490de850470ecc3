#include "symdom/errors.hpp"
#include "symdom/sympoly.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace symdom;

namespace {
SymPoly mono(int nvars, std::vector<int> parts, Rat c) {
  SymPoly f;
  f.nvars = nvars;
  f.coeffs.emplace(Partition(std::move(parts)), std::move(c));
  return f;
}
}  // namespace

TEST_SUITE("symfunc") {

TEST_CASE("schur small cases") {
  CHECK(schur(Partition({1}), 2) == mono(2, {1}, 1));
  CHECK(schur(Partition({1, 1}), 2) == mono(2, {1, 1}, 1));
  // s_{(2,1)} in two variables = t1^2 t2 + t1 t2^2 = m_{(2,1)}
  CHECK(schur(Partition({2, 1}), 2) == mono(2, {2, 1}, 1));
  CHECK_THROWS_AS(schur(Partition({1, 1, 1}), 2), ParameterError);
}

TEST_CASE("schur agrees with the Jacobi-Trudi oracle") {
  for (int n = 2; n <= 4; ++n)
    for (auto& mu : partitions_up_to(6, n)) {
      auto got = oracle::expand_sympoly(schur(mu, n));
      auto want = oracle::schur_jacobi_trudi(mu, n);
      CHECK(got == want);
    }
}

TEST_CASE("principal specialization") {
  CHECK(principal_spec(Partition({1}), 2) == 2);
  CHECK(principal_spec(Partition({2, 1}), 2) == 2);
  CHECK(principal_spec(Partition({1, 1}), 3) == 3);
  // equals the evaluation of the tableau expansion at all-ones
  for (int n = 1; n <= 4; ++n)
    for (auto& mu : partitions_up_to(5, n)) {
      std::vector<Rat> ones(static_cast<std::size_t>(n), 1);
      CHECK(principal_spec(mu, n) == eval(schur(mu, n), std::span<const Rat>(ones)));
    }
}

TEST_CASE("jack: degree one is the normalized power sum") {
  for (int n = 1; n <= 4; ++n)
    for (Rat a : {Rat(1), Rat(2), Rat(4)}) {
      CHECK(jack_spherical(Partition({1}), n, a) == mono(n, {1}, Rat(1, n)));
    }
}

TEST_CASE("jack at a = 2 is the normalized Schur polynomial") {
  for (int n = 2; n <= 4; ++n)
    for (auto& mu : partitions_up_to(6, n)) {
      SymPoly want = schur(mu, n);
      want *= Rat(1) / principal_spec(mu, n);
      CHECK(jack_spherical(mu, n, 2) == want);
    }
}

TEST_CASE("jack normalization at all-ones") {
  for (int n = 1; n <= 4; ++n)
    for (Rat a : {Rat(1), Rat(2), Rat(4)})
      for (auto& mu : partitions_up_to(6, n)) {
        std::vector<Rat> ones(static_cast<std::size_t>(n), 1);
        CHECK(eval(jack_spherical(mu, n, a), std::span<const Rat>(ones)) == 1);
      }
}

TEST_CASE("jack against hand-derived low-degree coefficients") {
  // P_(2) = m_2 + 2/(alpha+1) m_11 with alpha = 2/a, normalized at 1^n
  for (Rat a : {Rat(1), Rat(4)}) {
    Rat alpha = Rat(2) / a;
    Rat c11 = Rat(2) / (alpha + 1);
    for (int n = 2; n <= 3; ++n) {
      SymPoly want = mono(n, {2}, 1);
      want += mono(n, {1, 1}, c11);
      std::vector<Rat> ones(static_cast<std::size_t>(n), 1);
      Rat norm = eval(want, std::span<const Rat>(ones));
      want *= Rat(1) / norm;
      CHECK(jack_spherical(Partition({2}), n, a) == want);
    }
    // P_(2,1) = m_21 + 6/(alpha+2) m_111
    {
      int n = 3;
      SymPoly want = mono(n, {2, 1}, 1);
      want += mono(n, {1, 1, 1}, Rat(6) / (alpha + 2));
      std::vector<Rat> ones(static_cast<std::size_t>(n), 1);
      want *= Rat(1) / eval(want, std::span<const Rat>(ones));
      CHECK(jack_spherical(Partition({2, 1}), n, a) == want);
    }
  }
}

TEST_CASE("jack homogeneity under scaling") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> numd(-4, 5), dend(1, 4);
  for (Rat a : {Rat(1), Rat(2), Rat(4)})
    for (auto& mu : partitions_up_to(4, 3)) {
      auto phi = jack_spherical(mu, 3, a);
      Rat c(numd(rng), dend(rng));
      if (c == 0) c = 2;
      std::vector<Rat> t = {Rat(1, 2), Rat(-1, 3), Rat(2)};
      std::vector<Rat> ct = t;
      for (auto& v : ct) v *= c;
      Rat scale = 1;
      for (int i = 0; i < mu.weight(); ++i) scale *= c;
      CHECK(eval(phi, std::span<const Rat>(ct)) == scale * eval(phi, std::span<const Rat>(t)));
    }
}

TEST_CASE("jack principal value at partial ones") {
  // Phi_mu(1^k, 0^{r-k}) = (a k/2)_mu / (a r/2)_mu
  for (int r = 2; r <= 3; ++r)
    for (Rat a : {Rat(1), Rat(2)})
      for (int k = 0; k <= r; ++k)
        for (auto& mu : partitions_up_to(5, r)) {
          std::vector<Rat> pt(static_cast<std::size_t>(r), 0);
          for (int i = 0; i < k; ++i) pt[static_cast<std::size_t>(i)] = 1;
          Rat got = eval(jack_spherical(mu, r, a), std::span<const Rat>(pt));
          Rat want = pochhammer(a * k / 2, mu, a) / pochhammer(a * r / 2, mu, a);
          CHECK(got == want);
        }
}

TEST_CASE("Pieri expansion of s_(1) s_mu has unit coefficients") {
  for (int n = 2; n <= 3; ++n)
    for (auto& mu : partitions_up_to(4, n)) {
      SymPoly prod = sym_mul(schur(Partition({1}), n), schur(mu, n));
      SymPoly want;
      want.nvars = n;
      for (int j = 0; j < n; ++j) {
        auto up = mu.bump(j, +1);
        if (up && up->length() <= n) want += schur(*up, n);
      }
      CHECK(prod == want);
    }
}

TEST_CASE("dim_isotype on the concrete models") {
  auto ball2 = derive_params(1, 2, 1);  // C^2
  CHECK(dim_isotype(Partition({1}), ball2) == 2);
  CHECK(dim_isotype(Partition({3}), ball2) == 4);
  auto m22 = derive_params(2, 2, 0);
  CHECK(dim_isotype(Partition({1}), m22) == 4);
  CHECK(dim_isotype(Partition({1, 1}), m22) == 1);  // the determinant
  CHECK(dim_isotype(Partition({2, 1}), m22) == 4);
  CHECK_THROWS_AS(dim_isotype(Partition({1}), derive_params(2, 1, 0)), ModelError);
}

TEST_CASE("evaluation corners") {
  auto phi = jack_spherical(Partition({1}), 2, 2);
  std::vector<Rat> ones = {1, 1};
  CHECK(eval(phi, std::span<const Rat>(ones)) == 1);
  std::vector<Rat> zero = {0, 0};
  CHECK(eval(schur(Partition({2, 1}), 2), std::span<const Rat>(zero)) == 0);
  std::vector<double> pt = {0.25, 0.5};
  SymPolyTable table(schur(Partition({2, 1}), 2));
  double direct = 0.25 * 0.25 * 0.5 + 0.25 * 0.5 * 0.5;
  CHECK(table(std::span<const double>(pt)) == doctest::Approx(direct).epsilon(1e-14));
}

}  // TEST_SUITE
