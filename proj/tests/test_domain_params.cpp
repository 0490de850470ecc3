#include "symdom/domain_params.hpp"
#include "symdom/errors.hpp"

#include <doctest.h>

#include <random>

using namespace symdom;

TEST_SUITE("domain-params") {

TEST_CASE("derive_params computes dimension and genus") {
  auto P = derive_params(2, 2, 0);
  CHECK(P.d == 4);
  CHECK(P.p == 4);
  auto Q = derive_params(1, 2, 3);
  CHECK(Q.d == 4);
  CHECK(Q.p == 5);
  auto R = derive_params(3, 2, 0);
  CHECK(R.d == 9);
  CHECK(R.p == 6);
  CHECK(R.dim_over_rank() == 3);
  CHECK_THROWS_AS(derive_params(0, 2, 0), ParameterError);
  CHECK_THROWS_AS(derive_params(2, 0, 0), ParameterError);
  CHECK_THROWS_AS(derive_params(2, 2, -1), ParameterError);
}

TEST_CASE("model detection") {
  CHECK(derive_params(2, 2, 1).matrix_shape() == std::make_pair(2, 3));
  CHECK(derive_params(1, 1, 3).matrix_shape() == std::make_pair(1, 4));  // ball C^4
  CHECK(!derive_params(2, 1, 0).matrix_shape().has_value());
  CHECK(!derive_params(2, 2, Rat(1, 2)).matrix_shape().has_value());
}

TEST_CASE("pochhammer basics") {
  Rat nu(7, 3);
  CHECK(pochhammer(nu, Partition({1}), 2) == nu);
  CHECK(pochhammer(3, Partition({2, 1}), 2) == 24);  // (3)_2 (2)_1 = 12*2
}

TEST_CASE("pochhammer shift identity instance") {
  // (2)_{(1,1)+1} = 12 and (3)_{(1,1)} (2)_{(1,1)} = 6*2 at a = 2, rank 2
  Partition mu({1, 1});
  CHECK(pochhammer(2, mu.plus_boxes(1, 2), 2) == 12);
  CHECK(pochhammer(3, mu, 2) * pochhammer(2, Partition::rectangle(1, 2), 2) == 12);
}

TEST_CASE("pochhammer shift identity, randomized exact") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> numd(-8, 12), dend(1, 6), nd(0, 3), rd(1, 4);
  const Rat as[3] = {1, 2, 4};
  int done = 0;
  while (done < 200) {
    int r = rd(rng);
    auto parts = partitions_up_to(6, r);
    std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
    Partition mu = parts[pick(rng)];
    Rat nu(numd(rng), dend(rng));
    Rat a = as[done % 3];
    int n = nd(rng);
    Rat lhs = pochhammer(nu, mu.plus_boxes(n, r), a);
    Rat rhs = pochhammer(nu + n, mu, a) * pochhammer(nu, Partition::rectangle(n, r), a);
    CHECK(lhs == rhs);
    ++done;
  }
}

TEST_CASE("embedded Wallach parameters") {
  auto P = derive_params(2, 2, 0);
  CHECK(nu_k(P, 1) == 3);
  CHECK(nu_k(P, 2) == 2);  // d/r, the Hardy parameter
  auto B = derive_params(1, 2, 3);
  CHECK(nu_k(B, 1) == 4);  // rank-1 ball: nu_1 = d
  CHECK_THROWS_AS(nu_k(P, 3), ParameterError);
  CHECK_THROWS_AS(nu_k(P, -1), ParameterError);
  // placeholder value for k = 0
  CHECK(nu_k(P, 0) == P.p - 1 + P.a / 2);
}

TEST_CASE("nu_k: all four algebraic forms agree") {
  for (int r = 1; r <= 4; ++r)
    for (Rat a : {Rat(1), Rat(2), Rat(4), Rat(3, 2)})
      for (Rat b : {Rat(0), Rat(1), Rat(5, 2)}) {
        auto P = derive_params(r, a, b);
        for (int k = 1; k <= r; ++k) {
          Rat v = nu_k(P, k);
          CHECK(v == P.p - 1 - a / 2 * (k - 1));
          CHECK(v == 1 + b + a / 2 * (2 * r - k - 1));
          CHECK(v == P.genus_of_rank(k) + a / 2 * (k + 1) - 1);
        }
      }
}

TEST_CASE("make_type: boundary orbit of C^{2x2} reduces to 1/(3)_mu") {
  auto P = derive_params(2, 2, 0);
  auto t = make_type(P, 1, 2);
  CHECK(t.x.empty());
  CHECK(t.y == std::vector<Rat>{3});
  for (auto& mu : partitions_up_to(4, 2))
    CHECK(t.coefficient(mu) == Rat(1) / pochhammer(3, mu, 2));
  CHECK(t.coefficient(Partition()) == 1);
}

TEST_CASE("make_type: full Hardy type is 1/(d/r)_mu") {
  for (int r = 1; r <= 3; ++r) {
    auto P = derive_params(r, 2, 1);
    auto t = make_type(P, r, r);
    CHECK(t.x.empty());
    CHECK(t.y == std::vector<Rat>{P.dim_over_rank()});
  }
}

TEST_CASE("make_type preconditions") {
  auto P = derive_params(2, 2, 0);
  CHECK_THROWS_AS(make_type(P, 2, 1), ParameterError);
  CHECK_THROWS_AS(make_type(P, 0, 2), ParameterError);          // nu missing
  CHECK_THROWS_AS(make_type(P, 0, 2, Rat(3)), ParameterError);  // nu <= p-1
  CHECK_NOTHROW(make_type(P, 0, 2, Rat(7, 2)));
}

TEST_CASE("limit_type matches the reduced-parameter type") {
  for (int r = 2; r <= 4; ++r)
    for (Rat a : {Rat(1), Rat(2), Rat(4)})
      for (Rat b : {Rat(0), Rat(1), Rat(2)}) {
        auto P = derive_params(r, a, b);
        auto Pc = P.reduced(1);
        for (int lambda = 1; lambda <= r; ++lambda)
          for (int k = 1; k <= lambda; ++k) {
            auto lim = limit_type(make_type(P, k, lambda));
            auto want = (k == 1) ? make_type(Pc, 0, lambda - 1, nu_k(P, 1) - a / 2)
                                 : make_type(Pc, k - 1, lambda - 1);
            CHECK(lim == want);
            // nu_k - a/2 = nu_{k-1} of the little triple
            if (k >= 2) CHECK(nu_k(P, k) - a / 2 == nu_k(Pc, k - 1));
          }
      }
}

TEST_CASE("limit_type on a Bergman type shifts the weight") {
  auto t = make_hypergeom_type({}, {Rat(5)}, 2, 2);
  auto lt = limit_type(t);
  CHECK(lt.y == std::vector<Rat>{4});
  CHECK(lt.ell == 1);
}

TEST_CASE("iterated limits of the boundary type reach the discrete series") {
  for (int r = 2; r <= 4; ++r) {
    auto P = derive_params(r, 2, 1);
    for (int k = 1; k < r; ++k) {
      auto t = make_type(P, k, r);
      for (int i = 0; i < k; ++i) t = limit_type(t);
      auto Pk = P.reduced(k);
      CHECK(t == make_type(Pk, 0, r - k, nu_k(P, k) - P.a / 2 * k));
    }
  }
}

TEST_CASE("classify_stratum") {
  double sv1[] = {1.0, 0.5};
  CHECK(classify_stratum(sv1, 1, 2) == StratumLabel{1, 2});
  double sv2[] = {1.0, 1.0};
  CHECK(classify_stratum(sv2, 1, 2) == StratumLabel{2, 2});
  double sv3[] = {1.0, 0.0};
  CHECK(classify_stratum(sv3, 1, 2) == StratumLabel{1, 1});  // the center
  double sv4[] = {0.5, 0.2};
  CHECK(!classify_stratum(sv4, 1, 2).has_value());  // no unit value
  double sv5[] = {1.0, 1.0, 0.5};
  CHECK(!classify_stratum(sv5, 0, 2).has_value());  // rank above lambda
  double bad[] = {0.5, 1.0};
  CHECK_THROWS_AS(classify_stratum(bad, 0, 2), ParameterError);
  // boundary ties resolve toward the smaller index: 1-tol is not a unit,
  // a value equal to tol does not count toward the rank
  double tied[] = {1.0 - 1e-9, 1e-9};
  auto lab = classify_stratum(tied, 0, 2, 1e-9);
  CHECK(lab == StratumLabel{0, 1});
  double tiny[] = {1e-9, 1e-9};
  CHECK(classify_stratum(tiny, 0, 2, 1e-9) == StratumLabel{0, 0});
}

TEST_CASE("subnormality set") {
  auto P = derive_params(2, 2, 0);
  auto w = w_sub(P);
  CHECK(w.embedded == std::vector<Rat>{3, 2});
  CHECK(w.ray_start == 3);
  CHECK(w.contains(3));
  CHECK(w.contains(2));
  CHECK(w.contains(Rat(7, 2)));
  CHECK(!w.contains(Rat(5, 2)));
  // nu_1 = p - 1 always
  for (int r = 1; r <= 4; ++r)
    for (Rat a : {Rat(1), Rat(2), Rat(4)}) {
      auto Q = derive_params(r, a, 1);
      CHECK(nu_k(Q, 1) == Q.p - 1);
    }
}

}  // TEST_SUITE
