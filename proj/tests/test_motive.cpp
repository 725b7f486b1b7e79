#include <random>

#include "doctest.h"
#include "motivekit/motive.hpp"
#include "motivekit/spec_parse.hpp"

using namespace motivekit;

TEST_SUITE("motive") {

TEST_CASE("decompose of equal polynomials is a single summand") {
  Polynomial p({1, 2, 2, 1});
  TwistMultiset tm = decompose(p, p);
  REQUIRE(tm.multiplicities.size() == 1);
  CHECK(tm.multiplicities.at(0) == 1);
  CHECK(tm.max_twist() == 0);
}

TEST_CASE("trialitarian D4 Borel decomposition") {
  GroupSpec gs = parse_group_spec("3D4", 3);
  TwistMultiset tm = decompose_group(gs, {{}}, JTuple{{1}});
  TwistMultiset expected;
  expected.multiplicities = {{0, 1}, {1, 1}, {3, 1}, {4, 1}};
  CHECK(tm == expected);
  // The quotient is (1+t)(1+t^3).
  CHECK(tm.to_polynomial() == Polynomial({1, 1}) * Polynomial({1, 0, 0, 1}));
}

TEST_CASE("zero tuple splits the variety completely") {
  GroupSpec gs = parse_group_spec("3D4", 3);
  Polynomial total = flag_poincare(gs, {{}});
  TwistMultiset tm = decompose_group(gs, {{}}, JTuple{{0}});
  CHECK(tm.to_polynomial() == total);
}

TEST_CASE("twisted E6 Borel decomposition") {
  GroupSpec gs = parse_group_spec("2E6", 2);
  TwistMultiset tm = decompose_group(gs, {{}}, JTuple{{1, 1, 1}});
  CHECK(tm.total_summands() == 144);
  CHECK(tm.max_twist() == 19);
  Polynomial q = tm.to_polynomial();
  CHECK(q == Polynomial({1, 1, 1}) * Polynomial({1, 0, 1, 0, 1, 0, 1}) *
                 Polynomial({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}));
  CHECK(is_palindromic(q));
}

TEST_CASE("failure modes") {
  CHECK_THROWS_AS(decompose(Polynomial({1, 1, 1}), Polynomial({1, 1})), Error);
  try {
    decompose(Polynomial({1, 1, 1}), Polynomial({1, 1}));
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_divisible);
  }
  // (1 + t^3)/(1 + t) = 1 - t + t^2 divides, but is no twist multiset.
  try {
    decompose(Polynomial({1, 0, 0, 1}), Polynomial({1, 1}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::negative_multiplicity);
  }
  CHECK_THROWS_AS(decompose(Polynomial(), Polynomial({1})), Error);
  CHECK_THROWS_AS(decompose(Polynomial({1}), Polynomial()), Error);
  CHECK_THROWS_AS(decompose(Polynomial({-1, 1}), Polynomial({1})), Error);
  // Inadmissible tuples are rejected before any division happens.
  GroupSpec gs = parse_group_spec("2E6", 2);
  CHECK_THROWS_AS(decompose_group(gs, {{}}, JTuple{{0, 1, 1}}), Error);
}

TEST_CASE("verification examples") {
  GroupSpec gs = parse_group_spec("3D4", 3);
  Polynomial total = flag_poincare(gs, {{}});
  Polynomial upper({1, 0, 0, 0, 1, 0, 0, 0, 1});
  TwistMultiset tm = decompose(total, upper);
  CHECK(verify_decomposition(total, upper, tm));

  TwistMultiset perturbed = tm;
  perturbed.multiplicities[1] += 1;
  CHECK_FALSE(verify_decomposition(total, upper, perturbed));

  CHECK_FALSE(verify_decomposition(total, upper, TwistMultiset{}));
}

TEST_CASE("round-trip and counting identities on random data") {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int> deg(0, 6);
  std::uniform_int_distribution<int> coeff(0, 4);
  for (int iter = 0; iter < 200; ++iter) {
    auto random_nonneg = [&] {
      std::vector<Int> c(static_cast<std::size_t>(deg(rng)) + 1);
      for (auto& x : c) x = coeff(rng);
      Polynomial p{std::move(c)};
      return p.is_zero() ? Polynomial({1}) : p;
    };
    Polynomial upper = random_nonneg();
    Polynomial quotient = random_nonneg();
    Polynomial total = upper * quotient;
    TwistMultiset tm = decompose(total, upper);
    CHECK(verify_decomposition(total, upper, tm));
    CHECK(tm.to_polynomial() == quotient);
    CHECK(total.degree() == upper.degree() + tm.max_twist());
    CHECK(tm.total_summands() * upper.value_at_one() == total.value_at_one());
  }
}

}  // TEST_SUITE
