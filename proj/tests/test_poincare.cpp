#include "doctest.h"
#include "motivekit/poincare.hpp"
#include "motivekit/verify.hpp"
#include "motivekit/weyl.hpp"

using namespace motivekit;

namespace {

SimpleFactor sf(Family f, int rank, int twist = 1) {
  return SimpleFactor(DynkinType(f, rank), TwistLabel{twist});
}

GroupSpec single(Family f, int rank, int twist, long long p, int weil = 1) {
  return make_group_spec({GroupFactor{weil, sf(f, rank, twist)}}, p);
}

}  // namespace

TEST_SUITE("poincare") {

TEST_CASE("group spec structural invariants") {
  CHECK_THROWS_AS(make_group_spec({}, 4), Error);
  CHECK_THROWS_AS(make_group_spec({GroupFactor{0, sf(Family::A, 1)}}, 2), Error);
  // Order-2 twist forces p = 2, order-3 forces p = 3.
  CHECK_THROWS_AS(make_group_spec({GroupFactor{1, sf(Family::A, 3, 2)}}, 3), Error);
  CHECK_THROWS_AS(make_group_spec({GroupFactor{1, sf(Family::D, 4, 3)}}, 2), Error);
  CHECK_THROWS_AS(
      make_group_spec({GroupFactor{1, sf(Family::A, 3, 2)}, GroupFactor{1, sf(Family::D, 4, 3)}},
                      2),
      Error);
  CHECK(single(Family::D, 4, 3, 3).str() == "3D4");
  CHECK(make_group_spec({GroupFactor{2, sf(Family::A, 3, 2)}, GroupFactor{1, sf(Family::D, 5, 2)}},
                        2)
            .str() == "R2(2A3)x2D5");
}

TEST_CASE("borel polynomial of split D4") {
  Polynomial p = borel_poincare(sf(Family::D, 4));
  CHECK(p.degree() == 12);
  CHECK(p.value_at_one() == 192);
  CHECK(is_palindromic(p));
}

TEST_CASE("borel polynomial of twisted A3") {
  CHECK(borel_poincare(sf(Family::A, 3, 2)) == Polynomial({1, 1, 1, 2, 1, 1, 1}));
}

TEST_CASE("borel polynomial of trialitarian D4") {
  Polynomial p = borel_poincare(sf(Family::D, 4, 3));
  CHECK(p == Polynomial({1, 1, 0, 1, 2, 1, 0, 1, 2, 1, 0, 1, 1}));
  CHECK(p.value_at_one() == 12);
  // Product form: (1+t)(1+t+...+t^5)(t^6-t^5+t^3-t+1).
  CHECK(p == Polynomial({1, 1}) * Polynomial({1, 1, 1, 1, 1, 1}) *
                 Polynomial({1, -1, 0, 1, 0, -1, 1}));
}

TEST_CASE("levi of twisted A3 at the two end nodes") {
  GroupSpec levi = levi_spec(sf(Family::A, 3, 2), {1, 3}, 2);
  REQUIRE(levi.factors.size() == 1);
  CHECK(levi.factors[0].weil_degree == 2);
  CHECK(levi.factors[0].sf == sf(Family::A, 1));
}

TEST_CASE("levi of twisted D4 at {2,3,4} folds to twisted A3") {
  GroupSpec levi = levi_spec(sf(Family::D, 4, 2), {2, 3, 4}, 2);
  REQUIRE(levi.factors.size() == 1);
  CHECK(levi.factors[0].weil_degree == 1);
  CHECK(levi.factors[0].sf == sf(Family::A, 3, 2));
}

TEST_CASE("levi of the empty node set is the empty group") {
  CHECK(levi_spec(sf(Family::E, 6, 2), {}, 2).factors.empty());
}

TEST_CASE("levi orbit and induced-automorphism cases") {
  // Trialitarian rotation permutes the three outer D4 legs.
  GroupSpec tri = levi_spec(sf(Family::D, 4, 3), {1, 3, 4}, 3);
  REQUIRE(tri.factors.size() == 1);
  CHECK(tri.factors[0].weil_degree == 3);
  CHECK(tri.factors[0].sf == sf(Family::A, 1));

  // The full node set reproduces the factor itself.
  GroupSpec full = levi_spec(sf(Family::D, 4, 3), {1, 2, 3, 4}, 3);
  REQUIRE(full.factors.size() == 1);
  CHECK(full.factors[0].sf == sf(Family::D, 4, 3));

  // Inner sub-diagram of E6.
  GroupSpec a2 = levi_spec(sf(Family::E, 6), {1, 3}, 2);
  REQUIRE(a2.factors.size() == 1);
  CHECK(a2.factors[0].sf == sf(Family::A, 2));

  // Twisted E6: the flip swaps nodes 1 and 6, fixes the A3 path {3,4,5}.
  GroupSpec swap16 = levi_spec(sf(Family::E, 6, 2), {1, 6}, 2);
  REQUIRE(swap16.factors.size() == 1);
  CHECK(swap16.factors[0].weil_degree == 2);
  CHECK(swap16.factors[0].sf == sf(Family::A, 1));

  GroupSpec mid = levi_spec(sf(Family::E, 6, 2), {3, 4, 5}, 2);
  REQUIRE(mid.factors.size() == 1);
  CHECK(mid.factors[0].weil_degree == 1);
  CHECK(mid.factors[0].sf == sf(Family::A, 3, 2));

  // Two components, one fixed and one swapped pair.
  GroupSpec mixed = levi_spec(sf(Family::E, 6, 2), {2, 3, 5}, 2);
  REQUIRE(mixed.factors.size() == 2);
  CHECK(mixed.factors[0].sf == sf(Family::A, 1));
  CHECK(mixed.factors[0].weil_degree == 1);
  CHECK(mixed.factors[1].sf == sf(Family::A, 1));
  CHECK(mixed.factors[1].weil_degree == 2);

  // Longer sub-types inside E7.
  GroupSpec e7 = levi_spec(sf(Family::E, 7), {2, 3, 4, 5, 6}, 2);
  REQUIRE(e7.factors.size() == 1);
  CHECK(e7.factors[0].sf == sf(Family::D, 5));

  GroupSpec a5 = levi_spec(sf(Family::E, 7), {2, 4, 5, 6, 7}, 2);
  REQUIRE(a5.factors.size() == 1);
  CHECK(a5.factors[0].sf == sf(Family::A, 5));

  GroupSpec e6 = levi_spec(sf(Family::E, 7), {1, 2, 3, 4, 5, 6}, 2);
  REQUIRE(e6.factors.size() == 1);
  CHECK(e6.factors[0].sf == sf(Family::E, 6));

  GroupSpec d6 = levi_spec(sf(Family::D, 6), {1, 2, 3, 4}, 2);
  REQUIRE(d6.factors.size() == 1);
  CHECK(d6.factors[0].sf == sf(Family::A, 4));

  GroupSpec b2 = levi_spec(sf(Family::B, 3), {2, 3}, 2);
  REQUIRE(b2.factors.size() == 1);
  CHECK(b2.factors[0].sf.dt.family == Family::B);
  CHECK(b2.factors[0].sf.dt.rank == 2);

  GroupSpec c3 = levi_spec(sf(Family::C, 4), {2, 3, 4}, 2);
  REQUIRE(c3.factors.size() == 1);
  CHECK(c3.factors[0].sf == sf(Family::C, 3));
}

TEST_CASE("levi rejects unstable node sets") {
  CHECK_THROWS_AS(levi_spec(sf(Family::D, 4, 2), {3}, 2), Error);
  try {
    levi_spec(sf(Family::D, 4, 2), {3}, 2);
  } catch (const Error& e) {
    CHECK(e.code() == errc::psi_not_stable);
  }
}

TEST_CASE("quadric flag polynomials for D4") {
  GroupSpec inner = single(Family::D, 4, 1, 2);
  CHECK(flag_poincare(inner, {{2, 3, 4}}) == Polynomial({1, 1, 1, 2, 1, 1, 1}));
  GroupSpec outer = single(Family::D, 4, 2, 2);
  CHECK(flag_poincare(outer, {{2, 3, 4}}) == Polynomial({1, 1, 1, 0, 1, 1, 1}));
}

TEST_CASE("scalar restriction substitutes t^m") {
  GroupSpec gs = single(Family::A, 2, 1, 3, 2);
  CHECK(flag_poincare(gs, {{}}) == Polynomial({1, 0, 2, 0, 2, 0, 1}));
}

TEST_CASE("flag polynomial of a product is the product of flag polynomials") {
  GroupSpec prod = make_group_spec(
      {GroupFactor{1, sf(Family::A, 2)}, GroupFactor{1, sf(Family::B, 2)}}, 2);
  GroupSpec a2 = single(Family::A, 2, 1, 3);
  GroupSpec b2 = single(Family::B, 2, 1, 2);
  CHECK(flag_poincare(prod, {{}, {1}}) ==
        flag_poincare(a2, {{}}) * flag_poincare(b2, {{1}}));
}

TEST_CASE("flag equals borel over levi for every stable psi") {
  for (const auto& factor :
       {sf(Family::D, 4, 2), sf(Family::A, 4), sf(Family::B, 3), sf(Family::E, 6, 2)}) {
    NodePerm sigma = diagram_automorphism(factor.dt, factor.tw);
    const int n = factor.dt.rank;
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::set<int> psi;
      for (int i = 1; i <= n; ++i)
        if (mask & (1 << (i - 1))) psi.insert(i);
      bool stable = true;
      for (int i : psi) stable = stable && psi.contains(sigma.image(i));
      if (!stable) continue;
      GroupSpec gs = make_group_spec({GroupFactor{1, factor}}, 2);
      Polynomial flag = flag_poincare(gs, {psi});
      CHECK(is_palindromic(flag));
      GroupSpec levi = levi_spec(factor, psi, 2);
      CHECK(flag * group_borel_poincare(levi) == borel_poincare(factor));
    }
  }
}

TEST_CASE("borel value at 1 is the folded group order") {
  for (int m = 2; m <= 8; ++m) {
    SimpleFactor inner = sf(Family::A, m);
    Int expect = 1;
    for (int e : invariant_degrees(inner.dt)) expect *= e;
    CHECK(borel_poincare(inner).value_at_one() == expect);
    SimpleFactor outer = sf(Family::A, m, 2);
    Int plus = 1;
    for (int e : outer_degree_data(outer.dt, outer.tw).plus) plus *= e;
    CHECK(borel_poincare(outer).value_at_one() == plus);
  }
  CHECK(borel_poincare(sf(Family::E, 6, 2)).value_at_one() == 2 * 6 * 8 * 12);
  CHECK(borel_poincare(sf(Family::D, 4, 3)).value_at_one() == 12);
}

TEST_CASE("every stable parabolic of E7 and E8 classifies and factors") {
  for (Family fam : {Family::E}) {
    for (int rank : {7, 8}) {
      SimpleFactor factor = sf(fam, rank);
      GroupSpec gs = make_group_spec({GroupFactor{1, factor}}, 2);
      Polynomial borel = borel_poincare(factor);
      for (int mask = 0; mask < (1 << rank); ++mask) {
        std::set<int> psi;
        for (int i = 1; i <= rank; ++i)
          if (mask & (1 << (i - 1))) psi.insert(i);
        GroupSpec levi = levi_spec(factor, psi, 2);
        Polynomial flag = flag_poincare(gs, {psi});
        CHECK(is_palindromic(flag));
        CHECK(flag * group_borel_poincare(levi) == borel);
      }
    }
  }
}

TEST_CASE("closed forms match the element count oracle") {
  struct Case {
    SimpleFactor factor;
    std::set<int> psi;
  };
  for (const auto& c : {Case{sf(Family::A, 4, 2), {}},
                        Case{sf(Family::D, 4, 2), {}},
                        Case{sf(Family::D, 4, 3), {2}},
                        Case{sf(Family::B, 3), {1, 2}},
                        Case{sf(Family::D, 5), {2, 3, 4, 5}},
                        Case{sf(Family::A, 5, 2), {1, 2, 4, 5}},
                        Case{sf(Family::F, 4), {1, 2, 3}}}) {
    long long p = c.factor.tw.order == 3 ? 3 : 2;
    GroupSpec gs = make_group_spec({GroupFactor{1, c.factor}}, p);
    auto cmp = oracle_check(gs, {c.psi}, 200000);
    CHECK(cmp.match);
  }
  // A scalar-restricted product against the oracle route.
  GroupSpec gs = make_group_spec(
      {GroupFactor{2, sf(Family::A, 3, 2)}, GroupFactor{1, sf(Family::B, 2)}}, 2);
  CHECK(oracle_check(gs, {{2}, {}}, 200000).match);
}

}  // TEST_SUITE
