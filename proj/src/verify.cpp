#include "motivekit/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace motivekit {

namespace {

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

struct GoldenDegrees {
  Family family;
  int rank;
  std::vector<int> degrees;
};

// Hand-expanded degree lists, kept separate from the formula-driven data.
const std::vector<GoldenDegrees> kGoldenInnerDegrees = {
    {Family::A, 1, {2}},
    {Family::A, 2, {2, 3}},
    {Family::A, 3, {2, 3, 4}},
    {Family::A, 4, {2, 3, 4, 5}},
    {Family::A, 5, {2, 3, 4, 5, 6}},
    {Family::A, 6, {2, 3, 4, 5, 6, 7}},
    {Family::A, 7, {2, 3, 4, 5, 6, 7, 8}},
    {Family::A, 8, {2, 3, 4, 5, 6, 7, 8, 9}},
    {Family::B, 2, {2, 4}},
    {Family::B, 3, {2, 4, 6}},
    {Family::B, 4, {2, 4, 6, 8}},
    {Family::B, 5, {2, 4, 6, 8, 10}},
    {Family::B, 6, {2, 4, 6, 8, 10, 12}},
    {Family::B, 7, {2, 4, 6, 8, 10, 12, 14}},
    {Family::B, 8, {2, 4, 6, 8, 10, 12, 14, 16}},
    {Family::C, 2, {2, 4}},
    {Family::C, 3, {2, 4, 6}},
    {Family::C, 4, {2, 4, 6, 8}},
    {Family::C, 5, {2, 4, 6, 8, 10}},
    {Family::C, 6, {2, 4, 6, 8, 10, 12}},
    {Family::C, 7, {2, 4, 6, 8, 10, 12, 14}},
    {Family::C, 8, {2, 4, 6, 8, 10, 12, 14, 16}},
    {Family::D, 3, {2, 3, 4}},
    {Family::D, 4, {2, 4, 4, 6}},
    {Family::D, 5, {2, 4, 5, 6, 8}},
    {Family::D, 6, {2, 4, 6, 6, 8, 10}},
    {Family::D, 7, {2, 4, 6, 7, 8, 10, 12}},
    {Family::D, 8, {2, 4, 6, 8, 8, 10, 12, 14}},
    {Family::E, 6, {2, 5, 6, 8, 9, 12}},
    {Family::E, 7, {2, 6, 8, 10, 12, 14, 18}},
    {Family::E, 8, {2, 8, 12, 14, 18, 20, 24, 30}},
    {Family::F, 4, {2, 6, 8, 12}},
    {Family::G, 2, {2, 6}},
};

struct GoldenTorsion {
  Family family;
  int rank;
  int twist;
  std::set<long long> primes;
};

const std::vector<GoldenTorsion> kGoldenTorsion = {
    {Family::A, 1, 1, {2}},    {Family::A, 2, 1, {3}},    {Family::A, 3, 1, {2}},
    {Family::A, 4, 1, {5}},    {Family::A, 5, 1, {2, 3}}, {Family::A, 6, 1, {7}},
    {Family::A, 7, 1, {2}},    {Family::A, 8, 1, {3}},    {Family::A, 11, 1, {2, 3}},
    {Family::B, 3, 1, {2}},    {Family::C, 4, 1, {2}},    {Family::D, 5, 1, {2}},
    {Family::G, 2, 1, {2}},    {Family::F, 4, 1, {2, 3}}, {Family::E, 6, 1, {2, 3}},
    {Family::E, 7, 1, {2, 3}}, {Family::E, 8, 1, {2, 3, 5}},
    {Family::A, 3, 2, {2}},    {Family::A, 6, 2, {2}},    {Family::D, 4, 2, {2}},
    {Family::D, 7, 2, {2}},    {Family::E, 6, 2, {2}},    {Family::D, 4, 3, {3}},
};

struct GoldenOuter {
  Family family;
  int rank;
  int twist;
  std::vector<int> plus;
  std::vector<int> minus;
};

const std::vector<GoldenOuter> kGoldenOuter = {
    {Family::A, 2, 2, {2}, {3}},
    {Family::A, 3, 2, {2, 4}, {3}},
    {Family::A, 4, 2, {2, 4}, {3, 5}},
    {Family::A, 5, 2, {2, 4, 6}, {3, 5}},
    {Family::A, 6, 2, {2, 4, 6}, {3, 5, 7}},
    {Family::A, 7, 2, {2, 4, 6, 8}, {3, 5, 7}},
    {Family::A, 8, 2, {2, 4, 6, 8}, {3, 5, 7, 9}},
    {Family::D, 3, 2, {2, 4}, {3}},
    {Family::D, 4, 2, {2, 4, 6}, {4}},
    {Family::D, 5, 2, {2, 4, 6, 8}, {5}},
    {Family::D, 6, 2, {2, 4, 6, 8, 10}, {6}},
    {Family::D, 7, 2, {2, 4, 6, 8, 10, 12}, {7}},
    {Family::D, 8, 2, {2, 4, 6, 8, 10, 12, 14}, {8}},
    {Family::E, 6, 2, {2, 6, 8, 12}, {5, 9}},
    {Family::D, 4, 3, {2, 6}, {4, 4}},
};

std::vector<SimpleFactor> outer_sweep() {
  std::vector<SimpleFactor> out;
  for (int m = 2; m <= 12; ++m) out.emplace_back(DynkinType(Family::A, m), TwistLabel{2});
  for (int m = 3; m <= 12; ++m) out.emplace_back(DynkinType(Family::D, m), TwistLabel{2});
  out.emplace_back(DynkinType(Family::E, 6), TwistLabel{2});
  out.emplace_back(DynkinType(Family::D, 4), TwistLabel{3});
  return out;
}

}  // namespace

std::vector<CheckResult> verify_tables() {
  std::vector<CheckResult> out;

  {
    CheckResult c{"invariant-degrees", true, ""};
    for (const auto& g : kGoldenInnerDegrees) {
      auto got = invariant_degrees(DynkinType(g.family, g.rank));
      if (got != g.degrees) {
        c.ok = false;
        c.detail += DynkinType(g.family, g.rank).str() + ": got [" + join(got) + "] want [" +
                    join(g.degrees) + "]; ";
      }
    }
    out.push_back(std::move(c));
  }

  {
    CheckResult c{"torsion-primes", true, ""};
    for (const auto& g : kGoldenTorsion) {
      auto got = torsion_primes(DynkinType(g.family, g.rank), TwistLabel{g.twist});
      if (got != g.primes) {
        c.ok = false;
        c.detail += DynkinType(g.family, g.rank).str() + " twist " + std::to_string(g.twist) +
                    " mismatch; ";
      }
    }
    out.push_back(std::move(c));
  }

  {
    CheckResult c{"outer-degrees", true, ""};
    for (const auto& g : kGoldenOuter) {
      auto got = outer_degree_data(DynkinType(g.family, g.rank), TwistLabel{g.twist});
      if (got.plus != g.plus || got.minus != g.minus) {
        c.ok = false;
        c.detail += std::to_string(g.twist) + DynkinType(g.family, g.rank).str() + ": got +[" +
                    join(got.plus) + "] -[" + join(got.minus) + "]; ";
      }
    }
    out.push_back(std::move(c));
  }

  {
    // Union invariant: plus and minus together are the inner degree list.
    CheckResult c{"outer-degree-union", true, ""};
    for (const auto& sf : outer_sweep()) {
      auto data = outer_degree_data(sf.dt, sf.tw);
      std::vector<int> merged = data.plus;
      merged.insert(merged.end(), data.minus.begin(), data.minus.end());
      std::sort(merged.begin(), merged.end());
      if (merged != invariant_degrees(sf.dt)) {
        c.ok = false;
        c.detail += sf.str() + ": [" + join(merged) + "] vs [" +
                    join(invariant_degrees(sf.dt)) + "]; ";
      }
    }
    out.push_back(std::move(c));
  }

  {
    CheckResult c{"diagram-automorphisms", true, ""};
    for (const auto& sf : outer_sweep()) {
      NodePerm sigma = diagram_automorphism(sf.dt, sf.tw);
      if (sigma.order() != sf.tw.order) {
        c.ok = false;
        c.detail += sf.str() + ": order " + std::to_string(sigma.order()) + "; ";
        continue;
      }
      IntMatrix cm = cartan_matrix(sf.dt);
      for (int i = 1; i <= sf.dt.rank; ++i)
        for (int j = 1; j <= sf.dt.rank; ++j)
          if (cm[static_cast<std::size_t>(sigma.image(i) - 1)]
                [static_cast<std::size_t>(sigma.image(j) - 1)] !=
              cm[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]) {
            c.ok = false;
            c.detail += sf.str() + ": Cartan not preserved; ";
            i = j = sf.dt.rank + 1;
          }
    }
    out.push_back(std::move(c));
  }

  {
    // Degree products against the brute-force group order.
    CheckResult c{"weyl-orders", true, ""};
    for (const auto& dt :
         {DynkinType(Family::A, 1), DynkinType(Family::A, 2), DynkinType(Family::A, 3),
          DynkinType(Family::B, 2), DynkinType(Family::B, 3), DynkinType(Family::C, 3),
          DynkinType(Family::D, 4), DynkinType(Family::G, 2), DynkinType(Family::F, 4)}) {
      auto elements = weyl_enumerate(dt, 5000);
      if (elements.size() != weyl_order(dt)) {
        c.ok = false;
        c.detail += dt.str() + ": " + std::to_string(elements.size()) + " vs " +
                    std::to_string(weyl_order(dt)) + "; ";
      }
    }
    out.push_back(std::move(c));
  }

  return out;
}

OracleComparison oracle_check(const GroupSpec& gs, const std::vector<std::set<int>>& psi,
                              std::int64_t cap) {
  if (psi.size() != gs.factors.size())
    fail(errc::invalid_argument, "need one node set per factor");
  OracleComparison out;
  out.closed_form = flag_poincare(gs, psi);
  out.oracle = Polynomial::one();
  for (std::size_t i = 0; i < gs.factors.size(); ++i) {
    const auto& f = gs.factors[i];
    CosetSpec cs{psi[i], diagram_automorphism(f.sf.dt, f.sf.tw)};
    out.oracle *= substitute_power(coset_gen_function(f.sf.dt, cs, cap), f.weil_degree);
  }
  out.match = out.closed_form == out.oracle;
  return out;
}

}  // namespace motivekit
