// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Everything here is exact arithmetic; the only tolerances are wall-clock
// budgets on the oracle sweeps.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "motivekit/jinv.hpp"
#include "motivekit/motive.hpp"
#include "motivekit/poincare.hpp"
#include "motivekit/spec_parse.hpp"
#include "motivekit/verify.hpp"
#include "motivekit/weyl.hpp"

using namespace motivekit;

namespace {

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;  // 0 = no budget stated
  std::function<bool(std::string&)> run;
};

bool check(bool cond, std::string& detail, const std::string& msg) {
  if (!cond) detail += (detail.empty() ? "" : "; ") + msg;
  return cond;
}

Polynomial closed_borel(const std::string& factor) {
  return borel_poincare(parse_simple_factor(factor));
}

Polynomial oracle_borel(const std::string& factor) {
  SimpleFactor sf = parse_simple_factor(factor);
  return coset_gen_function(sf.dt, {{}, diagram_automorphism(sf.dt, sf.tw)});
}

struct PoolEntry {
  const char* group;
  long long p;
  const char* hint;
};

const std::vector<PoolEntry> kProfilePool = {
    {"A3", 2, ""},       {"A5", 2, ""},      {"A5", 3, ""},      {"A7", 2, ""},
    {"A8", 3, ""},       {"B3", 2, ""},      {"B3", 2, "sc"},    {"B4", 2, ""},
    {"B5", 2, "sc"},     {"C3", 2, ""},      {"C4", 2, ""},      {"D4", 2, ""},
    {"D4", 2, "so"},     {"D4", 2, "sc"},    {"D4", 2, "hspin"}, {"D5", 2, ""},
    {"D5", 2, "so"},     {"D5", 2, "sc"},    {"D6", 2, "hspin"}, {"G2", 2, ""},
    {"F4", 2, ""},       {"F4", 3, ""},      {"E6", 2, ""},      {"E6", 3, "sc"},
    {"E6", 3, "ad"},     {"E7", 2, "sc"},    {"E7", 2, "ad"},    {"E7", 3, ""},
    {"E8", 2, ""},       {"E8", 3, ""},      {"E8", 5, ""},      {"2A2", 2, ""},
    {"2A3", 2, ""},      {"2A4", 2, ""},     {"2A5", 2, ""},     {"2A6", 2, ""},
    {"2A7", 2, ""},      {"2D3", 2, ""},     {"2D4", 2, ""},     {"2D5", 2, ""},
    {"2D6", 2, ""},      {"3D4", 3, ""},     {"2E6", 2, ""},     {"R2(A1)", 2, ""},
    {"R2(2A3)", 2, ""},  {"R3(3D4)", 3, ""}, {"R2(2D4)", 2, ""}, {"R4(A3)", 2, ""},
    {"R2(2E6)", 2, ""},  {"R3(E6)", 3, ""},
};

bool criterion_tables(std::string& detail) {
  bool ok = true;
  for (const auto& c : verify_tables()) ok &= check(c.ok, detail, c.name + ": " + c.detail);
  return ok;
}

bool criterion_inner_solomon(std::string& detail) {
  bool ok = true;
  for (const char* name : {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C3", "D4", "D5",
                           "G2", "F4", "E6"})
    ok &= check(closed_borel(name) == oracle_borel(name), detail, std::string(name));
  return ok;
}

bool criterion_outer_solomon(std::string& detail) {
  bool ok = true;
  for (const char* name : {"2A2", "2A3", "2A4", "2A5", "2D4", "2D5", "3D4", "2E6"})
    ok &= check(closed_borel(name) == oracle_borel(name), detail, std::string(name));
  return ok;
}

bool criterion_quadrics(std::string& detail) {
  bool ok = true;
  for (int n = 3; n <= 8; ++n) {
    std::set<int> psi;
    for (int i = 2; i <= n; ++i) psi.insert(i);
    GroupSpec inner = make_group_spec({GroupFactor{1, SimpleFactor(DynkinType(Family::D, n))}}, 2);
    Polynomial want_inner =
        expand_rational_product(RationalProduct{{n}, {n - 1}, {1}, {}});
    ok &= check(flag_poincare(inner, {psi}) == want_inner, detail,
                "split D" + std::to_string(n));
    GroupSpec outer = make_group_spec(
        {GroupFactor{1, SimpleFactor(DynkinType(Family::D, n), TwistLabel{2})}}, 2);
    Polynomial want_outer =
        expand_rational_product(RationalProduct{{n - 1}, {n}, {1}, {}});
    ok &= check(flag_poincare(outer, {psi}) == want_outer, detail,
                "twisted D" + std::to_string(n));
  }
  return ok;
}

bool criterion_triality_identity(std::string& detail) {
  bool ok = true;
  const Polynomial lhs({1, 0, 0, 0, 1, 0, 0, 0, 1});  // t^8 + t^4 + 1
  const Polynomial rhs = Polynomial({1, 1, 1}) * Polynomial({1, -1, 0, 1, 0, -1, 1});
  ok &= check(lhs == rhs, detail, "factor identity");
  ok &= check(closed_borel("3D4").value_at_one() == 12, detail, "value at 1");
  return ok;
}

bool criterion_decompositions(std::string& detail) {
  bool ok = true;
  GroupSpec d4 = parse_group_spec("3D4", 3);
  TwistMultiset want;
  want.multiplicities = {{0, 1}, {1, 1}, {3, 1}, {4, 1}};
  ok &= check(decompose_group(d4, {{}}, JTuple{{1}}) == want, detail, "trialitarian D4");

  GroupSpec e6 = parse_group_spec("2E6", 2);
  TwistMultiset tm = decompose_group(e6, {{}}, JTuple{{1, 1, 1}});
  Polynomial total = flag_poincare(e6, {{}});
  Polynomial quotient = tm.to_polynomial();
  ok &= check(tm.total_summands() == 144, detail, "summand count");
  ok &= check(tm.max_twist() == 19, detail, "max twist");
  ok &= check(total.degree() == 36, detail, "total degree");
  ok &= check(is_palindromic(quotient), detail, "quotient palindromic");
  ok &= check(quotient.non_negative(), detail, "quotient non-negative");
  return ok;
}

bool criterion_enumeration(std::string& detail) {
  bool ok = true;
  auto e6 = enumerate_admissible(j_profile(parse_group_spec("2E6", 2)));
  ok &= check(e6.size() == 4, detail, "twisted E6 count");
  if (e6.size() == 4) {
    ok &= check(e6[0] == JTuple{{0, 0, 0}} && e6[1] == JTuple{{1, 0, 0}} &&
                    e6[2] == JTuple{{1, 1, 0}} && e6[3] == JTuple{{1, 1, 1}},
                detail, "twisted E6 tuples");
  }
  ok &= check(enumerate_admissible(j_profile(parse_group_spec("2A4", 2))).size() == 3, detail,
              "twisted A4 count");
  ok &= check(enumerate_admissible(j_profile(parse_group_spec("3D4", 3))).size() == 2, detail,
              "trialitarian D4 count");
  return ok;
}

bool criterion_entry_formulas(std::string& detail) {
  bool ok = true;
  ok &= check(unitary_j1(8, 4).j1 == 2, detail, "unitary (8,4)");
  ok &= check(unitary_j1(8, 8).j1 == 2, detail, "unitary (8,8)");
  ok &= check(unitary_j1(12, 2).j1 == 1, detail, "unitary (12,2)");
  for (long long deg = 2; deg <= 16; deg += 2)
    ok &= check(unitary_j1(deg, 1).j1 == 0, detail, "unitary split");
  ok &= check(orthogonal_j1(5, 2).j1 == 1, detail, "orthogonal (5,2)");
  ok &= check(orthogonal_j1(4, 8).j1 == 0, detail, "orthogonal (4,8)");

  for (long long n = 1; n <= 64; ++n)
    for (int k = 0; k <= 7; ++k) {
      bool divides = true;
      try {
        exact_div(Polynomial::power_minus_one(static_cast<int>(2 * (n + 1))),
                  Polynomial::power_minus_one(2 << k));
      } catch (const Error&) {
        divides = false;
      }
      ok &= check(divides == (k <= p_valuation(n + 1, 2)), detail,
                  "divisibility n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  return ok;
}

bool criterion_property_suites(std::string& detail) {
  bool ok = true;

  // Palindromicity of every generated flag polynomial.
  for (const char* name : {"A4", "B3", "C3", "D4", "D5", "2A4", "2A5", "2D4", "2D5", "3D4",
                           "E6", "2E6", "F4", "G2"}) {
    SimpleFactor sf = parse_simple_factor(name);
    NodePerm sigma = diagram_automorphism(sf.dt, sf.tw);
    GroupSpec gs =
        make_group_spec({GroupFactor{1, sf}}, sf.tw.order == 3 ? 3 : 2);
    for (int mask = 0; mask < (1 << sf.dt.rank); ++mask) {
      std::set<int> psi;
      for (int i = 1; i <= sf.dt.rank; ++i)
        if (mask & (1 << (i - 1))) psi.insert(i);
      bool stable = true;
      for (int i : psi) stable = stable && psi.contains(sigma.image(i));
      if (!stable) continue;
      if (!is_palindromic(flag_poincare(gs, {psi}))) {
        ok = check(false, detail, std::string("palindromic ") + name);
        break;
      }
    }
  }

  std::mt19937_64 rng(20260810);
  std::uniform_int_distribution<std::size_t> pick(0, kProfilePool.size() - 1);

  // Ring polynomial vs. the monomial-basis generating function.
  for (int iter = 0; iter < 50; ++iter) {
    const auto& entry = kProfilePool[pick(rng)];
    JProfile prof = j_profile(parse_group_spec(entry.group, entry.p), entry.hint);
    std::vector<Monomial> basis;
    try {
      basis = monomial_basis(prof, 4096);
    } catch (const Error&) {
      continue;  // beyond the stated basis cap
    }
    Polynomial sum;
    for (const auto& m : basis)
      sum += Polynomial::monomial(static_cast<int>(weighted_degree(m, prof)));
    ok &= check(sum == ring_poincare(prof), detail,
                std::string("ring vs basis ") + entry.group);
  }

  // Decomposition round-trips on random admissible tuples.
  for (int iter = 0; iter < 100; ++iter) {
    const auto& entry = kProfilePool[pick(rng)];
    GroupSpec gs = parse_group_spec(entry.group, entry.p);
    JProfile prof = j_profile(gs, entry.hint);
    auto tuples = enumerate_admissible(prof, 4096);
    std::uniform_int_distribution<std::size_t> tuple_pick(0, tuples.size() - 1);
    const JTuple& j = tuples[tuple_pick(rng)];
    Polynomial total = flag_poincare(gs, std::vector<std::set<int>>(gs.factors.size()));
    Polynomial upper = upper_poincare(prof, j);
    TwistMultiset tm = decompose(total, upper);
    ok &= check(verify_decomposition(total, upper, tm), detail,
                std::string("round-trip ") + entry.group);
    ok &= check(is_palindromic(tm.to_polynomial()), detail,
                std::string("Borel quotient palindromic ") + entry.group);
  }

  // Total-order axioms for the monomial order on full bases.
  for (const auto& entry : kProfilePool) {
    JProfile prof = j_profile(parse_group_spec(entry.group, entry.p), entry.hint);
    std::vector<Monomial> basis;
    try {
      basis = monomial_basis(prof, 4096);
    } catch (const Error&) {
      continue;
    }
    for (std::size_t a = 1; a < basis.size(); ++a)
      ok &= check(monomial_cmp(basis[a - 1], basis[a], prof) == std::strong_ordering::less,
                  detail, std::string("sorted basis ") + entry.group);
    const std::size_t pair_limit = basis.size() <= 600 ? basis.size() : 0;
    for (std::size_t a = 0; a < pair_limit; ++a)
      for (std::size_t b = a + 1; b < pair_limit; ++b) {
        auto ab = monomial_cmp(basis[a], basis[b], prof);
        auto ba = monomial_cmp(basis[b], basis[a], prof);
        bool anti = (ab == std::strong_ordering::less && ba == std::strong_ordering::greater);
        if (!anti) {
          ok = check(false, detail, std::string("antisymmetry ") + entry.group);
          a = b = pair_limit;
        }
      }
    if (basis.size() > 2) {
      std::uniform_int_distribution<std::size_t> idx(0, basis.size() - 1);
      for (int t = 0; t < 20000; ++t) {
        std::size_t a = idx(rng), b = idx(rng), c = idx(rng);
        if (monomial_cmp(basis[a], basis[b], prof) != std::strong_ordering::greater &&
            monomial_cmp(basis[b], basis[c], prof) != std::strong_ordering::greater) {
          if (monomial_cmp(basis[a], basis[c], prof) == std::strong_ordering::greater) {
            ok = check(false, detail, std::string("transitivity ") + entry.group);
            break;
          }
        }
      }
    }
  }
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "table reproduction (degrees, torsion primes, outer data, union invariant)", 1.0,
       criterion_tables},
      {2, "Solomon oracle equivalence, split types A1-A5 B2-B4 C3 D4 D5 G2 F4 E6", 60.0,
       criterion_inner_solomon},
      {3, "extended Solomon oracle equivalence, twisted types 2A2-2A5 2D4 2D5 3D4 2E6", 90.0,
       criterion_outer_solomon},
      {4, "quadric family: flag polynomials of D_n/2D_n at psi={2..n}, n=3..8", 0.0,
       criterion_quadrics},
      {5, "trialitarian factor identity and folded order 12", 0.0, criterion_triality_identity},
      {6, "decompositions: 3D4 J=(1) twists {0,1,3,4}; 2E6 J=(1,1,1) 144 summands", 0.0,
       criterion_decompositions},
      {7, "admissible enumeration counts: 2E6 -> 4, 2A4 -> 3, 3D4 -> 2", 0.0,
       criterion_enumeration},
      {8, "degree-1/2 entry formulas and the divisibility criterion (n <= 64, k <= 7)", 0.0,
       criterion_entry_formulas},
      {9, "property suites: palindromicity, ring vs basis, round-trips, order axioms", 30.0,
       criterion_property_suites},
  };

  int failures = 0;
  for (auto& criterion : criteria) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criterion.budget_seconds > 0 && elapsed > criterion.budget_seconds) {
      ok = false;
      std::ostringstream os;
      os << (detail.empty() ? "" : detail + "; ") << "exceeded budget of "
         << criterion.budget_seconds << "s";
      detail = os.str();
    }
    std::ostringstream line;
    line << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << criterion.id << ": "
         << criterion.name << " (" << std::fixed;
    line.precision(2);
    line << elapsed << "s)";
    if (!ok) line << "  -- " << detail;
    std::cout << line.str() << "\n";
    if (!ok) ++failures;
  }
  if (failures == 0) std::cout << "all criteria passed\n";
  else std::cout << failures << " criteria failed\n";
  return failures == 0 ? 0 : 1;
}
