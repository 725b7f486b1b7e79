#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "motivekit/poincare.hpp"
#include "motivekit/polynomial.hpp"
#include "motivekit/weyl.hpp"

namespace motivekit {

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string detail;
};

// Self-checks of the stored numerology: degree lists, torsion primes, and
// outer degree data against independently written golden rows, the
// plus/minus union invariant, diagram automorphism sanity, and Weyl group
// orders against the enumeration.
std::vector<CheckResult> verify_tables();

struct OracleComparison {
  Polynomial closed_form;
  Polynomial oracle;
  bool match = false;
};

// Closed-form flag polynomial versus the element-by-element count: one
// coset generating function per factor, composed with t -> t^{weil degree}.
OracleComparison oracle_check(const GroupSpec& gs, const std::vector<std::set<int>>& psi,
                              std::int64_t cap = kDefaultOracleCap);

}  // namespace motivekit
