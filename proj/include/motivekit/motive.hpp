#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "motivekit/jinv.hpp"
#include "motivekit/poincare.hpp"
#include "motivekit/polynomial.hpp"

namespace motivekit {

// The Tate twists occurring in a decomposition into copies of the upper
// motive: twist index -> multiplicity.  All counts are positive, and the
// generating polynomial times the upper polynomial reproduces the total.
struct TwistMultiset {
  std::map<int, Int> multiplicities;

  Int total_summands() const;
  int max_twist() const;  // -1 when empty
  Polynomial to_polynomial() const;

  friend bool operator==(const TwistMultiset&, const TwistMultiset&) = default;
};

// Reads the multiset off the exact quotient total / upper.  Fails with
// errc::not_divisible when no integer quotient exists and with
// errc::negative_multiplicity when the quotient has a negative coefficient;
// either way the pairing is not a genuine decomposition.
TwistMultiset decompose(const Polynomial& total, const Polynomial& upper);

// decompose(flag_poincare(gs, psi), upper_poincare(j_profile(gs, hint), j)).
// The caller is responsible for psi making the variety generically
// quasi-split; the Borel case (all psi empty) always qualifies.
TwistMultiset decompose_group(const GroupSpec& gs, const std::vector<std::set<int>>& psi,
                              const JTuple& j, const std::string& isogeny_hint = "");

// True iff upper * sum_i a_i t^i equals total.
bool verify_decomposition(const Polynomial& total, const Polynomial& upper,
                          const TwistMultiset& tm);

}  // namespace motivekit
