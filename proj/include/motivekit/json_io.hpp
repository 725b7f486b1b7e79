#pragma once

#include "json.hpp"
#include "motivekit/jinv.hpp"
#include "motivekit/motive.hpp"
#include "motivekit/polynomial.hpp"
#include "motivekit/rootsys.hpp"

namespace motivekit {

// Canonical JSON forms: keys sorted (nlohmann objects are ordered maps),
// polynomials as ascending coefficient arrays, twist multisets as sorted
// [twist, count] pairs.  Counts and coefficients are emitted as JSON
// integers when they fit in 64 bits and as decimal strings otherwise.
nlohmann::json json_of(const Int& n);
nlohmann::json json_of(const Polynomial& p);
nlohmann::json json_of(const OuterDegreeData& data);
nlohmann::json json_of(const JProfile& prof);
nlohmann::json json_of(const JTuple& j);
nlohmann::json json_of(const TwistMultiset& tm);

}  // namespace motivekit
