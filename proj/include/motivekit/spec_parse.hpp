#pragma once

#include <set>
#include <string>
#include <vector>

#include "motivekit/poincare.hpp"

namespace motivekit {

// Grammar for group spec strings:
//   product := item ("x" item)*
//   item    := factor | "R" weil "(" item ")"
//   factor  := [twist] FAMILY rank      twist in {"2", "3"}, FAMILY in A..G
// Examples: "2A5", "3D4", "R2(2A3)x2D5".  Errors carry the byte offset.
GroupSpec parse_group_spec(const std::string& s, long long p);

// A single factor, e.g. "2A3"; no product or scalar restriction allowed.
SimpleFactor parse_simple_factor(const std::string& s);

// The admissible primes of the spec string's factors (each outer factor
// forces the order of its automorphism; a scalar restriction of degree
// q^e forces q; a plain inner factor admits its torsion primes).
std::set<long long> admissible_primes(const std::string& s);

// Smallest admissible prime; the CLI uses this when no prime is given.
long long infer_prime(const std::string& s);

// Node sets from "2,3,4" (one factor) or "2,3,4;1,2" (one group per factor,
// ";"-separated, empty group = Borel).  Sizes are padded with empty sets to
// the number of factors.
std::vector<std::set<int>> parse_psi(const std::string& s, const GroupSpec& gs);

}  // namespace motivekit
