#include "motivekit/error.hpp"

namespace motivekit {

const char* errc_name(errc code) {
  switch (code) {
    case errc::not_divisible: return "NotDivisible";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::psi_not_stable: return "PsiNotStable";
    case errc::illegal_twist: return "IllegalTwist";
    case errc::not_a_torsion_prime: return "NotATorsionPrime";
    case errc::unknown_row: return "UnknownRow";
    case errc::inadmissible: return "Inadmissible";
    case errc::negative_multiplicity: return "NegativeMultiplicity";
    case errc::illegal_algebra: return "IllegalAlgebra";
    case errc::not_excellent_tower: return "NotExcellentTower";
    case errc::parse_error: return "ParseError";
    case errc::mixed_prime_unsupported: return "MixedPrimeUnsupported";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace motivekit
