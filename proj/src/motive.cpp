#include "motivekit/motive.hpp"

namespace motivekit {

Int TwistMultiset::total_summands() const {
  Int n = 0;
  for (const auto& [i, a] : multiplicities) n += a;
  return n;
}

int TwistMultiset::max_twist() const {
  return multiplicities.empty() ? -1 : multiplicities.rbegin()->first;
}

Polynomial TwistMultiset::to_polynomial() const {
  if (multiplicities.empty()) return Polynomial();
  std::vector<Int> coeffs(static_cast<std::size_t>(max_twist()) + 1, Int(0));
  for (const auto& [i, a] : multiplicities) coeffs[static_cast<std::size_t>(i)] = a;
  return Polynomial(std::move(coeffs));
}

TwistMultiset decompose(const Polynomial& total, const Polynomial& upper) {
  if (total.is_zero() || upper.is_zero())
    fail(errc::invalid_argument, "decompose needs nonzero polynomials");
  if (!total.non_negative() || !upper.non_negative())
    fail(errc::invalid_argument, "decompose needs non-negative coefficients");
  Polynomial q = exact_div(total, upper);
  if (!q.non_negative())
    fail(errc::negative_multiplicity,
         "integer quotient has a negative coefficient; not a decomposition");
  TwistMultiset tm;
  for (int i = 0; i <= q.degree(); ++i)
    if (q.coeff(i) != 0) tm.multiplicities[i] = q.coeff(i);
  return tm;
}

TwistMultiset decompose_group(const GroupSpec& gs, const std::vector<std::set<int>>& psi,
                              const JTuple& j, const std::string& isogeny_hint) {
  JProfile prof = j_profile(gs, isogeny_hint);
  Polynomial upper = upper_poincare(prof, j);
  Polynomial total = flag_poincare(gs, psi);
  return decompose(total, upper);
}

bool verify_decomposition(const Polynomial& total, const Polynomial& upper,
                          const TwistMultiset& tm) {
  return upper * tm.to_polynomial() == total;
}

}  // namespace motivekit
