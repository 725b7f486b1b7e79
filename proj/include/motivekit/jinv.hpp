#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "motivekit/poincare.hpp"
#include "motivekit/polynomial.hpp"

namespace motivekit {

// One generator of the graded ring F_p[e_1..e_r]/(e_i^{p^{k_i}}): codimension
// d (already multiplied by the Weil degree of its factor), truncation
// exponent k, and the unscaled codimension d_base used when evaluating
// restriction rules, which transfer from the unrestricted group unchanged.
struct JEntry {
  long long d = 1;
  int k = 0;
  long long d_base = 1;

  friend bool operator==(const JEntry&, const JEntry&) = default;
};

// Restriction rules on the value tuple (j_1..j_r).  Indices are 1-based
// positions into JProfile::entries.

// For participating indices i, m and every admitted shift s (s = 0 only when
// scaled is false): if d_i + l = p^s d_m for some l >= 1 with C(d_i, l)
// nonzero mod p, then j_m <= j_i + s.  The d here are the unscaled d_base.
struct SteenrodRule {
  bool scaled = true;
  std::vector<int> indices;

  friend bool operator==(const SteenrodRule&, const SteenrodRule&) = default;
};

// j_{i1} >= j_{i2} >= ... along the listed indices.
struct ChainRule {
  std::vector<int> indices;

  friend bool operator==(const ChainRule&, const ChainRule&) = default;
};

// |j_i - j_j| <= bound.
struct DiffBoundRule {
  int i = 1, j = 2;
  int bound = 1;

  friend bool operator==(const DiffBoundRule&, const DiffBoundRule&) = default;
};

// j_i <= j_j + 1.
struct UpperNeighborRule {
  int i = 1, j = 2;

  friend bool operator==(const UpperNeighborRule&, const UpperNeighborRule&) = default;
};

using RestrictionRule = std::variant<SteenrodRule, ChainRule, DiffBoundRule, UpperNeighborRule>;

std::string rule_str(const RestrictionRule& rule);

// A parameter profile: the prime, the ring generators sorted by codimension
// (ascending, ties kept in table order), and the restriction rules.
struct JProfile {
  long long p = 2;
  std::vector<JEntry> entries;
  std::vector<RestrictionRule> rules;

  int r() const { return static_cast<int>(entries.size()); }
};

// A candidate value tuple (j_1..j_r), aligned with JProfile::entries.
struct JTuple {
  std::vector<int> values;

  friend bool operator==(const JTuple&, const JTuple&) = default;
};

// An exponent tuple (m_1..m_r) of a ring monomial, aligned the same way.
struct Monomial {
  std::vector<int> exponents;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline constexpr long long kDefaultEnumerationCap = 1 << 20;

// The parameter profile of a group: per factor the matching table row with
// all derived quantities (valuations, binary logarithms) evaluated, entry
// codimensions multiplied by the factor's Weil degree, and the rules carried
// over unchanged.  The isogeny hint distinguishes rows sharing a type:
// "" or "ad" (adjoint, the default), "sc"/"spin", "so", "hspin", "mu<q>".
JProfile j_profile(const GroupSpec& gs, const std::string& isogeny_hint = "");

// True iff j_i <= k_i everywhere and every restriction rule holds.
bool admissible(const JTuple& j, const JProfile& prof);

// All admissible tuples in ascending lexicographic order.
std::vector<JTuple> enumerate_admissible(const JProfile& prof,
                                         long long cap = kDefaultEnumerationCap);

// prod_i (t^{d_i p^{j_i}} - 1)/(t^{d_i} - 1); requires j admissible.
Polynomial upper_poincare(const JProfile& prof, const JTuple& j);

// Poincare polynomial of the full ring: prod_i (t^{d_i p^{k_i}} - 1)/(t^{d_i} - 1).
Polynomial ring_poincare(const JProfile& prof);

// Weighted degree |M| = sum d_i m_i.
long long weighted_degree(const Monomial& m, const JProfile& prof);

// Weighted-degree reverse lexicographic order: compare |M| first; on a tie,
// compare the exponents at the greatest position where they differ.
std::strong_ordering monomial_cmp(const Monomial& lhs, const Monomial& rhs,
                                  const JProfile& prof);

// All monomials with m_i < p^{k_i}, ascending in the order above.
std::vector<Monomial> monomial_basis(const JProfile& prof,
                                     long long cap = kDefaultEnumerationCap);

struct EntryValue {
  int j1 = 0;
  int k1 = 0;
};

// Degree-2 entry for a unitary algebra (B, tau) of even degree: j1 is
// v2(ind B) when ind B divides deg B / 2 and v2(ind B) - 1 otherwise;
// 2^{k1} exactly divides deg B / 2.
EntryValue unitary_j1(long long deg_b, long long ind_b);

// Degree-1 entry for an orthogonal algebra (A, sigma) of degree 2n:
// k1 = (1 + (-1)^{n+1})/2 and j1 = min{k1, v2(ind A)}.
EntryValue orthogonal_j1(long long n, long long ind_a);

enum class InvolutionKind { unitary, orthogonal };

// The degree-d2 entry detects the splitting of the associated algebra: the
// discriminant algebra in the unitary case, the even Clifford algebra in the
// orthogonal case.  0 when split, 1 otherwise.
int tits_j2(InvolutionKind kind, bool split);

// Value tuple of the group of an anisotropic excellent even-dimensional
// quadratic form with non-trivial discriminant, from its tower of Pfister
// form dimensions (strictly decreasing powers of two ending in 2):
// j_i = 1 exactly at the entry of codimension dim(pi_{s-1})/2 - 1.
// If no entry has that codimension the tuple is all-zero and a diagnostic
// is written to *warning when given.
JTuple excellent_form_jinv(const std::vector<long long>& tower_dims, const JProfile& prof,
                           std::string* warning = nullptr);

}  // namespace motivekit
