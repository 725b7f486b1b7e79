#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "motivekit/polynomial.hpp"
#include "motivekit/rootsys.hpp"

namespace motivekit {

// A Weyl group element stored by its action on the simple-root basis:
// action[j*rank + k] is the coefficient of alpha_{k+1} in w(alpha_{j+1}).
// Equality and diagram-automorphism application are canonical in this
// representation; no reduced word is ever needed.
struct WeylElement {
  std::vector<int> action;
  int length = 0;
};

// Type of a twisted coset count: the parabolic generator set psi
// (1-based nodes, empty = Borel) and a diagram automorphism sigma.
// If sigma is non-trivial, psi must be sigma-stable.
struct CosetSpec {
  std::set<int> psi;
  NodePerm sigma;
};

inline constexpr std::int64_t kDefaultOracleCap = 200000;

// Simple-reflection bookkeeping for one Dynkin type.
class WeylGroup {
 public:
  explicit WeylGroup(const DynkinType& dt);

  const DynkinType& type() const { return dt_; }
  int rank() const { return dt_.rank; }
  const IntMatrix& cartan() const { return cartan_; }

  std::vector<int> identity_action() const;
  // Action of w * s_node (node 1-based).
  std::vector<int> right_multiply(const std::vector<int>& action, int node) const;
  // l(w s_node) < l(w), i.e. w(alpha_node) is a negative root.
  bool has_right_descent(const std::vector<int>& action, int node) const;
  // The *-action of sigma: conjugation by the node permutation.
  std::vector<int> apply_diagram_perm(const std::vector<int>& action, const NodePerm& sigma) const;

  // All elements generated from the listed simple reflections (1-based;
  // empty set = trivial subgroup), in deterministic order: by length, then
  // lexicographically on the action.  Throws errc::cap_exceeded if the
  // closure grows past cap.
  std::vector<WeylElement> enumerate_subgroup(const std::set<int>& generators,
                                              std::int64_t cap) const;
  std::vector<WeylElement> enumerate(std::int64_t cap) const;

 private:
  DynkinType dt_;
  IntMatrix cartan_;
};

// All elements of W(dt); errc::cap_exceeded when |W| > cap.
std::vector<WeylElement> weyl_enumerate(const DynkinType& dt, std::int64_t cap = kDefaultOracleCap);

// Generating function of the minimal-length representatives of W/W_psi that
// are fixed by the *-action of sigma: the coefficient of t^u counts such
// representatives of length u.
Polynomial coset_gen_function(const DynkinType& dt, const CosetSpec& cs,
                              std::int64_t cap = kDefaultOracleCap);

// Length generating function of the subgroup generated by psi, restricted to
// sigma-fixed elements.
Polynomial subgroup_gen_function(const DynkinType& dt, const std::set<int>& psi,
                                 const NodePerm& sigma, std::int64_t cap = kDefaultOracleCap);

}  // namespace motivekit
