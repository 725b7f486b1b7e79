#pragma once

#include <set>
#include <string>
#include <vector>

#include "motivekit/polynomial.hpp"
#include "motivekit/rootsys.hpp"

namespace motivekit {

// An absolutely simple quasi-split factor: a Dynkin type with a diagram
// automorphism order (1 = split/inner).
struct SimpleFactor {
  DynkinType dt;
  TwistLabel tw;

  explicit SimpleFactor(DynkinType d, TwistLabel t = {});
  std::string str() const;  // e.g. "2A3"

  friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
};

// One factor of a semisimple group: a simple quasi-split group scalar
// restricted along an extension of the given degree.
struct GroupFactor {
  int weil_degree = 1;
  SimpleFactor sf;
};

// A semisimple group as a product of Weil-restricted simple factors, plus
// the working torsion prime p.
struct GroupSpec {
  std::vector<GroupFactor> factors;
  long long p = 2;

  std::string str() const;  // e.g. "R2(2A3)x2D5"
};

// Builds a GroupSpec, enforcing the structural invariants: p prime, all
// weil degrees >= 1, and twist-order/prime compatibility (an order-2
// automorphism forces p = 2, an order-3 automorphism forces p = 3; factors
// forcing different primes cannot be mixed).
GroupSpec make_group_spec(std::vector<GroupFactor> factors, long long p);

// Poincare polynomial of the full flag variety of one simple quasi-split
// factor: the Solomon product for inner types, with the signed variants of
// the degree data for outer types (counted in the normed Chow ring).
Polynomial borel_poincare(const SimpleFactor& sf);

// The semisimple part of the Levi of the parabolic of type psi, as a
// GroupSpec: connected components of the sub-diagram on psi are grouped
// into orbits of the factor's automorphism; an orbit of o components of
// type T yields a factor of weil degree o carrying the automorphism induced
// on one component.  psi must be stable under the automorphism.
GroupSpec levi_spec(const SimpleFactor& sf, const std::set<int>& psi, long long p = 2);

// Product over factors of borel_poincare with t -> t^{weil degree}.
Polynomial group_borel_poincare(const GroupSpec& gs);

// Poincare polynomial of the flag variety of type psi (one retained node
// set per factor; empty set = Borel).  Computed per factor as the Borel
// polynomial divided by the Borel polynomial of the Levi, then t -> t^m.
Polynomial flag_poincare(const GroupSpec& gs, const std::vector<std::set<int>>& psi_per_factor);

}  // namespace motivekit
