#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "motivekit/error.hpp"

namespace motivekit {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// A simple Dynkin type.  Legal ranks: A >= 1, B,C >= 2, D >= 3, E in {6,7,8},
// F = 4, G = 2.  Node numbering is Bourbaki throughout.
struct DynkinType {
  Family family;
  int rank;

  DynkinType(Family f, int r);
  std::string str() const;  // e.g. "A5"

  friend bool operator==(const DynkinType&, const DynkinType&) = default;
  friend auto operator<=>(const DynkinType&, const DynkinType&) = default;
};

// Order of a Dynkin diagram automorphism: 1 (inner), 2, or 3 (triality).
struct TwistLabel {
  int order = 1;

  friend bool operator==(const TwistLabel&, const TwistLabel&) = default;
};

bool twist_legal(const DynkinType& dt, const TwistLabel& tw);
void require_twist_legal(const DynkinType& dt, const TwistLabel& tw);

// Permutation of diagram nodes.  Nodes are 1-based in the API.
class NodePerm {
 public:
  NodePerm() = default;
  explicit NodePerm(std::vector<int> image_zero_based);
  static NodePerm identity(int rank);

  int rank() const { return static_cast<int>(img_.size()); }
  int image(int node) const { return img_[static_cast<std::size_t>(node - 1)] + 1; }
  bool is_identity() const;
  int order() const;
  std::string str() const;  // cycle notation, "id" for the identity

  friend bool operator==(const NodePerm&, const NodePerm&) = default;

 private:
  std::vector<int> img_;
};

using IntMatrix = std::vector<std::vector<int>>;

// Cartan matrix in Bourbaki numbering; entry [i][j] = <alpha_i, alpha_j^vee>.
IntMatrix cartan_matrix(const DynkinType& dt);

// Degrees of the fundamental polynomial invariants, ascending.
std::vector<int> invariant_degrees(const DynkinType& dt);

// Degree data of a twisted type: `plus` drives factors (t^e - 1)/(t - 1),
// `minus` drives factors (t^e + 1)/(t + 1).  For the trialitarian D4 the
// two exponent-4 entries form the conjugate pair and are stored in `minus`.
struct OuterDegreeData {
  std::vector<int> plus;
  std::vector<int> minus;
};

OuterDegreeData outer_degree_data(const DynkinType& dt, const TwistLabel& tw);

std::set<long long> torsion_primes(const DynkinType& dt, const TwistLabel& tw);

// The standard diagram automorphism of the given order.
NodePerm diagram_automorphism(const DynkinType& dt, const TwistLabel& tw);

// Order of the Weyl group (product of the invariant degrees).
unsigned long long weyl_order(const DynkinType& dt);

}  // namespace motivekit
