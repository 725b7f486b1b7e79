#include "motivekit/weyl.hpp"

#include <algorithm>
#include <map>

namespace motivekit {

namespace {

void require_valid_nodes(const std::set<int>& nodes, int rank) {
  for (int i : nodes)
    if (i < 1 || i > rank)
      fail(errc::invalid_argument, "node index " + std::to_string(i) + " out of range");
}

bool preserves_cartan(const IntMatrix& c, const NodePerm& sigma) {
  const int n = static_cast<int>(c.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int si = sigma.image(i + 1) - 1;
      int sj = sigma.image(j + 1) - 1;
      if (c[static_cast<std::size_t>(si)][static_cast<std::size_t>(sj)] !=
          c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
        return false;
    }
  return true;
}

}  // namespace

WeylGroup::WeylGroup(const DynkinType& dt) : dt_(dt), cartan_(cartan_matrix(dt)) {}

std::vector<int> WeylGroup::identity_action() const {
  const int n = rank();
  std::vector<int> a(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i) * n + i] = 1;
  return a;
}

std::vector<int> WeylGroup::right_multiply(const std::vector<int>& action, int node) const {
  // (w s_i)(alpha_j) = w(alpha_j) - C[j][i] * w(alpha_i)
  const int n = rank();
  const int i = node - 1;
  std::vector<int> out = action;
  for (int j = 0; j < n; ++j) {
    int c = cartan_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    if (c == 0) continue;
    for (int k = 0; k < n; ++k)
      out[static_cast<std::size_t>(j) * n + k] -= c * action[static_cast<std::size_t>(i) * n + k];
  }
  return out;
}

bool WeylGroup::has_right_descent(const std::vector<int>& action, int node) const {
  // w(alpha_node) is a root, so its coordinates are all of one sign.
  const int n = rank();
  const int i = node - 1;
  for (int k = 0; k < n; ++k)
    if (action[static_cast<std::size_t>(i) * n + k] < 0) return true;
  return false;
}

std::vector<int> WeylGroup::apply_diagram_perm(const std::vector<int>& action,
                                               const NodePerm& sigma) const {
  const int n = rank();
  std::vector<int> out(action.size());
  for (int j = 0; j < n; ++j) {
    int sj = sigma.image(j + 1) - 1;
    for (int k = 0; k < n; ++k) {
      int sk = sigma.image(k + 1) - 1;
      out[static_cast<std::size_t>(sj) * n + sk] = action[static_cast<std::size_t>(j) * n + k];
    }
  }
  return out;
}

std::vector<WeylElement> WeylGroup::enumerate_subgroup(const std::set<int>& generators,
                                                       std::int64_t cap) const {
  require_valid_nodes(generators, rank());
  std::vector<WeylElement> out;
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> level{identity_action()};
  seen.insert(level.front());
  int length = 0;
  while (!level.empty()) {
    for (const auto& a : level) out.push_back({a, length});
    std::map<std::vector<int>, int> next;  // map order = lexicographic order
    for (const auto& a : level)
      for (int i : generators) {
        if (has_right_descent(a, i)) continue;
        auto b = right_multiply(a, i);
        if (seen.contains(b)) continue;
        next.emplace(std::move(b), 0);
      }
    level.clear();
    for (auto& [a, unused] : next) {
      if (static_cast<std::int64_t>(out.size() + level.size()) >= cap)
        fail(errc::cap_exceeded, "Weyl enumeration for " + dt_.str() + " exceeds cap " +
                                     std::to_string(cap));
      seen.insert(a);
      level.push_back(a);
    }
    ++length;
  }
  return out;
}

std::vector<WeylElement> WeylGroup::enumerate(std::int64_t cap) const {
  if (static_cast<std::int64_t>(weyl_order(dt_)) > cap)
    fail(errc::cap_exceeded, "|W(" + dt_.str() + ")| = " + std::to_string(weyl_order(dt_)) +
                                 " exceeds cap " + std::to_string(cap));
  std::set<int> all;
  for (int i = 1; i <= rank(); ++i) all.insert(i);
  return enumerate_subgroup(all, cap);
}

std::vector<WeylElement> weyl_enumerate(const DynkinType& dt, std::int64_t cap) {
  return WeylGroup(dt).enumerate(cap);
}

Polynomial coset_gen_function(const DynkinType& dt, const CosetSpec& cs, std::int64_t cap) {
  WeylGroup w(dt);
  require_valid_nodes(cs.psi, dt.rank);
  if (cs.sigma.rank() != dt.rank)
    fail(errc::invalid_argument, "permutation rank does not match the Dynkin type");
  if (!preserves_cartan(w.cartan(), cs.sigma))
    fail(errc::invalid_argument, "node permutation is not a diagram automorphism");
  for (int i : cs.psi)
    if (!cs.psi.contains(cs.sigma.image(i)))
      fail(errc::psi_not_stable, "psi is not stable under the diagram automorphism");

  const bool twisted = !cs.sigma.is_identity();
  std::vector<Int> coeffs;
  for (const auto& el : w.enumerate(cap)) {
    bool minimal = true;
    for (int i : cs.psi)
      if (w.has_right_descent(el.action, i)) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    if (twisted && w.apply_diagram_perm(el.action, cs.sigma) != el.action) continue;
    if (static_cast<int>(coeffs.size()) <= el.length)
      coeffs.resize(static_cast<std::size_t>(el.length) + 1, Int(0));
    ++coeffs[static_cast<std::size_t>(el.length)];
  }
  return Polynomial(std::move(coeffs));
}

Polynomial subgroup_gen_function(const DynkinType& dt, const std::set<int>& psi,
                                 const NodePerm& sigma, std::int64_t cap) {
  WeylGroup w(dt);
  require_valid_nodes(psi, dt.rank);
  if (sigma.rank() != dt.rank)
    fail(errc::invalid_argument, "permutation rank does not match the Dynkin type");
  const bool twisted = !sigma.is_identity();
  std::vector<Int> coeffs;
  for (const auto& el : w.enumerate_subgroup(psi, cap)) {
    if (twisted && w.apply_diagram_perm(el.action, sigma) != el.action) continue;
    if (static_cast<int>(coeffs.size()) <= el.length)
      coeffs.resize(static_cast<std::size_t>(el.length) + 1, Int(0));
    ++coeffs[static_cast<std::size_t>(el.length)];
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace motivekit
