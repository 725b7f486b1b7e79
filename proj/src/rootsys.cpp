#include "motivekit/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "motivekit/numeric.hpp"

namespace motivekit {

DynkinType::DynkinType(Family f, int r) : family(f), rank(r) {
  bool ok = false;
  switch (f) {
    case Family::A: ok = r >= 1; break;
    case Family::B:
    case Family::C: ok = r >= 2; break;
    case Family::D: ok = r >= 3; break;
    case Family::E: ok = r >= 6 && r <= 8; break;
    case Family::F: ok = r == 4; break;
    case Family::G: ok = r == 2; break;
  }
  if (!ok)
    fail(errc::invalid_argument,
         std::string("illegal rank ") + std::to_string(r) + " for family " +
             static_cast<char>(f));
}

std::string DynkinType::str() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

bool twist_legal(const DynkinType& dt, const TwistLabel& tw) {
  switch (tw.order) {
    case 1:
      return true;
    case 2:
      return (dt.family == Family::A && dt.rank >= 2) || dt.family == Family::D ||
             (dt.family == Family::E && dt.rank == 6);
    case 3:
      return dt.family == Family::D && dt.rank == 4;
    default:
      return false;
  }
}

void require_twist_legal(const DynkinType& dt, const TwistLabel& tw) {
  if (!twist_legal(dt, tw))
    fail(errc::illegal_twist,
         "diagram automorphism of order " + std::to_string(tw.order) +
             " does not exist for type " + dt.str());
}

NodePerm::NodePerm(std::vector<int> image_zero_based) : img_(std::move(image_zero_based)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[static_cast<std::size_t>(v)])
      fail(errc::invalid_argument, "node permutation is not a bijection");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

NodePerm NodePerm::identity(int rank) {
  std::vector<int> img(static_cast<std::size_t>(rank));
  std::iota(img.begin(), img.end(), 0);
  return NodePerm(std::move(img));
}

bool NodePerm::is_identity() const {
  for (int i = 0; i < rank(); ++i)
    if (img_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

int NodePerm::order() const {
  NodePerm acc = *this;
  int n = 1;
  while (!acc.is_identity()) {
    std::vector<int> next(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i)
      next[i] = img_[static_cast<std::size_t>(acc.img_[i])];
    acc.img_ = std::move(next);
    ++n;
    if (n > rank() + 1) fail(errc::invalid_argument, "permutation order overflow");
  }
  return n;
}

std::string NodePerm::str() const {
  if (is_identity()) return "id";
  std::ostringstream os;
  std::vector<char> done(img_.size(), 0);
  for (int i = 1; i <= rank(); ++i) {
    if (done[static_cast<std::size_t>(i - 1)] || image(i) == i) continue;
    os << "(" << i;
    done[static_cast<std::size_t>(i - 1)] = 1;
    for (int j = image(i); j != i; j = image(j)) {
      os << " " << j;
      done[static_cast<std::size_t>(j - 1)] = 1;
    }
    os << ")";
  }
  return os.str();
}

IntMatrix cartan_matrix(const DynkinType& dt) {
  const int n = dt.rank;
  IntMatrix c(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
  auto bond = [&](int i, int j) {  // single edge, 1-based
    c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = -1;
    c[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = -1;
  };
  auto arrow = [&](int i, int j, int mult) {  // double/triple edge pointing at the short root j
    c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = -mult;
    c[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = -1;
  };
  switch (dt.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
      arrow(n - 1, n, 2);
      break;
    case Family::C:
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
      arrow(n, n - 1, 2);
      break;
    case Family::D:
      for (int i = 1; i <= n - 2; ++i) bond(i, i + 1);
      bond(n - 2, n);
      break;
    case Family::E:
      bond(1, 3);
      bond(2, 4);
      bond(3, 4);
      for (int i = 4; i < n; ++i) bond(i, i + 1);
      break;
    case Family::F:
      bond(1, 2);
      arrow(2, 3, 2);
      bond(3, 4);
      break;
    case Family::G:
      arrow(2, 1, 3);
      break;
  }
  return c;
}

std::vector<int> invariant_degrees(const DynkinType& dt) {
  std::vector<int> e;
  const int m = dt.rank;
  switch (dt.family) {
    case Family::A:
      for (int i = 2; i <= m + 1; ++i) e.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 2; i <= 2 * m; i += 2) e.push_back(i);
      break;
    case Family::D:
      for (int i = 2; i <= 2 * m - 2; i += 2) e.push_back(i);
      e.push_back(m);
      break;
    case Family::E:
      if (m == 6) e = {2, 5, 6, 8, 9, 12};
      else if (m == 7) e = {2, 6, 8, 10, 12, 14, 18};
      else e = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Family::F:
      e = {2, 6, 8, 12};
      break;
    case Family::G:
      e = {2, 6};
      break;
  }
  std::sort(e.begin(), e.end());
  return e;
}

OuterDegreeData outer_degree_data(const DynkinType& dt, const TwistLabel& tw) {
  require_twist_legal(dt, tw);
  if (tw.order == 1)
    fail(errc::illegal_twist, "outer degree data requested for an inner type");
  OuterDegreeData out;
  const int m = dt.rank;
  if (tw.order == 3) {  // trialitarian D4
    out.plus = {2, 6};
    out.minus = {4, 4};
    return out;
  }
  switch (dt.family) {
    case Family::A:
      for (int i = 2; i <= m + 1; i += 2) out.plus.push_back(i);
      for (int i = 3; i <= m + 1; i += 2) out.minus.push_back(i);
      break;
    case Family::D:
      for (int i = 2; i <= 2 * m - 2; i += 2) out.plus.push_back(i);
      out.minus = {m};
      break;
    case Family::E:
      out.plus = {2, 6, 8, 12};
      out.minus = {5, 9};
      break;
    default:
      fail(errc::illegal_twist, "no order-2 automorphism for type " + dt.str());
  }
  return out;
}

std::set<long long> torsion_primes(const DynkinType& dt, const TwistLabel& tw) {
  require_twist_legal(dt, tw);
  if (tw.order == 2) return {2};
  if (tw.order == 3) return {3};
  switch (dt.family) {
    case Family::A: {
      std::set<long long> out;
      long long n = dt.rank + 1;
      for (long long p = 2; p <= n; ++p)
        if (is_prime(p) && n % p == 0) out.insert(p);
      return out;
    }
    case Family::B:
    case Family::C:
    case Family::D:
    case Family::G:
      return {2};
    case Family::F:
      return {2, 3};
    case Family::E:
      return dt.rank == 8 ? std::set<long long>{2, 3, 5} : std::set<long long>{2, 3};
  }
  return {};
}

NodePerm diagram_automorphism(const DynkinType& dt, const TwistLabel& tw) {
  require_twist_legal(dt, tw);
  const int n = dt.rank;
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  if (tw.order == 2) {
    if (dt.family == Family::A) {
      for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = n - 1 - i;
    } else if (dt.family == Family::D) {
      std::swap(img[static_cast<std::size_t>(n - 2)], img[static_cast<std::size_t>(n - 1)]);
    } else {  // E6: 1<->6, 3<->5
      std::swap(img[0], img[5]);
      std::swap(img[2], img[4]);
    }
  } else if (tw.order == 3) {  // D4 rotation 1 -> 3 -> 4 -> 1
    img[0] = 2;
    img[2] = 3;
    img[3] = 0;
  }
  return NodePerm(std::move(img));
}

unsigned long long weyl_order(const DynkinType& dt) {
  unsigned long long n = 1;
  for (int e : invariant_degrees(dt)) n *= static_cast<unsigned long long>(e);
  return n;
}

}  // namespace motivekit
