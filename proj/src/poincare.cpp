#include "motivekit/poincare.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include "motivekit/numeric.hpp"

namespace motivekit {

SimpleFactor::SimpleFactor(DynkinType d, TwistLabel t) : dt(d), tw(t) {
  require_twist_legal(dt, tw);
}

std::string SimpleFactor::str() const {
  std::string s;
  if (tw.order > 1) s += std::to_string(tw.order);
  return s + dt.str();
}

std::string GroupSpec::str() const {
  if (factors.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& f : factors) {
    if (!first) os << "x";
    first = false;
    if (f.weil_degree > 1) os << "R" << f.weil_degree << "(" << f.sf.str() << ")";
    else os << f.sf.str();
  }
  return os.str();
}

GroupSpec make_group_spec(std::vector<GroupFactor> factors, long long p) {
  if (!is_prime(p)) fail(errc::invalid_argument, "p = " + std::to_string(p) + " is not prime");
  long long forced = 0;
  for (const auto& f : factors) {
    if (f.weil_degree < 1) fail(errc::invalid_argument, "weil degree must be >= 1");
    long long needs = f.sf.tw.order == 2 ? 2 : f.sf.tw.order == 3 ? 3 : 0;
    if (needs == 0) continue;
    if (forced != 0 && forced != needs)
      fail(errc::mixed_prime_unsupported,
           "factors force distinct primes " + std::to_string(forced) + " and " +
               std::to_string(needs));
    forced = needs;
  }
  if (forced != 0 && p != forced)
    fail(errc::not_a_torsion_prime, "twisted factors force p = " + std::to_string(forced) +
                                        ", got p = " + std::to_string(p));
  return GroupSpec{std::move(factors), p};
}

Polynomial borel_poincare(const SimpleFactor& sf) {
  RationalProduct rp;
  if (sf.tw.order == 1) {
    for (int e : invariant_degrees(sf.dt)) {
      rp.num_minus.push_back(e);
      rp.den_minus.push_back(1);
    }
  } else if (sf.tw.order == 2) {
    OuterDegreeData data = outer_degree_data(sf.dt, sf.tw);
    for (int e : data.plus) {
      rp.num_minus.push_back(e);
      rp.den_minus.push_back(1);
    }
    for (int e : data.minus) {
      rp.num_plus.push_back(e);
      rp.den_plus.push_back(1);
    }
  } else {
    // Trialitarian D4: the conjugate exponent pair (e, e) contributes
    // (t^{2e} + t^e + 1)/(t^2 + t + 1), written as numerator (t^{3e}-1)(t-1)
    // over denominator (t^e-1)(t^3-1) so that only one exact division runs.
    OuterDegreeData data = outer_degree_data(sf.dt, sf.tw);
    for (int e : data.plus) {
      rp.num_minus.push_back(e);
      rp.den_minus.push_back(1);
    }
    int e = data.minus.front();
    rp.num_minus.push_back(3 * e);
    rp.num_minus.push_back(1);
    rp.den_minus.push_back(e);
    rp.den_minus.push_back(3);
  }
  return expand_rational_product(rp);
}

namespace {

// A connected sub-diagram identified as a standard type together with the
// map from canonical Bourbaki position (1..r) to the ambient node.
struct ClassifiedComponent {
  DynkinType dt;
  std::vector<int> canon_to_node;
};

int cartan_at(const IntMatrix& c, int i, int j) {
  return c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

bool matches_canonical(const IntMatrix& ambient, const std::vector<int>& canon_to_node,
                       const DynkinType& dt) {
  IntMatrix canon = cartan_matrix(dt);
  const int r = dt.rank;
  for (int a = 1; a <= r; ++a)
    for (int b = 1; b <= r; ++b)
      if (cartan_at(ambient, canon_to_node[static_cast<std::size_t>(a - 1)],
                    canon_to_node[static_cast<std::size_t>(b - 1)]) !=
          canon.at(static_cast<std::size_t>(a - 1)).at(static_cast<std::size_t>(b - 1)))
        return false;
  return true;
}

ClassifiedComponent classify_component(const IntMatrix& cartan, const std::vector<int>& nodes) {
  const int r = static_cast<int>(nodes.size());
  auto accept = [&](Family fam, const std::vector<int>& canon) -> ClassifiedComponent {
    DynkinType dt(fam, r);
    if (!matches_canonical(cartan, canon, dt))
      fail(errc::invalid_argument, "sub-diagram does not match type " + dt.str());
    return {dt, canon};
  };

  if (r == 1) return accept(Family::A, nodes);

  // Neighbour lists and bond multiplicities within the component.
  std::map<int, std::vector<int>> adj;
  int max_mult = 1;
  for (int a : nodes)
    for (int b : nodes) {
      if (a == b || cartan_at(cartan, a, b) == 0) continue;
      adj[a].push_back(b);
      max_mult = std::max(max_mult, cartan_at(cartan, a, b) * cartan_at(cartan, b, a));
    }

  if (max_mult == 3) {
    // G2: canonical first node x has row entry C[x][y] = -1.
    int a = nodes[0], b = nodes[1];
    if (cartan_at(cartan, a, b) == -1) return accept(Family::G, {a, b});
    return accept(Family::G, {b, a});
  }

  int branch_node = 0;
  for (const auto& [n, nb] : adj)
    if (nb.size() == 3) branch_node = n;

  if (branch_node == 0) {
    // A path.  Walk it from one end.
    std::vector<int> path;
    int end = 0;
    for (const auto& [n, nb] : adj)
      if (nb.size() == 1 && (end == 0 || n < end)) end = n;
    int prev = 0, cur = end;
    while (true) {
      path.push_back(cur);
      int next = 0;
      for (int nb : adj[cur])
        if (nb != prev) next = nb;
      if (next == 0) break;
      prev = cur;
      cur = next;
    }
    std::vector<int> rev(path.rbegin(), path.rend());
    std::vector<Family> candidates =
        max_mult == 1 ? std::vector<Family>{Family::A}
                      : (r == 4 ? std::vector<Family>{Family::B, Family::C, Family::F}
                                : std::vector<Family>{Family::B, Family::C});
    for (Family fam : candidates)
      for (const auto& ord : {path, rev})
        if (matches_canonical(cartan, ord, DynkinType(fam, r))) return {DynkinType(fam, r), ord};
    fail(errc::invalid_argument, "unclassifiable path sub-diagram");
  }

  // Trivalent: D or E.
  std::vector<std::vector<int>> branches;
  for (int nb : adj[branch_node]) {
    std::vector<int> br{nb};
    int prev = branch_node, cur = nb;
    while (true) {
      int next = 0;
      for (int x : adj[cur])
        if (x != prev) next = x;
      if (next == 0) break;
      br.push_back(next);
      prev = cur;
      cur = next;
    }
    branches.push_back(std::move(br));
  }
  std::sort(branches.begin(), branches.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  const std::size_t l1 = branches[0].size(), l2 = branches[1].size(), l3 = branches[2].size();

  if (l1 == 1 && l2 == 1) {
    // D_r: the long branch from its far end, then the branch node, then the
    // two short leaves.  For D4 all three branches are interchangeable.
    std::vector<std::array<int, 3>> assignments;
    if (l3 == 1) {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k)
            if (i != j && j != k && i != k) assignments.push_back({i, j, k});
    } else {
      assignments = {{2, 0, 1}, {2, 1, 0}};
    }
    for (const auto& [lng, s1, s2] : assignments) {
      std::vector<int> canon(branches[static_cast<std::size_t>(lng)].rbegin(),
                             branches[static_cast<std::size_t>(lng)].rend());
      canon.push_back(branch_node);
      canon.push_back(branches[static_cast<std::size_t>(s1)].front());
      canon.push_back(branches[static_cast<std::size_t>(s2)].front());
      if (matches_canonical(cartan, canon, DynkinType(Family::D, r)))
        return {DynkinType(Family::D, r), canon};
    }
    fail(errc::invalid_argument, "unclassifiable D-shaped sub-diagram");
  }

  if (l1 == 1 && l2 == 2 && r >= 6 && r <= 8) {
    // E_r canonical layout: node 2 is the length-1 branch, nodes (1,3) the
    // length-2 branch outward-in, node 4 the branch node, 5.. the long one.
    std::vector<std::pair<int, int>> two_long =
        l3 == 2 ? std::vector<std::pair<int, int>>{{1, 2}, {2, 1}}
                : std::vector<std::pair<int, int>>{{1, 2}};
    for (auto [two, lng] : two_long) {
      const auto& b2 = branches[static_cast<std::size_t>(two)];
      const auto& bl = branches[static_cast<std::size_t>(lng)];
      std::vector<int> canon{b2[1], branches[0][0], b2[0], branch_node};
      canon.insert(canon.end(), bl.begin(), bl.end());
      if (matches_canonical(cartan, canon, DynkinType(Family::E, r)))
        return {DynkinType(Family::E, r), canon};
    }
  }
  fail(errc::invalid_argument, "unclassifiable sub-diagram");
}

int perm_image_pow(const NodePerm& sigma, int node, int times) {
  for (int i = 0; i < times; ++i) node = sigma.image(node);
  return node;
}

}  // namespace

GroupSpec levi_spec(const SimpleFactor& sf, const std::set<int>& psi, long long p) {
  const NodePerm sigma = diagram_automorphism(sf.dt, sf.tw);
  for (int i : psi) {
    if (i < 1 || i > sf.dt.rank)
      fail(errc::invalid_argument, "node index " + std::to_string(i) + " out of range");
    if (!psi.contains(sigma.image(i)))
      fail(errc::psi_not_stable, "psi is not stable under the automorphism of " + sf.str());
  }
  const IntMatrix cartan = cartan_matrix(sf.dt);

  // Connected components of the sub-diagram on psi, by ascending least node.
  std::map<int, int> comp_of;
  std::vector<std::vector<int>> comps;
  for (int start : psi) {
    if (comp_of.contains(start)) continue;
    std::vector<int> comp{start};
    comp_of[start] = static_cast<int>(comps.size());
    for (std::size_t q = 0; q < comp.size(); ++q)
      for (int j : psi)
        if (!comp_of.contains(j) && cartan_at(cartan, comp[q], j) != 0) {
          comp_of[j] = static_cast<int>(comps.size());
          comp.push_back(j);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }

  // Orbits of components under sigma.
  std::vector<GroupFactor> factors;
  std::vector<char> used(comps.size(), 0);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (used[c]) continue;
    int orbit = 0;
    std::size_t cur = c;
    do {
      used[cur] = 1;
      ++orbit;
      cur = static_cast<std::size_t>(comp_of.at(sigma.image(comps[cur].front())));
    } while (cur != c);

    ClassifiedComponent cc = classify_component(cartan, comps[c]);
    // Automorphism induced on the representative component by sigma^orbit,
    // transported to canonical numbering.
    std::map<int, int> node_to_canon;
    for (int a = 1; a <= cc.dt.rank; ++a)
      node_to_canon[cc.canon_to_node[static_cast<std::size_t>(a - 1)]] = a;
    std::vector<int> img(static_cast<std::size_t>(cc.dt.rank));
    for (int a = 1; a <= cc.dt.rank; ++a) {
      int target = perm_image_pow(sigma, cc.canon_to_node[static_cast<std::size_t>(a - 1)], orbit);
      img[static_cast<std::size_t>(a - 1)] = node_to_canon.at(target) - 1;
    }
    NodePerm induced(std::move(img));
    factors.push_back(GroupFactor{orbit, SimpleFactor(cc.dt, TwistLabel{induced.order()})});
  }
  return make_group_spec(std::move(factors), p);
}

Polynomial group_borel_poincare(const GroupSpec& gs) {
  Polynomial acc = Polynomial::one();
  for (const auto& f : gs.factors) acc *= substitute_power(borel_poincare(f.sf), f.weil_degree);
  return acc;
}

Polynomial flag_poincare(const GroupSpec& gs, const std::vector<std::set<int>>& psi_per_factor) {
  if (psi_per_factor.size() != gs.factors.size())
    fail(errc::invalid_argument, "need one node set per factor");
  Polynomial acc = Polynomial::one();
  for (std::size_t i = 0; i < gs.factors.size(); ++i) {
    const auto& f = gs.factors[i];
    Polynomial borel = borel_poincare(f.sf);
    Polynomial quotient;
    if (psi_per_factor[i].empty()) {
      quotient = std::move(borel);
    } else {
      GroupSpec levi = levi_spec(f.sf, psi_per_factor[i], gs.p);
      quotient = exact_div(borel, group_borel_poincare(levi));
    }
    acc *= substitute_power(quotient, f.weil_degree);
  }
  return acc;
}

}  // namespace motivekit
