#include "motivekit/json_io.hpp"

#include <limits>

namespace motivekit {

using nlohmann::json;

json json_of(const Int& n) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (n >= lo && n <= hi) return n.convert_to<std::int64_t>();
  return n.str();
}

json json_of(const Polynomial& p) {
  json coeffs = json::array();
  for (const Int& c : p.coeffs()) coeffs.push_back(json_of(c));
  return json{{"coeffs", std::move(coeffs)}};
}

json json_of(const OuterDegreeData& data) {
  return json{{"plus", data.plus}, {"minus", data.minus}};
}

json json_of(const JProfile& prof) {
  json entries = json::array();
  for (const auto& e : prof.entries) {
    json entry{{"d", e.d}, {"k", e.k}};
    if (e.d_base != e.d) entry["d_base"] = e.d_base;
    entries.push_back(std::move(entry));
  }
  json rules = json::array();
  for (const auto& rule : prof.rules) {
    if (const auto* st = std::get_if<SteenrodRule>(&rule)) {
      rules.push_back(json{{"kind", "steenrod"}, {"scaled", st->scaled}, {"indices", st->indices}});
    } else if (const auto* ch = std::get_if<ChainRule>(&rule)) {
      rules.push_back(json{{"kind", "chain"}, {"indices", ch->indices}});
    } else if (const auto* db = std::get_if<DiffBoundRule>(&rule)) {
      rules.push_back(json{{"kind", "diff_bound"}, {"i", db->i}, {"j", db->j}, {"bound", db->bound}});
    } else {
      const auto& un = std::get<UpperNeighborRule>(rule);
      rules.push_back(json{{"kind", "upper_neighbor"}, {"i", un.i}, {"j", un.j}});
    }
  }
  return json{{"p", prof.p}, {"entries", std::move(entries)}, {"rules", std::move(rules)}};
}

json json_of(const JTuple& j) { return json(j.values); }

json json_of(const TwistMultiset& tm) {
  json pairs = json::array();
  for (const auto& [twist, count] : tm.multiplicities)
    pairs.push_back(json::array({twist, json_of(count)}));
  return pairs;
}

}  // namespace motivekit
