#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "motivekit/jinv.hpp"
#include "motivekit/json_io.hpp"
#include "motivekit/motive.hpp"
#include "motivekit/poincare.hpp"
#include "motivekit/spec_parse.hpp"
#include "motivekit/verify.hpp"
#include "motivekit/weyl.hpp"

namespace {

using nlohmann::json;
using namespace motivekit;

struct Options {
  std::string group;
  std::string type;
  std::string psi;
  std::string j;
  std::string isogeny;
  long long p = 0;  // 0 = infer
  std::int64_t cap = 0;
  bool as_json = false;
};

std::int64_t resolve_cap(const Options& opt) {
  if (opt.cap > 0) return opt.cap;
  if (const char* env = std::getenv("MOTIVEKIT_ORACLE_CAP")) {
    const long long v = std::atoll(env);
    if (v > 0) return v;
  }
  return kDefaultOracleCap;
}

GroupSpec resolve_group(const Options& opt) {
  const long long p = opt.p > 0 ? opt.p : infer_prime(opt.group);
  return parse_group_spec(opt.group, p);
}

JTuple parse_tuple(const std::string& s) {
  JTuple j;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) {
      try {
        j.values.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        fail(errc::invalid_argument, "bad tuple entry '" + tok + "'");
      }
    }
  return j;
}

void emit(const Options& opt, const json& obj, const std::string& text) {
  if (opt.as_json) std::cout << obj.dump() << "\n";
  else std::cout << text;
}

std::string psi_str(const std::vector<std::set<int>>& psi) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (i) os << ";";
    bool first = true;
    for (int node : psi[i]) {
      os << (first ? "" : ",") << node;
      first = false;
    }
  }
  os << "]";
  return os.str();
}

int cmd_degrees(const Options& opt) {
  SimpleFactor sf = parse_simple_factor(opt.type);
  json obj{{"type", sf.str()}};
  std::ostringstream text;
  if (sf.tw.order == 1) {
    auto degrees = invariant_degrees(sf.dt);
    obj["degrees"] = degrees;
    text << "degrees=[";
    for (std::size_t i = 0; i < degrees.size(); ++i) text << (i ? "," : "") << degrees[i];
    text << "]\n";
  } else {
    OuterDegreeData data = outer_degree_data(sf.dt, sf.tw);
    obj.update(json_of(data));
    auto list = [](const std::vector<int>& v) {
      std::string s = "[";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
      return s + "]";
    };
    text << "plus=" << list(data.plus) << " minus=" << list(data.minus) << "\n";
  }
  emit(opt, obj, text.str());
  return 0;
}

int cmd_torsion_primes(const Options& opt) {
  auto primes = admissible_primes(opt.type);
  json obj{{"type", opt.type}, {"primes", primes}};
  std::ostringstream text;
  text << "primes=[";
  bool first = true;
  for (long long p : primes) {
    text << (first ? "" : ",") << p;
    first = false;
  }
  text << "]\n";
  emit(opt, obj, text.str());
  return 0;
}

int cmd_poincare(const Options& opt) {
  GroupSpec gs = resolve_group(opt);
  auto psi = parse_psi(opt.psi, gs);
  Polynomial poly = flag_poincare(gs, psi);
  json obj{{"group", gs.str()}, {"p", gs.p}, {"psi", psi}, {"poincare", json_of(poly)}};
  std::ostringstream text;
  text << "group=" << gs.str() << " p=" << gs.p << " psi=" << psi_str(psi) << "\n"
       << "poincare=" << poly << "\n"
       << "rank=" << poly.value_at_one() << " degree=" << poly.degree() << "\n";
  emit(opt, obj, text.str());
  return 0;
}

int cmd_jinv_profile(const Options& opt) {
  GroupSpec gs = resolve_group(opt);
  JProfile prof = j_profile(gs, opt.isogeny);
  json obj{{"group", gs.str()}, {"isogeny", opt.isogeny}, {"profile", json_of(prof)}};
  std::ostringstream text;
  text << "group=" << gs.str() << " p=" << prof.p << " r=" << prof.r() << "\n";
  text << "entries=[";
  for (int i = 0; i < prof.r(); ++i) {
    const auto& e = prof.entries[static_cast<std::size_t>(i)];
    text << (i ? "," : "") << "(d=" << e.d << ",k=" << e.k << ")";
  }
  text << "]\n";
  for (const auto& rule : prof.rules) text << "rule: " << rule_str(rule) << "\n";
  emit(opt, obj, text.str());
  return 0;
}

int cmd_jinv_enumerate(const Options& opt) {
  GroupSpec gs = resolve_group(opt);
  JProfile prof = j_profile(gs, opt.isogeny);
  auto tuples = enumerate_admissible(prof, opt.cap > 0 ? opt.cap : kDefaultEnumerationCap);
  json arr = json::array();
  for (const auto& j : tuples) arr.push_back(json_of(j));
  json obj{{"group", gs.str()}, {"count", tuples.size()}, {"tuples", std::move(arr)}};
  std::ostringstream text;
  for (const auto& j : tuples) {
    text << "j=(";
    for (std::size_t i = 0; i < j.values.size(); ++i) text << (i ? "," : "") << j.values[i];
    text << ")\n";
  }
  text << "count=" << tuples.size() << "\n";
  emit(opt, obj, text.str());
  return 0;
}

int cmd_upper_poly(const Options& opt) {
  GroupSpec gs = resolve_group(opt);
  JProfile prof = j_profile(gs, opt.isogeny);
  JTuple j = parse_tuple(opt.j);
  Polynomial upper = upper_poincare(prof, j);
  json obj{{"group", gs.str()}, {"j", json_of(j)}, {"upper", json_of(upper)}};
  std::ostringstream text;
  text << "upper=" << upper << "\n"
       << "rank=" << upper.value_at_one() << " degree=" << upper.degree() << "\n";
  emit(opt, obj, text.str());
  return 0;
}

int cmd_decompose(const Options& opt) {
  GroupSpec gs = resolve_group(opt);
  auto psi = parse_psi(opt.psi, gs);
  JProfile prof = j_profile(gs, opt.isogeny);
  JTuple j = parse_tuple(opt.j);
  Polynomial upper = upper_poincare(prof, j);
  Polynomial total = flag_poincare(gs, psi);
  TwistMultiset tm = decompose(total, upper);
  json obj{{"group", gs.str()},       {"p", gs.p},
           {"psi", psi},              {"j", json_of(j)},
           {"total", json_of(total)}, {"upper", json_of(upper)},
           {"twists", json_of(tm)},   {"summands", json_of(tm.total_summands())},
           {"max_twist", tm.max_twist()}};
  std::ostringstream text;
  text << "group=" << gs.str() << " p=" << gs.p << " psi=" << psi_str(psi) << "\n";
  text << "total=" << total << "\n";
  text << "upper=" << upper << "\n";
  text << "twists:";
  for (const auto& [i, a] : tm.multiplicities) text << " " << i << ":" << a;
  text << "\nsummands=" << tm.total_summands() << " max_twist=" << tm.max_twist() << "\n";
  emit(opt, obj, text.str());
  return 0;
}

int cmd_oracle_check(const Options& opt) {
  GroupSpec gs = resolve_group(opt);
  auto psi = parse_psi(opt.psi, gs);
  OracleComparison cmp = oracle_check(gs, psi, resolve_cap(opt));
  json obj{{"group", gs.str()},
           {"psi", psi},
           {"closed", json_of(cmp.closed_form)},
           {"oracle", json_of(cmp.oracle)},
           {"match", cmp.match}};
  std::ostringstream text;
  text << "closed=" << cmp.closed_form << "\n"
       << "oracle=" << cmp.oracle << "\n"
       << "match=" << (cmp.match ? "yes" : "no") << "\n";
  emit(opt, obj, text.str());
  return cmp.match ? 0 : 1;
}

int cmd_verify_tables(const Options& opt) {
  auto checks = verify_tables();
  bool all_ok = true;
  json arr = json::array();
  std::ostringstream text;
  for (const auto& c : checks) {
    all_ok = all_ok && c.ok;
    arr.push_back(json{{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    text << (c.ok ? "[ok]   " : "[FAIL] ") << c.name;
    if (!c.ok) text << "  " << c.detail;
    text << "\n";
  }
  emit(opt, json{{"checks", std::move(arr)}, {"ok", all_ok}}, text.str());
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Poincare polynomials, parameter profiles, and motivic "
               "decompositions for twisted flag varieties"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool group, bool psi, bool jflag, bool isogeny, bool cap) {
    cmd->add_flag("--json", opt.as_json, "canonical JSON output");
    if (group) {
      cmd->add_option("--group", opt.group, "group spec, e.g. 2E6 or R2(2A3)x2D5")->required();
      cmd->add_option("--p", opt.p, "torsion prime (default: smallest admissible)");
    }
    if (psi) cmd->add_option("--psi", opt.psi, "retained nodes, e.g. 2,3,4 (';' between factors)");
    if (jflag) cmd->add_option("--j", opt.j, "value tuple, e.g. 1,0,1")->required();
    if (isogeny) cmd->add_option("--isogeny", opt.isogeny, "isogeny hint: ad, sc, so, hspin, mu<q>");
    if (cap) cmd->add_option("--cap", opt.cap, "enumeration cap");
  };

  auto* degrees = app.add_subcommand("degrees", "fundamental invariant degree data of a type");
  degrees->add_option("--type", opt.type, "simple factor, e.g. 2E6")->required();
  degrees->add_flag("--json", opt.as_json, "canonical JSON output");

  auto* torsion = app.add_subcommand("torsion-primes", "admissible torsion primes");
  torsion->add_option("--type", opt.type, "group spec")->required();
  torsion->add_flag("--json", opt.as_json, "canonical JSON output");

  add_common(app.add_subcommand("poincare", "flag variety Poincare polynomial"), true, true,
             false, false, false);
  add_common(app.add_subcommand("jinv-profile", "parameter profile (d_i, k_i, rules)"), true,
             false, false, true, false);
  add_common(app.add_subcommand("jinv-enumerate", "all admissible value tuples"), true, false,
             false, true, true);
  add_common(app.add_subcommand("upper-poly", "upper motive Poincare polynomial"), true, false,
             true, true, false);
  add_common(app.add_subcommand("decompose", "Tate twist multiset of the decomposition"), true,
             true, true, true, false);
  add_common(app.add_subcommand("oracle-check", "closed formula vs. element count"), true, true,
             false, false, true);

  auto* verify = app.add_subcommand("verify-tables", "stored numerology self-checks");
  verify->add_flag("--json", opt.as_json, "canonical JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("degrees")) return cmd_degrees(opt);
    if (app.got_subcommand("torsion-primes")) return cmd_torsion_primes(opt);
    if (app.got_subcommand("poincare")) return cmd_poincare(opt);
    if (app.got_subcommand("jinv-profile")) return cmd_jinv_profile(opt);
    if (app.got_subcommand("jinv-enumerate")) return cmd_jinv_enumerate(opt);
    if (app.got_subcommand("upper-poly")) return cmd_upper_poly(opt);
    if (app.got_subcommand("decompose")) return cmd_decompose(opt);
    if (app.got_subcommand("oracle-check")) return cmd_oracle_check(opt);
    if (app.got_subcommand("verify-tables")) return cmd_verify_tables(opt);
  } catch (const ParseError& e) {
    if (opt.as_json) {
      std::cout << json{{"error",
                         {{"code", errc_name(e.code())},
                          {"offset", e.offset()},
                          {"message", e.what()}}}}
                       .dump()
                << "\n";
    } else {
      std::cerr << "error[" << errc_name(e.code()) << "]: " << e.what() << "\n";
    }
    return 1;
  } catch (const Error& e) {
    if (opt.as_json) {
      std::cout << json{{"error", {{"code", errc_name(e.code())}, {"message", e.what()}}}}.dump()
                << "\n";
    } else {
      std::cerr << "error[" << errc_name(e.code()) << "]: " << e.what() << "\n";
    }
    return 1;
  }
  return 2;
}
