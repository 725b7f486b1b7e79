#include "motivekit/spec_parse.hpp"

#include <cctype>

#include "motivekit/numeric.hpp"
#include "motivekit/rootsys.hpp"

namespace motivekit {

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  [[noreturn]] void err(const std::string& msg) const {
    throw ParseError(pos, msg + " at offset " + std::to_string(pos));
  }
  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }

  long long integer(const char* what) {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) err(std::string("expected ") + what);
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 1000000) err(std::string(what) + " out of range");
      ++pos;
    }
    return v;
  }

  GroupFactor factor() {
    int twist = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      if (peek() != '2' && peek() != '3') err("twist must be 2 or 3");
      twist = peek() - '0';
      ++pos;
    }
    const char fam = peek();
    if (fam < 'A' || fam > 'G') err("expected family letter A-G");
    const std::size_t fam_pos = pos;
    ++pos;
    const long long rank = integer("rank");
    if (rank > 64) err("rank above the supported bound of 64");
    try {
      SimpleFactor sf(DynkinType(static_cast<Family>(fam), static_cast<int>(rank)),
                      TwistLabel{twist});
      return GroupFactor{1, sf};
    } catch (const Error& e) {
      if (e.code() == errc::illegal_twist) throw;
      throw ParseError(fam_pos, std::string(e.what()) + " at offset " + std::to_string(fam_pos));
    }
  }

  GroupFactor item() {
    if (peek() == 'R') {
      ++pos;
      const long long m = integer("scalar-restriction degree");
      if (m < 1) err("scalar-restriction degree must be >= 1");
      if (m > 4096) err("scalar-restriction degree above the supported bound of 4096");
      if (peek() != '(') err("expected '('");
      ++pos;
      GroupFactor inner = item();
      if (peek() != ')') err("expected ')'");
      ++pos;
      inner.weil_degree *= static_cast<int>(m);
      return inner;
    }
    return factor();
  }

  std::vector<GroupFactor> product() {
    std::vector<GroupFactor> items{item()};
    while (peek() == 'x') {
      ++pos;
      items.push_back(item());
    }
    if (!done()) err("unexpected character");
    return items;
  }
};

bool is_power_of(long long m, long long p) {
  while (m % p == 0) m /= p;
  return m == 1;
}

std::set<long long> admissible_primes_impl(const std::vector<GroupFactor>& items) {
  std::set<long long> forced;
  for (const auto& f : items) {
    if (f.sf.tw.order > 1) forced.insert(f.sf.tw.order == 2 ? 2 : 3);
    if (f.weil_degree > 1) {
      long long q = 2;
      while (f.weil_degree % q != 0) ++q;
      if (!is_power_of(f.weil_degree, q))
        fail(errc::mixed_prime_unsupported,
             "scalar-restriction degree " + std::to_string(f.weil_degree) +
                 " is not a prime power; the minimal inner-izing extension mixes primes");
      forced.insert(q);
    }
  }
  if (forced.size() >= 2) {
    std::string list;
    for (long long q : forced) list += (list.empty() ? "" : ", ") + std::to_string(q);
    fail(errc::mixed_prime_unsupported, "factors force distinct primes {" + list + "}");
  }

  std::set<long long> candidates;
  if (!forced.empty()) {
    candidates = forced;
  } else {
    bool first = true;
    for (const auto& f : items) {
      auto tp = torsion_primes(f.sf.dt, f.sf.tw);
      if (first) {
        candidates = tp;
        first = false;
      } else {
        std::set<long long> inter;
        for (long long q : candidates)
          if (tp.contains(q)) inter.insert(q);
        candidates = std::move(inter);
      }
    }
  }

  std::set<long long> out;
  for (long long q : candidates) {
    bool ok = true;
    for (const auto& f : items)
      if (f.weil_degree == 1 && f.sf.tw.order == 1 &&
          !torsion_primes(f.sf.dt, f.sf.tw).contains(q))
        ok = false;
    if (ok) out.insert(q);
  }
  return out;
}

std::vector<GroupFactor> parse_items(const std::string& s) {
  Parser parser{s};
  return parser.product();
}

}  // namespace

GroupSpec parse_group_spec(const std::string& s, long long p) {
  auto items = parse_items(s);
  if (!is_prime(p)) fail(errc::invalid_argument, std::to_string(p) + " is not prime");
  auto primes = admissible_primes_impl(items);
  if (!primes.contains(p)) {
    std::string list;
    for (long long q : primes) list += (list.empty() ? "" : ", ") + std::to_string(q);
    fail(errc::not_a_torsion_prime, "p = " + std::to_string(p) + " is not admissible for " + s +
                                        " (admissible: {" + list + "})");
  }
  return make_group_spec(std::move(items), p);
}

SimpleFactor parse_simple_factor(const std::string& s) {
  Parser parser{s};
  GroupFactor f = parser.factor();
  if (!parser.done()) parser.err("unexpected character");
  return f.sf;
}

std::set<long long> admissible_primes(const std::string& s) {
  return admissible_primes_impl(parse_items(s));
}

long long infer_prime(const std::string& s) {
  auto primes = admissible_primes(s);
  if (primes.empty())
    fail(errc::not_a_torsion_prime, "no prime is admissible for every factor of " + s);
  return *primes.begin();
}

std::vector<std::set<int>> parse_psi(const std::string& s, const GroupSpec& gs) {
  std::vector<std::set<int>> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(';', start);
    if (end == std::string::npos) end = s.size();
    std::set<int> group;
    std::size_t q = start;
    while (q < end) {
      std::size_t comma = s.find(',', q);
      if (comma == std::string::npos || comma > end) comma = end;
      const std::string tok = s.substr(q, comma - q);
      if (!tok.empty()) {
        try {
          group.insert(std::stoi(tok));
        } catch (const std::exception&) {
          fail(errc::invalid_argument, "bad node index '" + tok + "'");
        }
      }
      q = comma + 1;
    }
    out.push_back(std::move(group));
    if (end == s.size()) break;
    start = end + 1;
  }
  if (out.size() > gs.factors.size())
    fail(errc::invalid_argument, "more node groups than factors");
  out.resize(gs.factors.size());
  return out;
}

}  // namespace motivekit
