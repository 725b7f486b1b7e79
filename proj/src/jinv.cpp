#include "motivekit/jinv.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "motivekit/numeric.hpp"

namespace motivekit {

namespace {

// Largest k >= 0 with 2^k * den <= num, i.e. floor(log2(num/den)).
int floor_log2_ratio(long long num, long long den) {
  if (num < den) fail(errc::invalid_argument, "log2 of a ratio below 1");
  int k = 0;
  while ((den << (k + 1)) <= num) ++k;
  return k;
}

struct TableRow {
  std::vector<JEntry> entries;          // table order, d == d_base
  std::vector<RestrictionRule> rules;   // indices in table order
};

void push_entry(TableRow& row, long long d, int k) {
  row.entries.push_back(JEntry{d, k, d});
}

std::vector<int> index_range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

[[noreturn]] void no_row(const SimpleFactor& sf, long long p, const std::string& hint) {
  fail(errc::unknown_row, "no parameter row for " + sf.str() + " at p = " + std::to_string(p) +
                              (hint.empty() ? "" : " with isogeny '" + hint + "'"));
}

bool hint_is(const std::string& hint, std::initializer_list<const char*> names) {
  for (const char* n : names)
    if (hint == n) return true;
  return false;
}

TableRow inner_row(const SimpleFactor& sf, long long p, const std::string& hint) {
  const DynkinType& dt = sf.dt;
  const int m = dt.rank;
  TableRow row;
  switch (dt.family) {
    case Family::A: {
      const long long n = m + 1;
      long long iso = n;  // adjoint: SL_n / mu_n
      if (hint.rfind("mu", 0) == 0) {
        iso = std::atoll(hint.c_str() + 2);
        if (iso < 1 || n % iso != 0) no_row(sf, p, hint);
      } else if (!hint_is(hint, {"", "ad"})) {
        no_row(sf, p, hint);
      }
      if (iso % p != 0) no_row(sf, p, hint);
      push_entry(row, 1, p_valuation(n, p));
      return row;
    }
    case Family::B: {
      const long long n = 2 * m + 1;
      if (hint_is(hint, {"sc", "spin"})) {
        const int r = static_cast<int>((n - 3) / 4);
        for (int i = 1; i <= r; ++i)
          push_entry(row, 2 * i + 1, floor_log2_ratio(n - 1, 2 * i + 1));
        row.rules.push_back(SteenrodRule{true, index_range(1, r)});
        return row;
      }
      if (!hint_is(hint, {"", "ad", "so"})) no_row(sf, p, hint);
      const int r = static_cast<int>((n + 1) / 4);
      for (int i = 1; i <= r; ++i)
        push_entry(row, 2 * i - 1, floor_log2_ratio(n - 1, 2 * i - 1));
      row.rules.push_back(SteenrodRule{true, index_range(1, r)});
      return row;
    }
    case Family::C: {
      if (!hint_is(hint, {"", "ad"})) no_row(sf, p, hint);
      push_entry(row, 1, p_valuation(2 * m, 2));
      return row;
    }
    case Family::D: {
      const long long n = 2 * m;
      if (hint_is(hint, {"", "ad"})) {  // PGO+
        const int r = (m + 2) / 2;
        push_entry(row, 1, p_valuation(m, 2));
        for (int i = 2; i <= r; ++i)
          push_entry(row, 2 * i - 3, floor_log2_ratio(n - 1, 2 * i - 3));
        row.rules.push_back(SteenrodRule{true, index_range(2, r)});
        return row;
      }
      if (hint_is(hint, {"so"})) {
        const int r = static_cast<int>((n + 1) / 4);
        for (int i = 1; i <= r; ++i)
          push_entry(row, 2 * i - 1, floor_log2_ratio(n - 1, 2 * i - 1));
        row.rules.push_back(SteenrodRule{true, index_range(1, r)});
        return row;
      }
      if (hint_is(hint, {"sc", "spin"})) {
        const int r = static_cast<int>((n - 3) / 4);
        for (int i = 1; i <= r; ++i)
          push_entry(row, 2 * i + 1, floor_log2_ratio(n - 1, 2 * i + 1));
        row.rules.push_back(SteenrodRule{true, index_range(1, r)});
        return row;
      }
      if (hint_is(hint, {"hspin"})) {  // half-spin, m even
        if (m % 2 != 0) no_row(sf, p, hint);
        const int r = m / 2;
        push_entry(row, 1, p_valuation(m, 2));
        for (int i = 2; i <= r; ++i)
          push_entry(row, 2 * i - 1, floor_log2_ratio(n - 1, 2 * i - 1));
        row.rules.push_back(SteenrodRule{true, index_range(1, r)});
        return row;
      }
      no_row(sf, p, hint);
    }
    case Family::G:
      push_entry(row, 3, 1);
      return row;
    case Family::F:
      push_entry(row, p == 2 ? 3 : 4, 1);
      return row;
    case Family::E: {
      const bool adjoint = hint_is(hint, {"", "ad"});
      const bool simply_connected = hint_is(hint, {"sc"});
      if (!adjoint && !simply_connected) no_row(sf, p, hint);
      if (m == 6) {
        if (p == 2) {
          push_entry(row, 3, 1);
        } else if (adjoint) {
          push_entry(row, 1, 2);
          push_entry(row, 4, 1);
          row.rules.push_back(DiffBoundRule{1, 2, 1});
        } else {
          push_entry(row, 4, 1);
        }
        return row;
      }
      if (m == 7) {
        if (p == 3) {
          push_entry(row, 4, 1);
        } else if (simply_connected) {
          for (long long d : {3, 5, 9}) push_entry(row, d, 1);
          row.rules.push_back(ChainRule{{1, 2, 3}});
        } else {
          for (long long d : {1, 3, 5, 9}) push_entry(row, d, 1);
          row.rules.push_back(ChainRule{{2, 3, 4}});
        }
        return row;
      }
      // E8
      if (p == 2) {
        push_entry(row, 3, 3);
        push_entry(row, 5, 2);
        push_entry(row, 9, 1);
        push_entry(row, 15, 1);
        row.rules.push_back(ChainRule{{1, 2, 3}});
        row.rules.push_back(UpperNeighborRule{1, 2});
        row.rules.push_back(UpperNeighborRule{2, 3});
      } else if (p == 3) {
        push_entry(row, 4, 1);
        push_entry(row, 10, 1);
        row.rules.push_back(ChainRule{{1, 2}});
      } else {
        push_entry(row, 6, 1);
      }
      return row;
    }
  }
  no_row(sf, p, hint);
}

TableRow outer_row(const SimpleFactor& sf, long long p, const std::string& hint) {
  const DynkinType& dt = sf.dt;
  const int m = dt.rank;
  const bool exceptional = sf.tw.order == 3 || (dt.family == Family::E);
  if (!hint_is(hint, {"", "ad"}) && !(exceptional && hint_is(hint, {"sc"})))
    no_row(sf, p, hint);
  TableRow row;
  if (sf.tw.order == 3) {  // trialitarian D4
    push_entry(row, 4, 1);
    return row;
  }
  switch (dt.family) {
    case Family::A: {
      if (m % 2 == 0) {  // 2A_{2n}
        const int n = m / 2;
        for (int i = 1; i <= n; ++i) push_entry(row, 2 * i + 1, 1);
        row.rules.push_back(SteenrodRule{false, index_range(1, n)});
      } else {  // 2A_{2n+1}
        const int n = (m - 1) / 2;
        push_entry(row, 2, p_valuation(n + 1, 2));
        for (int i = 2; i <= n + 2; ++i) push_entry(row, 2 * i - 3, 1);
        row.rules.push_back(SteenrodRule{false, index_range(2, n + 2)});
      }
      return row;
    }
    case Family::D: {
      const int r = (m + 1) / 2 + 1;
      push_entry(row, 1, m % 2 == 1 ? 1 : 0);
      push_entry(row, 2, floor_log2_ratio(m, 1));
      for (int i = 3; i <= r; ++i)
        push_entry(row, 2 * i - 3, floor_log2_ratio(2 * m, 2 * i - 3));
      row.rules.push_back(SteenrodRule{true, index_range(2, r)});
      return row;
    }
    case Family::E: {
      for (long long d : {3, 5, 9}) push_entry(row, d, 1);
      row.rules.push_back(ChainRule{{1, 2, 3}});
      return row;
    }
    default:
      no_row(sf, p, hint);
  }
}

RestrictionRule remap_rule(const RestrictionRule& rule, const std::vector<int>& pos_of) {
  auto map_index = [&](int i) { return pos_of[static_cast<std::size_t>(i - 1)]; };
  if (const auto* st = std::get_if<SteenrodRule>(&rule)) {
    SteenrodRule out{st->scaled, {}};
    for (int i : st->indices) out.indices.push_back(map_index(i));
    std::sort(out.indices.begin(), out.indices.end());
    return out;
  }
  if (const auto* ch = std::get_if<ChainRule>(&rule)) {
    ChainRule out;
    for (int i : ch->indices) out.indices.push_back(map_index(i));
    return out;
  }
  if (const auto* db = std::get_if<DiffBoundRule>(&rule))
    return DiffBoundRule{map_index(db->i), map_index(db->j), db->bound};
  const auto& un = std::get<UpperNeighborRule>(rule);
  return UpperNeighborRule{map_index(un.i), map_index(un.j)};
}

bool is_power_of(long long m, long long p) {
  while (m % p == 0) m /= p;
  return m == 1;
}

}  // namespace

std::string rule_str(const RestrictionRule& rule) {
  std::ostringstream os;
  if (const auto* st = std::get_if<SteenrodRule>(&rule)) {
    os << "steenrod(" << (st->scaled ? "scaled" : "unscaled") << ", indices=[";
    for (std::size_t i = 0; i < st->indices.size(); ++i)
      os << (i ? "," : "") << st->indices[i];
    os << "])";
  } else if (const auto* ch = std::get_if<ChainRule>(&rule)) {
    for (std::size_t i = 0; i < ch->indices.size(); ++i)
      os << (i ? " >= " : "") << "j" << ch->indices[i];
  } else if (const auto* db = std::get_if<DiffBoundRule>(&rule)) {
    os << "|j" << db->i << " - j" << db->j << "| <= " << db->bound;
  } else {
    const auto& un = std::get<UpperNeighborRule>(rule);
    os << "j" << un.i << " <= j" << un.j << " + 1";
  }
  return os.str();
}

JProfile j_profile(const GroupSpec& gs, const std::string& isogeny_hint) {
  JProfile prof;
  prof.p = gs.p;

  // Concatenate the per-factor table rows, scaling codimensions by the
  // factor's Weil degree.
  std::vector<JEntry> concat;
  std::vector<RestrictionRule> concat_rules;
  for (const auto& f : gs.factors) {
    if (f.weil_degree > 1 && !is_power_of(f.weil_degree, gs.p))
      fail(errc::mixed_prime_unsupported,
           "scalar-restriction degree " + std::to_string(f.weil_degree) +
               " is not a power of p = " + std::to_string(gs.p));
    TableRow row;
    if (f.sf.tw.order > 1) {
      if (gs.p != (f.sf.tw.order == 2 ? 2 : 3))
        fail(errc::not_a_torsion_prime,
             std::to_string(gs.p) + " is not the torsion prime of " + f.sf.str());
      row = outer_row(f.sf, gs.p, isogeny_hint);
    } else if (torsion_primes(f.sf.dt, f.sf.tw).contains(gs.p)) {
      row = inner_row(f.sf, gs.p, isogeny_hint);
    } else if (f.weil_degree > 1) {
      // Scalar restriction along a p-power extension of a split factor with
      // no p-torsion: the quotient ring is trivial, so no entries.
    } else {
      fail(errc::not_a_torsion_prime, std::to_string(gs.p) + " is not a torsion prime of " +
                                          f.sf.str());
    }
    const int offset = static_cast<int>(concat.size());
    for (JEntry e : row.entries) {
      e.d = e.d_base * f.weil_degree;
      concat.push_back(e);
    }
    std::vector<int> shift(row.entries.size());
    std::iota(shift.begin(), shift.end(), offset + 1);
    for (const auto& rule : row.rules) concat_rules.push_back(remap_rule(rule, shift));
  }

  // Sort entries by codimension (stable: ties keep table order) and remap
  // rule indices accordingly.
  std::vector<int> order(concat.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return concat[static_cast<std::size_t>(a)].d <
                                              concat[static_cast<std::size_t>(b)].d; });
  std::vector<int> pos_of(concat.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    pos_of[static_cast<std::size_t>(order[pos])] = static_cast<int>(pos) + 1;
    prof.entries.push_back(concat[static_cast<std::size_t>(order[pos])]);
  }
  for (const auto& rule : concat_rules) prof.rules.push_back(remap_rule(rule, pos_of));
  return prof;
}

bool admissible(const JTuple& j, const JProfile& prof) {
  const int r = prof.r();
  if (static_cast<int>(j.values.size()) != r)
    fail(errc::invalid_argument, "tuple length does not match the profile");
  int max_k = 0;
  for (int i = 0; i < r; ++i) {
    const int v = j.values[static_cast<std::size_t>(i)];
    if (v < 0) fail(errc::invalid_argument, "tuple values must be non-negative");
    if (v > prof.entries[static_cast<std::size_t>(i)].k) return false;
    max_k = std::max(max_k, prof.entries[static_cast<std::size_t>(i)].k);
  }
  auto jv = [&](int i) { return j.values[static_cast<std::size_t>(i - 1)]; };
  for (const auto& rule : prof.rules) {
    if (const auto* st = std::get_if<SteenrodRule>(&rule)) {
      const int s_max = st->scaled ? max_k : 0;
      for (int i : st->indices)
        for (int m : st->indices)
          for (int s = 0; s <= s_max; ++s) {
            const long long di = prof.entries[static_cast<std::size_t>(i - 1)].d_base;
            const long long dm = prof.entries[static_cast<std::size_t>(m - 1)].d_base;
            const long long l = ipow(prof.p, s) * dm - di;
            if (l < 1 || !binom_nonzero_mod_p(di, l, prof.p)) continue;
            if (jv(m) > jv(i) + s) return false;
          }
    } else if (const auto* ch = std::get_if<ChainRule>(&rule)) {
      for (std::size_t q = 0; q + 1 < ch->indices.size(); ++q)
        if (jv(ch->indices[q]) < jv(ch->indices[q + 1])) return false;
    } else if (const auto* db = std::get_if<DiffBoundRule>(&rule)) {
      if (std::abs(jv(db->i) - jv(db->j)) > db->bound) return false;
    } else {
      const auto& un = std::get<UpperNeighborRule>(rule);
      if (jv(un.i) > jv(un.j) + 1) return false;
    }
  }
  return true;
}

std::vector<JTuple> enumerate_admissible(const JProfile& prof, long long cap) {
  long long total = 1;
  for (const auto& e : prof.entries) {
    total *= e.k + 1;
    if (total > cap)
      fail(errc::cap_exceeded, "tuple enumeration exceeds cap " + std::to_string(cap));
  }
  std::vector<JTuple> out;
  JTuple j;
  j.values.assign(static_cast<std::size_t>(prof.r()), 0);
  while (true) {
    if (admissible(j, prof)) out.push_back(j);
    int i = prof.r() - 1;
    while (i >= 0 && j.values[static_cast<std::size_t>(i)] ==
                         prof.entries[static_cast<std::size_t>(i)].k) {
      j.values[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++j.values[static_cast<std::size_t>(i)];
  }
  return out;
}

namespace {

Polynomial cyclotomic_style_product(const JProfile& prof, const std::vector<int>& exps) {
  RationalProduct rp;
  for (int i = 0; i < prof.r(); ++i) {
    const int e = exps[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    const long long d = prof.entries[static_cast<std::size_t>(i)].d;
    rp.num_minus.push_back(static_cast<int>(d * ipow(prof.p, e)));
    rp.den_minus.push_back(static_cast<int>(d));
  }
  return expand_rational_product(rp);
}

}  // namespace

Polynomial upper_poincare(const JProfile& prof, const JTuple& j) {
  if (!admissible(j, prof))
    fail(errc::inadmissible, "tuple violates the profile's restrictions");
  return cyclotomic_style_product(prof, j.values);
}

Polynomial ring_poincare(const JProfile& prof) {
  std::vector<int> ks;
  for (const auto& e : prof.entries) ks.push_back(e.k);
  return cyclotomic_style_product(prof, ks);
}

long long weighted_degree(const Monomial& m, const JProfile& prof) {
  if (static_cast<int>(m.exponents.size()) != prof.r())
    fail(errc::invalid_argument, "monomial length does not match the profile");
  long long w = 0;
  for (int i = 0; i < prof.r(); ++i)
    w += prof.entries[static_cast<std::size_t>(i)].d * m.exponents[static_cast<std::size_t>(i)];
  return w;
}

std::strong_ordering monomial_cmp(const Monomial& lhs, const Monomial& rhs,
                                  const JProfile& prof) {
  const long long wl = weighted_degree(lhs, prof);
  const long long wr = weighted_degree(rhs, prof);
  if (wl != wr) return wl <=> wr;
  for (int i = prof.r() - 1; i >= 0; --i) {
    const int a = lhs.exponents[static_cast<std::size_t>(i)];
    const int b = rhs.exponents[static_cast<std::size_t>(i)];
    if (a != b) return a <=> b;
  }
  return std::strong_ordering::equal;
}

std::vector<Monomial> monomial_basis(const JProfile& prof, long long cap) {
  long long total = 1;
  std::vector<long long> bounds;
  for (const auto& e : prof.entries) {
    bounds.push_back(ipow(prof.p, e.k));
    total *= bounds.back();
    if (total > cap)
      fail(errc::cap_exceeded, "monomial basis exceeds cap " + std::to_string(cap));
  }
  std::vector<Monomial> out;
  Monomial m;
  m.exponents.assign(static_cast<std::size_t>(prof.r()), 0);
  while (true) {
    out.push_back(m);
    int i = prof.r() - 1;
    while (i >= 0 &&
           m.exponents[static_cast<std::size_t>(i)] + 1 == bounds[static_cast<std::size_t>(i)]) {
      m.exponents[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++m.exponents[static_cast<std::size_t>(i)];
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return monomial_cmp(a, b, prof) == std::strong_ordering::less;
  });
  return out;
}

EntryValue unitary_j1(long long deg_b, long long ind_b) {
  if (deg_b < 2 || deg_b % 2 != 0)
    fail(errc::illegal_algebra, "algebra degree must be a positive even number");
  if (ind_b < 1 || !is_power_of(ind_b, 2))
    fail(errc::illegal_algebra, "algebra index must be a power of 2");
  if (deg_b % ind_b != 0)
    fail(errc::illegal_algebra, "algebra index must divide the degree");
  const long long half = deg_b / 2;
  EntryValue out;
  out.k1 = p_valuation(half, 2);
  out.j1 = half % ind_b == 0 ? p_valuation(ind_b, 2) : p_valuation(ind_b, 2) - 1;
  return out;
}

EntryValue orthogonal_j1(long long n, long long ind_a) {
  if (n < 3) fail(errc::illegal_algebra, "orthogonal case needs degree 2n with n >= 3");
  if (ind_a < 1 || !is_power_of(ind_a, 2))
    fail(errc::illegal_algebra, "algebra index must be a power of 2");
  if ((2 * n) % ind_a != 0)
    fail(errc::illegal_algebra, "algebra index must divide the degree");
  EntryValue out;
  out.k1 = n % 2 == 1 ? 1 : 0;
  out.j1 = std::min(out.k1, p_valuation(ind_a, 2));
  return out;
}

int tits_j2(InvolutionKind, bool split) { return split ? 0 : 1; }

JTuple excellent_form_jinv(const std::vector<long long>& tower_dims, const JProfile& prof,
                           std::string* warning) {
  if (tower_dims.size() < 2)
    fail(errc::not_excellent_tower, "tower needs at least two Pfister forms");
  for (std::size_t i = 0; i < tower_dims.size(); ++i) {
    if (tower_dims[i] < 2 || !is_power_of(tower_dims[i], 2))
      fail(errc::not_excellent_tower, "Pfister form dimensions must be powers of 2");
    if (i + 1 < tower_dims.size() && tower_dims[i] <= tower_dims[i + 1])
      fail(errc::not_excellent_tower, "tower dimensions must strictly decrease");
  }
  if (tower_dims.back() != 2)
    fail(errc::not_excellent_tower, "the last Pfister form must be 1-fold (dimension 2)");

  const long long target = tower_dims[tower_dims.size() - 2] / 2 - 1;
  JTuple j;
  j.values.assign(static_cast<std::size_t>(prof.r()), 0);
  bool found = false;
  for (int i = 0; i < prof.r(); ++i)
    if (prof.entries[static_cast<std::size_t>(i)].d == target) {
      j.values[static_cast<std::size_t>(i)] = 1;
      found = true;
    }
  if (!found && warning)
    *warning = "no profile entry of codimension " + std::to_string(target) +
               "; returning the zero tuple";
  return j;
}

}  // namespace motivekit
