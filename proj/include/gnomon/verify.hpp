#pragma once

#include <algorithm>
#include <cstdio>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gnomon/factorization.hpp"
#include "gnomon/leg_search.hpp"
#include "gnomon/oracle.hpp"
#include "gnomon/ordering.hpp"
#include "gnomon/progression.hpp"
#include "gnomon/scaling.hpp"

namespace gnomon {

// Verification sweeps: each suite checks one family of claims over a bounded
// range against plain arithmetic or the Euclid oracle and reports per-claim
// pass/fail with the first counterexample found.

struct ReportEntry {
  std::string claim;
  std::string range;
  bool pass = true;
  i64 cases = 0;
  std::string counterexample;  // first failure, empty when passing
};

struct Report {
  std::vector<ReportEntry> entries;

  bool all_pass() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const ReportEntry& e) { return e.pass; });
  }
};

namespace detail {

inline std::string fmt(const PrimitiveTriple& tr) {
  return "(" + std::to_string(tr.x) + ", " + std::to_string(tr.y) + ", " +
         std::to_string(tr.a) + ")";
}

inline std::string fmt(const TripleParams& p) {
  return "(S=" + std::to_string(p.S) + ", t=" + std::to_string(p.t) +
         ", l=" + std::to_string(p.l) + ")";
}

inline void fail(ReportEntry& e, const std::string& counterexample) {
  if (!e.pass) return;  // keep the first counterexample
  e.pass = false;
  e.counterexample = counterexample;
}

inline ReportEntry make_entry(std::string claim, std::string range) {
  ReportEntry e;
  e.claim = std::move(claim);
  e.range = std::move(range);
  return e;
}

inline std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

}  // namespace detail

// One line per claim: "claim, range, status[, counterexample]".
inline std::string to_text(const Report& r) {
  std::string out;
  for (const auto& e : r.entries) {
    out += e.claim + ", " + e.range + ", " + (e.pass ? "pass" : "FAIL");
    if (!e.counterexample.empty()) out += ", " + e.counterexample;
    out += "\n";
  }
  return out;
}

inline std::string to_json(const Report& r) {
  std::string out = "{\"all_pass\":";
  out += r.all_pass() ? "true" : "false";
  out += ",\"entries\":[";
  bool first = true;
  for (const auto& e : r.entries) {
    if (!first) out += ",";
    first = false;
    out += "{\"claim\":\"" + detail::json_escape(e.claim) + "\",\"range\":\"" +
           detail::json_escape(e.range) + "\",\"status\":\"" +
           (e.pass ? "pass" : "fail") + "\",\"cases\":" + std::to_string(e.cases);
    if (!e.counterexample.empty()) {
      out += ",\"counterexample\":\"" + detail::json_escape(e.counterexample) + "\"";
    }
    out += "}";
  }
  out += "]}";
  return out;
}

// Corruption hooks for the negative-control tests: they tamper with generated
// data to prove the suites actually detect failures. Production callers pass
// the default (empty) hooks.
struct VerifyHooks {
  std::function<void(std::vector<TableRow>&)> tamper_block;
  std::function<void(std::vector<TripleParams>&)> tamper_leg;
};

namespace detail {

inline void require_bound(i64 value, const char* what) {
  if (value < 1) {
    throw std::domain_error(std::string(what) + " must be positive, got " +
                            std::to_string(value));
  }
}

inline std::vector<TableRow> hooked_block(i64 S, const VerifyHooks& hooks) {
  std::vector<TableRow> rows = block(S);
  if (hooks.tamper_block) hooks.tamper_block(rows);
  return rows;
}

}  // namespace detail

// Block size = 2^r where r counts the distinct odd primes of S.
inline Report verify_counts(i64 s_max, const VerifyHooks& hooks = {}) {
  detail::require_bound(s_max, "s_max");
  std::string range = "even S in [2, " + std::to_string(s_max) + "]";
  ReportEntry sizes = detail::make_entry("block size equals 2^r for r distinct odd primes of S", range);
  for (i64 S = 2; S <= s_max; S += 2) {
    auto rows = detail::hooked_block(S, hooks);
    ++sizes.cases;
    i64 expected = i64{1} << distinct_odd_prime_count(S);
    if (static_cast<i64>(rows.size()) != expected) {
      detail::fail(sizes, "S=" + std::to_string(S) + ": block size " +
                              std::to_string(rows.size()) + ", expected " +
                              std::to_string(expected));
    }
  }
  return {{sizes}};
}

// The ordered enumeration against the Euclid oracle: same triple set, no
// duplicates, strictly increasing (S, t).
inline Report verify_bijection(i64 s_max, const VerifyHooks& hooks = {}) {
  detail::require_bound(s_max, "s_max");
  std::string range = "even S in [2, " + std::to_string(s_max) + "]";
  ReportEntry order = detail::make_entry("rows advance in strictly increasing (S, t) order", range);
  ReportEntry unique = detail::make_entry("enumerated triples are pairwise distinct", range);
  ReportEntry match = detail::make_entry("triple set equals the Euclid oracle set with x+y-a bounded", range);

  std::vector<PrimitiveTriple> mine;
  std::pair<i64, i64> prev{0, 0};
  for (i64 S = 2; S <= s_max; S += 2) {
    for (const auto& row : detail::hooked_block(S, hooks)) {
      ++order.cases;
      std::pair<i64, i64> cur{row.params.S, row.params.t};
      if (!(prev < cur)) {
        detail::fail(order, detail::fmt(row.params) + " does not advance past (S=" +
                                std::to_string(prev.first) + ", t=" +
                                std::to_string(prev.second) + ")");
      }
      prev = cur;
      mine.push_back(row.triple);
    }
  }

  std::sort(mine.begin(), mine.end());
  unique.cases = static_cast<i64>(mine.size());
  auto dup = std::adjacent_find(mine.begin(), mine.end());
  if (dup != mine.end()) detail::fail(unique, detail::fmt(*dup) + " appears twice");

  std::vector<PrimitiveTriple> oracle = euclid_enumerate_by_deficit(s_max);
  match.cases = static_cast<i64>(oracle.size());
  auto [mi, oi] = std::mismatch(mine.begin(), mine.end(), oracle.begin(), oracle.end());
  if (mi != mine.end() || oi != oracle.end()) {
    std::string lhs = mi != mine.end() ? detail::fmt(*mi) : "nothing";
    std::string rhs = oi != oracle.end() ? detail::fmt(*oi) : "nothing";
    detail::fail(match, "enumeration has " + lhs + " where oracle has " + rhs);
  }

  return {{order, unique, match}};
}

// Progression identities of the connected gnomons for every block in range.
inline Report verify_ap(i64 s_max, const VerifyHooks& hooks = {}) {
  detail::require_bound(s_max, "s_max");
  std::string range = "even S in [2, " + std::to_string(s_max) + "]";
  ReportEntry sums = detail::make_entry("ap sums equal the squared legs and add up to a^2", range);
  ReportEntry middles = detail::make_entry("middle terms equal (l+2t)^2 and 2(l+t)^2", range);
  ReportEntry lasts = detail::make_entry("both last terms equal 2a-1", range);
  ReportEntry sides = detail::make_entry("a = x + T_y = y + T_x", range);
  ReportEntry roundtrip = detail::make_entry("triple_from_descriptors inverts descriptors_from_params", range);

  for (i64 S = 2; S <= s_max; S += 2) {
    for (const auto& row : detail::hooked_block(S, hooks)) {
      const TripleParams& p = row.params;
      const PrimitiveTriple& tr = row.triple;
      std::string at = detail::fmt(p);
      ConnectedGnomons c = descriptors_from_params(p);

      ++sums.cases;
      if (ap_sum(c.g_x) != checked_sq(tr.x) || ap_sum(c.g_y) != checked_sq(tr.y) ||
          checked_add(ap_sum(c.g_x), ap_sum(c.g_y)) != checked_sq(tr.a)) {
        detail::fail(sums, at + ": sums " + std::to_string(ap_sum(c.g_x)) + ", " +
                               std::to_string(ap_sum(c.g_y)) + " vs triple " +
                               detail::fmt(tr));
      }

      ++middles.cases;
      i64 mid_x = checked_sq(checked_add(p.l, checked_mul(2, p.t)));
      i64 mid_y = checked_mul(2, checked_sq(checked_add(p.l, p.t)));
      if (middle_term(c.g_x) != mid_x || middle_term(c.g_y) != mid_y) {
        detail::fail(middles, at + ": middles " + std::to_string(middle_term(c.g_x)) +
                                  ", " + std::to_string(middle_term(c.g_y)) +
                                  ", expected " + std::to_string(mid_x) + ", " +
                                  std::to_string(mid_y));
      }

      ++lasts.cases;
      i64 want_last = checked_mul(2, tr.a) - 1;
      if (last_term(c.g_x) != want_last || last_term(c.g_y) != want_last) {
        detail::fail(lasts, at + ": last terms " + std::to_string(last_term(c.g_x)) +
                                ", " + std::to_string(last_term(c.g_y)) +
                                ", expected " + std::to_string(want_last));
      }

      ++sides.cases;
      if (checked_add(tr.x, c.g_y.T) != tr.a || checked_add(tr.y, c.g_x.T) != tr.a) {
        detail::fail(sides, at + ": x+T_y=" + std::to_string(tr.x + c.g_y.T) +
                                " y+T_x=" + std::to_string(tr.y + c.g_x.T) +
                                " a=" + std::to_string(tr.a));
      }

      ++roundtrip.cases;
      if (triple_from_descriptors(c) != tr) {
        detail::fail(roundtrip, at + ": reconstructed " +
                                    detail::fmt(triple_from_descriptors(c)) +
                                    ", expected " + detail::fmt(tr));
      }
    }
  }
  return {{sums, middles, lasts, sides, roundtrip}};
}

// Leg-occurrence counting against brute-force Euclid divisor scans.
inline Report verify_leg_counts(i64 leg_max, const VerifyHooks& hooks = {}) {
  detail::require_bound(leg_max, "leg_max");
  std::string range = "leg values in [1, " + std::to_string(leg_max) + "]";
  ReportEntry length = detail::make_entry("enumeration length equals the 2^(n-1) occurrence count", range);
  ReportEntry match = detail::make_entry("enumerated triples equal the Euclid oracle triples with that leg", range);
  ReportEntry distinct = detail::make_entry("S values are pairwise distinct per leg", range);

  for (i64 v = 1; v <= leg_max; ++v) {
    bool even = v % 2 == 0;
    std::vector<TripleParams> params = even ? even_leg_triples(v) : odd_leg_triples(v);
    if (hooks.tamper_leg) hooks.tamper_leg(params);
    std::string at = (even ? "even leg " : "odd leg ") + std::to_string(v);

    ++length.cases;
    i64 expected = count_leg_occurrences(v, even ? LegParity::even : LegParity::odd);
    if (static_cast<i64>(params.size()) != expected) {
      detail::fail(length, at + ": " + std::to_string(params.size()) +
                               " params, count says " + std::to_string(expected));
    }

    ++match.cases;
    std::vector<PrimitiveTriple> mine;
    mine.reserve(params.size());
    for (const auto& p : params) mine.push_back(triple_from_params(p));
    std::sort(mine.begin(), mine.end());
    std::vector<PrimitiveTriple> oracle = euclid_triples_with_leg(v, even);
    if (mine != oracle) {
      detail::fail(match, at + ": " + std::to_string(mine.size()) +
                              " triples vs oracle " + std::to_string(oracle.size()));
    }

    ++distinct.cases;
    std::vector<i64> seen;
    seen.reserve(params.size());
    for (const auto& p : params) seen.push_back(p.S);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
      detail::fail(distinct, at + ": repeated S value");
    }
  }
  return {{length, match, distinct}};
}

// Scaling laws over the (S, k) grid.
inline Report verify_scaling(i64 s_max, i64 k_max, const VerifyHooks& hooks = {}) {
  detail::require_bound(s_max, "s_max");
  detail::require_bound(k_max, "k_max");
  std::string range = "even S in [2, " + std::to_string(s_max) + "], k in [1, " +
                      std::to_string(k_max) + "]";
  ReportEntry sides = detail::make_entry("scaled sides are k times the base triple", range);
  ReportEntry thickness = detail::make_entry("T_kx = k*l^2 and T_ky = 2k*t^2", range);
  ReportEntry middles = detail::make_entry("middle terms are k*(l+2t)^2 and 2k*(l+t)^2", range);
  ReportEntry sums = detail::make_entry("ap sums equal the squared scaled legs", range);
  ReportEntry coupling = detail::make_entry("scaled gnomons share last term 2ka-1 and ka = kx + T_ky = ky + T_kx", range);
  ReportEntry identity = detail::make_entry("k = 1 reproduces the unscaled descriptors", range);

  for (i64 S = 2; S <= s_max; S += 2) {
    for (const auto& row : detail::hooked_block(S, hooks)) {
      const TripleParams& p = row.params;
      const PrimitiveTriple& tr = row.triple;
      std::string at = detail::fmt(p);

      ++identity.cases;
      ScaledTriple unit = scale(p, 1);
      ConnectedGnomons c = descriptors_from_params(p);
      if (unit.g_kx != c.g_x || unit.g_ky != c.g_y) {
        detail::fail(identity, at + ": k=1 descriptors differ from the unscaled ones");
      }

      for (i64 k = 1; k <= k_max; ++k) {
        ScaledTriple st = scale(p, k);
        std::string here = at + " k=" + std::to_string(k);

        ++sides.cases;
        if (st.kx != checked_mul(k, tr.x) || st.ky != checked_mul(k, tr.y) ||
            st.ka != checked_mul(k, tr.a)) {
          detail::fail(sides, here + ": scaled sides (" + std::to_string(st.kx) +
                                  ", " + std::to_string(st.ky) + ", " +
                                  std::to_string(st.ka) + ") vs base " +
                                  detail::fmt(tr));
        }

        ++thickness.cases;
        if (st.g_kx.T != checked_mul(k, checked_sq(p.l)) ||
            st.g_ky.T != checked_mul(2, checked_mul(k, checked_sq(p.t)))) {
          detail::fail(thickness, here + ": T_kx=" + std::to_string(st.g_kx.T) +
                                      " T_ky=" + std::to_string(st.g_ky.T));
        }

        ++middles.cases;
        i64 mid_x = checked_mul(k, checked_sq(checked_add(p.l, checked_mul(2, p.t))));
        i64 mid_y = checked_mul(2, checked_mul(k, checked_sq(checked_add(p.l, p.t))));
        if (middle_term(st.g_kx) != mid_x || middle_term(st.g_ky) != mid_y) {
          detail::fail(middles, here + ": middles " +
                                    std::to_string(middle_term(st.g_kx)) + ", " +
                                    std::to_string(middle_term(st.g_ky)));
        }

        ++sums.cases;
        if (ap_sum(st.g_kx) != checked_sq(checked_mul(k, tr.x)) ||
            ap_sum(st.g_ky) != checked_sq(checked_mul(k, tr.y))) {
          detail::fail(sums, here + ": sums " + std::to_string(ap_sum(st.g_kx)) +
                                 ", " + std::to_string(ap_sum(st.g_ky)));
        }

        ++coupling.cases;
        i64 want_last = checked_mul(2, st.ka) - 1;
        if (last_term(st.g_kx) != want_last || last_term(st.g_ky) != want_last ||
            checked_add(st.kx, st.g_ky.T) != st.ka ||
            checked_add(st.ky, st.g_kx.T) != st.ka) {
          detail::fail(coupling, here + ": last terms " +
                                     std::to_string(last_term(st.g_kx)) + ", " +
                                     std::to_string(last_term(st.g_ky)) +
                                     ", expected " + std::to_string(want_last));
        }
      }
    }
  }
  return {{sides, thickness, middles, sums, coupling, identity}};
}

inline Report verify_all(i64 s_max, i64 leg_max, i64 k_max,
                         const VerifyHooks& hooks = {}) {
  Report out;
  auto append = [&out](Report r) {
    for (auto& e : r.entries) out.entries.push_back(std::move(e));
  };
  append(verify_counts(s_max, hooks));
  append(verify_bijection(s_max, hooks));
  append(verify_ap(s_max, hooks));
  append(verify_leg_counts(leg_max, hooks));
  append(verify_scaling(s_max, k_max, hooks));
  return out;
}

}  // namespace gnomon
