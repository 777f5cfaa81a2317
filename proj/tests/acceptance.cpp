// Acceptance gate: one criterion per line, PASS/FAIL with runtime, exit 0
// only when every criterion passes within its time budget.

#include <chrono>
#include <cstdio>
#include <iterator>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gnomon/gnomon.hpp"

using namespace gnomon;

namespace {

struct RefRow {
  long long N, n, S, t, l, x, y, a;
};

constexpr RefRow ref_rows[] = {
#include "data/reference_rows.inc"
};

// 1. The generated table reproduces every healthy row of the published
//    reference table for S <= 500, including index and params, with named
//    spot rows checked explicitly.
bool table_reproduction(std::string& detail) {
  RowStream rows = enumerate(2, 500);
  std::size_t i = 0;
  long long clean = 0;
  while (auto row = rows.next()) {
    if (i >= std::size(ref_rows)) {
      detail = "generator produced more rows than the reference table";
      return false;
    }
    const RefRow& ref = ref_rows[i];
    std::string tag = std::to_string(ref.N) + "." + std::to_string(ref.n);
    if (row->index.N != ref.N || row->index.n != ref.n || row->params.S != ref.S ||
        row->params.t != ref.t || row->params.l != ref.l) {
      detail = "row " + tag + ": index or params mismatch";
      return false;
    }
    if (validate_primitive(ref.x, ref.y, ref.a)) {
      if (row->triple != PrimitiveTriple{ref.x, ref.y, ref.a}) {
        detail = "row " + tag + ": triple mismatch";
        return false;
      }
      ++clean;
    }
    ++i;
  }
  if (i != std::size(ref_rows)) {
    detail = "row count " + std::to_string(i) + ", reference has " +
             std::to_string(std::size(ref_rows));
    return false;
  }

  const RefRow spots[] = {
      {1, 1, 2, 1, 1, 3, 4, 5},        {2, 1, 4, 2, 1, 5, 12, 13},
      {3, 1, 6, 1, 3, 15, 8, 17},      {3, 2, 6, 3, 1, 7, 24, 25},
      {6, 1, 12, 2, 3, 21, 20, 29},    {15, 1, 30, 1, 15, 255, 32, 257},
      {15, 2, 30, 3, 5, 55, 48, 73},   {15, 3, 30, 5, 3, 39, 80, 89},
      {15, 4, 30, 15, 1, 31, 480, 481}, {35, 2, 70, 5, 7, 119, 120, 169},
  };
  for (const RefRow& spot : spots) {
    std::vector<TableRow> b = block(spot.S);
    bool found = false;
    for (const TableRow& row : b) {
      if (row.params.t != spot.t) continue;
      found = row.index == OrderedIndex{spot.N, spot.n} &&
              row.params == TripleParams{spot.S, spot.t, spot.l} &&
              row.triple == PrimitiveTriple{spot.x, spot.y, spot.a};
    }
    if (!found) {
      detail = "spot row " + std::to_string(spot.N) + "." + std::to_string(spot.n) +
               " missing or wrong";
      return false;
    }
  }

  std::vector<TableRow> b210 = block(210);
  std::vector<long long> ts;
  for (const TableRow& row : b210) ts.push_back(row.params.t);
  if (ts != std::vector<long long>{1, 3, 5, 7, 15, 21, 35, 105}) {
    detail = "S=210 block does not have the expected 8 partitions";
    return false;
  }

  detail = std::to_string(clean) + " clean rows matched exactly";
  return true;
}

// 2. The identity screen flags the damaged printed rows (at minimum the seven
//    listed) and the regenerated row at the same (S, t, l) is sound.
bool transcription_detection(std::string& detail) {
  std::set<std::pair<long long, long long>> damaged;
  for (const RefRow& ref : ref_rows) {
    if (validate_primitive(ref.x, ref.y, ref.a)) continue;
    damaged.insert({ref.N, ref.n});
    PrimitiveTriple regen = triple_from_params({ref.S, ref.t, ref.l});
    if (!validate_primitive(regen)) {
      detail = "regenerated row " + std::to_string(ref.N) + "." +
               std::to_string(ref.n) + " fails validation";
      return false;
    }
  }
  const std::pair<long long, long long> required[] = {
      {40, 1}, {60, 4}, {95, 2}, {105, 5}, {114, 2}, {183, 4}, {200, 2}};
  for (const auto& need : required) {
    if (!damaged.count(need)) {
      detail = "screen missed row " + std::to_string(need.first) + "." +
               std::to_string(need.second);
      return false;
    }
  }
  detail = std::to_string(damaged.size()) + " damaged rows flagged, 7 required";
  return true;
}

std::string first_failure(const Report& r) {
  for (const auto& e : r.entries) {
    if (!e.pass) return e.claim + ": " + e.counterexample;
  }
  return "";
}

bool report_criterion(Report r, std::string& detail) {
  if (!r.all_pass()) {
    detail = first_failure(r);
    return false;
  }
  long long cases = 0;
  for (const auto& e : r.entries) cases += e.cases;
  detail = std::to_string(r.entries.size()) + " claims over " +
           std::to_string(cases) + " cases";
  return true;
}

bool block_sizes(std::string& detail) {
  return report_criterion(verify_counts(100000), detail);
}

bool bijection(std::string& detail) {
  return report_criterion(verify_bijection(20000), detail);
}

bool progression_identities(std::string& detail) {
  return report_criterion(verify_ap(10000), detail);
}

bool leg_counts(std::string& detail) {
  return report_criterion(verify_leg_counts(10000), detail);
}

// 7. Scaling laws plus the negative control: the forced first term of the
//    scaled gnomon is not k times the unscaled first term.
bool scaling_laws(std::string& detail) {
  ScaledTriple st = scale({2, 1, 1}, 3);
  if (st.g_kx.s1 != 25 || st.g_kx.s1 == 3 * 9) {
    detail = "negative control failed: forced s1 = " + std::to_string(st.g_kx.s1);
    return false;
  }
  return report_criterion(verify_scaling(200, 20), detail);
}

// 8. params <-> triple and params <-> (m, n) are mutually inverse, and the
//    Euclid form of every row equals the generated triple.
bool roundtrips(std::string& detail) {
  long long cases = 0;
  for (i64 S = 2; S <= 20000; S += 2) {
    for (const TableRow& row : block(S)) {
      const TripleParams& p = row.params;
      if (params_from_triple(row.triple) != p) {
        detail = "params_from_triple failed at S=" + std::to_string(S);
        return false;
      }
      auto [m, n] = mn_from_params(p);
      if (params_from_mn(m, n) != p || euclid_triple(m, n) != row.triple) {
        detail = "Euclid roundtrip failed at S=" + std::to_string(S);
        return false;
      }
      ++cases;
    }
  }
  detail = std::to_string(cases) + " triples round-tripped";
  return true;
}

struct Criterion {
  const char* name;
  double budget_seconds;
  bool (*run)(std::string&);
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"table reproduction, S <= 500", 1.0, table_reproduction},
      {"transcription-error detection", 1.0, transcription_detection},
      {"block sizes are 2^r, S <= 100000", 30.0, block_sizes},
      {"bijection with the Euclid oracle, S <= 20000", 30.0, bijection},
      {"progression identities, S <= 10000", 10.0, progression_identities},
      {"leg occurrence counts, legs <= 10000", 60.0, leg_counts},
      {"scaling laws, S <= 200, k <= 20", 5.0, scaling_laws},
      {"roundtrip inverses, S <= 20000", 10.0, roundtrips},
  };

  int failures = 0;
  int number = 1;
  for (const Criterion& c : criteria) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = c.run(detail);
    double seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    if (ok && seconds > c.budget_seconds) {
      ok = false;
      detail = "over the " + std::to_string(c.budget_seconds) + " s budget";
    }
    std::printf("criterion %d: %s - %s (%s) [%.2f s]\n", number,
                ok ? "PASS" : "FAIL", c.name, detail.c_str(), seconds);
    if (!ok) ++failures;
    ++number;
  }
  return failures == 0 ? 0 : 1;
}
