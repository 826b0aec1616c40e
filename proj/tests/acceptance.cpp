// Integration gate for the full pipeline: canonical chain enumeration, the
// graph census, worked intervals, the axiom verifier, the Schubert coefficient
// oracle, tableau families, and the involution property sweep.  Prints one
// PASS/FAIL line per criterion; exit status is the number of failures.
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "chain.hpp"
#include "descent.hpp"
#include "dual_equiv.hpp"
#include "gbdq.h"
#include "graph.hpp"
#include "json.hpp"
#include "perm.hpp"
#include "qsym.hpp"
#include "schubert.hpp"
#include "tableaux.hpp"

using namespace gbdq;
using nlohmann::json;

namespace {

int failures = 0;

void verdict(int num, bool pass, const std::string& detail) {
  std::printf("criterion %d: %s (%s)\n", num, pass ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

void note(int num, const std::string& text) {
  std::printf("  [criterion %d] %s\n", num, text.c_str());
  std::fflush(stdout);
}

void progress(const std::string& text) {
  std::fprintf(stderr, "... %s\n", text.c_str());
  std::fflush(stderr);
}

template <class F>
void guarded_criterion(int num, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    verdict(num, false, std::string("unexpected exception: ") + e.what());
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string fmt_secs(double s) {
  std::ostringstream os;
  os.precision(1);
  os << std::fixed << s << "s";
  return os.str();
}

// Runs fn(begin, end) over [0, count) from a small thread pool.  With one
// worker it degenerates to a single call.
template <class Fn>
void parallel_over(size_t count, int workers, const Fn& fn) {
  if (workers <= 1 || count < 2048) {
    fn(size_t{0}, count);
    return;
  }
  std::atomic<size_t> next{0};
  const size_t stride = 1024;
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (;;) {
        size_t b = next.fetch_add(stride);
        if (b >= count) return;
        fn(b, std::min(count, b + stride));
      }
    });
  for (auto& th : pool) th.join();
}

// ---------------------------------------------------------------------------
// Frozen ground truth.  The census tables were computed twice, here and by an
// independent prototype; the published reference tabulation deviates from the
// recomputed values in four documented cells, reported by criterion 3.

struct RowGT {
  int vertices;
  uint64_t graphs, iso, orbits, fns;
};

const std::vector<RowGT> kRows4 = {
    {1, 90, 2, 1, 2}, {2, 101, 1, 1, 1}, {3, 298, 2, 1, 2}, {5, 10, 2, 1, 2}};

const std::vector<RowGT> kRows5 = {
    {1, 394, 2, 1, 2},  {4, 1744, 2, 1, 2}, {5, 2250, 2, 1, 2},
    {6, 1306, 1, 1, 1}, {9, 98, 6, 2, 2},   {11, 90, 8, 3, 2},
    {16, 62, 4, 2, 1},  {20, 4, 2, 1, 2}};

const std::vector<RowGT> kRows6 = {
    {1, 1806, 2, 1, 2},   {5, 20922, 4, 2, 4}, {9, 18594, 2, 1, 2},
    {10, 19828, 2, 1, 2}, {14, 796, 12, 4, 4}, {16, 16134, 1, 1, 1},
    {19, 786, 22, 8, 4},  {21, 414, 8, 3, 2},  {26, 948, 24, 8, 2},
    {35, 738, 14, 6, 2},  {37, 14, 2, 1, 2},   {40, 408, 20, 10, 4},
    {42, 48, 2, 1, 2},    {45, 22, 4, 2, 4},   {47, 254, 8, 3, 2},
    {54, 52, 3, 2, 3},    {56, 370, 14, 6, 4}, {59, 12, 2, 1, 2},
    {61, 54, 12, 6, 6},   {66, 28, 6, 3, 2},   {75, 10, 2, 1, 2},
    {80, 48, 2, 1, 1},    {91, 4, 2, 1, 2},    {96, 4, 2, 1, 1}};

// Published length-6 table, verbatim.  Its graphs column prints 53 at size 54
// (the column then sums to 82295, off by one from the published total 82294),
// and its class column prints 7 at size 19.  The published headline class
// totals are 28 at length 5 and 178 at length 6.
struct PubRow {
  int vertices;
  uint64_t graphs, classes, fns;
};

const std::vector<PubRow> kPublishedSix = {
    {1, 1806, 1, 2},  {5, 20922, 2, 4}, {9, 18594, 1, 2}, {10, 19828, 1, 2},
    {14, 796, 4, 4},  {16, 16134, 1, 1}, {19, 786, 7, 4},  {21, 414, 3, 2},
    {26, 948, 8, 2},  {35, 738, 6, 2},  {37, 14, 1, 2},   {40, 408, 10, 4},
    {42, 48, 1, 2},   {45, 22, 2, 4},   {47, 254, 3, 2},  {54, 53, 2, 3},
    {56, 370, 6, 4},  {59, 12, 1, 2},   {61, 54, 6, 6},   {66, 28, 3, 2},
    {75, 10, 1, 2},   {80, 48, 1, 1},   {91, 4, 1, 2},    {96, 4, 1, 1}};

const std::map<int, std::set<std::string>> kFns4 = {
    {1, {"s[1,1,1,1]", "s[4]"}},
    {2, {"s[2,2]"}},
    {3, {"s[2,1,1]", "s[3,1]"}},
    {5, {"s[2,1,1] + s[2,2]", "s[2,2] + s[3,1]"}}};

const std::map<int, std::set<std::string>> kFns5 = {
    {1, {"s[1,1,1,1,1]", "s[5]"}},
    {4, {"s[2,1,1,1]", "s[4,1]"}},
    {5, {"s[2,2,1]", "s[3,2]"}},
    {6, {"s[3,1,1]"}},
    {9, {"s[2,1,1,1] + s[2,2,1]", "s[3,2] + s[4,1]"}},
    {11, {"s[2,2,1] + s[3,1,1]", "s[3,1,1] + s[3,2]"}},
    {16, {"s[2,2,1] + s[3,1,1] + s[3,2]"}},
    {20,
     {"s[2,1,1,1] + s[2,2,1] + s[3,1,1] + s[3,2]",
      "s[2,2,1] + s[3,1,1] + s[3,2] + s[4,1]"}}};

std::optional<Census> g_census4, g_census5, g_census6;

// Compares a computed census against the frozen tables; empty result means a
// full match.
std::string diff_census(const Census& c, uint64_t chains, uint64_t graphs,
                        uint64_t iso, uint64_t orbits,
                        const std::vector<RowGT>& rows) {
  std::ostringstream os;
  if (c.chains != chains) os << "chains " << c.chains << "!=" << chains << "; ";
  if (c.graphs != graphs) os << "graphs " << c.graphs << "!=" << graphs << "; ";
  if (c.iso_classes != iso)
    os << "classes " << c.iso_classes << "!=" << iso << "; ";
  if (c.orbits != orbits) os << "orbits " << c.orbits << "!=" << orbits << "; ";
  if (c.by_size.size() != rows.size()) {
    os << "row count " << c.by_size.size() << "!=" << rows.size() << "; ";
    return os.str();
  }
  for (size_t r = 0; r < rows.size(); ++r) {
    const auto& got = c.by_size[r];
    const auto& want = rows[r];
    if (got.vertices != want.vertices || got.graphs != want.graphs ||
        got.iso_classes != want.iso || got.orbits != want.orbits ||
        got.functions != want.fns)
      os << "row v=" << want.vertices << " got (" << got.vertices << ","
         << got.graphs << "," << got.iso_classes << "," << got.orbits << ","
         << got.functions << "); ";
    auto fit = c.functions.find(want.vertices);
    if (fit == c.functions.end() || fit->second.size() != want.fns)
      os << "functions at v=" << want.vertices << " missing or wrong size; ";
  }
  return os.str();
}

// ---------------------------------------------------------------------------

void criterion1(int jobs) {
  uint64_t n3 = count_canonical_chains(3, jobs);
  uint64_t n4 = count_canonical_chains(4, jobs);
  progress("counting length-5 chains");
  uint64_t n5 = count_canonical_chains(5, jobs);
  progress("counting length-6 chains");
  auto t0 = std::chrono::steady_clock::now();
  uint64_t n6 = count_canonical_chains(6, jobs);
  double sec6 = seconds_since(t0);

  bool n5_known = n5 == 29400 || n5 == 29500;
  if (n5 == 29400)
    note(1,
         "length-5 total is 29400, the value carried by the running text; the "
         "published summary table prints 29500 for this entry");
  else if (n5 == 29500)
    note(1,
         "length-5 total is 29500, matching the published summary table "
         "rather than the running text's 29400");
  bool pass = n3 == 70 && n4 == 1236 && n5_known && n6 == 881934 &&
              sec6 < 1800.0;
  std::ostringstream os;
  os << "chain totals " << n3 << " / " << n4 << " / " << n5 << " / " << n6
     << "; length 6 counted in " << fmt_secs(sec6);
  verdict(1, pass, os.str());
}

void criterion2(int jobs) {
  const uint64_t expected[4] = {30, 336, 5040, 95040};
  std::ostringstream os;
  bool pass = true;
  for (int n = 3; n <= 6; ++n) {
    if (n == 6) progress("scanning length-6 chains for disjointness");
    uint64_t disjoint = 0;
    for_each_canonical_chain(
        n, [&](const Chain& c) { disjoint += is_disjoint_chain(c) ? 1 : 0; },
        jobs);
    if (n > 3) os << " / ";
    os << disjoint;
    pass = pass && disjoint == expected[n - 3];
  }
  verdict(2, pass, "disjoint chain totals " + os.str());
}

void criterion3(int jobs) {
  progress("census, length 4");
  g_census4 = run_census(4, jobs);
  progress("census, length 5");
  g_census5 = run_census(5, jobs);
  progress("census, length 6");
  auto t0 = std::chrono::steady_clock::now();
  g_census6 = run_census(6, jobs);
  double sec6 = seconds_since(t0);

  std::string d4 = diff_census(*g_census4, 1236, 499, 7, 4, kRows4);
  std::string d5 = diff_census(*g_census5, 29400, 5948, 27, 12, kRows5);
  std::string d6 = diff_census(*g_census6, 881934, 82294, 172, 74, kRows6);
  for (auto [n, d] : {std::pair{4, &d4}, {5, &d5}, {6, &d6}})
    if (!d->empty()) note(3, "length " + std::to_string(n) + ": " + *d);

  // functions tables, exact strings at lengths 4 and 5
  bool fns_ok = g_census4->functions == kFns4 && g_census5->functions == kFns5;
  if (!fns_ok) note(3, "per-size function tables at length 4 or 5 differ");

  // cell-by-cell comparison with the published length-6 table
  std::vector<std::string> deviations;
  bool unexpected = false;
  if (g_census6->by_size.size() == kPublishedSix.size()) {
    for (size_t r = 0; r < kPublishedSix.size(); ++r) {
      const auto& got = g_census6->by_size[r];
      const auto& pub = kPublishedSix[r];
      if (got.vertices != pub.vertices) unexpected = true;
      if (got.graphs != pub.graphs)
        deviations.push_back("size " + std::to_string(pub.vertices) +
                             " graphs: computed " +
                             std::to_string(got.graphs) + ", published " +
                             std::to_string(pub.graphs));
      if (got.orbits != pub.classes)
        deviations.push_back("size " + std::to_string(pub.vertices) +
                             " classes: computed " +
                             std::to_string(got.orbits) + ", published " +
                             std::to_string(pub.classes));
      if (got.functions != pub.fns) unexpected = true;
    }
  } else {
    unexpected = true;
  }
  // exactly the two documented cells may deviate; rows are ordered by size,
  // so the size-19 cell precedes size 54
  bool table_ok =
      !unexpected && deviations.size() == 2 &&
      deviations[0] == "size 19 classes: computed 8, published 7" &&
      deviations[1] == "size 54 graphs: computed 52, published 53";
  for (const auto& d : deviations) note(3, "published-table deviation: " + d);
  note(3,
       "published headline class counts deviate as documented: length 5 "
       "prints 28 (computed 27), length 6 prints 178 (computed 172) and "
       "orbit total 73 (computed 74); the published length-6 graphs column "
       "sums to 82295 against its own printed total 82294, consistent with "
       "the recomputed 52 at size 54");

  bool pass =
      d4.empty() && d5.empty() && d6.empty() && fns_ok && table_ok;
  std::ostringstream os;
  os << "census 499/7/4, 5948/27/12, 82294/172/74 with full per-size "
        "breakdowns; length-6 census in "
     << fmt_secs(sec6) << "; published table matches except the documented "
     << deviations.size() << " cells";
  verdict(3, pass, os.str());
}

void criterion4() {
  bool pass = true;
  std::ostringstream os;

  auto eleven = enumerate_interval_chains(
      Permutation::from_cycles({{1, 4, 5, 3, 2, 6}}));
  pass = pass && eleven.size() == 11;
  std::vector<DescentSet> des;
  for (const auto& c : eleven) des.push_back(c.descents());
  QSymFunction k11 = k_of(des, 5);
  const std::map<DescentSet, int64_t> want11 = {
      {DescentSet({3, 4}), 1}, {DescentSet({2, 4}), 2},
      {DescentSet({2, 3}), 1}, {DescentSet({1, 4}), 2},
      {DescentSet({3}), 1},    {DescentSet({1, 3}), 2},
      {DescentSet({1, 2}), 1}, {DescentSet({2}), 1}};
  pass = pass && k11.coefficients() == want11;
  auto r11 = expand_in_schur(k11);
  auto* e11 = std::get_if<SchurExpansion>(&r11);
  pass = pass && e11 && e11->text() == "s[3,1,1] + s[3,2]";

  auto nine = enumerate_interval_chains(
      Permutation::from_cycles({{1, 2, 4, 5, 3, 6}}));
  pass = pass && nine.size() == 9;
  std::vector<DescentSet> des9;
  for (const auto& c : nine) des9.push_back(c.descents());
  auto r9 = expand_in_schur(k_of(des9, 5));
  auto* e9 = std::get_if<SchurExpansion>(&r9);
  pass = pass && e9 && e9->text() == "s[2,1,1,1] + s[2,2,1]";

  bool fns5 = false;
  if (g_census5) {
    fns5 = g_census5->functions == kFns5;
  } else {
    note(4, "length-5 census unavailable, component function table skipped");
  }
  pass = pass && fns5;
  note(4,
       "length-5 component functions match the published component table up "
       "to its one-representative-per-conjugate-pair convention: sizes 6 and "
       "16 are self-conjugate, every other size lists both members");

  os << "11-chain interval gives the 8-term fundamental expansion and "
        "s[3,1,1] + s[3,2]; 9-chain interval gives s[2,1,1,1] + s[2,2,1]; "
        "component function table verified";
  verdict(4, pass, os.str());
}

void criterion5(int jobs) {
  bool pass = true;
  std::ostringstream os;
  for (int n = 3; n <= 6; ++n) {
    progress("axiom battery, length " + std::to_string(n));
    gbdq_report_t* rep = nullptr;
    gbdq_status st = gbdq_verify_chains(n, jobs, 0, &rep);
    int ok = 0;
    if (st == GBDQ_OK) gbdq_report_passed(rep, &ok);
    pass = pass && st == GBDQ_OK && ok == 1;
    if (!(st == GBDQ_OK && ok == 1))
      note(5, "length " + std::to_string(n) + " battery did not pass");
    gbdq_report_free(rep);
  }

  gbdq_report_t* bad = nullptr;
  gbdq_status st = gbdq_verify_chains(4, jobs, 1, &bad);
  bool caught = false;
  uint64_t violations = 0;
  if (st == GBDQ_OK) {
    int ok = 1;
    gbdq_report_passed(bad, &ok);
    char* text = nullptr;
    if (ok == 0 && gbdq_report_json(bad, &text) == GBDQ_OK) {
      json doc = json::parse(text);
      gbdq_string_free(text);
      for (const auto& line : doc["axioms"])
        if (line["axiom"] == "ii.b") violations = line["violations"];
      caught = violations > 0 && !doc["witnesses"].empty() &&
               !doc["witnesses"][0]["detail"].get<std::string>().empty();
    }
  }
  gbdq_report_free(bad);
  pass = pass && caught;

  os << "axioms (i)-(iv.c) hold on lengths 3-6; corrupted involution flagged "
        "with "
     << violations << " ii.b violations and witnesses";
  verdict(5, pass, os.str());
}

void criterion6() {
  std::vector<Permutation> s5;
  {
    std::vector<int> v{1, 2, 3, 4, 5};
    do {
      s5.push_back(Permutation::from_one_line(v));
    } while (std::next_permutation(v.begin(), v.end()));
  }

  struct IntervalData {
    uint64_t chains = 0;
    bool symmetric = false;
    std::map<Partition, int64_t> schur;
  };
  std::map<Permutation, IntervalData> interval_cache;
  auto interval_for = [&](const Permutation& zeta,
                          int d) -> const IntervalData& {
    auto it = interval_cache.find(zeta);
    if (it != interval_cache.end()) return it->second;
    auto chains = enumerate_interval_chains(zeta);
    std::vector<DescentSet> des;
    des.reserve(chains.size());
    for (const auto& c : chains) des.push_back(c.descents());
    IntervalData data;
    data.chains = chains.size();
    auto res = expand_in_schur(k_of(des, d));
    if (auto* e = std::get_if<SchurExpansion>(&res)) {
      data.symmetric = true;
      data.schur = e->coefficients();
    }
    return interval_cache.emplace(zeta, std::move(data)).first->second;
  };

  std::map<int, std::vector<Partition>> parts_by_d;
  for (int d = 1; d <= 4; ++d) parts_by_d[d] = partitions_of(d);

  uint64_t pairs = 0, comparisons = 0, oracle_calls = 0;
  std::string fail;
  auto record = [&](std::string what) {
    if (fail.empty()) fail = std::move(what);
  };

  progress("coefficient sweep over S_5");
  for (const auto& u : s5) {
    if (!fail.empty()) break;
    for (int k = 1; k <= 4 && fail.empty(); ++k) {
      auto identity = coeff_oracle(u, Partition{}, k, 10);
      ++oracle_calls;
      if (identity.size() != 1 || !identity.count(u) || identity.at(u) != 1)
        record("empty-shape product is not the Schubert basis element at u=" +
               u.one_line_string());

      std::map<Partition, std::map<Permutation, int64_t>> oracle;
      auto oracle_for =
          [&](const Partition& lam) -> const std::map<Permutation, int64_t>& {
        auto it = oracle.find(lam);
        if (it == oracle.end()) {
          it = oracle.emplace(lam, coeff_oracle(u, lam, k, 10)).first;
          ++oracle_calls;
        }
        return it->second;
      };

      std::map<Permutation, int> depth;
      depth.emplace(u, 0);
      std::vector<Permutation> frontier{u};
      for (int d = 1; d <= 4 && fail.empty(); ++d) {
        std::vector<Permutation> level;
        for (const auto& p : frontier) {
          const int jmax = std::max(p.max_point(), k) + 1;
          for (int i = 1; i <= k; ++i)
            for (int j = k + 1; j <= jmax; ++j) {
              Permutation w = compose(p, Permutation::transposition(i, j));
              if (depth.count(w)) continue;
              if (!k_bruhat_cover(p, w, k)) continue;
              depth.emplace(w, d);
              level.push_back(w);
            }
        }
        for (const auto& w : level) {
          const auto& iv = interval_for(compose(w, u.inverse()), d);
          if (!iv.symmetric) {
            record("interval function not symmetric at u=" +
                   u.one_line_string() + " w=" + w.one_line_string());
            break;
          }
          uint64_t chain_total = 0;
          for (const auto& lam : parts_by_d[d]) {
            int64_t chain_c = 0;
            if (auto it = iv.schur.find(lam); it != iv.schur.end())
              chain_c = it->second;
            int64_t oracle_c = 0;
            if (static_cast<int>(lam.size()) <= k) {
              const auto& tab = oracle_for(lam);
              if (auto it = tab.find(w); it != tab.end()) oracle_c = it->second;
            }
            ++comparisons;
            if (chain_c != oracle_c) {
              record("coefficient mismatch at u=" + u.one_line_string() +
                     " w=" + w.one_line_string() + " k=" + std::to_string(k) +
                     " shape " + partition_text(lam) + ": chains give " +
                     std::to_string(chain_c) + ", oracle gives " +
                     std::to_string(oracle_c));
              break;
            }
            if (oracle_c > 0)
              chain_total +=
                  num_syt(lam) * static_cast<uint64_t>(oracle_c);
          }
          if (!fail.empty()) break;
          if (iv.chains != chain_total) {
            record("chain count disagrees with the tableau-weighted "
                   "coefficient sum at u=" +
                   u.one_line_string() + " w=" + w.one_line_string());
            break;
          }
          ++pairs;
        }
        frontier = std::move(level);
      }
    }
  }

  // the six-point spotlight pair
  Permutation u6 = Permutation::from_one_line({1, 4, 2, 6, 3, 5});
  Permutation w6 = Permutation::from_one_line({4, 5, 6, 1, 2, 3});
  auto kb = enumerate_k_bruhat_interval(u6, w6, 3);
  if (kb.size() != 11) record("spotlight interval should carry 11 chains");
  const auto& spot = interval_for(compose(w6, u6.inverse()), 5);
  const std::vector<std::pair<Partition, int64_t>> spotlight = {
      {{3, 2}, 1}, {{3, 1, 1}, 1}, {{2, 2, 1}, 0}};
  for (const auto& [lam, want] : spotlight) {
    auto tab = coeff_oracle(u6, lam, 3);
    ++oracle_calls;
    int64_t got = tab.count(w6) ? tab.at(w6) : 0;
    int64_t chain_c = 0;
    if (auto it = spot.schur.find(lam); it != spot.schur.end())
      chain_c = it->second;
    if (got != want || chain_c != want)
      record("spotlight coefficient at shape " + partition_text(lam) +
             ": oracle " + std::to_string(got) + ", chains " +
             std::to_string(chain_c) + ", expected " + std::to_string(want));
  }

  progress("Monk and Pieri batteries over S_4");
  uint64_t monk = 0, pieri = 0;
  {
    std::vector<int> v{1, 2, 3, 4};
    do {
      Permutation u = Permutation::from_one_line(v);
      for (int k = 1; k <= 3; ++k) {
        if (!monk_check(u, k))
          record("Monk identity fails at u=" + u.one_line_string() +
                 " k=" + std::to_string(k));
        ++monk;
        for (int m = 1; m <= 3; ++m) {
          if (!pieri_check(u, k, m))
            record("Pieri identity fails at u=" + u.one_line_string() +
                   " k=" + std::to_string(k) + " m=" + std::to_string(m));
          ++pieri;
        }
      }
    } while (std::next_permutation(v.begin(), v.end()));
  }

  std::ostringstream os;
  if (fail.empty())
    os << pairs << " interval coefficients match the oracle over "
       << comparisons << " shape comparisons (" << oracle_calls
       << " oracle products, " << interval_cache.size()
       << " distinct intervals); spotlight coefficients 1/1/0; " << monk
       << " Monk and " << pieri << " Pieri identities hold";
  else
    os << fail;
  verdict(6, fail.empty(), os.str());
}

void criterion7() {
  bool pass = true;
  int shapes = 0;
  for (int d = 1; d <= 6; ++d) {
    for (const auto& lam : partitions_of(d)) {
      DualFamily fam = syt_family(lam);
      if (!check_all_axioms(fam).all_passed()) {
        note(7, "axioms fail on tableaux of shape " + partition_text(lam));
        pass = false;
        continue;
      }
      ColoredGraph g = ColoredGraph::from_family(fam);
      if (connected_components(g).size() != 1) {
        note(7, "tableau graph of shape " + partition_text(lam) +
                    " is not connected");
        pass = false;
      }
      if (!(g.k_function().coefficients() ==
            schur_in_q(lam).coefficients())) {
        note(7, "tableau graph function differs from the Schur expansion at " +
                    partition_text(lam));
        pass = false;
      }
      ++shapes;
    }
  }

  auto pair_colors = [](const ColoredGraph& g) {
    std::map<std::pair<uint32_t, uint32_t>, std::vector<int>> m;
    for (const auto& e : g.edges()) m[{e.u, e.v}].push_back(e.color);
    return m;
  };
  auto degree_sequence = [&](const ColoredGraph& g) {
    std::vector<int> deg(g.vertex_count(), 0);
    for (const auto& [p, colors] : pair_colors(g)) {
      ++deg[p.first];
      ++deg[p.second];
    }
    std::sort(deg.begin(), deg.end());
    return deg;
  };

  ColoredGraph g32 = ColoredGraph::from_family(syt_family({3, 2}));
  {
    auto pc = pair_colors(g32);
    std::vector<std::vector<int>> doubled;
    for (auto& [p, colors] : pc)
      if (colors.size() > 1) {
        std::sort(colors.begin(), colors.end());
        doubled.push_back(colors);
      }
    std::sort(doubled.begin(), doubled.end());
    std::map<int, int> per_color;
    for (const auto& e : g32.edges()) ++per_color[e.color];
    bool ok32 = g32.vertex_count() == 5 && g32.edges().size() == 6 &&
                pc.size() == 4 &&
                doubled ==
                    std::vector<std::vector<int>>{{2, 3}, {3, 4}} &&
                per_color == std::map<int, int>{{2, 2}, {3, 2}, {4, 2}} &&
                degree_sequence(g32) == std::vector<int>{1, 1, 2, 2, 2};
    if (!ok32) {
      note(7, "shape [3,2] graph does not match its displayed form");
      pass = false;
    }
  }
  ColoredGraph g311 = ColoredGraph::from_family(syt_family({3, 1, 1}));
  {
    auto pc = pair_colors(g311);
    std::map<int, int> per_color;
    for (const auto& e : g311.edges()) ++per_color[e.color];
    bool ok311 = g311.vertex_count() == 6 && g311.edges().size() == 6 &&
                 pc.size() == 6 &&
                 per_color == std::map<int, int>{{2, 2}, {3, 2}, {4, 2}} &&
                 degree_sequence(g311) ==
                     std::vector<int>{1, 1, 2, 2, 3, 3};
    if (!ok311) {
      note(7, "shape [3,1,1] graph does not match its displayed form");
      pass = false;
    }
  }

  // the two displayed graphs are the length-5 census classes carrying s[3,2]
  // and s[3,1,1]
  if (g_census5) {
    auto match = [&](int vertices, const std::string& fn,
                     const ColoredGraph& g) {
      std::vector<const CensusClass*> hits;
      for (const auto& cls : g_census5->classes)
        if (cls.vertices == vertices && cls.function == fn)
          hits.push_back(&cls);
      return hits.size() == 1 &&
             hits[0]->certificate == certificate_hex(certificate(g));
    };
    if (!match(5, "s[3,2]", g32) || !match(6, "s[3,1,1]", g311)) {
      note(7, "displayed tableau graphs do not match their census classes");
      pass = false;
    }
  } else {
    note(7, "length-5 census unavailable, class matching skipped");
    pass = false;
  }

  verdict(7, pass,
          std::to_string(shapes) +
              " tableau families pass the axiom battery with component "
              "function equal to the Schur fundamental expansion; the "
              "[3,2] and [3,1,1] graphs match their displayed forms and "
              "census classes");
}

void criterion8(int jobs) {
  std::ostringstream os;
  bool pass = true;

  for (int n = 3; n <= 6; ++n) {
    progress("involution sweep, length " + std::to_string(n));
    auto chains = enumerate_canonical_chains(n, jobs);
    std::atomic<uint64_t> bad{0};
    std::mutex wit_mutex;
    std::string witness;
    auto flag = [&](const Chain& c, const char* what) {
      bad.fetch_add(1, std::memory_order_relaxed);
      std::lock_guard<std::mutex> lock(wit_mutex);
      if (witness.empty())
        witness = std::string(what) + " at " + c.text();
    };

    parallel_over(chains.size(), jobs, [&](size_t b, size_t e) {
      for (size_t idx = b; idx < e; ++idx) {
        const Chain& c = chains[idx];
        // reversal identity on descent sets
        if (!(reverse_chain(c).descents() ==
              c.descents().complement(n).reverse(n)))
          flag(c, "reversal descent identity");
        Chain big = [&] {
          std::vector<Transposition> ts;
          for (const auto& t : c.transpositions())
            ts.emplace_back(3 * t.a, 3 * t.b);
          return Chain::trusted(std::move(ts));
        }();
        for (int i = 2; i <= n - 1; ++i) {
          PhiResult r = phi(c, i);
          if (phi(r.chain, i).chain != c) flag(c, "involution");
          for (int pos = 0; pos < n; ++pos)
            if ((pos < i - 2 || pos > i) && !(r.chain.at(pos) == c.at(pos)))
              flag(c, "window locality");
          if (!phi_reversal_check(c, i)) flag(c, "reversal commutation");
          PhiResult rs = phi(big, i);
          std::vector<Transposition> lift;
          for (const auto& t : r.chain.transpositions())
            lift.emplace_back(3 * t.a, 3 * t.b);
          if (!(rs.chain == Chain::trusted(std::move(lift))) ||
              rs.rule != r.rule)
            flag(c, "relabeling equivariance");
          for (int j = i + 3; j <= n - 1; ++j)
            if (phi(phi(c, i).chain, j).chain != phi(phi(c, j).chain, i).chain)
              flag(c, "distant commutation");
        }
      }
    });
    if (bad.load() != 0) {
      note(8, "length " + std::to_string(n) + ": " +
                  std::to_string(bad.load()) + " violations, first " +
                  witness);
      pass = false;
    }

    // rewrite-closure validity oracle against stepwise validation
    if (n <= 5) {
      progress("rewrite-closure battery, length " + std::to_string(n));
      uint64_t clean_bad = 0, mutations = 0, mutation_bad = 0;
      auto agrees = [&](std::vector<Transposition> ts) {
        bool clean = substitution_closure_clean(ts);
        bool valid = true;
        try {
          Chain::validate(ts);
        } catch (const NotAChain&) {
          valid = false;
        }
        ++mutations;
        if (clean != valid) ++mutation_bad;
      };
      for (const Chain& c : chains) {
        if (!substitution_closure_clean(c.transpositions())) ++clean_bad;
        const auto& ts = c.transpositions();
        std::vector<size_t> swap_at;
        if (n <= 4)
          for (size_t p = 0; p + 1 < ts.size(); ++p) swap_at.push_back(p);
        else
          swap_at = {0, 2};
        for (size_t p : swap_at) {
          auto mutated = ts;
          std::swap(mutated[p], mutated[p + 1]);
          if (mutated == ts) continue;
          agrees(std::move(mutated));
        }
        auto replaced = ts;
        replaced.back() = Transposition(1, 2);
        if (!(replaced == ts)) agrees(std::move(replaced));
      }
      if (clean_bad != 0 || mutation_bad != 0) {
        note(8, "length " + std::to_string(n) + ": " +
                    std::to_string(clean_bad) + " valid chains reported "
                    "unclean, " +
                    std::to_string(mutation_bad) + " of " +
                    std::to_string(mutations) +
                    " mutations disagree with stepwise validation");
        pass = false;
      }
    }
  }

  verdict(8, pass,
          "involution, locality, distant commutation, relabeling "
          "equivariance, and both reversal identities hold through length 6; "
          "rewrite-closure cleanliness agrees with stepwise validation "
          "through length 5 on all chains and mutations");
}

}  // namespace

int main() {
  const int jobs =
      std::max(1u, std::thread::hardware_concurrency());
  std::printf("acceptance gate, %d worker thread%s\n", jobs,
              jobs == 1 ? "" : "s");

  guarded_criterion(1, [&] { criterion1(jobs); });
  guarded_criterion(2, [&] { criterion2(jobs); });
  guarded_criterion(3, [&] { criterion3(jobs); });
  guarded_criterion(4, [&] { criterion4(); });
  guarded_criterion(5, [&] { criterion5(jobs); });
  guarded_criterion(6, [&] { criterion6(); });
  guarded_criterion(7, [&] { criterion7(); });
  guarded_criterion(8, [&] { criterion8(jobs); });

  std::printf("acceptance: %d of 8 criteria passed\n", 8 - failures);
  return failures;
}
