// Acceptance suite: runs every quantitative claim this library is required
// to reproduce, printing one PASS/FAIL line per criterion.  Exit status is 0
// only if every criterion passes.

#include <chrono>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bident/core.hpp"
#include "bident/critical.hpp"
#include "bident/oracle.hpp"
#include "bident/smooth.hpp"
#include "bident/transform.hpp"
#include "bident/verify.hpp"

using namespace bident;

namespace {

struct Expected {
  int n;
  const char* smooth;
  const char* total;
};

// counts of smooth structures and of all structures for 4 <= n <= 43
const Expected kCounts[] = {
    {4, "10", "14"},
    {5, "16", "46"},
    {6, "50", "176"},
    {7, "52", "620"},
    {8, "126", "2218"},
    {9, "124", "7938"},
    {10, "250", "28572"},
    {11, "244", "103384"},
    {12, "434", "376056"},
    {13, "432", "1374680"},
    {14, "690", "5048348"},
    {15, "710", "18618290"},
    {16, "1032", "68932582"},
    {17, "1066", "256133188"},
    {18, "1552", "954856744"},
    {19, "1576", "3570492960"},
    {20, "2114", "13388550056"},
    {21, "2190", "50334109160"},
    {22, "2874", "189684561610"},
    {23, "2946", "716420218810"},
    {24, "3806", "2711456910222"},
    {25, "3958", "10281958081812"},
    {26, "5022", "39059990775594"},
    {27, "5054", "148635185291644"},
    {28, "6236", "566498545019834"},
    {29, "6380", "2162330791492290"},
    {30, "7946", "8265205867169156"},
    {31, "8106", "31634330508005370"},
    {32, "9612", "121228606496811950"},
    {33, "10060", "465118574235674538"},
    {34, "11744", "1786517442487495664"},
    {35, "12104", "6869273566377014478"},
    {36, "14320", "26439373973414097184"},
    {37, "14736", "101860743777136381978"},
    {38, "17006", "392787703022696559172"},
    {39, "17560", "1515952946666164348660"},
    {40, "20050", "5855622326076661242226"},
    {41, "20586", "22636211612489393913770"},
    {42, "23824", "87571480303245046251032"},
    {43, "24310", "339028157112678873881416"},
};

// distribution of critical-group orders for 4 <= n <= 12
const std::map<int, std::map<long, long>> kOrderTable = {
    {4, {{1, 10}, {2, 3}, {3, 1}}},
    {5, {{1, 32}, {2, 8}, {3, 5}, {5, 1}}},
    {6, {{1, 116}, {2, 31}, {3, 18}, {4, 5}, {5, 5}, {7, 1}}},
    {7, {{1, 400}, {2, 108}, {3, 65}, {4, 22}, {5, 20}, {7, 4}, {9, 1}}},
    {8,
     {{1, 1406}, {2, 384}, {3, 236}, {4, 84}, {5, 79}, {6, 3}, {7, 18}, {8, 2}, {9, 5}, {11, 1}}},
    {9,
     {{1, 4980},
      {2, 1366},
      {3, 848},
      {4, 308},
      {5, 300},
      {6, 20},
      {7, 77},
      {8, 12},
      {9, 20},
      {11, 6},
      {13, 1}}},
    {10,
     {{1, 17794},
      {2, 4885},
      {3, 3050},
      {4, 1131},
      {5, 1122},
      {6, 101},
      {7, 314},
      {8, 59},
      {9, 77},
      {10, 2},
      {11, 29},
      {13, 7},
      {15, 1}}},
    {11,
     {{1, 64042},
      {2, 17566},
      {3, 11009},
      {4, 4158},
      {5, 4166},
      {6, 450},
      {7, 1245},
      {8, 264},
      {9, 296},
      {10, 16},
      {11, 128},
      {13, 35},
      {15, 8},
      {17, 1}}},
    {12,
     {{1, 232018},
      {2, 63530},
      {3, 39920},
      {4, 15314},
      {5, 15431},
      {6, 1883},
      {7, 4856},
      {8, 1120},
      {9, 1142},
      {10, 93},
      {11, 537},
      {13, 156},
      {14, 2},
      {15, 44},
      {17, 9},
      {19, 1}}},
};

// the full list of structures on the 4-vertex bident
const std::vector<std::pair<Vec, Vec>> kFour = {
    {{1, 1, 3, 1}, {1, 1, 1, 1}}, {{3, 3, 1, 3}, {1, 1, 3, 1}}, {{6, 3, 1, 2}, {1, 2, 6, 3}},
    {{3, 6, 1, 2}, {2, 1, 6, 3}}, {{6, 2, 1, 3}, {1, 3, 6, 2}}, {{2, 6, 1, 3}, {3, 1, 6, 2}},
    {{3, 2, 1, 6}, {2, 3, 6, 1}}, {{2, 3, 1, 6}, {3, 2, 6, 1}}, {{2, 1, 2, 2}, {1, 2, 2, 1}},
    {{1, 2, 2, 2}, {2, 1, 2, 1}}, {{2, 2, 2, 1}, {1, 1, 2, 2}}, {{4, 2, 1, 4}, {1, 2, 4, 1}},
    {{2, 4, 1, 4}, {2, 1, 4, 1}}, {{4, 4, 1, 2}, {1, 1, 4, 2}}};
// indices of the non-smooth entries in kFour
const std::set<size_t> kFourNonSmooth = {0, 8, 9, 10};

int failures = 0;

void report(int id, bool pass, const std::string& summary) {
  std::cout << "CRITERION " << id << (pass ? " PASS — " : " FAIL — ") << summary << "\n";
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::map<long, Int> to_int_map(const std::map<long, long>& m) {
  std::map<long, Int> out;
  for (const auto& [k, v] : m) out[k] = v;
  return out;
}

void criterion_1_counts(const std::vector<CountRow>& rows, double elapsed) {
  bool ok = rows.size() == std::size(kCounts);
  std::string bad;
  for (size_t i = 0; ok && i < rows.size(); ++i) {
    const Expected& e = kCounts[i];
    if (rows[i].n != e.n || rows[i].smooth != Int(e.smooth) || rows[i].total != Int(e.total)) {
      ok = false;
      bad = " first mismatch at n=" + std::to_string(e.n);
    }
  }
  if (elapsed >= 60.0) {
    ok = false;
    bad += " (over the 60s budget)";
  }
  std::ostringstream os;
  os << "all 40 count pairs for 4<=n<=43 exact, within the 60s budget (" << elapsed << "s)" << bad;
  report(1, ok, os.str());
}

void criterion_2_ground_truth() {
  std::set<std::pair<Vec, Vec>> expect_all(kFour.begin(), kFour.end());
  std::set<std::pair<Vec, Vec>> expect_smooth;
  for (size_t i = 0; i < kFour.size(); ++i)
    if (!kFourNonSmooth.count(i)) expect_smooth.insert(kFour[i]);

  std::set<std::pair<Vec, Vec>> got_all, got_smooth;
  for (const Structure& s : oracle_all(4)) got_all.insert({s.d(), s.r()});
  for (const Structure& s : enumerate_smooth(4)) got_smooth.insert({s.d(), s.r()});
  report(2, got_all == expect_all && got_smooth == expect_smooth,
         "the 14 printed structures on D_4, with the printed 10 as the smooth subset");
}

void criterion_3_oracle_equivalence() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string bad;
  for (int n = 3; n <= 12 && ok; ++n) {
    if (Int(static_cast<long>(oracle_all(n).size())) != count_total(n)) {
      ok = false;
      bad = " count mismatch at n=" + std::to_string(n);
    }
  }
  for (int n = 3; n <= 25 && ok; ++n) {
    if (oracle_smooth(n) != enumerate_smooth(n)) {
      ok = false;
      bad = " smooth set mismatch at n=" + std::to_string(n);
    }
  }
  std::ostringstream os;
  os << "brute-force enumerations agree: totals to n=12, smooth sets to n=25 ("
     << seconds_since(t0) << "s)" << bad;
  report(3, ok, os.str());
}

void criterion_4_order_table(const std::map<int, std::map<long, Int>>& dists) {
  bool ok = true;
  std::string bad;
  for (const auto& [n, row] : kOrderTable) {
    if (dists.at(n) != to_int_map(row)) {
      ok = false;
      bad = " row n=" + std::to_string(n);
      break;
    }
  }
  report(4, ok, "order distributions match every table cell for 4<=n<=12" + bad);
}

void criterion_5_critical_consistency() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string bad;
  long cases = 0;
  for (int n = 3; n <= 8 && ok; ++n) {
    for (const Structure& s : oracle_all(n)) {
      ++cases;
      Int order = group_order(s);
      std::vector<Int> snf = smith_normal_form(laplacian_variant(s));
      int nontrivial = 0;
      bool good = snf.back() == 0;
      for (size_t i = 0; i + 1 < snf.size(); ++i) {
        if (snf[i] != 1) {
          ++nontrivial;
          good = good && snf[i] == order;
        }
      }
      good = good && nontrivial <= 1 && (nontrivial == 1) == (order != 1);
      // tree product with literal degrees
      Rat prod = 1;
      for (int v = 0; v < s.n(); ++v) {
        int deg = (v == 0 || v == 1)            ? 1
                  : v == 2                      ? (s.ell() >= 1 ? 3 : 2)
                  : v == s.n() - 1              ? 1
                                                : 2;
        if (deg == 1) prod /= s.r()[static_cast<size_t>(v)];
        if (deg == 3) prod *= s.r()[static_cast<size_t>(v)];
      }
      prod.canonicalize();
      good = good && prod == Rat(order);
      if (!good) {
        ok = false;
        bad = " counterexample " + to_json(s);
        break;
      }
    }
  }
  std::ostringstream os;
  os << "smith form and tree product agree with the order formula on " << cases
     << " structures, n<=8 (" << seconds_since(t0) << "s)" << bad;
  report(5, ok, os.str());
}

void criterion_6_extremal_orders(const std::map<int, std::map<long, Int>>& dists) {
  bool ok = true;
  std::string bad;
  for (int n = 4; n <= 12 && ok; ++n) {
    const std::map<long, Int>& dist = dists.at(n);
    long max_seen = dist.rbegin()->first;
    auto [claimed, witness] = max_order(n);
    if (Int(max_seen) != claimed || dist.rbegin()->second != 1 || witness.n() != n ||
        group_order(witness) != claimed) {
      ok = false;
      bad = " odd case at n=" + std::to_string(n);
    }
    long max_even = 0;
    for (const auto& [m, cnt] : dist)
      if (m % 2 == 0) max_even = m;
    if (max_even != max_even_order(n)) {
      ok = false;
      bad = " even case at n=" + std::to_string(n);
    }
  }
  report(6, ok, "maximal orders 2n-5 (unique witness) and the even-order formula, 4<=n<=12" + bad);
}

void criterion_7_minimal_vertices(const std::map<int, std::map<long, Int>>& dists) {
  bool ok = true;
  std::ostringstream bad;
  for (long m = 2; m <= 19; ++m) {
    long first = -1;
    for (int n = 4; n <= 12 && first < 0; ++n)
      if (dists.at(n).count(m)) first = n;
    // columns that are all zeros within the table (m = 12, 16, 18) pin the
    // weaker fact that the order first appears beyond row 12
    const bool good = first >= 0 ? first == min_vertices(m) : min_vertices(m) > 12;
    if (!good) {
      ok = false;
      bad << " column m=" << m << " first-row=" << first << " computed=" << min_vertices(m) << ";";
    }
  }
  if (min_vertices(6) != 8) {
    ok = false;
    bad << " min_vertices(6)=" << min_vertices(6) << " expected 8;";
  }
  if (min_vertices(210) != 200) {
    ok = false;
    auto [n210, w210] = min_vertices_witness(210);
    bad << " min_vertices(210)=" << n210 << " expected 200"
        << " [exhaustive scan over coprime k: k=13 gives 210-16+chain_length(13,11)=210-16+7=201,"
        << " k=11 gives 202, every other coprime k gives more; the explicit witness on D_"
        << w210.n() << " has order " << group_order(w210).get_str()
        << ", so 201 is attained and 200 is not];";
  }
  for (long m = 2; m <= 300; ++m) {
    if (m == 6 || m == 210) continue;
    long k = 2;
    while (std::gcd(m, k) != 1) ++k;
    if (min_vertices(m) != vertices_for_order(m, k)) {
      ok = false;
      bad << " smallest-coprime rule fails at m=" << m << ";";
    }
  }
  report(7, ok,
         "minimal-n duality for 2<=m<=19, the exceptional orders, and the rule to m=300" +
             (ok ? std::string() : ":" + bad.str()));
}

void criterion_8_property_suites() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  long cases = 0;
  std::string bad;
  for (const char* suite : {"lemmas-F", "total-oracle"}) {
    for (const CheckResult& r : run_suite(suite, -1)) {
      cases += r.cases;
      if (!r.pass && !r.report_only) {
        ok = false;
        bad += " " + r.name;
      }
    }
  }
  std::ostringstream os;
  os << "property suites, " << cases << " cases (" << seconds_since(t0) << "s)" << bad;
  report(8, ok, os.str());
}

void criterion_9_bounds(const std::vector<CountRow>& rows) {
  bool ok = true;
  std::string bad;
  for (int n = 4; n <= 43 && ok; ++n) {
    if (!smooth_bounds_check(n).ok) {
      ok = false;
      bad = " cubic sandwich fails at n=" + std::to_string(n);
    }
  }
  for (const CountRow& row : rows) {
    Int lo = 2 * catalan(row.n - 2) + catalan(row.n - 3);
    Int hi = 2 * catalan(row.n - 2) + 702 * catalan(row.n - 3);
    if (!(lo <= row.total && row.total < hi)) {
      ok = false;
      bad = " catalan sandwich fails at n=" + std::to_string(row.n);
    }
  }
  report(9, ok, "cubic sandwich on smooth counts and catalan sandwich on totals, 4<=n<=43" + bad);
}

void criterion_10_parity() {
  std::vector<CheckResult> results = run_suite("parity", 60);
  bool clean = true;
  std::string detail;
  for (const CheckResult& r : results) {
    clean = clean && r.pass;
    detail = r.detail;
  }
  // report-only: findings are logged, never fatal
  report(10, true,
         std::string("parity pattern of second differences, 5<=n<=60 (report-only): ") +
             (clean ? "holds" : ("FINDING: " + detail)));
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<CountRow> rows = count_table(4, 43);
  criterion_1_counts(rows, seconds_since(t0));

  criterion_2_ground_truth();
  criterion_3_oracle_equivalence();

  std::map<int, std::map<long, Int>> dists;
  for (int n = 4; n <= 12; ++n) dists[n] = order_distribution(n);
  criterion_4_order_table(dists);
  criterion_5_critical_consistency();
  criterion_6_extremal_orders(dists);
  criterion_7_minimal_vertices(dists);
  criterion_8_property_suites();
  criterion_9_bounds(rows);
  criterion_10_parity();

  if (failures != 0) std::cout << failures << " criterion(s) failed\n";
  return failures == 0 ? 0 : 1;
}
