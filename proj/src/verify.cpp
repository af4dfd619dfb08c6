#include "bident/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "bident/core.hpp"
#include "bident/critical.hpp"
#include "bident/euclid.hpp"
#include "bident/oracle.hpp"
#include "bident/smooth.hpp"
#include "bident/transform.hpp"

namespace bident {

namespace {

using Rng = std::mt19937_64;

long rnd(Rng& g, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(g);
}

class Suite {
 public:
  void add(const std::string& name, bool pass, long cases, const std::string& detail = "") {
    results_.push_back(CheckResult{name, pass, false, cases, detail});
  }
  void add_report(const std::string& name, bool clean, long cases, const std::string& detail) {
    results_.push_back(CheckResult{name, clean, true, cases, detail});
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

std::string describe(const Structure& s) { return to_json(s); }

// ----------------------------------------------------------------- lemmas-F

void suite_lemmas_f(Suite& out) {
  {
    Rng g(0x5eed0001);
    long cases = 0;
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 2000 && ok; ++i) {
      long x = rnd(g, 1, 1000000), y = rnd(g, 1, 1000000), k = rnd(g, 0, 20);
      ++cases;
      if (chain_length(x + k * y, y) != chain_length(x, y)) {
        ok = false;
        detail = "x=" + std::to_string(x) + " y=" + std::to_string(y) + " k=" + std::to_string(k);
      }
    }
    out.add("euclid/shift-invariance", ok, cases, detail);
  }
  {
    Rng g(0x5eed0002);
    long cases = 0;
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 2000 && ok; ++i) {
      long x = rnd(g, 1, 10000), y = rnd(g, 0, 10000), k = rnd(g, 0, 20);
      ++cases;
      if (chain_length(x, k * x + y) != chain_length(x, y) + k) {
        ok = false;
        detail = "x=" + std::to_string(x) + " y=" + std::to_string(y) + " k=" + std::to_string(k);
      }
    }
    out.add("euclid/step-additivity", ok, cases, detail);
  }
  {
    Rng g(0x5eed0003);
    long cases = 0;
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 2000 && ok; ++i) {
      long x = rnd(g, 1, 10000), y = rnd(g, 0, 10000), a = rnd(g, 1, 50);
      ++cases;
      if (chain_length(a * x, a * y) != chain_length(x, y)) {
        ok = false;
        detail = "x=" + std::to_string(x) + " y=" + std::to_string(y) + " a=" + std::to_string(a);
      }
    }
    out.add("euclid/scale-invariance", ok, cases, detail);
  }
  {
    bool ok = true;
    long cases = 0;
    std::string detail;
    for (long x = 2; x <= 500 && ok; ++x) {
      ++cases;
      if (chain_length(x, x - 1) != x) {
        ok = false;
        detail = "x=" + std::to_string(x);
      }
    }
    out.add("euclid/consecutive-arguments", ok, cases, detail);
  }
  {
    Rng g(0x5eed0004);
    bool ok = true;
    long cases = 0;
    std::string detail;
    for (int i = 0; i < 2000 && ok; ++i) {
      long x = rnd(g, 1, 100000), y = rnd(g, 0, 2000);
      ++cases;
      if (chain_length(x, y) > y + 1) {
        ok = false;
        detail = "x=" + std::to_string(x) + " y=" + std::to_string(y);
      }
    }
    for (long x = 3; x <= 300 && ok; ++x) {
      for (long y = 1; y <= x - 2 && ok; ++y) {
        ++cases;
        if (2 * chain_length(x, y) > x + 1) {
          ok = false;
          detail = "x=" + std::to_string(x) + " y=" + std::to_string(y);
        }
      }
    }
    out.add("euclid/length-caps", ok, cases, detail);
  }
  {
    Rng g(0x5eed0005);
    bool ok = true;
    long cases = 0;
    std::string detail;
    while (cases < 2000 && ok) {
      long x = rnd(g, 2, 1000000), y = rnd(g, 1, x - 1);
      long r1 = x % y;
      if (r1 == 0) continue;
      long q2 = y / r1, r2 = y % r1;
      ++cases;
      if (chain_length(x, y) != q2 + chain_length(r1, r2)) {
        ok = false;
        detail = "x=" + std::to_string(x) + " y=" + std::to_string(y);
      }
    }
    out.add("euclid/two-step-reduction", ok, cases, detail);
  }
  {
    bool ok = true;
    long cases = 0;
    std::string detail;
    for (long beta = 2; beta <= 300 && ok; ++beta) {
      for (long eps = 1; eps < beta && ok; ++eps) {
        ++cases;
        QuotientVector qv = quotients(beta, eps);
        auto [fe, fc] = chain_lengths_from_quotients(qv);
        if (fe != chain_length(beta, eps) || fc != chain_length(beta, beta - eps)) {
          ok = false;
          detail = "beta=" + std::to_string(beta) + " eps=" + std::to_string(eps);
        }
        if (Int(beta) != std::gcd(beta, eps) * continuant(qv.q)) {
          ok = false;
          detail = "continuant identity at beta=" + std::to_string(beta) +
                   " eps=" + std::to_string(eps);
        }
      }
    }
    out.add("euclid/quotient-length-formula", ok, cases, detail);
  }
  {
    Rng g(0x5eed0006);
    bool ok = true;
    long cases = 0;
    std::string detail;
    for (int i = 0; i < 1500 && ok; ++i) {
      long beta = rnd(g, 2, 1000000000), eps = rnd(g, 1, beta - 1);
      ++cases;
      if (Int(beta) != std::gcd(beta, eps) * continuant(quotients(beta, eps).q)) {
        ok = false;
        detail = "beta=" + std::to_string(beta) + " eps=" + std::to_string(eps);
      }
    }
    out.add("euclid/continuant-product", ok, cases, detail);
  }
  {
    bool ok = true;
    long cases = 0;
    std::string detail;
    for (long b = 2; b <= 40 && ok; ++b) {
      for (long eps = 1; eps < b * b && ok; ++eps) {
        ++cases;
        QuotientVector qv = quotients(b * b, eps);
        if (qv.odd_sum() > b && qv.even_sum() > b && continuant(qv.q) <= b * b) {
          ok = false;
          detail = "b=" + std::to_string(b) + " eps=" + std::to_string(eps);
        }
      }
    }
    out.add("euclid/large-quotient-sums-force-large-continuant", ok, cases, detail);
  }
  {
    bool ok = true;
    long cases = 0;
    std::string detail;
    for (long b = 2; b <= 60 && ok; ++b) {
      long short_count = 0;
      for (long eps = 0; eps < b * b; ++eps)
        if (chain_length(b * b, eps) <= b + 2) ++short_count;
      cases += b * b;
      if (2 * short_count < b * b + b) {
        ok = false;
        detail = "b=" + std::to_string(b) + " short=" + std::to_string(short_count);
      }
    }
    out.add("euclid/short-chain-density", ok, cases, detail);
  }
  {
    Rng g(0x5eed0007);
    bool ok = true;
    long cases = 0;
    std::string detail;
    while (cases < 1500 && ok) {
      long m = rnd(g, 2, 10000), k = rnd(g, 2, 100);
      if (std::gcd(m, k) != 1) continue;
      ++cases;
      long n = vertices_for_order(m, k);
      if (k * n <= (k - 1) * m + 2 * k) {
        ok = false;
        detail = "lower bound: m=" + std::to_string(m) + " k=" + std::to_string(k);
      } else if (m % k == 1 && k * n != (k - 1) * m + 1 + k * k) {
        ok = false;
        detail = "exact case: m=" + std::to_string(m) + " k=" + std::to_string(k);
      } else if (m % k != 1 && 2 * k * n > 2 * ((k - 1) * m + k - 1) + k * (k + 1)) {
        ok = false;
        detail = "upper bound: m=" + std::to_string(m) + " k=" + std::to_string(k);
      }
    }
    out.add("euclid/witness-vertex-bounds", ok, cases, detail);
  }
}

// ------------------------------------------------------------ smooth-oracle

bool strictly_decreasing_tail(const Structure& s) {
  for (int i = 0; i < s.ell(); ++i)
    if (s.r_tail(i) <= s.r_tail(i + 1)) return false;
  return true;
}

void suite_smooth_oracle(Suite& out, int max_n) {
  {
    bool ok = true;
    long cases = 0;
    std::string detail;
    for (int n = 3; n <= max_n && ok; ++n) {
      std::vector<Structure> fast = enumerate_smooth(n);
      std::vector<Structure> brute = oracle_smooth(n);
      cases += static_cast<long>(fast.size());
      if (fast != brute) {
        ok = false;
        detail = "n=" + std::to_string(n) + " fast=" + std::to_string(fast.size()) +
                 " brute=" + std::to_string(brute.size());
      }
    }
    out.add("smooth/pair-scan-equivalence", ok, cases, detail);
  }
  {
    bool ok = true;
    long cases = 0;
    std::string detail;
    for (int n = 3; n <= std::min(max_n, 20) && ok; ++n) {
      for (const Structure& s : enumerate_smooth(n)) {
        ++cases;
        Vec rb = rbar_vector(s);
        long b = std::min(rb[0], rb[1]);
        bool good = s.is_smooth() && s.d_tail(0) == 1 && s.rx() < s.r_tail(0) &&
                    s.ry() < s.r_tail(0) && strictly_decreasing_tail(s) &&
                    rb[2] == checked_mul(rb[0], rb[1]) && (n == 3 || (2 <= b && b <= 2 * n - 4));
        if (!good) {
          ok = false;
          detail = describe(s);
          break;
        }
      }
    }
    out.add("smooth/characterization-and-pair-bound", ok, cases, detail);
  }
  {
    bool ok = true;
    long cases = 0;
    std::string detail;
    for (long b = 2; b <= 4 && ok; ++b) {
      for (int n = static_cast<int>(b * b + b); n <= 40 && ok; ++n) {
        long hits = 0;
        for (const Structure& s : enumerate_smooth(n))
          if (rbar_vector(s)[1] == b) ++hits;
        ++cases;
        if (hits != b * b) {
          ok = false;
          detail = "b=" + std::to_string(b) + " n=" + std::to_string(n) +
                   " hits=" + std::to_string(hits);
        }
      }
    }
    out.add("smooth/fixed-prong-count", ok, cases, detail);
  }
  {
    bool ok = true;
    long cases = 0;
    std::string detail;
    for (long b = 2; b <= 60 && ok; ++b) {
      for (long a = b; a <= 60 && ok; ++a) {
        ++cases;
        long formula = n_of_pair(a, b);
        if (formula != n_of_pair(b, a) || formula != smooth_from_pair(a, b).n()) {
          ok = false;
          detail = "a=" + std::to_string(a) + " b=" + std::to_string(b);
        }
      }
    }
    out.add("smooth/vertex-count-formula", ok, cases, detail);
  }
}

// ------------------------------------------------------------- total-oracle

void suite_total_oracle(Suite& out, int max_n) {
  {
    bool ok = true;
    long cases = 0;
    std::string detail;
    for (int n = 3; n <= max_n && ok; ++n) {
      std::vector<Structure> all = oracle_all(n);
      cases += static_cast<long>(all.size());
      if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        ok = false;
        detail = "duplicate structure at n=" + std::to_string(n);
      } else if (Int(static_cast<long>(all.size())) != count_total(n)) {
        ok = false;
        detail = "n=" + std::to_string(n) + " enumerated=" + std::to_string(all.size()) +
                 " formula=" + count_total(n).get_str();
      }
    }
    out.add("oracle/full-enumeration-count", ok, cases, detail);
  }
  {
    bool ok = true;
    long cases = 0;
    std::string detail;
    for (int n = 4; n <= std::min(max_n, 8) && ok; ++n) {
      for (const Structure& s : oracle_all(n)) {
        ++cases;
        bool no_small_tail_d = true;
        for (int i = 1; i <= s.ell(); ++i)
          if (s.d_tail(i) < 2) no_small_tail_d = false;
        bool shrinking_gaps = true;
        for (int i = 0; i + 1 < s.ell(); ++i)
          if (s.r_tail(i) - s.r_tail(i + 1) < s.r_tail(i + 1) - s.r_tail(i + 2))
            shrinking_gaps = false;
        if (s.ell() >= 1 && s.r_tail(s.ell() - 1) - s.r_tail(s.ell()) <= 0) shrinking_gaps = false;
        bool decreasing = strictly_decreasing_tail(s);
        if (no_small_tail_d != shrinking_gaps || shrinking_gaps != decreasing) {
          ok = false;
          detail = describe(s);
          break;
        }
      }
    }
    out.add("oracle/tail-condition-equivalence", ok, cases, detail);
  }
  {
    Rng g(0x5eed0010);
    bool ok = true;
    long cases = 0;
    std::string detail;
    for (int n = 3; n <= max_n && ok; ++n) {
      std::vector<Structure> all = oracle_all(n);
      if (n <= 8) {
        for (const Structure& s : all) {
          ++cases;
          if (!kernel_check(s)) {
            ok = false;
            detail = describe(s);
            break;
          }
        }
      } else {
        for (int i = 0; i < 200 && ok; ++i) {
          const Structure& s = all[static_cast<size_t>(rnd(g, 0, static_cast<long>(all.size()) - 1))];
          ++cases;
          if (!kernel_check(s)) {
            ok = false;
            detail = describe(s);
          }
        }
      }
    }
    out.add("oracle/kernel-rank", ok, cases, detail);
  }
  {
    bool ok = true;
    long cases = 0;
    std::string detail;
    for (int k = 1; k <= 9 && ok; ++k) {
      std::vector<PathStructure> paths = oracle_paths(k);
      cases += static_cast<long>(paths.size());
      if (Int(static_cast<long>(paths.size())) != catalan(k - 1)) {
        ok = false;
        detail = "k=" + std::to_string(k) + " got=" + std::to_string(paths.size());
      }
      for (const PathStructure& p : paths) {
        long g = 0;
        for (long v : p.r) g = std::gcd(g, v);
        if (g != 1) {
          ok = false;
          detail = "imprimitive path at k=" + std::to_string(k);
        }
        for (int i = 0; i < p.k() && k >= 2; ++i) {
          long sum = (i > 0 ? p.r[static_cast<size_t>(i - 1)] : 0) +
                          (i + 1 < p.k() ? p.r[static_cast<size_t>(i + 1)] : 0);
          if (p.d[static_cast<size_t>(i)] * p.r[static_cast<size_t>(i)] != sum) {
            ok = false;
            detail = "path equation fails at k=" + std::to_string(k);
          }
        }
      }
    }
    out.add("oracle/path-counts", ok, cases, detail);
  }
  {
    bool ok = true;
    long cases = 0;
    std::string detail;
    for (int n = 4; n <= std::min(max_n, 8) && ok; ++n) {
      for (const Structure& s : oracle_all(n)) {
        if (s.dx() < 2 || s.dy() < 2) continue;
        ++cases;
        auto [base, seq] = smooth_ancestor(s);
        bool nondecreasing = std::is_sorted(seq.steps.begin(), seq.steps.end());
        if (!base.is_smooth() || !nondecreasing || apply_sequence(base, seq) != s) {
          ok = false;
          detail = describe(s);
          break;
        }
      }
    }
    out.add("oracle/ancestor-recovery", ok, cases, detail);
  }
  {
    Rng g(0x5eed0011);
    bool ok = true;
    long cases = 0;
    std::string detail;
    std::vector<Structure> pool = oracle_all(std::min(max_n, 8));
    for (int i = 0; i < 1200 && ok; ++i) {
      const Structure& s = pool[static_cast<size_t>(rnd(g, 0, static_cast<long>(pool.size()) - 1))];
      int pos = static_cast<int>(rnd(g, 1, s.ell() + 1));
      ++cases;
      if (smooth_at(subdivide_at(s, pos), pos) != s) {
        ok = false;
        detail = "subdivide-then-smooth at pos=" + std::to_string(pos) + " on " + describe(s);
        break;
      }
      std::vector<int> ones;
      for (int j = 1; j <= s.ell(); ++j)
        if (s.d_tail(j) == 1) ones.push_back(j);
      if (!ones.empty()) {
        int j = ones[static_cast<size_t>(rnd(g, 0, static_cast<long>(ones.size()) - 1))];
        ++cases;
        if (subdivide_at(smooth_at(s, j), j) != s) {
          ok = false;
          detail = "smooth-then-subdivide at pos=" + std::to_string(j) + " on " + describe(s);
        }
      }
    }
    out.add("transform/inverse-pairs", ok, cases, detail);
  }
  {
    Rng g(0x5eed0012);
    bool ok = true;
    long cases = 0;
    std::string detail;
    std::vector<Structure> bases;
    for (int m = 3; m <= 6; ++m)
      for (const Structure& s : oracle_smooth(m)) bases.push_back(s);
    for (int i = 0; i < 1500 && ok; ++i) {
      const Structure& base = bases[static_cast<size_t>(rnd(g, 0, static_cast<long>(bases.size()) - 1))];
      SubdivisionSequence seq;
      seq.base_n = base.n();
      int len = static_cast<int>(rnd(g, 0, 5));
      for (int j = 1; j <= len; ++j)
        seq.steps.push_back(static_cast<int>(rnd(g, 1, base.n() - 3 + j)));
      SubdivisionSequence canon = canonicalize_sequence(seq);
      ++cases;
      if (!std::is_sorted(canon.steps.begin(), canon.steps.end()) ||
          apply_sequence(base, seq) != apply_sequence(base, canon)) {
        ok = false;
        std::ostringstream os;
        os << "seq=[";
        for (int b : seq.steps) os << b << " ";
        os << "] base=" << describe(base);
        detail = os.str();
      }
    }
    out.add("transform/canonicalization", ok, cases, detail);
  }
  {
    // nondecreasing bounded sequences with k leading ones against the ballot
    // table, by explicit generation
    bool ok = true;
    long cases = 0;
    std::string detail;
    for (int n = 1; n <= 12 && ok; ++n) {
      for (int k = 0; k <= n && ok; ++k) {
        long generated = 0;
        std::function<void(int, int)> rec = [&](int i, int last) {
          if (i > n) {
            ++generated;
            return;
          }
          for (int b = last; b <= i; ++b) {
            if (i <= k && b != 1) continue;
            rec(i + 1, b);
          }
        };
        rec(1, 1);
        ++cases;
        if (Int(generated) != ballot(n, n - k)) {
          ok = false;
          detail = "n=" + std::to_string(n) + " k=" + std::to_string(k);
        }
      }
    }
    out.add("transform/ballot-sequence-count", ok, cases, detail);
  }
  {
    bool ok = true;
    long cases = 0;
    std::string detail;
    for (int n = 1; n <= 30 && ok; ++n) {
      if (ballot(n, 0) != 1 || ballot(n, n) != catalan(n)) {
        ok = false;
        detail = "edge identities at n=" + std::to_string(n);
      }
      for (int k = 1; k <= n && ok; ++k) {
        ++cases;
        if (ballot(n, k) != ballot(n, k - 1) + ballot(n - 1, k)) {
          ok = false;
          detail = "recurrence at n=" + std::to_string(n) + " k=" + std::to_string(k);
        }
      }
    }
    out.add("transform/ballot-recurrence", ok, cases, detail);
  }
  {
    // each smooth base has exactly ballot(n-3, n-m) descendants
    bool ok = true;
    long cases = 0;
    std::string detail;
    for (int m = 3; m <= 6 && ok; ++m) {
      for (const Structure& base : oracle_smooth(m)) {
        for (int n = m; n <= std::min(m + 4, 10) && ok; ++n) {
          long cnt = 0;
          visit_descendants(base, n, [&cnt](const Structure&) { ++cnt; });
          ++cases;
          if (Int(cnt) != count_descendants(m, n)) {
            ok = false;
            detail = "m=" + std::to_string(m) + " n=" + std::to_string(n) + " got=" +
                     std::to_string(cnt);
          }
        }
      }
    }
    out.add("transform/descendant-count", ok, cases, detail);
  }
}

// ----------------------------------------------------------------- critical

void suite_critical(Suite& out, int max_n) {
  {
    bool ok = true;
    long cases = 0;
    std::string detail;
    for (int n = 3; n <= std::min(max_n, 8) && ok; ++n) {
      for (const Structure& s : oracle_all(n)) {
        ++cases;
        std::vector<Int> snf = smith_normal_form(laplacian_variant(s));
        Int order = group_order(s);
        bool good = snf.back() == 0;
        int nontrivial = 0;
        for (size_t i = 0; i + 1 < snf.size(); ++i) {
          if (snf[i] == 0) good = false;
          if (snf[i] != 1) {
            ++nontrivial;
            if (snf[i] != order) good = false;
          }
        }
        if (nontrivial > 1 || (nontrivial == 0 && order != 1)) good = false;
        if (!good) {
          ok = false;
          detail = describe(s);
          break;
        }
      }
    }
    out.add("critical/snf-cyclic-order", ok, cases, detail);
  }
  {
    bool ok = true;
    long cases = 0;
    std::string detail;
    for (int n = 3; n <= std::min(max_n, 8) && ok; ++n) {
      for (const Structure& s : oracle_all(n)) {
        ++cases;
        // Lorenzini's tree product prod r_v^{deg(v) - 2}, taken literally
        Rat prod = 1;
        for (int v = 0; v < s.n(); ++v) {
          int deg;
          if (v == 0 || v == 1 || (s.ell() >= 1 && v == s.n() - 1))
            deg = 1;
          else if (v == 2)
            deg = s.ell() >= 1 ? 3 : 2;
          else
            deg = 2;
          long rv = s.r()[static_cast<size_t>(v)];
          if (deg == 1)
            prod /= rv;
          else if (deg == 3)
            prod *= rv;
        }
        prod.canonicalize();
        if (prod != Rat(group_order(s))) {
          ok = false;
          detail = describe(s);
          break;
        }
      }
    }
    out.add("critical/tree-product-formula", ok, cases, detail);
  }
  {
    Rng g(0x5eed0020);
    bool ok = true;
    long cases = 0;
    std::string detail;
    std::vector<Structure> pool = oracle_all(std::min(max_n, 8));
    for (int i = 0; i < 1500 && ok; ++i) {
      Structure s = pool[static_cast<size_t>(rnd(g, 0, static_cast<long>(pool.size()) - 1))];
      Int order = group_order(s);
      int hops = static_cast<int>(rnd(g, 1, 3));
      for (int h = 0; h < hops; ++h)
        s = subdivide_at(s, static_cast<int>(rnd(g, 1, s.ell() + 1)));
      ++cases;
      if (group_order(s) != order) {
        ok = false;
        detail = describe(s);
        break;
      }
      if (s.dx() >= 2 && s.dy() >= 2) {
        ++cases;
        if (group_order(smooth_ancestor(s).first) != order) {
          ok = false;
          detail = "ancestor order changed for " + describe(s);
        }
      }
    }
    out.add("critical/order-invariant-under-subdivision", ok, cases, detail);
  }
  {
    bool ok = true;
    long cases = 0;
    std::string detail;
    for (int n = 4; n <= std::max(max_n, 16) && ok; ++n) {
      for (const Structure& s : enumerate_smooth(n)) {
        ++cases;
        Rat bound = Rat(n - 3) * (Rat(1, checked_mul(s.ry(), s.r_last())) +
                                  Rat(1, checked_mul(s.rx(), s.r_last()))) +
                    Rat(1, checked_mul(s.rx(), s.ry()));
        bound.canonicalize();
        if (Rat(group_order(s)) > bound) {
          ok = false;
          detail = describe(s);
          break;
        }
      }
    }
    out.add("critical/smooth-order-inequality", ok, cases, detail);
  }
  {
    bool ok = true;
    long cases = 0;
    std::string detail;
    for (int n = 4; n <= std::min(max_n, 12) && ok; ++n) {
      std::map<long, Int> dist = order_distribution(n);
      ++cases;
      long max_seen = dist.rbegin()->first;
      auto [claimed, witness] = max_order(n);
      if (Int(max_seen) != claimed || dist.rbegin()->second != 1 ||
          group_order(witness) != claimed || witness.n() != n) {
        ok = false;
        detail = "n=" + std::to_string(n) + " max=" + std::to_string(max_seen);
        break;
      }
      long max_even = 0;
      for (const auto& [m, cnt] : dist)
        if (m % 2 == 0) max_even = m;
      if (max_even != max_even_order(n)) {
        ok = false;
        detail = "even order at n=" + std::to_string(n) + ": distribution says " +
                 std::to_string(max_even) + ", formula says " + std::to_string(max_even_order(n));
      }
    }
    out.add("critical/extremal-orders", ok, cases, detail);
  }
  {
    Rng g(0x5eed0021);
    bool ok = true;
    long cases = 0;
    std::string detail;
    while (cases < 1200 && ok) {
      long m = rnd(g, 2, 500), k = rnd(g, 2, std::min(m + 1, 60L));
      if (std::gcd(m, k) != 1) continue;
      ++cases;
      Structure w = order_witness(m, k);
      if (w.n() != vertices_for_order(m, k) || group_order(w) != m || !w.is_smooth()) {
        ok = false;
        detail = "m=" + std::to_string(m) + " k=" + std::to_string(k);
      }
    }
    out.add("critical/witness-construction", ok, cases, detail);
  }
  {
    // duality against the explicit tallies: the first n whose distribution
    // contains m must equal min_vertices(m); only orders first reachable
    // within the swept rows can be checked
    bool ok = true;
    long cases = 0;
    std::string detail;
    const int hi = std::min(12, std::max(max_n, 8));
    std::vector<std::map<long, Int>> dist;
    for (int n = 4; n <= hi; ++n) dist.push_back(order_distribution(n));
    for (long m = 2; m <= 19 && ok; ++m) {
      long first = -1;
      for (int n = 4; n <= hi && first < 0; ++n)
        if (dist[static_cast<size_t>(n - 4)].count(m)) first = n;
      if (min_vertices(m) > hi) {
        if (first != -1) {
          ok = false;
          detail = "m=" + std::to_string(m) + " appears before min_vertices";
        }
        continue;
      }
      ++cases;
      if (first != min_vertices(m)) {
        ok = false;
        detail = "m=" + std::to_string(m) + " first-row=" + std::to_string(first) +
                 " min_vertices=" + std::to_string(min_vertices(m));
      }
    }
    out.add("critical/minimal-vertex-duality", ok, cases, detail);
  }
  {
    bool ok = true;
    long cases = 0;
    std::string detail;
    std::ostringstream exceptions;
    for (long m = 2; m <= 300 && ok; ++m) {
      long k0 = 2;
      while (std::gcd(m, k0) != 1) ++k0;
      long rule = vertices_for_order(m, k0);
      long exact = min_vertices(m);
      ++cases;
      if (m == 6 || m == 210) {
        if (exact >= rule) {
          ok = false;
          detail = "expected m=" + std::to_string(m) + " to beat the smallest-coprime rule";
        }
        exceptions << " m=" << m << ":" << exact << "(rule " << rule << ")";
      } else if (exact != rule) {
        ok = false;
        detail = "m=" + std::to_string(m) + " rule=" + std::to_string(rule) +
                 " exhaustive=" + std::to_string(exact);
      }
    }
    out.add("critical/smallest-coprime-rule", ok, cases,
            ok ? "exceptions:" + exceptions.str() : detail);
  }
}

// ------------------------------------------------------------------- bounds

void suite_bounds(Suite& out, int max_n) {
  {
    bool ok = true;
    long cases = 0;
    std::string detail;
    for (int n = 4; n <= max_n && ok; ++n) {
      SmoothBounds b = smooth_bounds_check(n);
      ++cases;
      if (!b.ok) {
        ok = false;
        detail = "n=" + std::to_string(n) + " count=" + b.value.get_str();
      }
    }
    out.add("bounds/smooth-cubic-sandwich", ok, cases, detail);
  }
  {
    bool ok = true;
    long cases = 0;
    std::string detail;
    std::vector<CountRow> rows = count_table(4, max_n);
    for (const CountRow& row : rows) {
      ++cases;
      Int lo = 2 * catalan(row.n - 2) + catalan(row.n - 3);
      Int hi = 2 * catalan(row.n - 2) + 702 * catalan(row.n - 3);
      if (!(lo <= row.total && row.total < hi)) {
        ok = false;
        detail = "n=" + std::to_string(row.n) + " total=" + row.total.get_str();
        break;
      }
    }
    out.add("bounds/total-catalan-sandwich", ok, cases, detail);
  }
  {
    bool ok = true;
    long cases = 0;
    std::string detail;
    for (long x = 1; x <= 1000 && ok; ++x) {
      ++cases;
      double ub = mpq_get_d(log_upper_bound(x).get_mpq_t());
      double truth = std::log(static_cast<double>(x));
      if (ub < truth - 1e-12 || ub > truth + 1e-6 * std::max(1.0, truth) + 1e-12) {
        ok = false;
        detail = "x=" + std::to_string(x);
      }
    }
    out.add("bounds/log-certificate", ok, cases, detail);
  }
}

// ------------------------------------------------------------------- parity

void suite_parity(Suite& out, int max_n) {
  std::vector<CountRow> rows = count_table(3, max_n + 1);
  auto smooth_at_n = [&rows](int n) { return rows[static_cast<size_t>(n - 3)].smooth; };
  std::ostringstream bad;
  long cases = 0;
  bool clean = true;
  for (int n = 5; n <= max_n; ++n) {
    Int d1 = smooth_at_n(n) - smooth_at_n(n - 1);
    Int d2 = smooth_at_n(n + 1) - smooth_at_n(n);
    int sign = cmp(d1, d2);
    ++cases;
    // second difference: positive drop for even n, negative for odd n
    bool want_positive = n % 2 == 0;
    if ((want_positive && sign <= 0) || (!want_positive && sign >= 0)) {
      clean = false;
      bad << " n=" << n;
    }
  }
  out.add_report("parity/second-difference-pattern", clean, cases,
                 clean ? "pattern holds" : "violations at" + bad.str());
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, int max_n) {
  Suite out;
  if (suite == "lemmas-F") {
    suite_lemmas_f(out);
  } else if (suite == "smooth-oracle") {
    suite_smooth_oracle(out, max_n < 0 ? 25 : max_n);
  } else if (suite == "total-oracle") {
    suite_total_oracle(out, max_n < 0 ? 12 : max_n);
  } else if (suite == "critical") {
    suite_critical(out, max_n < 0 ? 8 : max_n);
  } else if (suite == "bounds") {
    suite_bounds(out, max_n < 0 ? 43 : max_n);
  } else if (suite == "parity") {
    suite_parity(out, max_n < 0 ? 60 : max_n);
  } else {
    throw PreconditionViolated("unknown suite: " + suite);
  }
  return out.take();
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.pass && !r.report_only) return false;
  return true;
}

}  // namespace bident
