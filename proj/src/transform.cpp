#include "bident/transform.hpp"

#include <algorithm>

#include "bident/smooth.hpp"

namespace bident {

bool is_valid_sequence(const SubdivisionSequence& seq) {
  if (seq.base_n < 3) return false;
  for (size_t i = 0; i < seq.steps.size(); ++i) {
    int bound = seq.base_n - 3 + static_cast<int>(i) + 1;
    if (seq.steps[i] < 1 || seq.steps[i] > bound) return false;
  }
  return true;
}

Structure smooth_at(const Structure& s, int pos) {
  if (pos == kPosX || pos == kPosY) {
    const long dv = pos == kPosX ? s.dx() : s.dy();
    if (dv != 1) throw NotSmoothable("prong d is not 1");
    throw ProngSmoothingLeavesPath("smoothing a prong yields a path structure");
  }
  const int ell = s.ell();
  if (pos < 1 || pos > ell) throw InvalidPosition("smoothing position out of range");
  const size_t i = static_cast<size_t>(2 + pos);
  if (s.d()[i] != 1) throw NotSmoothable("d is not 1 at the requested position");

  Vec d = s.d();
  Vec r = s.r();
  if (pos == ell) {
    d[i - 1] -= 1;
    d.pop_back();
    r.pop_back();
  } else {
    d[i - 1] -= 1;
    d[i + 1] -= 1;
    d.erase(d.begin() + static_cast<long>(i));
    r.erase(r.begin() + static_cast<long>(i));
  }
  return Structure(BidentShape(s.n() - 1), std::move(d), std::move(r));
}

Structure subdivide_at(const Structure& s, int pos) {
  const int ell = s.ell();
  if (pos < 1 || pos > ell + 1) throw InvalidPosition("subdivision position out of range");
  Vec d = s.d();
  Vec r = s.r();
  if (pos == ell + 1) {
    d.back() += 1;  // v_0 itself when the tail is empty
    d.push_back(1);
    r.push_back(r.back());
  } else {
    const size_t i = static_cast<size_t>(2 + pos);
    long sum = checked_add(r[i - 1], r[i]);
    d[i - 1] += 1;
    d[i] += 1;
    d.insert(d.begin() + static_cast<long>(i), 1);
    r.insert(r.begin() + static_cast<long>(i), sum);
  }
  return Structure(BidentShape(s.n() + 1), std::move(d), std::move(r));
}

Structure apply_sequence(const Structure& s0, const SubdivisionSequence& seq) {
  if (seq.base_n != s0.n()) throw InvalidPosition("sequence base does not match the structure");
  if (!is_valid_sequence(seq)) throw InvalidPosition("invalid subdivision sequence");
  Structure cur = s0;
  for (int b : seq.steps) cur = subdivide_at(cur, b);
  return cur;
}

SubdivisionSequence canonicalize_sequence(SubdivisionSequence seq) {
  if (!is_valid_sequence(seq)) throw InvalidPosition("invalid subdivision sequence");
  auto& b = seq.steps;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t j = 0; j + 1 < b.size(); ++j) {
      if (b[j] > b[j + 1]) {
        int lo = b[j + 1];
        b[j + 1] = b[j] + 1;
        b[j] = lo;
        changed = true;
      }
    }
  }
  return seq;
}

std::pair<Structure, SubdivisionSequence> smooth_ancestor(const Structure& s) {
  if (s.dx() < 2 || s.dy() < 2)
    throw ProngDegreeOne("structures with a d = 1 prong have no bident smooth ancestor");
  Structure cur = s;
  std::vector<int> recovered;
  for (;;) {
    int pos = 0;
    for (int j = cur.ell(); j >= 1; --j) {
      if (cur.d_tail(j) == 1) {
        pos = j;
        break;
      }
    }
    if (pos == 0) break;
    recovered.push_back(pos);
    cur = smooth_at(cur, pos);
  }
  std::reverse(recovered.begin(), recovered.end());
  SubdivisionSequence seq{cur.n(), std::move(recovered)};
  return {std::move(cur), std::move(seq)};
}

Int catalan(int n) {
  if (n < 0) throw PreconditionViolated("catalan needs n >= 0");
  Int c;
  mpz_bin_uiui(c.get_mpz_t(), 2ul * static_cast<unsigned long>(n), static_cast<unsigned long>(n));
  mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n) + 1);
  return c;
}

Int ballot(int n, int k) {
  if (n < 0 || k < 0) throw PreconditionViolated("ballot needs n, k >= 0");
  if (k > n) return 0;
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n + k), static_cast<unsigned long>(n));
  b *= (n - k + 1);
  mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(n) + 1);
  return b;
}

Int count_descendants(int m, int n) {
  if (!(3 <= m && m <= n)) throw PreconditionViolated("need 3 <= m <= n");
  return ballot(n - 3, n - m);
}

namespace {

Int total_from_smooth(int n, const std::vector<Int>& smooth) {
  // smooth[m] = |SArith(D_m)| for 4 <= m <= n
  Int total = 2 * catalan(n - 2);
  for (int m = 4; m <= n; ++m) total += ballot(n - 3, n - m) * smooth[static_cast<size_t>(m)];
  return total;
}

}  // namespace

Int count_total(int n) {
  if (n < 3) throw PreconditionViolated("n must be at least 3");
  if (n == 3) return 2;
  std::vector<Int> smooth(static_cast<size_t>(n) + 1);
  for (int m = 4; m <= n; ++m) smooth[static_cast<size_t>(m)] = count_smooth(m);
  return total_from_smooth(n, smooth);
}

std::vector<CountRow> count_table(int from, int to) {
  if (!(3 <= from && from <= to)) throw PreconditionViolated("need 3 <= from <= to");
  std::vector<Int> smooth(static_cast<size_t>(to) + 1);
  for (int m = 4; m <= to; ++m) smooth[static_cast<size_t>(m)] = count_smooth(m);
  std::vector<CountRow> rows;
  rows.reserve(static_cast<size_t>(to - from + 1));
  for (int n = from; n <= to; ++n) {
    CountRow row;
    row.n = n;
    row.smooth = n == 3 ? Int(1) : smooth[static_cast<size_t>(n)];
    row.total = n == 3 ? Int(2) : total_from_smooth(n, smooth);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace bident
