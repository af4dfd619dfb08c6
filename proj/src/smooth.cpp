#include "bident/smooth.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "bident/euclid.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bident {

namespace {

// One (b, eps) cell of the enumeration for fixed n >= 4.  At most one t is
// admissible; the branch order below is:
//   1. chain_length(b^2,eps) + b - 1 < n   -> t >= 1, always a swapped pair
//   2. otherwise t = 0 forces a = eps - b, which needs eps >= 2b and the
//      t = 0 vertex-count formula to land exactly on n (pair if eps > 2b,
//      single structure if eps == 2b, i.e. a == b).
struct CellHit {
  long a;
  int multiplicity;  // 1 when a == b, else 2
};

std::optional<CellHit> cell_hit(int n, long b, long eps, long f) {
  if (f + b - 1 < n) {
    long t = n - f - b + 1;
    long a = checked_sub(checked_add(checked_mul(t, b * b), eps), b);
    return CellHit{a, a == b ? 1 : 2};
  }
  if (eps < 2 * b) return std::nullopt;
  long a = eps - b;
  if (f + (a * b) / eps == n) return CellHit{a, a > b ? 2 : 1};
  return std::nullopt;
}

long cell_count_for_b(int n, long b) {
  long cnt = 0;
  for (long eps = 0; eps < b * b; ++eps) {
    long f = chain_length(b * b, eps);
    if (auto hit = cell_hit(n, b, eps, f)) cnt += hit->multiplicity;
  }
  return cnt;
}

void emit_cells_for_b(int n, long b, std::vector<Structure>& out) {
  for (long eps = 0; eps < b * b; ++eps) {
    long f = chain_length(b * b, eps);
    auto hit = cell_hit(n, b, eps, f);
    if (!hit) continue;
    out.push_back(smooth_from_pair(hit->a, b));
    if (hit->a > b) out.push_back(smooth_from_pair(b, hit->a));
  }
}

Structure the_d3_structure() { return Structure(BidentShape(3), {2, 2, 1}, {1, 1, 2}); }

}  // namespace

SmoothGenerators smooth_generators(long a, long b) {
  if (a < b) std::swap(a, b);
  if (b < 2) throw PreconditionViolated("smooth generators need a >= b >= 2");
  SmoothGenerators g;
  g.a = a;
  g.b = b;
  long sum = checked_add(a, b);
  g.t = sum / (b * b);
  g.eps = sum % (b * b);
  return g;
}

Structure smooth_from_triple(long a, long b, long c) {
  if (a < 1 || b < 1 || c < 1) throw PreconditionViolated("triple entries must be positive");
  if (std::gcd(std::gcd(a, b), c) != 1) throw PreconditionViolated("triple has a common factor");
  if (c % a != 0 || c % b != 0) throw PreconditionViolated("a and b must divide c");
  if (a >= c || b >= c) throw PreconditionViolated("a and b must be less than c");

  if (c / a == 2 && c / b == 2) return the_d3_structure();

  Vec r = {a, b, c, checked_sub(c, checked_add(a, b))};
  // extend while the last entry does not divide its predecessor
  while (r[r.size() - 2] % r.back() != 0) {
    long rem = r[r.size() - 2] % r.back();
    r.push_back(r.back() - rem);
  }
  return d_from_r(BidentShape(static_cast<int>(r.size())), r);
}

Structure smooth_from_pair(long a, long b) {
  if (a < 2 || b < 2) throw PreconditionViolated("pair entries must be at least 2");
  long g = std::gcd(a, b);
  return smooth_from_triple(a / g, b / g, checked_mul(a / g, b));
}

long n_of_pair(long a, long b) {
  SmoothGenerators g = smooth_generators(a, b);
  long f = chain_length(g.b * g.b, g.eps);
  return f + g.t + checked_mul(g.a, g.b) / (g.a + g.b);
}

Vec rbar_vector(const Structure& s) {
  long den = checked_mul(s.rx(), s.ry());
  Vec out;
  out.reserve(s.r().size());
  for (long v : s.r()) {
    long num = checked_mul(v, s.r_tail(0));
    if (num % den != 0) throw Error("rbar vector is not integral");  // cannot happen on valid input
    out.push_back(num / den);
  }
  return out;
}

std::vector<Structure> enumerate_smooth_serial(int n) {
  if (n < 3) throw PreconditionViolated("n must be at least 3");
  if (n == 3) return {the_d3_structure()};
  std::vector<Structure> out;
  for (long b = 2; b <= 2 * n - 4; ++b) emit_cells_for_b(n, b, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Structure> enumerate_smooth(int n) {
  if (n < 3) throw PreconditionViolated("n must be at least 3");
  if (n == 3) return {the_d3_structure()};
  const long bmax = 2 * n - 4;
  std::vector<std::vector<Structure>> per_b(static_cast<size_t>(bmax + 1));
#pragma omp parallel for schedule(dynamic)
  for (long b = 2; b <= bmax; ++b) emit_cells_for_b(n, b, per_b[static_cast<size_t>(b)]);
  std::vector<Structure> out;
  for (auto& bucket : per_b)
    for (auto& s : bucket) out.push_back(std::move(s));
  std::sort(out.begin(), out.end());
  return out;
}

Int count_smooth_serial(int n) {
  if (n < 3) throw PreconditionViolated("n must be at least 3");
  if (n == 3) return 1;
  Int total = 0;
  for (long b = 2; b <= 2 * n - 4; ++b) total += cell_count_for_b(n, b);
  return total;
}

Int count_smooth(int n) {
  if (n < 3) throw PreconditionViolated("n must be at least 3");
  if (n == 3) return 1;
  const long bmax = 2 * n - 4;
  std::vector<long> per_b(static_cast<size_t>(bmax + 1), 0);
#pragma omp parallel for schedule(dynamic)
  for (long b = 2; b <= bmax; ++b) per_b[static_cast<size_t>(b)] = cell_count_for_b(n, b);
  Int total = 0;
  for (long c : per_b) total += c;
  return total;
}

namespace {

// Upper bound on atanh(z) for rational z in [0, 1/3]: partial sum of the odd
// power series plus a geometric bound on the truncated tail.
Rat atanh_upper(const Rat& z, int terms) {
  Rat z2 = z * z;
  Rat power = z;
  Rat sum = 0;
  for (int j = 0; j < terms; ++j) {
    sum += power / (2 * j + 1);
    power *= z2;
  }
  sum += power / (Rat(2 * terms + 1) * (1 - z2));
  return sum;
}

const Rat& ln2_upper() {
  static const Rat v = 2 * atanh_upper(Rat(1, 3), 24);
  return v;
}

}  // namespace

Rat log_upper_bound(long x) {
  if (x < 1) throw PreconditionViolated("log_upper_bound requires x >= 1");
  if (x == 1) return 0;
  int k = 0;
  while ((x >> (k + 1)) >= 1) ++k;  // 2^k <= x < 2^{k+1}
  Int pow2 = Int(1) << k;
  Rat y = Rat(Int(x)) / Rat(pow2);  // in [1, 2)
  Rat z = (y - 1) / (y + 1);        // in [0, 1/3)
  Rat r = k * ln2_upper() + 2 * atanh_upper(z, 24);
  r.canonicalize();
  return r;
}

SmoothBounds smooth_bounds_check(int n) {
  if (n < 4) throw PreconditionViolated("bounds need n >= 4");
  SmoothBounds b;
  Int nn = n;
  b.lower = Rat(nn * nn * nn - 3 * nn * nn - nn - 45, 24);
  b.lower.canonicalize();
  b.value = count_smooth(n);
  Rat poly = Rat(2, 3) * (nn * nn * nn) - 2 * (nn * nn) + Rat(16, 3) * nn - 6;
  b.upper = poly + Rat(2 * nn * nn - 4 * nn + 2) * log_upper_bound(n - 3);
  b.upper.canonicalize();
  b.ok = b.lower <= Rat(b.value) && Rat(b.value) < b.upper;
  return b;
}

}  // namespace bident
