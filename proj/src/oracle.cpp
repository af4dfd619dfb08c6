#include "bident/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "bident/smooth.hpp"
#include "bident/transform.hpp"

namespace bident {

namespace {

// Vertex count of the smooth structure generated by the pair (a, b), by
// simulating the chain; -1 as soon as the count exceeds cap.
long pair_vertex_count_capped(long a, long b, long cap) {
  long g = std::gcd(a, b);
  long aa = a / g, bb = b / g;
  long c = checked_mul(aa, b);
  if (c / aa == 2 && c / bb == 2) return 3;
  long prev = c;
  long cur = checked_sub(c, checked_add(aa, bb));
  long terms = 2;  // r_0 and r_1
  while (prev % cur != 0) {
    long nxt = cur - prev % cur;
    prev = cur;
    cur = nxt;
    ++terms;
    if (terms + 2 > cap) return -1;
  }
  return terms + 2;
}

void scan_pairs_for_b(int n, long b, std::vector<Structure>& out) {
  long amax = std::max(checked_mul(static_cast<long>(n), b * b), b * (n - 1));
  for (long a = b; a <= amax; ++a) {
    if (pair_vertex_count_capped(a, b, n) != n) continue;
    out.push_back(smooth_from_pair(a, b));
    if (a > b) out.push_back(smooth_from_pair(b, a));
  }
}

}  // namespace

std::vector<Structure> oracle_smooth_serial(int n) {
  if (n < 3) throw PreconditionViolated("n must be at least 3");
  std::vector<Structure> out;
  for (long b = 2; b <= 2 * n - 4; ++b) scan_pairs_for_b(n, b, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Structure> oracle_smooth(int n) {
  if (n < 3) throw PreconditionViolated("n must be at least 3");
  const long bmax = 2 * n - 4;
  std::vector<std::vector<Structure>> per_b(static_cast<size_t>(bmax + 1));
#pragma omp parallel for schedule(dynamic)
  for (long b = 2; b <= bmax; ++b) scan_pairs_for_b(n, b, per_b[static_cast<size_t>(b)]);
  std::vector<Structure> out;
  for (auto& bucket : per_b)
    for (auto& s : bucket) out.push_back(std::move(s));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PathStructure> oracle_paths(int k) {
  if (k < 1) throw PreconditionViolated("k must be at least 1");
  std::vector<PathStructure> layer = {PathStructure{{0}, {1}}};
  for (int kk = 2; kk <= k; ++kk) {
    std::set<PathStructure> next;
    for (const PathStructure& p : layer) {
      const int len = p.k();
      for (int j = 0; j <= len; ++j) {
        PathStructure q = p;
        if (j == 0) {
          q.d[0] += 1;
          q.d.insert(q.d.begin(), 1);
          q.r.insert(q.r.begin(), p.r.front());
        } else if (j == len) {
          q.d.back() += 1;
          q.d.push_back(1);
          q.r.push_back(p.r.back());
        } else {
          long sum = checked_add(p.r[static_cast<size_t>(j - 1)], p.r[static_cast<size_t>(j)]);
          q.d[static_cast<size_t>(j - 1)] += 1;
          q.d[static_cast<size_t>(j)] += 1;
          q.d.insert(q.d.begin() + j, 1);
          q.r.insert(q.r.begin() + j, sum);
        }
        next.insert(std::move(q));
      }
    }
    layer.assign(next.begin(), next.end());
  }
  return layer;
}

std::vector<Structure> prong_structures(int n) {
  if (n < 3) throw PreconditionViolated("n must be at least 3");
  std::set<Structure> out;
  for (const PathStructure& p : oracle_paths(n - 1)) {
    // read the path as (prong, v_0, v_1, ...) and attach the new prong to v_0
    Vec dx = {1, p.d[0], p.d[1] + 1};
    Vec rx = {p.r[1], p.r[0], p.r[1]};
    Vec dy = {p.d[0], 1, p.d[1] + 1};
    Vec ry = {p.r[0], p.r[1], p.r[1]};
    dx.insert(dx.end(), p.d.begin() + 2, p.d.end());
    rx.insert(rx.end(), p.r.begin() + 2, p.r.end());
    dy.insert(dy.end(), p.d.begin() + 2, p.d.end());
    ry.insert(ry.end(), p.r.begin() + 2, p.r.end());
    out.insert(Structure(BidentShape(n), std::move(dx), std::move(rx)));
    out.insert(Structure(BidentShape(n), std::move(dy), std::move(ry)));
  }
  return {out.begin(), out.end()};
}

namespace {

// Nondecreasing sequences only: a child created at position b explores
// positions >= b, giving each descendant exactly once.
void visit_descendants_from(const Structure& cur, int n, int minpos,
                            const std::function<void(const Structure&)>& fn) {
  if (cur.n() == n) {
    fn(cur);
    return;
  }
  for (int b = minpos; b <= cur.ell() + 1; ++b)
    visit_descendants_from(subdivide_at(cur, b), n, b, fn);
}

}  // namespace

void visit_descendants(const Structure& base, int n,
                       const std::function<void(const Structure&)>& fn) {
  if (base.n() > n) throw PreconditionViolated("base is larger than the target");
  visit_descendants_from(base, n, 1, fn);
}

void for_each_structure(int n, const std::function<void(const Structure&)>& fn) {
  for (int m = 3; m <= n; ++m)
    for (const Structure& s : oracle_smooth(m)) visit_descendants_from(s, n, 1, fn);
  for (const Structure& s : prong_structures(n)) fn(s);
}

std::vector<Structure> oracle_all(int n) {
  std::vector<Structure> out;
  for_each_structure(n, [&out](const Structure& s) { out.push_back(s); });
  std::sort(out.begin(), out.end());
  return out;
}

bool kernel_check(const ExactMatrix& m, const Vec& r) {
  const int dim = m.dim;
  if (r.size() != static_cast<size_t>(dim)) return false;
  for (int i = 0; i < dim; ++i) {
    Int acc = 0;
    for (int j = 0; j < dim; ++j) acc += m.at(i, j) * r[static_cast<size_t>(j)];
    if (acc != 0) return false;
  }
  // rank by rational elimination
  std::vector<std::vector<Rat>> a(static_cast<size_t>(dim), std::vector<Rat>(static_cast<size_t>(dim)));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rat(m.at(i, j));
  int rank = 0;
  for (int col = 0; col < dim && rank < dim; ++col) {
    int piv = -1;
    for (int i = rank; i < dim; ++i) {
      if (a[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(rank)]);
    for (int i = rank + 1; i < dim; ++i) {
      if (a[static_cast<size_t>(i)][static_cast<size_t>(col)] == 0) continue;
      Rat f = a[static_cast<size_t>(i)][static_cast<size_t>(col)] / a[static_cast<size_t>(rank)][static_cast<size_t>(col)];
      for (int j = col; j < dim; ++j)
        a[static_cast<size_t>(i)][static_cast<size_t>(j)] -= f * a[static_cast<size_t>(rank)][static_cast<size_t>(j)];
    }
    ++rank;
  }
  return rank == dim - 1;
}

bool kernel_check(const Structure& s) { return kernel_check(laplacian_variant(s), s.r()); }

}  // namespace bident
