#include "bident/critical.hpp"

#include <algorithm>
#include <numeric>

#include "bident/euclid.hpp"
#include "bident/oracle.hpp"
#include "bident/smooth.hpp"

namespace bident {

Int group_order(const Structure& s) {
  if (s.n() == 3) return 1;
  Int num = s.r_tail(0);
  Int den = Int(s.rx()) * s.ry() * s.r_last();
  if (num % den != 0) throw Error("critical group order is not integral");  // impossible on valid input
  return num / den;
}

CriticalGroupRecord critical_record(const Structure& s, bool with_snf) {
  CriticalGroupRecord rec;
  rec.order = group_order(s);
  if (with_snf) {
    std::vector<Int> snf = smith_normal_form(laplacian_variant(s));
    rec.invariant_factors = std::vector<Int>(snf.begin(), snf.end() - 1);  // drop the rank-gap zero
  }
  return rec;
}

std::vector<Int> smith_normal_form(ExactMatrix m) {
  const int dim = m.dim;
  auto swap_rows = [&](int a, int b) {
    for (int j = 0; j < dim; ++j) std::swap(m.at(a, j), m.at(b, j));
  };
  auto swap_cols = [&](int a, int b) {
    for (int i = 0; i < dim; ++i) std::swap(m.at(i, a), m.at(i, b));
  };

  std::vector<Int> diag;
  int t = 0;
  while (t < dim) {
    // minimal absolute value pivot in the trailing submatrix
    int pi = -1, pj = -1;
    for (int i = t; i < dim; ++i) {
      for (int j = t; j < dim; ++j) {
        if (m.at(i, j) == 0) continue;
        if (pi < 0 || cmp(abs(m.at(i, j)), abs(m.at(pi, pj))) < 0) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;
    if (pi != t) swap_rows(pi, t);
    if (pj != t) swap_cols(pj, t);

    bool settled = false;
    while (!settled) {
      settled = true;
      for (int i = t + 1; i < dim; ++i) {
        if (m.at(i, t) == 0) continue;
        Int q = m.at(i, t) / m.at(t, t);  // truncated; remainder smaller than pivot
        if (q != 0)
          for (int j = t; j < dim; ++j) m.at(i, j) -= q * m.at(t, j);
        if (m.at(i, t) != 0) {
          swap_rows(i, t);
          settled = false;
        }
      }
      if (!settled) continue;
      for (int j = t + 1; j < dim; ++j) {
        if (m.at(t, j) == 0) continue;
        Int q = m.at(t, j) / m.at(t, t);
        if (q != 0)
          for (int i = t; i < dim; ++i) m.at(i, j) -= q * m.at(i, t);
        if (m.at(t, j) != 0) {
          swap_cols(j, t);
          settled = false;
        }
      }
      if (!settled) continue;
      // pivot must divide the rest of the submatrix for the factors to chain
      for (int i = t + 1; i < dim && settled; ++i) {
        for (int j = t + 1; j < dim && settled; ++j) {
          if (m.at(i, j) % m.at(t, t) != 0) {
            for (int jj = t; jj < dim; ++jj) m.at(t, jj) += m.at(i, jj);
            settled = false;
          }
        }
      }
    }
    diag.push_back(abs(m.at(t, t)));
    ++t;
  }
  diag.resize(static_cast<size_t>(dim), Int(0));
  return diag;
}

std::pair<Int, Structure> max_order(int n) {
  if (n < 4) throw PreconditionViolated("max_order needs n >= 4");
  return {Int(2 * n - 5), smooth_from_triple(1, 1, 2L * n - 5)};
}

long max_even_order(int n) {
  if (n < 4) throw PreconditionViolated("max_even_order needs n >= 4");
  long k = n / 4;
  return n % 4 <= 1 ? 6 * k - 4 : 6 * k - 2;
}

long vertices_for_order(long m, long k) {
  if (m < 2 || k < 2) throw PreconditionViolated("need m, k >= 2");
  if (std::gcd(m, k) != 1) throw NotCoprime("m and k must be coprime");
  long r = m % k;
  return m - m / k + chain_length(k, k - r);
}

Structure order_witness(long m, long k) {
  if (m < 2 || k < 2) throw PreconditionViolated("need m, k >= 2");
  if (std::gcd(m, k) != 1) throw NotCoprime("m and k must be coprime");
  return smooth_from_triple(1, k - 1, checked_mul(m, k - 1));
}

long min_vertices(long m) { return min_vertices_witness(m).first; }

std::pair<long, Structure> min_vertices_witness(long m) {
  if (m < 2) throw PreconditionViolated("min_vertices needs m >= 2");
  long best_n = -1, best_k = -1;
  for (long k = 2; k <= m + 1; ++k) {
    if (std::gcd(m, k) != 1) continue;
    long n = vertices_for_order(m, k);
    if (best_n < 0 || n < best_n) {
      best_n = n;
      best_k = k;
    }
  }
  return {best_n, order_witness(m, best_k)};
}

namespace {

std::vector<Structure> smooth_ancestors_up_to(int n) {
  std::vector<Structure> ancestors;
  for (int m = 3; m <= n; ++m) {
    std::vector<Structure> sm = oracle_smooth(m);
    ancestors.insert(ancestors.end(), std::make_move_iterator(sm.begin()),
                     std::make_move_iterator(sm.end()));
  }
  return ancestors;
}

}  // namespace

std::map<long, Int> order_distribution_serial(int n) {
  if (n < 4) throw PreconditionViolated("order_distribution needs n >= 4");
  std::map<long, Int> tally;
  for_each_structure(n, [&tally](const Structure& s) {
    tally[group_order(s).get_si()] += 1;
  });
  return tally;
}

std::map<long, Int> order_distribution(int n) {
  if (n < 4) throw PreconditionViolated("order_distribution needs n >= 4");
  const std::vector<Structure> ancestors = smooth_ancestors_up_to(n);
  std::map<long, Int> tally;
#pragma omp parallel
  {
    std::map<long, long> local;
#pragma omp for schedule(dynamic) nowait
    for (size_t idx = 0; idx < ancestors.size(); ++idx) {
      visit_descendants(ancestors[idx], n, [&local](const Structure& s) {
        local[group_order(s).get_si()] += 1;
      });
    }
#pragma omp critical
    for (const auto& [order, count] : local) tally[order] += count;
  }
  for (const Structure& s : prong_structures(n)) tally[group_order(s).get_si()] += 1;
  return tally;
}

}  // namespace bident
