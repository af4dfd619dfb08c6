#ifndef BIDENT_ORACLE_HPP
#define BIDENT_ORACLE_HPP

#include <functional>
#include <vector>

#include "bident/core.hpp"

// Brute-force enumerators used by tests and the verify suites.  These
// deliberately avoid the per-(b, eps) case analysis and the closed-form
// vertex-count formulas: smooth structures are found by scanning pairs and
// simulating chains, and the full enumeration is assembled from subdivision
// closures.  Slow but auditable.

namespace bident {

/// An arithmetical structure on the path P_k: positive d, r with
/// d_i r_i = sum of the neighbors' r and r primitive.  The one-vertex path
/// is the degenerate seed carrying d = (0) (empty neighbor sum).
struct PathStructure {
  std::vector<long> d, r;

  int k() const { return static_cast<int>(d.size()); }

  friend bool operator<(const PathStructure& a, const PathStructure& b) {
    if (a.d != b.d) return a.d < b.d;
    return a.r < b.r;
  }
  friend bool operator==(const PathStructure& a, const PathStructure& b) {
    return a.d == b.d && a.r == b.r;
  }
};

/// All smooth structures on D_n found by scanning unordered pairs (a, b)
/// with 2 <= b <= a, b <= 2n - 4, a <= max(n b^2, b (n-1)) and keeping the
/// chains that land on D_n.  The a-bound is deliberately loose; only
/// completeness matters here.  Canonical order.
std::vector<Structure> oracle_smooth(int n);
std::vector<Structure> oracle_smooth_serial(int n);

/// All structures on the path P_k, generated by subdivision closure from the
/// one-vertex structure, deduplicated on (d, r).  |result| = C(k-1).
std::vector<PathStructure> oracle_paths(int k);

/// Every structure on D_n: descendants of every smooth structure on
/// D_3..D_n through nondecreasing subdivision sequences, united with the
/// d_x = 1 / d_y = 1 structures obtained by attaching a prong to every path
/// structure on n-1 vertices.  Canonical order, duplicate free.
std::vector<Structure> oracle_all(int n);

/// Streams the same enumeration without materializing it.
void for_each_structure(int n, const std::function<void(const Structure&)>& fn);

/// Calls fn on every descendant of base on D_n (base itself when
/// base.n() == n).  base must be smooth.
void visit_descendants(const Structure& base, int n,
                       const std::function<void(const Structure&)>& fn);

/// The structures on D_n with d_x = 1 or d_y = 1, deduplicated and sorted;
/// there are 2 C(n-2) - C(n-3) of them.
std::vector<Structure> prong_structures(int n);

/// Exact rational Gaussian elimination: rank(L) == n - 1 and L r == 0, i.e.
/// the kernel is spanned by r.
bool kernel_check(const Structure& s);

/// Same check on a raw matrix/vector pair (usable on matrices that do not
/// come from a valid structure).
bool kernel_check(const ExactMatrix& m, const Vec& r);

}  // namespace bident

#endif
