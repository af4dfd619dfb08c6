#ifndef BIDENT_CRITICAL_HPP
#define BIDENT_CRITICAL_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bident/core.hpp"

// Critical groups: the torsion part of coker(diag(d) - A).  On bidents the
// group is always cyclic, of order r_0 / (r_x r_y r_ell) for n >= 4 and
// trivial on D_3, so the order is a complete invariant.

namespace bident {

class NotCoprime : public Error {
 public:
  using Error::Error;
};

struct CriticalGroupRecord {
  Int order;
  // diag of the Smith normal form restricted to the rank n-1 part, when the
  // caller asked for the exact verification
  std::optional<std::vector<Int>> invariant_factors;
};

/// Order of the critical group; exact division, trivial group on D_3 and
/// whenever a prong has d = 1.
Int group_order(const Structure& s);

CriticalGroupRecord critical_record(const Structure& s, bool with_snf);

/// Invariant factors a_1 | a_2 | ... via exact integer row/column reduction
/// with minimal-absolute-value pivoting; zeros padded at the end.  For the
/// Laplacian variant of a valid structure the result is (1,...,1,order,0).
std::vector<Int> smith_normal_form(ExactMatrix mat);

/// Maximal critical-group order over D_n (n >= 4), which is 2n - 5, together
/// with its unique witness: the structure grown from r_x = r_y = 1,
/// r_0 = 2n - 5 (tail r decreases by 2 down to 1).
std::pair<Int, Structure> max_order(int n);

/// Maximal even order: 6k - 4 when n = 4k or 4k + 1, 6k - 2 when n = 4k + 2
/// or 4k + 3.
long max_even_order(int n);

/// Vertex count of the canonical witness with critical group of order m
/// built from k coprime to m (m, k >= 2):
///   m - floor(m/k) + chain_length(k, k - (m mod k)).
long vertices_for_order(long m, long k);

/// That witness itself: the smooth structure with r_x = 1, r_y = k - 1,
/// r_0 = m (k - 1); it lives on D_{vertices_for_order(m, k)} and its critical
/// group has order exactly m.
Structure order_witness(long m, long k);

/// Smallest n such that some structure on D_n has critical group of order m:
/// exhaustive minimum of vertices_for_order(m, k) over 2 <= k <= m + 1
/// coprime to m (k > m + 1 cannot do better since the k = m + 1 witness
/// already reaches m + 2 vertices).
long min_vertices(long m);

/// min_vertices plus a witness structure attaining it.
std::pair<long, Structure> min_vertices_witness(long m);

/// order -> number of structures on D_n with that critical-group order,
/// tallied over the explicit full enumeration.  The parallel version fans
/// out over smooth ancestors; the serial version streams the same
/// enumeration and is kept as the reference.
std::map<long, Int> order_distribution(int n);
std::map<long, Int> order_distribution_serial(int n);

}  // namespace bident

#endif
