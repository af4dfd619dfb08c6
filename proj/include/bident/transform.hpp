#ifndef BIDENT_TRANSFORM_HPP
#define BIDENT_TRANSFORM_HPP

#include <utility>
#include <vector>

#include "bident/core.hpp"

// Smoothing (removing a d = 1 tail vertex) and subdivision (inserting one),
// which are mutually inverse, plus the sequence combinatorics that count
// descendants: nondecreasing valid subdivision sequences are in bijection
// with descendants of a smooth structure, and are counted by ballot numbers.

namespace bident {

class NotSmoothable : public Error {
 public:
  using Error::Error;
};
// Smoothing at a prong leaves a path graph, which this module does not
// represent; the brute-force enumerators handle paths separately.
class ProngSmoothingLeavesPath : public Error {
 public:
  using Error::Error;
};
class ProngDegreeOne : public Error {
 public:
  using Error::Error;
};
class InvalidPosition : public Error {
 public:
  using Error::Error;
};

// sentinel positions for the prongs
inline constexpr int kPosX = -1;
inline constexpr int kPosY = -2;

/// Positions b_i are 1-based tail positions; step i applied to a structure
/// on D_{base_n + i - 1} must satisfy 1 <= b_i <= base_n - 3 + i.
struct SubdivisionSequence {
  int base_n = 3;
  std::vector<int> steps;
};

bool is_valid_sequence(const SubdivisionSequence& seq);

/// Removes the d = 1 vertex at tail position pos (1..ell), decrementing its
/// neighbors' d (only the left neighbor when pos == ell); r entries are kept
/// except for the deletion.  Throws NotSmoothable when d != 1 there, and
/// ProngSmoothingLeavesPath for pos in {kPosX, kPosY}.
Structure smooth_at(const Structure& s, int pos);

/// Inserts a d = 1 vertex at position pos (1..ell+1).  Interior insertions
/// get r = the sum of the two neighbors; appending at pos == ell+1 copies the
/// neighbor's r.
Structure subdivide_at(const Structure& s, int pos);

/// Left-to-right application of subdivide_at.
Structure apply_sequence(const Structure& s0, const SubdivisionSequence& seq);

/// Repeatedly replaces an adjacent inversion (b_j, b_{j+1}) with
/// (b_{j+1}, b_j + 1) until the sequence is nondecreasing; the subdivision
/// result is unchanged.
SubdivisionSequence canonicalize_sequence(SubdivisionSequence seq);

/// Smooths at the largest d = 1 tail position until none remains, returning
/// the unique smooth ancestor together with the canonical (nondecreasing)
/// sequence that rebuilds s from it.  Requires d_x, d_y >= 2 (otherwise the
/// ancestor is a path structure, not a bident one); throws ProngDegreeOne.
std::pair<Structure, SubdivisionSequence> smooth_ancestor(const Structure& s);

/// C(n) = binom(2n, n) / (n + 1)
Int catalan(int n);

/// B(n, k) = (n - k + 1) / (n + 1) * binom(n + k, n); B(n, 0) = 1 and
/// B(n, k) = 0 for k > n; B(n, n) = C(n).
Int ballot(int n, int k);

/// Number of descendants on D_n of one smooth structure on D_m: B(n-3, n-m).
Int count_descendants(int m, int n);

/// |Arith(D_n)| = 2 C(n-2) + sum_{m=4}^{n} B(n-3, n-m) |SArith(D_m)|;
/// equals 2 when n = 3.
Int count_total(int n);

struct CountRow {
  int n;
  Int smooth;
  Int total;
};

/// Both counts for every n in [from, to], computing each smooth count once.
std::vector<CountRow> count_table(int from, int to);

}  // namespace bident

#endif
