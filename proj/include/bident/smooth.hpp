#ifndef BIDENT_SMOOTH_HPP
#define BIDENT_SMOOTH_HPP

#include <vector>

#include "bident/core.hpp"

// Smooth arithmetical structures: d >= 2 at both prongs and at every tail
// vertex v_1..v_ell (equivalently r_x, r_y < r_0 and r strictly decreasing
// along the tail; the central vertex then necessarily has d_0 = 1).
//
// A smooth structure is determined by the pair (a, b) = (rbar_x, rbar_y) of
// its scaled r-vector rbar = (r_0 / (r_x r_y)) * r, which satisfies
// rbar_x * rbar_y = rbar_0.  Writing a + b = t b^2 + eps with b = min(a, b),
// the structure lands on D_n for exactly one n, computable from
// chain_length(b^2, eps) without building the chain.  Enumeration for fixed
// n scans the finitely many admissible (b, eps) cells.

namespace bident {

/// Parameters of the pair (a, b) driving the fast enumeration:
/// a = max(rbar_x, rbar_y), b = min, and a + b = t * b^2 + eps.
struct SmoothGenerators {
  long a = 0;
  long b = 0;
  long t = 0;
  long eps = 0;
};

/// Decomposes an unordered pair (a >= b >= 2 after swapping).
SmoothGenerators smooth_generators(long a, long b);

/// The unique smooth structure with r_x = a, r_y = b, r_0 = c, built by
/// extending r_1 = c - a - b with the least-positive-residue chain until the
/// last entry divides its predecessor.  Requires a, b >= 1 with no common
/// factor among {a, b, c}, a | c, b | c, a < c, b < c.  The triple
/// (1, 1, 2) lands on D_3; everything else has a nonempty tail.
Structure smooth_from_triple(long a, long b, long c);

/// The unique smooth structure whose rbar-vector has rbar_x = a, rbar_y = b
/// (a, b >= 2): applies smooth_from_triple to (a, b, ab) / gcd(a, b).
Structure smooth_from_pair(long a, long b);

/// Vertex count of smooth_from_pair(a, b), via the closed formula
/// n = chain_length(b^2, eps) + t + floor(ab / (a+b)); never builds a chain.
long n_of_pair(long a, long b);

/// rbar = (r_0 / (r_x r_y)) * r; integral entries with rbar_x rbar_y = rbar_0.
Vec rbar_vector(const Structure& s);

/// All smooth structures on D_n in canonical order (lexicographic by d).
/// Parallelized over the b-range; enumerate_smooth_serial is the plain-loop
/// reference used for testing the kernel.
std::vector<Structure> enumerate_smooth(int n);
std::vector<Structure> enumerate_smooth_serial(int n);

/// |SArith(D_n)| counted per (b, eps) cell without materializing structures.
Int count_smooth(int n);
Int count_smooth_serial(int n);

/// Certified rational upper bound on ln(x), within 1e-6 relative.
Rat log_upper_bound(long x);

struct SmoothBounds {
  Rat lower;   // (n^3 - 3n^2 - n - 45) / 24
  Int value;   // |SArith(D_n)|
  Rat upper;   // 2/3 n^3 - 2n^2 + 16/3 n - 6 + (2n^2 - 4n + 2) ln(n-3), ln replaced
               // by log_upper_bound
  bool ok;     // lower <= value < upper
};

/// Evaluates the cubic sandwich on |SArith(D_n)| in exact rational
/// arithmetic (n >= 4; the lower bound is nonpositive through n = 5).
SmoothBounds smooth_bounds_check(int n);

}  // namespace bident

#endif
