#ifndef BIDENT_CORE_HPP
#define BIDENT_CORE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

// Arithmetical structures on bident graphs.
//
// A bident D_n (n >= 3) is a path v_0, v_1, ..., v_ell (ell = n-3) with two
// extra leaves v_x, v_y attached to v_0.  An arithmetical structure is a pair
// of positive integer vectors (d, r) with (diag(d) - A) r = 0 and gcd(r) = 1,
// where A is the adjacency matrix.  Vectors are stored in the fixed label
// order (x, y, 0, 1, ..., ell).

namespace bident {

using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<long>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonPositiveEntry : public Error {
 public:
  using Error::Error;
};
class NotPrimitive : public Error {
 public:
  using Error::Error;
};
class LinearSystemViolated : public Error {
 public:
  using Error::Error;
};
class NonIntegralD : public Error {
 public:
  using Error::Error;
};
class OverflowError : public Error {
 public:
  using Error::Error;
};
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

// 64-bit arithmetic with mandatory overflow detection.  Structure entries
// stay far below the 64-bit range at every scale this library targets, so an
// OverflowError signals corrupted input rather than a size limitation; counts
// and matrix work use mpz unconditionally.
inline long checked_add(long a, long b) {
  long r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline long checked_sub(long a, long b) {
  long r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline long checked_mul(long a, long b) {
  long r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

struct BidentShape {
  int n;

  explicit BidentShape(int n_) : n(n_) {
    if (n < 3) throw PreconditionViolated("bident needs at least 3 vertices");
  }
  int ell() const { return n - 3; }
};

/// A validated arithmetical structure on D_n.  Immutable after construction.
class Structure {
 public:
  Structure(BidentShape shape, Vec d, Vec r);

  int n() const { return static_cast<int>(d_.size()); }
  int ell() const { return n() - 3; }
  BidentShape shape() const { return BidentShape(n()); }

  const Vec& d() const { return d_; }
  const Vec& r() const { return r_; }

  long dx() const { return d_[0]; }
  long dy() const { return d_[1]; }
  long rx() const { return r_[0]; }
  long ry() const { return r_[1]; }
  // tail entries, i in 0..ell
  long d_tail(int i) const { return d_[static_cast<size_t>(2 + i)]; }
  long r_tail(int i) const { return r_[static_cast<size_t>(2 + i)]; }
  long r_last() const { return r_.back(); }

  bool is_smooth() const;

  // canonical order: lexicographic on d, ties broken by r
  friend bool operator<(const Structure& a, const Structure& b) {
    if (a.d_ != b.d_) return a.d_ < b.d_;
    return a.r_ < b.r_;
  }
  friend bool operator==(const Structure& a, const Structure& b) {
    return a.d_ == b.d_ && a.r_ == b.r_;
  }
  friend bool operator!=(const Structure& a, const Structure& b) { return !(a == b); }

 private:
  Vec d_, r_;
};

/// Dense square matrix of arbitrary-precision integers, row major.
struct ExactMatrix {
  int dim = 0;
  std::vector<Int> entries;

  ExactMatrix() = default;
  explicit ExactMatrix(int dim_) : dim(dim_), entries(static_cast<size_t>(dim_) * dim_) {}

  Int& at(int i, int j) { return entries[static_cast<size_t>(i) * dim + j]; }
  const Int& at(int i, int j) const { return entries[static_cast<size_t>(i) * dim + j]; }
};

/// Checks every defining equation and returns the validated structure.
/// Throws NonPositiveEntry, NotPrimitive or LinearSystemViolated.
Structure validate(BidentShape shape, const Vec& d, const Vec& r);

/// The generalized Laplacian diag(d) - A of the structure's bident.
/// Postcondition (asserted): matrix * r == 0.
ExactMatrix laplacian_variant(const Structure& s);

/// Recovers d from a positive primitive r-vector by exact division through
/// the vertex equations.  Throws NonIntegralD when some division has a
/// remainder, i.e. r is not the r-vector of any structure on this shape.
Structure d_from_r(BidentShape shape, const Vec& r);

/// {"n": ..., "d": [...], "r": [...]} in label order.
std::string to_json(const Structure& s);

}  // namespace bident

#endif
