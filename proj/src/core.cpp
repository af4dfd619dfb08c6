#include "bident/core.hpp"

#include <numeric>
#include <sstream>

namespace bident {

namespace {

long gcd_all(const Vec& v) {
  long g = 0;
  for (long x : v) g = std::gcd(g, x);
  return g;
}

void check_positive(const Vec& v, const char* which) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 1) {
      std::ostringstream os;
      os << which << "[" << i << "] = " << v[i] << " is not positive";
      throw NonPositiveEntry(os.str());
    }
  }
}

[[noreturn]] void fail_equation(const char* vertex, long lhs, long rhs) {
  std::ostringstream os;
  os << "vertex equation violated at " << vertex << ": " << lhs << " != " << rhs;
  throw LinearSystemViolated(os.str());
}

}  // namespace

Structure::Structure(BidentShape shape, Vec d, Vec r) : d_(std::move(d)), r_(std::move(r)) {
  const int n = shape.n;
  const int ell = shape.ell();
  if (d_.size() != static_cast<size_t>(n) || r_.size() != static_cast<size_t>(n))
    throw PreconditionViolated("d and r must have length n");
  check_positive(d_, "d");
  check_positive(r_, "r");
  if (gcd_all(r_) != 1) throw NotPrimitive("entries of r have a common factor");

  // d_x r_x = r_0, d_y r_y = r_0
  if (checked_mul(d_[0], r_[0]) != r_[2]) fail_equation("v_x", d_[0] * r_[0], r_[2]);
  if (checked_mul(d_[1], r_[1]) != r_[2]) fail_equation("v_y", d_[1] * r_[1], r_[2]);
  // central vertex: d_0 r_0 = r_x + r_y (+ r_1 when the tail is nonempty)
  long rhs0 = checked_add(r_[0], r_[1]);
  if (ell >= 1) rhs0 = checked_add(rhs0, r_[3]);
  if (checked_mul(d_[2], r_[2]) != rhs0) fail_equation("v_0", d_[2] * r_[2], rhs0);
  for (int i = 1; i + 1 <= ell; ++i) {
    long rhs = checked_add(r_[static_cast<size_t>(1 + i)], r_[static_cast<size_t>(3 + i)]);
    if (checked_mul(d_[static_cast<size_t>(2 + i)], r_[static_cast<size_t>(2 + i)]) != rhs)
      fail_equation("tail vertex", d_[static_cast<size_t>(2 + i)] * r_[static_cast<size_t>(2 + i)], rhs);
  }
  if (ell >= 1) {
    if (checked_mul(d_.back(), r_.back()) != r_[r_.size() - 2])
      fail_equation("v_ell", d_.back() * r_.back(), r_[r_.size() - 2]);
  }
}

bool Structure::is_smooth() const {
  if (dx() < 2 || dy() < 2) return false;
  for (int i = 1; i <= ell(); ++i)
    if (d_tail(i) < 2) return false;
  return true;
}

Structure validate(BidentShape shape, const Vec& d, const Vec& r) { return Structure(shape, d, r); }

ExactMatrix laplacian_variant(const Structure& s) {
  const int n = s.n();
  ExactMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = s.d()[static_cast<size_t>(i)];
  auto edge = [&m](int a, int b) {
    m.at(a, b) = -1;
    m.at(b, a) = -1;
  };
  edge(0, 2);
  edge(1, 2);
  for (int i = 0; i < s.ell(); ++i) edge(2 + i, 3 + i);
  // defining identity
  for (int i = 0; i < n; ++i) {
    Int acc = 0;
    for (int j = 0; j < n; ++j) acc += m.at(i, j) * s.r()[static_cast<size_t>(j)];
    if (acc != 0) throw LinearSystemViolated("laplacian * r != 0");
  }
  return m;
}

Structure d_from_r(BidentShape shape, const Vec& r) {
  const int n = shape.n;
  const int ell = shape.ell();
  if (r.size() != static_cast<size_t>(n)) throw PreconditionViolated("r must have length n");
  check_positive(r, "r");
  if (gcd_all(r) != 1) throw NotPrimitive("entries of r have a common factor");

  auto exact_div = [](long num, long den, const char* vertex) {
    if (num % den != 0) {
      std::ostringstream os;
      os << "no integral d at " << vertex << ": " << num << " / " << den;
      throw NonIntegralD(os.str());
    }
    return num / den;
  };

  Vec d(static_cast<size_t>(n));
  d[0] = exact_div(r[2], r[0], "v_x");
  d[1] = exact_div(r[2], r[1], "v_y");
  long top = checked_add(r[0], r[1]);
  if (ell >= 1) top = checked_add(top, r[3]);
  d[2] = exact_div(top, r[2], "v_0");
  for (int i = 1; i + 1 <= ell; ++i)
    d[static_cast<size_t>(2 + i)] =
        exact_div(checked_add(r[static_cast<size_t>(1 + i)], r[static_cast<size_t>(3 + i)]),
                  r[static_cast<size_t>(2 + i)], "tail vertex");
  if (ell >= 1) d[static_cast<size_t>(n - 1)] = exact_div(r[static_cast<size_t>(n - 2)], r[static_cast<size_t>(n - 1)], "v_ell");
  return Structure(shape, std::move(d), r);
}

std::string to_json(const Structure& s) {
  std::ostringstream os;
  os << "{\"n\":" << s.n() << ",\"d\":[";
  for (size_t i = 0; i < s.d().size(); ++i) os << (i ? "," : "") << s.d()[i];
  os << "],\"r\":[";
  for (size_t i = 0; i < s.r().size(); ++i) os << (i ? "," : "") << s.r()[i];
  os << "]}";
  return os.str();
}

}  // namespace bident
