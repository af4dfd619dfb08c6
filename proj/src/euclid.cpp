#include "bident/euclid.hpp"

namespace bident {

namespace {

// least nonnegative residue of -prev modulo cur
inline long next_term(long prev, long cur) {
  long m = prev % cur;
  return m == 0 ? 0 : cur - m;
}

void check_chain_args(long x1, long x2) {
  if (x1 < 1 || x2 < 0) throw PreconditionViolated("chain requires x1 >= 1, x2 >= 0");
}

}  // namespace

long chain_length(long x1, long x2) {
  check_chain_args(x1, x2);
  if (x2 == 0) return 1;
  long prev = x1, cur = x2, k = 2;
  for (;;) {
    long nxt = next_term(prev, cur);
    if (nxt == 0) return k;
    prev = cur;
    cur = nxt;
    ++k;
  }
}

ChainResult euclidean_chain(long x1, long x2) {
  check_chain_args(x1, x2);
  ChainResult res;
  res.terms.push_back(x1);
  if (x2 == 0) return res;
  res.terms.push_back(x2);
  long prev = x1, cur = x2;
  for (;;) {
    long nxt = next_term(prev, cur);
    if (nxt == 0) return res;
    res.terms.push_back(nxt);
    prev = cur;
    cur = nxt;
  }
}

long QuotientVector::odd_sum() const {
  long s = 0;
  for (size_t i = 0; i < q.size(); i += 2) s += q[i];
  return s;
}

long QuotientVector::even_sum() const {
  long s = 0;
  for (size_t i = 1; i < q.size(); i += 2) s += q[i];
  return s;
}

QuotientVector quotients(long beta, long eps) {
  if (!(0 < eps && eps < beta)) throw PreconditionViolated("quotients requires 0 < eps < beta");
  QuotientVector qv;
  qv.beta = beta;
  qv.eps = eps;
  long a = beta, b = eps;
  while (b != 0) {
    qv.q.push_back(a / b);
    long r = a % b;
    a = b;
    b = r;
  }
  return qv;
}

std::pair<long, long> chain_lengths_from_quotients(const QuotientVector& qv) {
  const bool even = qv.q.size() % 2 == 0;
  long f_eps = qv.even_sum() + (even ? 1 : 2);
  long f_complement = qv.odd_sum() + (even ? 1 : 0);
  return {f_eps, f_complement};
}

Int continuant(const std::vector<long>& q) {
  if (q.empty()) throw PreconditionViolated("continuant of empty sequence");
  Int a = 1, prev = 0;  // A_0 = 1, A_{-1} = 0
  for (long qi : q) {
    if (qi < 1) throw PreconditionViolated("continuant entries must be >= 1");
    Int nxt = qi * a + prev;
    prev = a;
    a = nxt;
  }
  return a;
}

}  // namespace bident
