#ifndef BIDENT_EUCLID_HPP
#define BIDENT_EUCLID_HPP

#include <utility>
#include <vector>

#include "bident/core.hpp"

// The chain recurrence x_{i+1} = (-x_{i-1}) mod x_i and its relationship to
// the quotients of the classical Euclidean algorithm.  chain_length counts
// the positive terms of the chain; it equals the tail length + 1 of the
// smooth structure whose r-sequence starts (x_1, x_2).

namespace bident {

/// Number of positive terms of the chain starting (x1, x2).
/// chain_length(x, 0) = 1 for every x >= 1.  Iterative: the length can be as
/// large as x1 itself (e.g. chain_length(x, x-1) = x).
long chain_length(long x1, long x2);

struct ChainResult {
  std::vector<long> terms;  // x_1, ..., x_k, all positive

  long length() const { return static_cast<long>(terms.size()); }
};

/// The full chain; terms.back() == gcd(x1, x2) whenever x2 > 0.
ChainResult euclidean_chain(long x1, long x2);

/// Quotients q_1, ..., q_k of the Euclidean algorithm on (beta, eps),
/// together with the sums of odd- and even-indexed quotients.
struct QuotientVector {
  long beta = 0;
  long eps = 0;
  std::vector<long> q;

  long odd_sum() const;   // q_1 + q_3 + ...
  long even_sum() const;  // q_2 + q_4 + ...
};

/// Requires 0 < eps < beta.
QuotientVector quotients(long beta, long eps);

/// (chain_length(beta, eps), chain_length(beta, beta - eps)) computed purely
/// from the quotient sums and the parity of k:
///   chain_length(beta, eps)        = S^e + 1 (k even),  S^e + 2 (k odd)
///   chain_length(beta, beta - eps) = S^o + 1 (k even),  S^o     (k odd)
std::pair<long, long> chain_lengths_from_quotients(const QuotientVector& qv);

/// Continuant A_k: upper-left entry of prod_i ((q_i, 1), (1, 0)).
/// A_1 = q_1, A_2 = q_1 q_2 + 1, A_k = q_k A_{k-1} + A_{k-2}.
/// For q = quotients(beta, eps):  beta = gcd(beta, eps) * A_k.
Int continuant(const std::vector<long>& q);

}  // namespace bident

#endif
