#include <doctest.h>

#include <numeric>
#include <random>

#include "bident/euclid.hpp"

using namespace bident;

TEST_CASE("chain length worked examples") {
  CHECK(chain_length(17, 12) == 5);
  CHECK(chain_length(36, 23) == 6);
  CHECK(chain_length(36, 13) == 5);
  for (long x : {1L, 2L, 7L, 1000L}) CHECK(chain_length(x, 0) == 1);
  CHECK(chain_length(5, 5) == 2);
  CHECK(chain_length(2, 1) == 2);
  CHECK_THROWS_AS(chain_length(0, 1), PreconditionViolated);
  CHECK_THROWS_AS(chain_length(3, -1), PreconditionViolated);
}

TEST_CASE("full chains") {
  CHECK(euclidean_chain(17, 12).terms == std::vector<long>{17, 12, 7, 2, 1});
  CHECK(euclidean_chain(36, 23).terms == std::vector<long>{36, 23, 10, 7, 4, 1});
  CHECK(euclidean_chain(5, 5).terms == std::vector<long>{5, 5});
  CHECK(euclidean_chain(9, 0).terms == std::vector<long>{9});

  // the last term is gcd(x1, x2) and the length matches chain_length
  std::mt19937_64 gen(42);
  std::uniform_int_distribution<long> dist(1, 100000);
  for (int i = 0; i < 500; ++i) {
    long x1 = dist(gen), x2 = dist(gen);
    ChainResult c = euclidean_chain(x1, x2);
    CHECK(c.terms.back() == std::gcd(x1, x2));
    CHECK(c.length() == chain_length(x1, x2));
  }
}

TEST_CASE("quotient vectors") {
  QuotientVector q = quotients(36, 23);
  CHECK(q.q == std::vector<long>{1, 1, 1, 3, 3});
  CHECK(q.odd_sum() == 5);
  CHECK(q.even_sum() == 4);
  CHECK(quotients(10, 5).q == std::vector<long>{2});
  CHECK_THROWS_AS(quotients(5, 0), PreconditionViolated);
  CHECK_THROWS_AS(quotients(5, 5), PreconditionViolated);
}

TEST_CASE("chain lengths from quotient sums") {
  auto [f1, f2] = chain_lengths_from_quotients(quotients(36, 23));
  CHECK(f1 == 6);
  CHECK(f2 == 5);
  auto [g1, g2] = chain_lengths_from_quotients(quotients(10, 5));
  CHECK(g1 == 2);
  CHECK(g2 == 2);
  auto [h1, h2] = chain_lengths_from_quotients(quotients(7, 3));
  CHECK(h1 == 4);  // chain (7,3,2,1)
  CHECK(h2 == chain_length(7, 4));

  for (long beta = 2; beta <= 200; ++beta) {
    for (long eps = 1; eps < beta; ++eps) {
      auto [fe, fc] = chain_lengths_from_quotients(quotients(beta, eps));
      REQUIRE(fe == chain_length(beta, eps));
      REQUIRE(fc == chain_length(beta, beta - eps));
    }
  }
}

TEST_CASE("continuants") {
  CHECK(continuant({1, 1, 1, 3, 3}) == 36);
  CHECK(continuant({7}) == 7);
  CHECK(continuant({2, 3}) == 7);
  CHECK_THROWS_AS(continuant({}), PreconditionViolated);
  CHECK_THROWS_AS(continuant({2, 0}), PreconditionViolated);

  // beta = gcd(beta, eps) * A_k
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<long> dist(2, 4000);
  for (int i = 0; i < 500; ++i) {
    long b = dist(gen);
    long beta = b * b;
    long eps = std::uniform_int_distribution<long>(1, beta - 1)(gen);
    CHECK(Int(beta) == std::gcd(beta, eps) * continuant(quotients(beta, eps).q));
  }
}
