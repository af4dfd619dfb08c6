#include <doctest.h>

#include <algorithm>
#include <set>

#include "bident/oracle.hpp"
#include "bident/smooth.hpp"
#include "bident/transform.hpp"

using namespace bident;

TEST_CASE("pair scan agrees with the cell enumeration") {
  for (int n = 3; n <= 12; ++n) {
    REQUIRE(oracle_smooth(n) == enumerate_smooth(n));
    REQUIRE(oracle_smooth(n) == oracle_smooth_serial(n));
  }
}

TEST_CASE("path structures") {
  for (int k = 1; k <= 9; ++k)
    REQUIRE(Int(static_cast<long>(oracle_paths(k).size())) == catalan(k - 1));

  std::vector<PathStructure> p2 = oracle_paths(2);
  REQUIRE(p2.size() == 1);
  CHECK(p2[0].d == std::vector<long>{1, 1});
  CHECK(p2[0].r == std::vector<long>{1, 1});

  CHECK(oracle_paths(4).size() == 5);
  CHECK(oracle_paths(7).size() == 132);
}

TEST_CASE("prong cases") {
  std::vector<Structure> p4 = prong_structures(4);
  std::set<Vec> expect = {{1, 1, 3, 1}, {2, 1, 2, 2}, {1, 2, 2, 2}};
  std::set<Vec> got;
  for (const Structure& s : p4) got.insert(s.d());
  CHECK(got == expect);
  for (int n = 3; n <= 9; ++n)
    REQUIRE(Int(static_cast<long>(prong_structures(n).size())) ==
            2 * catalan(n - 2) - catalan(n - 3));
}

TEST_CASE("full enumeration ground truth on four vertices") {
  std::vector<std::pair<Vec, Vec>> printed = {
      {{1, 1, 3, 1}, {1, 1, 1, 1}}, {{3, 3, 1, 3}, {1, 1, 3, 1}}, {{6, 3, 1, 2}, {1, 2, 6, 3}},
      {{3, 6, 1, 2}, {2, 1, 6, 3}}, {{6, 2, 1, 3}, {1, 3, 6, 2}}, {{2, 6, 1, 3}, {3, 1, 6, 2}},
      {{3, 2, 1, 6}, {2, 3, 6, 1}}, {{2, 3, 1, 6}, {3, 2, 6, 1}}, {{2, 1, 2, 2}, {1, 2, 2, 1}},
      {{1, 2, 2, 2}, {2, 1, 2, 1}}, {{2, 2, 2, 1}, {1, 1, 2, 2}}, {{4, 2, 1, 4}, {1, 2, 4, 1}},
      {{2, 4, 1, 4}, {2, 1, 4, 1}}, {{4, 4, 1, 2}, {1, 1, 4, 2}}};
  std::set<std::pair<Vec, Vec>> expect(printed.begin(), printed.end());
  std::set<std::pair<Vec, Vec>> got;
  for (const Structure& s : oracle_all(4)) got.insert({s.d(), s.r()});
  CHECK(got == expect);
  CHECK(oracle_all(3).size() == 2);
}

TEST_CASE("full enumeration counts match the synthesis formula") {
  for (int n = 3; n <= 9; ++n) {
    std::vector<Structure> all = oracle_all(n);
    REQUIRE(std::adjacent_find(all.begin(), all.end()) == all.end());
    REQUIRE(Int(static_cast<long>(all.size())) == count_total(n));
  }
}

TEST_CASE("kernel check") {
  for (const Structure& s : oracle_all(4)) REQUIRE(kernel_check(s));

  // perturbing d breaks the singularity, so the kernel is no longer spanned
  Structure s = validate(BidentShape(4), {3, 3, 1, 3}, {1, 1, 3, 1});
  ExactMatrix m = laplacian_variant(s);
  m.at(2, 2) += 1;
  CHECK_FALSE(kernel_check(m, s.r()));
  CHECK(kernel_check(laplacian_variant(s), s.r()));
}

TEST_CASE("descendant visits stay inside the target size") {
  Structure base = smooth_from_pair(3, 2);
  long cnt = 0;
  visit_descendants(base, 4, [&cnt](const Structure& s) {
    ++cnt;
    CHECK(s.n() == 4);
  });
  CHECK(cnt == 1);
  CHECK_THROWS_AS(visit_descendants(base, 3, [](const Structure&) {}), PreconditionViolated);
}
