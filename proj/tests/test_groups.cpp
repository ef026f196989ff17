#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crystalkit/errors.hpp"
#include "crystalkit/groups.hpp"

using namespace ck;

TEST_CASE("close_group basic orders") {
  {
    FiniteMatrixGroup g =
        FiniteMatrixGroup::close_group({IntMatrix{{1, 0}, {0, -1}}});
    CHECK(g.order() == 2);
  }
  {
    FiniteMatrixGroup g = FiniteMatrixGroup::close_group(
        {IntMatrix{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}},
         IntMatrix{{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}}});
    CHECK(g.order() == 4);
    CHECK(g.is_abelian());
    // every nontrivial element has order 2
    for (std::size_t i = 1; i < 4; ++i) CHECK(g.element_order(i) == 2);
  }
  {
    FiniteMatrixGroup g =
        FiniteMatrixGroup::close_group({IntMatrix{{0, -1}, {1, 0}}});
    CHECK(g.order() == 4);
    CHECK(g.element_order(g.index_of(IntMatrix{{0, -1}, {1, 0}})) == 4);
  }
}

TEST_CASE("close_group error paths") {
  CHECK_THROWS_AS(
      FiniteMatrixGroup::close_group({IntMatrix{{2, 0}, {0, 1}}}),
      InvalidInputError);
  CHECK_THROWS_AS(
      FiniteMatrixGroup::close_group({IntMatrix{{0, -1}, {1, 0}}}, 3),
      CapExceededError);
}

TEST_CASE("multiplication table and inverses") {
  FiniteMatrixGroup g =
      FiniteMatrixGroup::close_group({IntMatrix{{0, -1}, {1, 0}}});
  for (std::size_t a = 0; a < g.order(); ++a) {
    CHECK(g.multiply(a, g.inverse(a)) == 0);
    CHECK(g.multiply(0, a) == a);
    for (std::size_t b = 0; b < g.order(); ++b)
      CHECK(g.element(g.multiply(a, b)) == g.element(a) * g.element(b));
  }
  // BFS words reproduce elements
  for (std::size_t i = 0; i < g.order(); ++i) {
    IntMatrix m = IntMatrix::identity(2);
    for (std::size_t w : g.word_for(i)) m = m * g.element(g.generator_indices()[w]);
    CHECK(m == g.element(i));
  }
}

TEST_CASE("conjugacy classes") {
  {
    // abelian: singleton classes
    FiniteMatrixGroup g = FiniteMatrixGroup::close_group(
        {IntMatrix{{1, 0}, {0, -1}}, IntMatrix{{-1, 0}, {0, 1}}});
    auto cc = conjugacy_classes(g);
    CHECK(cc.representatives.size() == 4);
    for (const auto& m : cc.members) CHECK(m.size() == 1);
  }
  {
    // S3 as 3x3 permutation matrices: classes of sizes 1, 3, 2
    IntMatrix swap01{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
    IntMatrix cyc{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
    FiniteMatrixGroup g = FiniteMatrixGroup::close_group({swap01, cyc});
    CHECK(g.order() == 6);
    auto cc = conjugacy_classes(g);
    REQUIRE(cc.representatives.size() == 3);
    std::vector<std::size_t> sizes;
    for (const auto& m : cc.members) sizes.push_back(m.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{1, 2, 3});
    std::size_t total = 0;
    for (std::size_t s : sizes) total += s;
    CHECK(total == g.order());
  }
  {
    FiniteMatrixGroup g =
        FiniteMatrixGroup::close_group({IntMatrix{{0, -1}, {1, 0}}});
    CHECK(conjugacy_classes(g).representatives.size() == 4);
  }
}

TEST_CASE("prime_order_elements") {
  {
    FiniteMatrixGroup g = FiniteMatrixGroup::close_group({});
    CHECK(prime_order_elements(g).empty());
  }
  {
    FiniteMatrixGroup g = FiniteMatrixGroup::close_group(
        {IntMatrix{{1, 0}, {0, -1}}, IntMatrix{{-1, 0}, {0, 1}}});
    auto subs = prime_order_elements(g);
    CHECK(subs.size() == 3);
    for (const auto& s : subs) CHECK(s.prime == 2);
  }
  {
    FiniteMatrixGroup g =
        FiniteMatrixGroup::close_group({IntMatrix{{0, -1}, {1, 0}}});
    auto subs = prime_order_elements(g);
    REQUIRE(subs.size() == 1);
    CHECK(subs[0].prime == 2);
    CHECK(g.element(subs[0].generator) == IntMatrix{{-1, 0}, {0, -1}});
  }
  {
    // every element of prime order lies in exactly one returned subgroup
    IntMatrix swap01{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
    IntMatrix cyc{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
    FiniteMatrixGroup g = FiniteMatrixGroup::close_group({swap01, cyc});
    auto subs = prime_order_elements(g);
    std::size_t covered = 0;
    for (const auto& s : subs) covered += s.prime - 1;
    std::size_t prime_count = 0;
    for (std::size_t i = 1; i < g.order(); ++i) {
      unsigned long o = g.element_order(i);
      if (o == 2 || o == 3 || o == 5 || o == 7) ++prime_count;
    }
    CHECK(covered == prime_count);
  }
}
