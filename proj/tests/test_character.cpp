#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crystalkit/character.hpp"
#include "crystalkit/errors.hpp"

using namespace ck;

namespace {

void check_table_invariants(const FiniteMatrixGroup& g,
                            const CharacterTable& t) {
  std::size_t r = t.num_classes();
  REQUIRE(t.num_chars() == r);
  // sum of squared degrees
  long sum = 0;
  for (long d : t.degrees) sum += d * d;
  CHECK(sum == static_cast<long>(g.order()));
  // row orthogonality, exact
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      CycNumber ip = t.inner(t.values[a], t.values[b]);
      REQUIRE(ip.is_rational());
      CHECK(ip.rational_value() == (a == b ? 1 : 0));
    }
  // sum of indicator * degree = #{g : g^2 = 1}
  long fs = 0;
  for (std::size_t c = 0; c < r; ++c) fs += t.indicators[c] * t.degrees[c];
  long invol = 0;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (g.multiply(i, i) == 0) ++invol;
  CHECK(fs == invol);
  // trivial character first, indicator +1
  CHECK(t.degrees[0] == 1);
  CHECK(t.indicators[0] == 1);
  // orbits partition the characters; orbit of an indicator-0 character
  // contains its conjugate
  std::size_t in_orbits = 0;
  for (const auto& orb : t.galois_orbits) in_orbits += orb.size();
  CHECK(in_orbits == r);
  for (std::size_t c = 0; c < r; ++c) {
    if (t.indicators[c] != 0) continue;
    std::vector<CycNumber> conj;
    for (std::size_t i = 0; i < r; ++i) conj.push_back(t.values[c][i].conjugate());
    bool found = false;
    for (std::size_t other : t.galois_orbits[t.orbit_of(c)])
      if (t.values[other] == conj) found = true;
    CHECK(found);
  }
}

}  // namespace

TEST_CASE("character table of Z2") {
  FiniteMatrixGroup g =
      FiniteMatrixGroup::close_group({IntMatrix{{1, 0}, {0, -1}}});
  CharacterTable t = character_table(g);
  check_table_invariants(g, t);
  REQUIRE(t.num_chars() == 2);
  CHECK(t.degrees == std::vector<long>{1, 1});
  CHECK(t.indicators == std::vector<int>{1, 1});
  CHECK(t.galois_orbits.size() == 2);
  // rows (1,1) and (1,-1)
  bool has_sign = false;
  for (std::size_t c = 0; c < 2; ++c) {
    bool sign_row = true;
    for (std::size_t i = 0; i < 2; ++i) {
      Rat v = t.values[c][i].rational_value();
      std::size_t rep = t.classes.representatives[i];
      if (v != (rep == 0 ? 1 : -1)) sign_row = false;
    }
    if (sign_row) has_sign = true;
  }
  CHECK(has_sign);
}

TEST_CASE("character table of Z4") {
  FiniteMatrixGroup g =
      FiniteMatrixGroup::close_group({IntMatrix{{0, -1}, {1, 0}}});
  CharacterTable t = character_table(g);
  check_table_invariants(g, t);
  REQUIRE(t.num_chars() == 4);
  CHECK(t.degrees == std::vector<long>{1, 1, 1, 1});
  // the two faithful characters have indicator 0 and form one Galois orbit
  int zero_ind = 0;
  for (int ind : t.indicators) zero_ind += (ind == 0) ? 1 : 0;
  CHECK(zero_ind == 2);
  bool pair_orbit = false;
  for (const auto& orb : t.galois_orbits)
    if (orb.size() == 2 && t.indicators[orb[0]] == 0 &&
        t.indicators[orb[1]] == 0)
      pair_orbit = true;
  CHECK(pair_orbit);
}

TEST_CASE("character table of Q8: the 2-dim irreducible is quaternionic") {
  // Left regular action of the quaternions i, j on Z^4 = <1, i, j, k>.
  IntMatrix qi{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
  IntMatrix qj{{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}};
  FiniteMatrixGroup g = FiniteMatrixGroup::close_group({qi, qj});
  REQUIRE(g.order() == 8);
  CharacterTable t = character_table(g);
  check_table_invariants(g, t);
  REQUIRE(t.num_chars() == 5);
  std::vector<long> degs = t.degrees;
  std::sort(degs.begin(), degs.end());
  CHECK(degs == std::vector<long>{1, 1, 1, 1, 2});
  for (std::size_t c = 0; c < 5; ++c)
    if (t.degrees[c] == 2) CHECK(t.indicators[c] == -1);
}

TEST_CASE("character table of S3") {
  IntMatrix swap01{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  IntMatrix cyc{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
  FiniteMatrixGroup g = FiniteMatrixGroup::close_group({swap01, cyc});
  CharacterTable t = character_table(g);
  check_table_invariants(g, t);
  std::vector<long> degs = t.degrees;
  std::sort(degs.begin(), degs.end());
  CHECK(degs == std::vector<long>{1, 1, 2});
  // all real: indicators +1, orbits singletons
  for (int ind : t.indicators) CHECK(ind == 1);
  CHECK(t.galois_orbits.size() == 3);
}

TEST_CASE("character table of Z5 (order-4 Galois orbit) and Z6") {
  IntMatrix c5{{0, 0, 0, -1}, {1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}};
  FiniteMatrixGroup g5 = FiniteMatrixGroup::close_group({c5});
  REQUIRE(g5.order() == 5);
  CharacterTable t5 = character_table(g5);
  check_table_invariants(g5, t5);
  bool big_orbit = false;
  for (const auto& orb : t5.galois_orbits)
    if (orb.size() == 4) big_orbit = true;
  CHECK(big_orbit);

  IntMatrix c6{{0, -1}, {1, 1}};
  FiniteMatrixGroup g6 = FiniteMatrixGroup::close_group({c6});
  REQUIRE(g6.order() == 6);
  CharacterTable t6 = character_table(g6);
  check_table_invariants(g6, t6);
  CHECK(t6.exponent == 6);
}

TEST_CASE("cap") {
  FiniteMatrixGroup g =
      FiniteMatrixGroup::close_group({IntMatrix{{0, -1}, {1, 0}}});
  CHECK_THROWS_AS(character_table(g, 3), CapExceededError);
}
