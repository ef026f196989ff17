#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crystalkit/errors.hpp"
#include "crystalkit/repanalysis.hpp"

using namespace ck;

namespace {

IntegralRep trivial_rep(std::size_t n) {
  return IntegralRep::from_generators({IntMatrix::identity(n)});
}

IntegralRep klein_rep() {
  return IntegralRep::from_generators({IntMatrix{{1, 0}, {0, -1}}});
}

IntegralRep z4_rep() {
  return IntegralRep::from_generators({IntMatrix{{0, -1}, {1, 0}}});
}

IntegralRep z5_companion_rep() {
  return IntegralRep::from_generators(
      {IntMatrix{{0, 0, 0, -1}, {1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}}});
}

IntegralRep q8_rep() {
  IntMatrix qi{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
  IntMatrix qj{{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}};
  return IntegralRep::from_generators({qi, qj});
}

IntMatrix random_unimodular(Rng& rng, std::size_t n) {
  // mild entries: a handful of +-1 shears keeps conjugated data desk-sized
  IntMatrix u = IntMatrix::identity(n);
  for (int step = 0; step < 2 * static_cast<int>(n); ++step) {
    std::size_t i = rng.range(0, static_cast<long>(n) - 1);
    std::size_t j = rng.range(0, static_cast<long>(n) - 1);
    if (i == j) continue;
    Int c = rng.range(-1, 1);
    for (std::size_t k = 0; k < n; ++k) u.at(i, k) += c * u.at(j, k);
  }
  return u;
}

}  // namespace

TEST_CASE("commutant dimensions") {
  CHECK(commutant(trivial_rep(2)).dimension() == 4);
  CHECK(commutant(klein_rep()).dimension() == 2);
  CHECK(commutant(z4_rep()).dimension() == 2);
}

TEST_CASE("block decomposition: Klein bottle holonomy splits into Q x Q") {
  auto blocks = block_decomposition(commutant(klein_rep()));
  REQUIRE(blocks.size() == 2);
  for (const auto& b : blocks) {
    CHECK(b.classification == BlockClass::RationalField);
    CHECK(b.dimension == 1);
    CHECK(b.division == Cert::Yes);
  }
}

TEST_CASE("block decomposition: Z4 rotation gives Q(i)") {
  auto blocks = block_decomposition(commutant(z4_rep()));
  REQUIRE(blocks.size() == 1);
  CHECK(blocks[0].classification == BlockClass::ImaginaryQuadratic);
  CHECK(blocks[0].center_degree == 2);
  CHECK(blocks[0].center_min_poly == RatPoly{1, 0, 1});
  CHECK(blocks[0].division == Cert::Yes);
}

TEST_CASE("block decomposition: trivial rep n=2 gives M2(Q)") {
  auto blocks = block_decomposition(commutant(trivial_rep(2)));
  REQUIRE(blocks.size() == 1);
  CHECK(blocks[0].dimension == 4);
  CHECK(blocks[0].classification == BlockClass::InfiniteUnits);
  CHECK(blocks[0].division == Cert::No);
}

TEST_CASE("block decomposition: Q8 on Z^4 gives the Hamilton quaternions") {
  auto blocks = block_decomposition(commutant(q8_rep()));
  REQUIRE(blocks.size() == 1);
  CHECK(blocks[0].dimension == 4);
  CHECK(blocks[0].classification == BlockClass::DefiniteQuaternion);
  CHECK(blocks[0].division == Cert::Yes);
  REQUIRE(blocks[0].quaternion_params.has_value());
  CHECK(blocks[0].quaternion_params->first < 0);
  CHECK(blocks[0].quaternion_params->second < 0);
}

TEST_CASE("complex multiplicities") {
  {
    auto rho = trivial_rep(2);
    auto t = character_table(rho.group);
    auto mv = complex_multiplicities(rho, t);
    REQUIRE(mv.per_char.size() == 1);
    CHECK(mv.per_char[0] == 2);
  }
  {
    auto rho = klein_rep();
    auto t = character_table(rho.group);
    auto mv = complex_multiplicities(rho, t);
    REQUIRE(mv.per_char.size() == 2);
    CHECK(mv.per_char[0] == 1);
    CHECK(mv.per_char[1] == 1);
  }
  {
    auto rho = z5_companion_rep();
    auto t = character_table(rho.group);
    auto mv = complex_multiplicities(rho, t);
    REQUIRE(mv.per_char.size() == 5);
    // trivial character has multiplicity 0, the four faithful ones 1
    CHECK(mv.per_char[0] == 0);
    for (std::size_t c = 1; c < 5; ++c) CHECK(mv.per_char[c] == 1);
  }
  {
    auto rho = klein_rep();
    auto other = character_table(z5_companion_rep().group);
    CHECK_THROWS_AS(complex_multiplicities(rho, other), InvalidInputError);
  }
}

TEST_CASE("out_finite verdicts") {
  CHECK(out_finite(trivial_rep(2)).verdict == Finiteness::Infinite);
  CHECK(out_finite(klein_rep()).verdict == Finiteness::Finite);
  CHECK(out_finite(z5_companion_rep()).verdict == Finiteness::Infinite);
  CHECK(out_finite(z4_rep()).verdict == Finiteness::Finite);
  CHECK(out_finite(q8_rep()).verdict == Finiteness::Finite);
}

TEST_CASE("kahler_out_finite") {
  CHECK(kahler_out_finite(z4_rep()) == Finiteness::Finite);
  CHECK(kahler_out_finite(klein_rep()) == Finiteness::Infinite);
  CHECK(kahler_out_finite(z5_companion_rep()) == Finiteness::Finite);
}

TEST_CASE("calabi_yau_check") {
  CHECK(calabi_yau_check(trivial_rep(6)));
  {
    // triv^3 + sign^3 of Z2: odd real multiplicities
    IntMatrix a = IntMatrix::identity(6);
    for (int i = 3; i < 6; ++i) a.at(i, i) = -1;
    CHECK(!calabi_yau_check(IntegralRep::from_generators({a})));
  }
  {
    // HW rep + HW rep (dim 6)
    IntMatrix a1(6, 6), a2(6, 6);
    std::vector<long> d1{1, -1, -1, 1, -1, -1}, d2{-1, 1, -1, -1, 1, -1};
    for (int i = 0; i < 6; ++i) {
      a1.at(i, i) = d1[i];
      a2.at(i, i) = d2[i];
    }
    CHECK(calabi_yau_check(IntegralRep::from_generators({a1, a2})));
  }
  CHECK_THROWS_AS(calabi_yau_check(trivial_rep(3)), InvalidInputError);
}

TEST_CASE("mult_free_check") {
  CHECK(mult_free_check(klein_rep()) == Cert::Yes);
  CHECK(mult_free_check(trivial_rep(2)) == Cert::No);
  CHECK(mult_free_check(z5_companion_rep()) == Cert::Yes);
  CHECK(mult_free_check(q8_rep()) == Cert::Yes);
}

TEST_CASE("hilbert symbols and quaternion division") {
  // Hamilton quaternions (-1,-1): ramified at 2 and infinity.
  CHECK(hilbert_symbol(Rat(-1), Rat(-1), Int(0)) == -1);
  CHECK(hilbert_symbol(Rat(-1), Rat(-1), Int(2)) == -1);
  CHECK(hilbert_symbol(Rat(-1), Rat(-1), Int(3)) == 1);
  CHECK(quaternion_is_division(Rat(-1), Rat(-1)));
  // (1, b) is always split.
  CHECK(!quaternion_is_division(Rat(1), Rat(5)));
  CHECK(!quaternion_is_division(Rat(1), Rat(-7)));
  // (-1, 2) is split: x^2 + y^2 = 2 has the solution (1,1).
  CHECK(!quaternion_is_division(Rat(-1), Rat(2)));
  // (2, 3): the symbol at 3 is -1 (2 is not a square mod 3).
  CHECK(hilbert_symbol(Rat(2), Rat(3), Int(3)) == -1);
  CHECK(quaternion_is_division(Rat(2), Rat(3)));
  // squares do not change the symbol
  CHECK(quaternion_is_division(Rat(-4), Rat(-9)));
}

TEST_CASE("matrix_min_poly") {
  RatMatrix m{{0, -1}, {1, 0}};
  CHECK(matrix_min_poly(m) == RatPoly{1, 0, 1});
  CHECK(matrix_min_poly(RatMatrix::identity(3)) == RatPoly{-1, 1});
  RatMatrix nil{{0, 1}, {0, 0}};
  CHECK(matrix_min_poly(nil) == RatPoly{0, 0, 1});
}

TEST_CASE("predicates are conjugation invariant") {
  Rng rng(99);
  std::vector<IntegralRep> reps;
  reps.push_back(klein_rep());
  reps.push_back(z4_rep());
  reps.push_back(trivial_rep(2));
  reps.push_back(z5_companion_rep());
  for (const auto& rho : reps) {
    auto base = out_finite(rho).verdict;
    auto base_mf = mult_free_check(rho);
    for (int trial = 0; trial < 20; ++trial) {
      IntMatrix u = random_unimodular(rng, rho.degree());
      IntegralRep conj = rho.conjugate(u);
      CHECK(out_finite(conj).verdict == base);
      CHECK(mult_free_check(conj) == base_mf);
    }
  }
}

TEST_CASE("cross-validation on random direct sums") {
  Rng rng(2024);
  for (int trial = 0; trial < 12; ++trial) {
    // random direct sums of Z2 characters and the Z4 rotation block
    int blocks = 1 + rng.range(0, 1);
    std::vector<long> kinds;
    std::size_t dim = 0;
    for (int b = 0; b < blocks + 1 && dim < 5; ++b) {
      long k = rng.range(0, 2);
      kinds.push_back(k);
      dim += (k == 2) ? 2 : 1;
    }
    IntMatrix gen(dim, dim);
    std::size_t pos = 0;
    for (long k : kinds) {
      if (k == 0) {
        gen.at(pos, pos) = 1;
        pos += 1;
      } else if (k == 1) {
        gen.at(pos, pos) = -1;
        pos += 1;
      } else {
        gen.at(pos, pos + 1) = -1;
        gen.at(pos + 1, pos) = 1;
        pos += 2;
      }
    }
    IntegralRep rho = IntegralRep::from_generators({gen});
    IntegralRep conj = rho.conjugate(random_unimodular(rng, dim));
    // out_finite cross-validates the two routes internally and throws on
    // disagreement
    auto rep = out_finite(conj);
    CHECK(rep.checklist_verdict == rep.block_verdict);
  }
}
