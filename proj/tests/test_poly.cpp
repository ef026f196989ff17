#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crystalkit/poly.hpp"

using namespace ck;

namespace {

RatPoly refold(const PolyFactorization& f) {
  RatPoly p = RatPoly::constant(f.constant);
  for (const auto& [g, m] : f.factors)
    for (unsigned i = 0; i < m; ++i) p = p * g;
  return p;
}

// Spot-check: no rational roots for low-degree factors claimed irreducible.
bool has_rational_root(const RatPoly& p) {
  auto [ic, s] = p.primitive_integer();
  (void)s;
  Int a0 = ic.front(), an = ic.back();
  for (Int num = -ck::abs(a0); num <= ck::abs(a0); ++num) {
    if (a0 != 0 && num == 0) continue;
    for (Int den = 1; den <= ck::abs(an); ++den) {
      if (a0 != 0 && num != 0 && a0 % num != 0) break;
      if (an % den != 0) continue;
      if (p.eval(make_rat(num, den)) == 0) return true;
    }
  }
  return p.eval(Rat(0)) == 0;
}

}  // namespace

TEST_CASE("factor x^2-1") {
  RatPoly p{-1, 0, 1};
  auto f = factor_rational_poly(p);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.constant == 1);
  CHECK(f.factors[0].first == RatPoly{-1, 1});
  CHECK(f.factors[1].first == RatPoly{1, 1});
  CHECK(refold(f) == p);
}

TEST_CASE("factor x^2+1 stays irreducible") {
  RatPoly p{1, 0, 1};
  auto f = factor_rational_poly(p);
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].first == p);
  CHECK(f.factors[0].second == 1);
}

TEST_CASE("x^4+x^3+x^2+x+1 is irreducible") {
  // Brute-force oracle: no rational root; no monic quadratic factor with
  // coefficients within the Mignotte box.
  RatPoly p{1, 1, 1, 1, 1};
  CHECK(!has_rational_root(p));
  bool quad_factor = false;
  for (long b = -6; b <= 6 && !quad_factor; ++b)
    for (long c = -6; c <= 6 && !quad_factor; ++c) {
      RatPoly q{c, b, 1};
      if (p.is_divisible_by(q)) quad_factor = true;
    }
  CHECK(!quad_factor);
  auto f = factor_rational_poly(p);
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].first == p);
  CHECK(cyclotomic_index(p) == 5u);
}

TEST_CASE("multiplicities and mixed factors") {
  RatPoly p = RatPoly{-1, 1} * RatPoly{-1, 1} * RatPoly{1, 0, 1} *
              RatPoly{2, 3} * Rat(5);
  auto f = factor_rational_poly(p);
  CHECK(refold(f) == p);
  unsigned total = 0;
  for (const auto& [g, m] : f.factors) {
    total += m * g.degree();
    if (g.degree() >= 2 && g.degree() <= 3) CHECK(!has_rational_root(g));
  }
  CHECK(total == static_cast<unsigned>(p.degree()));
}

TEST_CASE("random products refold exactly") {
  Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    RatPoly p = RatPoly::constant(Rat(rng.range(1, 4)));
    int nf = 1 + rng.range(0, 2);
    for (int i = 0; i < nf; ++i) {
      int deg = 1 + rng.range(0, 2);
      std::vector<Rat> c(deg + 1);
      for (int j = 0; j <= deg; ++j) c[j] = Rat(rng.range(-4, 4));
      c[deg] = Rat(rng.range(1, 3));
      p = p * RatPoly(c);
    }
    auto f = factor_rational_poly(p);
    CHECK(refold(f) == p);
    for (const auto& [g, m] : f.factors) {
      CHECK(g.leading() == 1);
      if (g.degree() <= 3 && g.degree() > 1) CHECK(!has_rational_root(g));
    }
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == RatPoly{-1, 1});
  CHECK(cyclotomic_poly(2) == RatPoly{1, 1});
  CHECK(cyclotomic_poly(4) == RatPoly{1, 0, 1});
  CHECK(cyclotomic_poly(6) == RatPoly{1, -1, 1});
  CHECK(cyclotomic_poly(12) == RatPoly{1, 0, -1, 0, 1});
  CHECK(cyclotomic_index(RatPoly{1, -1, 1}) == 6u);
  CHECK(!cyclotomic_index(RatPoly{-2, 1}).has_value());
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(1) == 1);
}

TEST_CASE("char poly via Berkowitz") {
  IntMatrix cat{{2, 1}, {1, 1}};
  CHECK(char_poly(cat) == RatPoly{1, -3, 1});
  IntMatrix id = IntMatrix::identity(3);
  CHECK(char_poly(id) == RatPoly{-1, 3, -3, 1});
  // companion of x^4+x^3+x^2+x+1
  IntMatrix c5{{0, 0, 0, -1}, {1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}};
  CHECK(char_poly(c5) == RatPoly{1, 1, 1, 1, 1});
}

TEST_CASE("sturm count") {
  RatPoly p{-2, 0, 1};  // x^2 - 2: roots +-sqrt(2)
  CHECK(sturm_count(p, Rat(-2), Rat(2)) == 2);
  CHECK(sturm_count(p, Rat(0), Rat(2)) == 1);
  CHECK(sturm_count(p, Rat(2), Rat(3)) == 0);
  RatPoly q{1, 0, 1};  // no real roots
  CHECK(sturm_count(q, Rat(-10), Rat(10)) == 0);
}
