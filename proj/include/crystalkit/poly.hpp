#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crystalkit/matrix.hpp"

namespace ck {

// Univariate polynomial over Q. Coefficients ascending; no trailing zeros,
// so degree() == coeffs().size() - 1 and the zero polynomial is empty.
class RatPoly {
public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);
  RatPoly(std::initializer_list<long> coeffs);

  static RatPoly x();
  static RatPoly constant(const Rat& c);
  static RatPoly from_int(const std::vector<Int>& coeffs);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  const Rat& leading() const;

  RatPoly operator+(const RatPoly& rhs) const;
  RatPoly operator-(const RatPoly& rhs) const;
  RatPoly operator*(const RatPoly& rhs) const;
  RatPoly operator*(const Rat& c) const;
  bool operator==(const RatPoly& rhs) const = default;

  // Division with remainder; divisor must be nonzero.
  std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const;
  // Exact division; throws if not exact.
  RatPoly exact_div(const RatPoly& d) const;
  bool is_divisible_by(const RatPoly& d) const;

  RatPoly derivative() const;
  RatPoly monic() const;
  Rat eval(const Rat& x) const;

  // Clears denominators and content: returns primitive integer coefficients
  // (ascending) and the rational s with *this = s * primitive.
  std::pair<std::vector<Int>, Rat> primitive_integer() const;

  std::string str() const;  // human-readable, variable "x"

private:
  void normalize();
  std::vector<Rat> c_;
};

RatPoly gcd(const RatPoly& a, const RatPoly& b);  // monic gcd

struct PolyFactorization {
  Rat constant;  // leading constant
  std::vector<std::pair<RatPoly, unsigned>> factors;  // monic irreducible ^ mult
};

// Square-free decomposition, factorization modulo a suitable prime with
// Hensel lifting, subset recombination under the Mignotte bound.
PolyFactorization factor_rational_poly(const RatPoly& p);

// k-th cyclotomic polynomial (memoized).
const RatPoly& cyclotomic_poly(unsigned k);

// If p (monic, integer coefficients) equals some cyclotomic polynomial,
// return its index.
std::optional<unsigned> cyclotomic_index(const RatPoly& p);

unsigned long euler_phi(unsigned long n);

// Characteristic polynomial det(xI - A), division-free (Berkowitz).
RatPoly char_poly(const IntMatrix& a);
RatPoly char_poly(const RatMatrix& a);

// Number of real roots in the open interval (a, b), via Sturm chains.
int sturm_count(const RatPoly& p, const Rat& a, const Rat& b);

}  // namespace ck
