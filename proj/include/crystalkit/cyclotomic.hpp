#pragma once

#include <string>
#include <vector>

#include "crystalkit/numeric.hpp"

namespace ck {

// Element of Q(zeta_e), dense coefficients on 1, zeta, ..., zeta^{phi(e)-1},
// reduced modulo the e-th cyclotomic polynomial.
class CycNumber {
public:
  CycNumber() : e_(1), c_(1, Rat(0)) {}
  explicit CycNumber(unsigned e) : e_(e), c_(euler_phi_deg(e), Rat(0)) {}
  static CycNumber from_rational(unsigned e, const Rat& q);
  static CycNumber root_power(unsigned e, unsigned long k);  // zeta_e^k

  unsigned conductor() const { return e_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  CycNumber operator+(const CycNumber& rhs) const;
  CycNumber operator-(const CycNumber& rhs) const;
  CycNumber operator*(const CycNumber& rhs) const;
  CycNumber operator*(const Rat& c) const;
  bool operator==(const CycNumber& rhs) const = default;

  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const;  // throws when not rational

  // Galois automorphism zeta -> zeta^k, gcd(k, e) = 1.
  CycNumber galois(unsigned long k) const;
  CycNumber conjugate() const { return galois(e_ - 1); }

  std::string str() const;

private:
  static std::size_t euler_phi_deg(unsigned e);
  unsigned e_;
  std::vector<Rat> c_;
};

}  // namespace ck
