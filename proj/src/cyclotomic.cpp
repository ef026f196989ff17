#include "crystalkit/cyclotomic.hpp"

#include <map>
#include <sstream>

#include "crystalkit/errors.hpp"
#include "crystalkit/poly.hpp"

namespace ck {

namespace {

// Per-conductor reduction table: zeta^j as a vector on the power basis,
// for j = 0 .. 2*(phi(e)-1).
struct ReductionTable {
  std::size_t deg;
  std::vector<std::vector<Rat>> power;  // power[j] has length deg
};

const ReductionTable& table_for(unsigned e) {
  static std::map<unsigned, ReductionTable> cache;
  auto it = cache.find(e);
  if (it != cache.end()) return it->second;
  const RatPoly& phi = cyclotomic_poly(e);
  std::size_t deg = static_cast<std::size_t>(phi.degree());
  ReductionTable t;
  t.deg = deg;
  std::size_t count = std::max<std::size_t>(2 * deg - 1, e);
  t.power.resize(count);
  for (std::size_t j = 0; j < count; ++j) {
    if (j < deg) {
      t.power[j].assign(deg, Rat(0));
      t.power[j][j] = 1;
    } else {
      // zeta^j = zeta * zeta^{j-1}, reduced by Phi_e
      // (zeta^deg = x^deg - Phi_e as a vector).
      std::vector<Rat> v(deg + 1, Rat(0));
      const std::vector<Rat>& prev = t.power[j - 1];
      for (std::size_t i = 0; i < deg; ++i) v[i + 1] = prev[i];
      Rat top = v[deg];
      if (top != 0)
        for (std::size_t i = 0; i < deg; ++i) v[i] -= top * phi.coeff(i);
      v.resize(deg);
      t.power[j] = std::move(v);
    }
  }
  return cache.emplace(e, std::move(t)).first->second;
}

}  // namespace

std::size_t CycNumber::euler_phi_deg(unsigned e) {
  return static_cast<std::size_t>(euler_phi(e));
}

CycNumber CycNumber::from_rational(unsigned e, const Rat& q) {
  CycNumber z(e);
  z.c_[0] = q;
  return z;
}

CycNumber CycNumber::root_power(unsigned e, unsigned long k) {
  const ReductionTable& t = table_for(e);
  k %= e;
  CycNumber z(e);
  z.c_ = t.power[k];
  return z;
}

CycNumber CycNumber::operator+(const CycNumber& rhs) const {
  if (e_ != rhs.e_) throw InvalidInputError("CycNumber conductor mismatch");
  CycNumber z(e_);
  for (std::size_t i = 0; i < c_.size(); ++i) z.c_[i] = c_[i] + rhs.c_[i];
  return z;
}

CycNumber CycNumber::operator-(const CycNumber& rhs) const {
  if (e_ != rhs.e_) throw InvalidInputError("CycNumber conductor mismatch");
  CycNumber z(e_);
  for (std::size_t i = 0; i < c_.size(); ++i) z.c_[i] = c_[i] - rhs.c_[i];
  return z;
}

CycNumber CycNumber::operator*(const CycNumber& rhs) const {
  if (e_ != rhs.e_) throw InvalidInputError("CycNumber conductor mismatch");
  const ReductionTable& t = table_for(e_);
  std::vector<Rat> conv(2 * t.deg - 1 > 0 ? 2 * t.deg - 1 : 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j)
      conv[i + j] += c_[i] * rhs.c_[j];
  }
  CycNumber z(e_);
  for (std::size_t j = 0; j < conv.size(); ++j) {
    if (conv[j] == 0) continue;
    const std::vector<Rat>& p = t.power[j];
    for (std::size_t i = 0; i < t.deg; ++i) z.c_[i] += conv[j] * p[i];
  }
  return z;
}

CycNumber CycNumber::operator*(const Rat& c) const {
  CycNumber z(e_);
  for (std::size_t i = 0; i < c_.size(); ++i) z.c_[i] = c_[i] * c;
  return z;
}

bool CycNumber::is_zero() const {
  for (const Rat& q : c_)
    if (q != 0) return false;
  return true;
}

bool CycNumber::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat CycNumber::rational_value() const {
  if (!is_rational())
    throw InvalidInputError("CycNumber is not rational: " + str());
  return c_[0];
}

CycNumber CycNumber::galois(unsigned long k) const {
  if (gcd(Int(static_cast<long>(k % e_)), Int(e_)) != 1)
    throw InvalidInputError("galois: k not coprime to conductor");
  CycNumber z(e_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    z = z + root_power(e_, (i * k) % e_) * c_[i];
  }
  return z;
}

std::string CycNumber::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << c_[i].get_str();
    if (i >= 1) os << "*z" << e_ << "^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace ck
