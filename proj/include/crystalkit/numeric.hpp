#pragma once
#include <optional>

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace ck {

// Arbitrary-precision scalars. Fixed-width arithmetic is not used anywhere:
// Smith reductions and Hensel lifting blow past 64 bits even at desk scale.
using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// gcd with Bezout coefficients: g = a*s + b*t.
inline Int gcdext(const Int& a, const Int& b, Int& s, Int& t) {
  Int g;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return g;
}

inline Int abs(const Int& a) { return ::abs(a); }
inline Rat abs(const Rat& a) { return ::abs(a); }
inline int sign(const Int& a) { return sgn(a); }
inline int sign(const Rat& a) { return sgn(a); }

// Floor division (round toward -infinity), matching lattice reduction needs.
inline Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int fmod(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Fractional part in [0, 1).
inline Rat frac(const Rat& q) {
  Rat f = q - Rat(fdiv(q.get_num(), q.get_den()));
  return f;
}

inline Int floor_rat(const Rat& q) { return fdiv(q.get_num(), q.get_den()); }

inline std::string to_string(const Int& a) { return a.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

// Parses "p/q" or "p"; returns false on malformed input or zero denominator.
bool parse_rational(const std::string& text, Rat& out);

// Prime factorization (trial division + Pollard rho + GMP primality);
// input must be nonzero, sign ignored. Pairs (prime, exponent), sorted.
// Throws CapExceededError when the rho budget runs out.
std::vector<std::pair<Int, int>> factor_integer(const Int& n);

// Squarefree integer representative of the square class of a nonzero
// rational: sign preserved, every square factor removed.
Int squarefree_part(const Rat& q);

// Budgeted variants: return nothing instead of grinding on numbers whose
// factorization is out of reach.
std::optional<std::vector<std::pair<Int, int>>> try_factor_integer(
    const Int& n, unsigned long rho_budget);
std::optional<Int> try_squarefree_part(const Rat& q,
                                       unsigned long rho_budget = 4000000);

// Deterministic 64-bit PRNG (SplitMix64). All randomized steps in the kit
// take explicit seeds so reports are reproducible.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi] inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

private:
  std::uint64_t state_;
};

}  // namespace ck
