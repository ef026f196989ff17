#include "crystalkit/numeric.hpp"

#include <algorithm>
#include <map>

#include "crystalkit/errors.hpp"

namespace ck {

namespace {

// Brent's rho with an iteration budget; returns 1 when the budget runs out.
Int pollard_rho(const Int& n, unsigned long c0, unsigned long& budget) {
  Int y = 2, c = c0, m = 128, g = 1, r = 1, q = 1, x, ys;
  while (g == 1) {
    x = y;
    for (Int i = 0; i < r; ++i) y = fmod(y * y + c, n);
    Int k = 0;
    while (k < r && g == 1) {
      ys = y;
      Int lim = std::min(m, Int(r - k));
      for (Int i = 0; i < lim; ++i) {
        y = fmod(y * y + c, n);
        q = fmod(q * ck::abs(Int(x - y)), n);
      }
      g = gcd(q, n);
      k += m;
      unsigned long spent = mpz_get_ui(lim.get_mpz_t());
      if (budget < spent) return 1;
      budget -= spent;
    }
    r *= 2;
  }
  if (g == n) {
    g = 1;
    while (g == 1) {
      ys = fmod(ys * ys + c, n);
      g = gcd(ck::abs(Int(x - ys)), n);
      if (budget == 0) return 1;
      --budget;
    }
  }
  return g;
}

bool factor_rec(Int n, std::map<Int, int>& out, unsigned long& budget) {
  if (n == 1) return true;
  if (mpz_probab_prime_p(n.get_mpz_t(), 32) > 0) {
    out[n] += 1;
    return true;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    std::map<Int, int> sub;
    if (!factor_rec(r, sub, budget)) return false;
    for (auto& [p, e] : sub) out[p] += 2 * e;
    return true;
  }
  for (unsigned long c = 1; budget > 0; ++c) {
    Int d = pollard_rho(n, c, budget);
    if (d != n && d != 1)
      return factor_rec(d, out, budget) && factor_rec(n / d, out, budget);
  }
  return false;
}

std::optional<std::map<Int, int>> factor_impl(const Int& n_in,
                                              unsigned long budget) {
  if (n_in == 0) throw InvalidInputError("factor_integer: zero");
  Int n = ck::abs(n_in);
  std::map<Int, int> acc;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
    while (n % p == 0) {
      acc[Int(p)] += 1;
      n /= p;
    }
  }
  for (Int d = 41; d * d <= n && d < 100000; d += 2) {
    while (n % d == 0) {
      acc[d] += 1;
      n /= d;
    }
  }
  if (n > 1 && !factor_rec(n, acc, budget)) return std::nullopt;
  return acc;
}

}  // namespace

std::optional<std::vector<std::pair<Int, int>>> try_factor_integer(
    const Int& n, unsigned long rho_budget) {
  auto acc = factor_impl(n, rho_budget);
  if (!acc) return std::nullopt;
  return std::vector<std::pair<Int, int>>(acc->begin(), acc->end());
}

std::vector<std::pair<Int, int>> factor_integer(const Int& n) {
  auto r = try_factor_integer(n, 200000000UL);
  if (!r)
    throw CapExceededError("factor_integer: factorization budget exhausted");
  return *r;
}

std::optional<Int> try_squarefree_part(const Rat& q,
                                       unsigned long rho_budget) {
  if (q == 0) throw InvalidInputError("squarefree_part of zero");
  Int v = q.get_num() * q.get_den();
  auto fac = try_factor_integer(v, rho_budget);
  if (!fac) return std::nullopt;
  Int out = sign(v);
  for (const auto& [p, e] : *fac)
    if (e % 2 == 1) out *= p;
  return out;
}

Int squarefree_part(const Rat& q) {
  auto r = try_squarefree_part(q, 200000000UL);
  if (!r)
    throw CapExceededError("squarefree_part: factorization budget exhausted");
  return *r;
}

}  // namespace ck
