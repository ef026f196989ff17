#include "crystalkit/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "crystalkit/errors.hpp"

namespace ck {

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

RatPoly::RatPoly(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  normalize();
}

void RatPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::x() { return RatPoly({0, 1}); }

RatPoly RatPoly::constant(const Rat& c) {
  RatPoly p;
  if (c != 0) p.c_.push_back(c);
  return p;
}

RatPoly RatPoly::from_int(const std::vector<Int>& coeffs) {
  std::vector<Rat> c;
  c.reserve(coeffs.size());
  for (const Int& v : coeffs) c.emplace_back(v);
  return RatPoly(std::move(c));
}

const Rat& RatPoly::leading() const {
  if (c_.empty()) throw InvalidInputError("leading coefficient of zero poly");
  return c_.back();
}

RatPoly RatPoly::operator+(const RatPoly& rhs) const {
  std::vector<Rat> c(std::max(c_.size(), rhs.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c[i] += rhs.c_[i];
  return RatPoly(std::move(c));
}

RatPoly RatPoly::operator-(const RatPoly& rhs) const {
  std::vector<Rat> c(std::max(c_.size(), rhs.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c[i] -= rhs.c_[i];
  return RatPoly(std::move(c));
}

RatPoly RatPoly::operator*(const RatPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return RatPoly();
  std::vector<Rat> c(c_.size() + rhs.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j)
      c[i + j] += c_[i] * rhs.c_[j];
  }
  return RatPoly(std::move(c));
}

RatPoly RatPoly::operator*(const Rat& c) const {
  std::vector<Rat> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * c;
  return RatPoly(std::move(r));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& d) const {
  if (d.is_zero()) throw InvalidInputError("polynomial division by zero");
  std::vector<Rat> rem = c_;
  std::vector<Rat> quo;
  int dd = d.degree();
  if (degree() >= dd) quo.assign(degree() - dd + 1, Rat(0));
  Rat lead_inv = 1 / d.leading();
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    if (rem[i] == 0) continue;
    Rat q = rem[i] * lead_inv;
    quo[i - dd] = q;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d.c_[j];
  }
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly RatPoly::exact_div(const RatPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw InvalidInputError("polynomial division not exact");
  return q;
}

bool RatPoly::is_divisible_by(const RatPoly& d) const {
  return divmod(d).second.is_zero();
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return RatPoly();
  std::vector<Rat> c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return RatPoly(std::move(c));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (1 / leading());
}

Rat RatPoly::eval(const Rat& x) const {
  Rat v = 0;
  for (std::size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
  return v;
}

std::pair<std::vector<Int>, Rat> RatPoly::primitive_integer() const {
  if (is_zero()) return {{}, Rat(0)};
  Int den = 1;
  for (const Rat& q : c_) den = lcm(den, q.get_den());
  std::vector<Int> ic(c_.size());
  Int content = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    Rat scaled = c_[i] * Rat(den);
    ic[i] = scaled.get_num();
    content = gcd(content, ic[i]);
  }
  if (sign(ic.back()) < 0) content = -content;
  for (Int& v : ic) v /= content;
  return {ic, make_rat(content, den)};
}

std::string RatPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << (sign(c_[i]) < 0 ? " - " : " + ");
    else if (sign(c_[i]) < 0) os << "-";
    Rat a = abs(c_[i]);
    if (i == 0 || a != 1) os << a.get_str();
    if (i >= 1) {
      if (a != 1) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = x.divmod(y).second;
    x = y;
    y = r;
  }
  return x.is_zero() ? x : x.monic();
}

// ---------------------------------------------------------------------------
// Arithmetic in Fp[x]; coefficients as nonnegative Int residues.
// ---------------------------------------------------------------------------

namespace {

using Fx = std::vector<Int>;  // ascending, no trailing zeros

void fx_trim(Fx& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Fx fx_from(const std::vector<Int>& coeffs, const Int& p) {
  Fx f(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) f[i] = fmod(coeffs[i], p);
  fx_trim(f);
  return f;
}

Int inv_mod(const Int& a, const Int& p) {
  Int s, t;
  Int g = gcdext(fmod(a, p), p, s, t);
  if (g != 1) throw Error(ErrorKind::Internal, "inv_mod: not invertible");
  return fmod(s, p);
}

Fx fx_mul(const Fx& a, const Fx& b, const Int& p) {
  if (a.empty() || b.empty()) return {};
  Fx c(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  for (Int& v : c) v = fmod(v, p);
  fx_trim(c);
  return c;
}

Fx fx_sub(const Fx& a, const Fx& b, const Int& p) {
  Fx c(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = fmod(c[i] - b[i], p);
  fx_trim(c);
  return c;
}

// Division with remainder; divisor need not be monic.
void fx_divmod(const Fx& a, const Fx& d, const Int& p, Fx& q, Fx& r) {
  r = a;
  q.clear();
  if (d.empty()) throw Error(ErrorKind::Internal, "fx division by zero");
  if (a.size() >= d.size()) q.assign(a.size() - d.size() + 1, Int(0));
  Int li = inv_mod(d.back(), p);
  for (int i = static_cast<int>(r.size()) - 1;
       i >= static_cast<int>(d.size()) - 1; --i) {
    if (r[i] == 0) continue;
    Int f = fmod(r[i] * li, p);
    q[i - (d.size() - 1)] = f;
    for (std::size_t j = 0; j < d.size(); ++j)
      r[i - (d.size() - 1) + j] = fmod(r[i - (d.size() - 1) + j] - f * d[j], p);
  }
  fx_trim(r);
  fx_trim(q);
}

Fx fx_mod(const Fx& a, const Fx& d, const Int& p) {
  Fx q, r;
  fx_divmod(a, d, p, q, r);
  return r;
}

Fx fx_gcd(Fx a, Fx b, const Int& p) {
  while (!b.empty()) {
    Fx r = fx_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Int li = inv_mod(a.back(), p);
    for (Int& v : a) v = fmod(v * li, p);
  }
  return a;
}

Fx fx_powmod(const Fx& base, const Int& e, const Fx& mod, const Int& p) {
  Fx result{Int(1)};
  Fx b = fx_mod(base, mod, p);
  for (long bit = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1;
       bit >= 0; --bit) {
    result = fx_mod(fx_mul(result, result, p), mod, p);
    if (mpz_tstbit(e.get_mpz_t(), bit))
      result = fx_mod(fx_mul(result, b, p), mod, p);
  }
  return result;
}

Fx fx_derivative(const Fx& a, const Int& p) {
  if (a.size() <= 1) return {};
  Fx d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i)
    d[i - 1] = fmod(a[i] * Int(static_cast<long>(i)), p);
  fx_trim(d);
  return d;
}

// Equal-degree splitting (Cantor–Zassenhaus), f squarefree product of
// irreducibles of degree d, p odd. Deterministic seed keeps runs reproducible.
void fx_equal_degree(const Fx& f, std::size_t d, const Int& p, Rng& rng,
                     std::vector<Fx>& out) {
  std::size_t n = f.size() - 1;
  if (n == d) {
    Fx g = f;
    Int li = inv_mod(g.back(), p);
    for (Int& v : g) v = fmod(v * li, p);
    out.push_back(g);
    return;
  }
  Int pd;
  mpz_pow_ui(pd.get_mpz_t(), p.get_mpz_t(), d);
  Int e = (pd - 1) / 2;
  for (;;) {
    Fx r(n, Int(0));
    for (std::size_t i = 0; i < n; ++i)
      r[i] = fmod(Int(static_cast<long>(rng.next() & 0x7fffffff)), p);
    fx_trim(r);
    if (r.empty()) continue;
    Fx w = fx_powmod(r, e, f, p);
    if (w.empty()) continue;
    w[0] = fmod(w[0] - 1, p);
    fx_trim(w);
    Fx g = fx_gcd(w, f, p);
    if (g.size() <= 1 || g.size() == f.size()) continue;
    Fx h;
    {
      Fx q, rr;
      fx_divmod(f, g, p, q, rr);
      h = q;
    }
    fx_equal_degree(g, d, p, rng, out);
    fx_equal_degree(h, d, p, rng, out);
    return;
  }
}

// Full factorization of a squarefree f over Fp into monic irreducibles.
std::vector<Fx> fx_factor_squarefree(Fx f, const Int& p, Rng& rng) {
  std::vector<Fx> out;
  Int li = inv_mod(f.back(), p);
  for (Int& v : f) v = fmod(v * li, p);
  Fx xpoly{Int(0), Int(1)};
  Fx h = xpoly;
  std::size_t d = 0;
  while (f.size() - 1 >= 2 * (d + 1)) {
    ++d;
    h = fx_powmod(h, p, f, p);
    Fx g = fx_gcd(fx_sub(h, xpoly, p), f, p);
    if (g.size() > 1) {
      fx_equal_degree(g, d, p, rng, out);
      Fx q, r;
      fx_divmod(f, g, p, q, r);
      f = q;
      h = fx_mod(h, f, p);
    }
  }
  if (f.size() > 1) out.push_back(f);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Hensel lifting of a modular factorization (binary factor tree).
// ---------------------------------------------------------------------------

// All polynomials ascending Int coefficients, arithmetic mod m where stated.
Fx fx_mul_mod_m(const Fx& a, const Fx& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  Fx c(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  for (Int& v : c) v = fmod(v, m);
  fx_trim(c);
  return c;
}

Fx fx_sub_mod_m(const Fx& a, const Fx& b, const Int& m) {
  Fx c(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = fmod(c[i] - b[i], m);
  fx_trim(c);
  return c;
}

Fx fx_add_mod_m(const Fx& a, const Fx& b, const Int& m) {
  Fx c(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = fmod(c[i] + b[i], m);
  fx_trim(c);
  return c;
}

// Division by monic d, coefficients mod m.
void fx_divmod_monic_m(const Fx& a, const Fx& d, const Int& m, Fx& q, Fx& r) {
  r = a;
  q.clear();
  if (a.size() >= d.size()) q.assign(a.size() - d.size() + 1, Int(0));
  for (int i = static_cast<int>(r.size()) - 1;
       i >= static_cast<int>(d.size()) - 1; --i) {
    if (r[i] == 0) continue;
    Int f = r[i];
    q[i - (d.size() - 1)] = f;
    for (std::size_t j = 0; j < d.size(); ++j)
      r[i - (d.size() - 1) + j] = fmod(r[i - (d.size() - 1) + j] - f * d[j], m);
  }
  fx_trim(q);
  fx_trim(r);
}

// Clean Hensel step (von zur Gathen & Gerhard, Alg. 15.10).
void hensel_step2(const Fx& f, Fx& g, Fx& h, Fx& s, Fx& t, const Int& q) {
  Int m = q * q;
  Fx e = fx_sub_mod_m(f, fx_mul_mod_m(g, h, m), m);
  Fx se = fx_mul_mod_m(s, e, m);
  Fx qq, r;
  fx_divmod_monic_m(se, h, m, qq, r);
  Fx g1 = fx_add_mod_m(g, fx_add_mod_m(fx_mul_mod_m(t, e, m),
                                       fx_mul_mod_m(qq, g, m), m), m);
  Fx h1 = fx_add_mod_m(h, r, m);
  Fx b = fx_sub_mod_m(fx_add_mod_m(fx_mul_mod_m(s, g1, m),
                                   fx_mul_mod_m(t, h1, m), m),
                      Fx{Int(1)}, m);
  Fx sb = fx_mul_mod_m(s, b, m);
  Fx c, d;
  fx_divmod_monic_m(sb, h1, m, c, d);
  Fx s1 = fx_sub_mod_m(s, d, m);
  Fx t1 = fx_sub_mod_m(fx_sub_mod_m(t, fx_mul_mod_m(t, b, m), m),
                       fx_mul_mod_m(c, g1, m), m);
  g = g1;
  h = h1;
  s = s1;
  t = t1;
}

// Lifts the factorization f ≡ lc * prod(factors) (mod p) to modulus target
// (a power of p). f primitive integer, factors monic mod p, f monic here.
// Binary splitting on the factor list.
std::vector<Fx> hensel_lift_list(const Fx& f, std::vector<Fx> factors,
                                 const Int& p, const Int& target) {
  if (factors.size() == 1) {
    // f itself reduced mod target is the lift (f monic).
    Fx g(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) g[i] = fmod(f[i], target);
    return {g};
  }
  std::size_t half = factors.size() / 2;
  Fx g{Int(1)}, h{Int(1)};
  for (std::size_t i = 0; i < half; ++i) g = fx_mul(g, factors[i], p);
  for (std::size_t i = half; i < factors.size(); ++i)
    h = fx_mul(h, factors[i], p);
  // Bezout: s g + t h = 1 mod p via extended Euclid in Fp[x].
  Fx s, t;
  {
    Fx r0 = g, r1 = h;
    Fx s0{Int(1)}, s1{}, t0{}, t1{Int(1)};
    while (!r1.empty()) {
      Fx q, r;
      fx_divmod(r0, r1, p, q, r);
      Fx s2 = fx_sub(s0, fx_mul(q, s1, p), p);
      Fx t2 = fx_sub(t0, fx_mul(q, t1, p), p);
      r0 = r1;
      r1 = r;
      s0 = s1;
      s1 = s2;
      t0 = t1;
      t1 = t2;
    }
    if (r0.size() != 1)
      throw Error(ErrorKind::Internal, "hensel: factors not coprime mod p");
    Int li = inv_mod(r0[0], p);
    for (Int& v : s0) v = fmod(v * li, p);
    for (Int& v : t0) v = fmod(v * li, p);
    s = s0;
    t = t0;
  }
  Int q = p;
  while (q < target) {
    hensel_step2(f, g, h, s, t, q);
    q = q * q;
  }
  // Recurse into both halves with f replaced by g, h reduced mod target.
  auto reduce = [&](Fx& a) {
    for (Int& v : a) v = fmod(v, q);
    fx_trim(a);
  };
  reduce(g);
  reduce(h);
  std::vector<Fx> left(factors.begin(), factors.begin() + half);
  std::vector<Fx> right(factors.begin() + half, factors.end());
  std::vector<Fx> lg = hensel_lift_list(g, std::move(left), p, q);
  std::vector<Fx> rg = hensel_lift_list(h, std::move(right), p, q);
  lg.insert(lg.end(), rg.begin(), rg.end());
  return lg;
}

Int fx_max_abs(const std::vector<Int>& f) {
  Int m = 0;
  for (const Int& v : f) m = std::max(m, abs(v));
  return m;
}

// Symmetric representative in (-m/2, m/2].
Int symmetric(const Int& a, const Int& m) {
  Int r = fmod(a, m);
  if (2 * r > m) r -= m;
  return r;
}

// Exact division test of integer polynomials (divisor monic not required but
// primitive); returns quotient when exact.
bool int_poly_divide(const std::vector<Int>& f, const std::vector<Int>& g,
                     std::vector<Int>& quo) {
  RatPoly fp = RatPoly::from_int(f), gp = RatPoly::from_int(g);
  auto [q, r] = fp.divmod(gp);
  if (!r.is_zero()) return false;
  quo.clear();
  for (const Rat& c : q.coeffs()) {
    if (!is_integer(c)) return false;
    quo.push_back(c.get_num());
  }
  return true;
}

// Factor a primitive, squarefree integer polynomial with positive leading
// coefficient into irreducible integer factors (Zassenhaus).
std::vector<std::vector<Int>> factor_squarefree_int(std::vector<Int> f) {
  std::vector<std::vector<Int>> out;
  if (f.size() <= 2) {
    out.push_back(f);
    return out;
  }
  // Monicize: F(x) = lc^{n-1} f(x / lc) is monic with integer coefficients,
  // F_j = f_j * lc^{n-1-j}.
  Int lc = f.back();
  std::size_t n = f.size() - 1;
  std::vector<Int> F(f.size());
  F[n] = 1;
  {
    Int pw = 1;
    for (std::size_t j = n; j-- > 0;) {
      F[j] = f[j] * pw;
      pw *= lc;
    }
  }

  // Prime with F squarefree mod p and p not dividing lc(F)=1.
  Int p = 3;
  Rng rng(0x5eed);
  for (;;) {
    Fx fp = fx_from(F, p);
    if (fp.size() == F.size()) {
      Fx d = fx_derivative(fp, p);
      if (!d.empty() && fx_gcd(fp, d, p).size() == 1) break;
    }
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  }

  std::vector<Fx> modular = fx_factor_squarefree(fx_from(F, p), p, rng);
  if (modular.size() == 1) {
    out.push_back(f);
    return out;
  }

  // Mignotte-style bound: |coeff of any monic factor of F| <= 2^n * ||F||_2.
  Int norm2 = 0;
  for (const Int& v : F) norm2 += v * v;
  Int bound = 1;
  mpz_sqrt(bound.get_mpz_t(), norm2.get_mpz_t());
  bound += 1;
  Int two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, n + 1);
  bound *= two_n;
  Int target = p;
  while (target <= 2 * bound) target *= target;

  std::vector<Fx> lifted = hensel_lift_list(F, modular, p, target);
  Int modulus = target;
  // hensel_lift_list squares past target; recompute the actual modulus.
  {
    modulus = p;
    while (modulus < target) modulus = modulus * modulus;
  }

  // Subset recombination against F (monic), then map factors back to f.
  std::vector<Int> remaining = F;
  std::vector<Fx> pool = lifted;
  std::vector<std::vector<Int>> monic_factors;
  std::size_t subset_size = 1;
  while (pool.size() > 0 && subset_size <= pool.size() / 2) {
    bool found = false;
    std::vector<std::size_t> idx(subset_size);
    for (std::size_t i = 0; i < subset_size; ++i) idx[i] = i;
    for (;;) {
      // Candidate = product of chosen lifted factors, symmetric coefficients.
      Fx prod{Int(1)};
      for (std::size_t i : idx) prod = fx_mul_mod_m(prod, pool[i], modulus);
      std::vector<Int> cand(prod.size());
      for (std::size_t i = 0; i < prod.size(); ++i)
        cand[i] = symmetric(prod[i], modulus);
      std::vector<Int> quo;
      if (fx_max_abs(cand) <= bound && int_poly_divide(remaining, cand, quo)) {
        monic_factors.push_back(cand);
        remaining = quo;
        std::vector<Fx> next_pool;
        for (std::size_t i = 0, k = 0; i < pool.size(); ++i) {
          if (k < idx.size() && idx[k] == i) {
            ++k;
            continue;
          }
          next_pool.push_back(pool[i]);
        }
        pool = std::move(next_pool);
        found = true;
        break;
      }
      // next combination
      int pos = static_cast<int>(subset_size) - 1;
      while (pos >= 0 && idx[pos] == pool.size() - subset_size + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (std::size_t i = pos + 1; i < subset_size; ++i)
        idx[i] = idx[i - 1] + 1;
    }
    if (!found) ++subset_size;
  }
  if (remaining.size() > 1) monic_factors.push_back(remaining);

  // Undo the monicization: g(x) -> primitive part of g(lc x) / lc^{deg g}.
  for (const std::vector<Int>& g : monic_factors) {
    if (lc == 1) {
      out.push_back(g);
      continue;
    }
    std::vector<Rat> back(g.size());
    Rat pw(1);
    for (std::size_t i = 0; i < g.size(); ++i) {
      back[i] = Rat(g[i]) * pw;
      pw *= Rat(lc);
    }
    auto [prim, scale] = RatPoly(std::move(back)).primitive_integer();
    (void)scale;
    out.push_back(prim);
  }
  return out;
}

}  // namespace

PolyFactorization factor_rational_poly(const RatPoly& p) {
  if (p.is_zero())
    throw InvalidInputError("factor_rational_poly: zero polynomial");
  PolyFactorization result;
  result.constant = p.leading();
  if (p.degree() == 0) return result;

  // Yun's square-free decomposition on the monic polynomial.
  RatPoly f = p.monic();
  std::vector<RatPoly> squarefree;  // squarefree[i] has multiplicity i+1
  {
    RatPoly fp = f.derivative();
    RatPoly a = gcd(f, fp);
    RatPoly b = f.exact_div(a);
    RatPoly c = fp.exact_div(a);
    RatPoly d = c - b.derivative();
    while (b.degree() > 0) {
      RatPoly s = gcd(b, d);
      squarefree.push_back(s);
      b = b.exact_div(s);
      d = d.exact_div(s) - b.derivative();
    }
  }

  for (std::size_t i = 0; i < squarefree.size(); ++i) {
    if (squarefree[i].degree() < 1) continue;
    auto [prim, scale] = squarefree[i].primitive_integer();
    (void)scale;
    for (const std::vector<Int>& g : factor_squarefree_int(prim)) {
      result.factors.emplace_back(RatPoly::from_int(g).monic(),
                                  static_cast<unsigned>(i + 1));
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& a, const auto& b) {
              if (a.first.degree() != b.first.degree())
                return a.first.degree() < b.first.degree();
              for (int i = a.first.degree(); i >= 0; --i) {
                const Rat ca = a.first.coeff(i), cb = b.first.coeff(i);
                if (ca != cb) return ca < cb;
              }
              return a.second < b.second;
            });
  return result;
}

const RatPoly& cyclotomic_poly(unsigned k) {
  static std::map<unsigned, RatPoly> cache;
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  // x^k - 1 divided by the cyclotomics of all proper divisors.
  std::vector<Rat> xk(k + 1, Rat(0));
  xk[0] = -1;
  xk[k] = 1;
  RatPoly num(std::move(xk));
  for (unsigned d = 1; d < k; ++d)
    if (k % d == 0) num = num.exact_div(cyclotomic_poly(d));
  return cache.emplace(k, std::move(num)).first->second;
}

unsigned long euler_phi(unsigned long n) {
  unsigned long r = n;
  for (unsigned long q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    while (n % q == 0) n /= q;
    r -= r / q;
  }
  if (n > 1) r -= r / n;
  return r;
}

std::optional<unsigned> cyclotomic_index(const RatPoly& p) {
  if (p.is_zero() || p.leading() != 1) return std::nullopt;
  unsigned d = static_cast<unsigned>(p.degree());
  if (d == 0) return std::nullopt;
  // phi(k) >= sqrt(k/2), so phi(k) = d implies k <= 2 d^2 (+ slack).
  for (unsigned k = 1; k <= 2 * d * d + 4; ++k) {
    if (euler_phi(k) != d) continue;
    if (cyclotomic_poly(k) == p) return k;
  }
  return std::nullopt;
}

namespace {

RatPoly berkowitz_char_poly(const RatMatrix& a) {
  std::size_t n = a.rows();
  if (n == 0) return RatPoly({1});
  // Berkowitz: iteratively build the characteristic polynomial vector.
  // Vectors store coefficients from leading (x^k) to constant.
  std::vector<Rat> poly{Rat(1), -a.at(0, 0)};
  for (std::size_t k = 1; k < n; ++k) {
    // Principal (k+1)x(k+1) block data.
    // R = row (a[k][0..k-1]), C = column (a[0..k-1][k]), M = leading k x k.
    std::vector<Rat> toep(k + 2);            // first column of Toeplitz matrix
    toep[0] = 1;
    toep[1] = -Rat(a.at(k, k));
    std::vector<Rat> v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = a.at(k, i);
    // toep[j+2] = - R * M^j * C
    std::vector<Rat> mc(k);
    for (std::size_t i = 0; i < k; ++i) mc[i] = a.at(i, k);
    for (std::size_t j = 0; j + 2 <= k + 1; ++j) {
      Rat dotv = 0;
      for (std::size_t i = 0; i < k; ++i) dotv += v[i] * mc[i];
      toep[j + 2] = -dotv;
      if (j + 3 <= k + 1) {
        std::vector<Rat> next(k, Rat(0));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t l = 0; l < k; ++l) next[i] += a.at(i, l) * mc[l];
        mc = std::move(next);
      }
    }
    // poly_new = Toeplitz(toep) * poly
    std::vector<Rat> np(k + 2, Rat(0));
    for (std::size_t i = 0; i < k + 2; ++i)
      for (std::size_t j = 0; j < poly.size() && j <= i; ++j)
        np[i] += toep[i - j] * poly[j];
    poly = std::move(np);
  }
  std::vector<Rat> ascending(poly.rbegin(), poly.rend());
  return RatPoly(std::move(ascending));
}

}  // namespace

RatPoly char_poly(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidInputError("char_poly: non-square");
  return berkowitz_char_poly(a.to_rational());
}

RatPoly char_poly(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidInputError("char_poly: non-square");
  return berkowitz_char_poly(a);
}

int sturm_count(const RatPoly& p, const Rat& a, const Rat& b) {
  if (p.is_zero()) throw InvalidInputError("sturm_count: zero polynomial");
  if (p.eval(a) == 0 || p.eval(b) == 0)
    throw InvalidInputError("sturm_count: root at interval endpoint");
  std::vector<RatPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    const RatPoly& s0 = chain[chain.size() - 2];
    const RatPoly& s1 = chain.back();
    RatPoly r = s0.divmod(s1).second;
    chain.push_back(r * Rat(-1));
  }
  chain.pop_back();
  auto variations = [&](const Rat& x) {
    int v = 0, last = 0;
    for (const RatPoly& s : chain) {
      Rat val = s.eval(x);
      int sg = sign(val);
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++v;
      last = sg;
    }
    return v;
  };
  return variations(a) - variations(b);
}

}  // namespace ck
