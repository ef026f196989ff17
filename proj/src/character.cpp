#include "crystalkit/character.hpp"

#include <algorithm>
#include <cstdint>

#include "crystalkit/errors.hpp"

namespace ck {

CycNumber CharacterTable::inner(const std::vector<CycNumber>& a,
                                const std::vector<CycNumber>& b) const {
  CycNumber s(exponent);
  for (std::size_t i = 0; i < num_classes(); ++i)
    s = s + a[i] * b[i].conjugate() * Rat(static_cast<long>(class_sizes[i]));
  return s * make_rat(1, static_cast<long>(group_order));
}

std::size_t CharacterTable::orbit_of(std::size_t chi) const {
  for (std::size_t o = 0; o < galois_orbits.size(); ++o)
    for (std::size_t c : galois_orbits[o])
      if (c == chi) return o;
  throw Error(ErrorKind::Internal, "orbit_of: character not in any orbit");
}

namespace {

using i64 = std::int64_t;

i64 mulmod(i64 a, i64 b, i64 p) {
  return static_cast<i64>(static_cast<__int128>(a) * b % p);
}

i64 powmod(i64 a, i64 e, i64 p) {
  i64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

i64 invmod(i64 a, i64 p) { return powmod(((a % p) + p) % p, p - 2, p); }

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Matrix over F_p as flat vector of i64.
struct FpMat {
  std::size_t n = 0;
  std::vector<i64> e;
  FpMat() = default;
  FpMat(std::size_t n_) : n(n_), e(n_ * n_, 0) {}
  i64& at(std::size_t i, std::size_t j) { return e[i * n + j]; }
  i64 at(std::size_t i, std::size_t j) const { return e[i * n + j]; }
};

// Reduced row echelon over F_p; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<i64>>& m, i64 p) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size(), row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[row]);
    i64 inv = invmod(m[row][col], p);
    for (std::size_t j = 0; j < cols; ++j) m[row][j] = mulmod(m[row][j], inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      i64 f = m[i][col];
      for (std::size_t j = 0; j < cols; ++j)
        m[i][j] = ((m[i][j] - mulmod(f, m[row][j], p)) % p + p) % p;
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

// Minimal polynomial of the vector v under M (Krylov), coefficients in F_p,
// ascending, monic.
std::vector<i64> local_min_poly(const FpMat& M, const std::vector<i64>& v,
                                i64 p) {
  std::size_t n = M.n;
  // iterates[k] = M^k v; find the first dependency.
  std::vector<std::vector<i64>> rows;     // echelon of iterates
  std::vector<std::vector<i64>> coeffs;   // expression of each echelon row
  std::vector<i64> cur = v;
  std::vector<i64> cur_coeff(n + 1, 0);
  for (std::size_t k = 0; k <= n; ++k) {
    cur_coeff.assign(n + 1, 0);
    cur_coeff[k] = 1;
    // reduce cur against echelon rows, tracking the combination
    std::vector<i64> red = cur;
    std::vector<i64> comb(n + 1, 0);
    comb[k] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      // find pivot of rows[r]
      std::size_t pc = 0;
      while (pc < n && rows[r][pc] == 0) ++pc;
      if (pc == n || red[pc] == 0) continue;
      i64 f = mulmod(red[pc], invmod(rows[r][pc], p), p);
      for (std::size_t j = 0; j < n; ++j)
        red[j] = ((red[j] - mulmod(f, rows[r][j], p)) % p + p) % p;
      for (std::size_t j = 0; j <= n; ++j)
        comb[j] = ((comb[j] - mulmod(f, coeffs[r][j], p)) % p + p) % p;
    }
    bool zero = true;
    for (i64 x : red)
      if (x) {
        zero = false;
        break;
      }
    if (zero) {
      // comb gives the dependency: sum comb[j] M^j v = 0.
      std::vector<i64> poly(comb.begin(), comb.begin() + k + 1);
      i64 inv = invmod(poly.back(), p);
      for (i64& c : poly) c = mulmod(c, inv, p);
      return poly;
    }
    rows.push_back(red);
    coeffs.push_back(comb);
    // advance cur = M * cur
    std::vector<i64> next(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      i64 s = 0;
      for (std::size_t j = 0; j < n; ++j)
        s = (s + mulmod(M.at(i, j), cur[j], p)) % p;
      next[i] = s;
    }
    cur = std::move(next);
  }
  throw Error(ErrorKind::Internal, "local_min_poly: no dependency found");
}

}  // namespace

CharacterTable character_table(const FiniteMatrixGroup& g,
                               std::size_t order_cap) {
  if (g.order() > order_cap)
    throw CapExceededError("character_table: group order exceeds cap");
  CharacterTable t;
  t.group_order = g.order();
  t.classes = conjugacy_classes(g);
  std::size_t r = t.classes.representatives.size();
  for (const auto& m : t.classes.members) t.class_sizes.push_back(m.size());
  t.exponent = static_cast<unsigned>(g.exponent());
  unsigned e = t.exponent;

  t.inverse_class.resize(r);
  for (std::size_t i = 0; i < r; ++i)
    t.inverse_class[i] =
        t.classes.class_of[g.inverse(t.classes.representatives[i])];

  // Dixon prime: p = 1 (mod e), p > 2 sqrt(|G|).
  i64 p = e + 1;
  {
    i64 low = 1;
    while (low * low <= 4 * static_cast<i64>(g.order())) ++low;
    while (!is_prime(p) || p <= low) p += e;
  }

  // Class structure matrices M_i[j][k] = #{(a,b) in C_i x C_j : ab = g_k}.
  // The vector of algebra-hom values is the common eigenvector: M_i w = w_i w.
  auto class_matrix = [&](std::size_t i) {
    FpMat m(r);
    for (std::size_t a : t.classes.members[i]) {
      i64 ainv = static_cast<i64>(g.inverse(a));
      for (std::size_t k = 0; k < r; ++k) {
        std::size_t b =
            g.multiply(static_cast<std::size_t>(ainv), t.classes.representatives[k]);
        std::size_t j = t.classes.class_of[b];
        m.at(j, k) = (m.at(j, k) + 1) % p;
      }
    }
    return m;
  };

  // Split F_p^r into common eigenlines of the class matrices.
  std::vector<std::vector<std::vector<i64>>> spaces;  // each: basis rows
  {
    std::vector<std::vector<i64>> full;
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<i64> b(r, 0);
      b[i] = 1;
      full.push_back(std::move(b));
    }
    spaces.push_back(std::move(full));
  }
  for (std::size_t ci = 0; ci < r; ++ci) {
    bool all_lines = true;
    for (const auto& s : spaces)
      if (s.size() > 1) all_lines = false;
    if (all_lines) break;
    FpMat M = class_matrix(ci);
    std::vector<std::vector<std::vector<i64>>> next_spaces;
    for (auto& basis : spaces) {
      std::size_t d = basis.size();
      if (d == 1) {
        next_spaces.push_back(std::move(basis));
        continue;
      }
      // Restriction R of M to the subspace: M * basis_row^T = basis^T * R.
      // Solve with rref on basis matrix augmented by images.
      std::vector<std::vector<i64>> aug(d, std::vector<i64>(r + d, 0));
      // images: img[row] = M * basis[row]
      std::vector<std::vector<i64>> img(d, std::vector<i64>(r, 0));
      for (std::size_t br = 0; br < d; ++br)
        for (std::size_t i = 0; i < r; ++i) {
          i64 s = 0;
          for (std::size_t j = 0; j < r; ++j)
            s = (s + mulmod(M.at(i, j), basis[br][j], p)) % p;
          img[br][i] = s;
        }
      // Solve x * basis = img[row] for each row: set up basis^T | img^T.
      std::vector<std::vector<i64>> sys(r, std::vector<i64>(d + d, 0));
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t br = 0; br < d; ++br) sys[i][br] = basis[br][i];
        for (std::size_t br = 0; br < d; ++br) sys[i][d + br] = img[br][i];
      }
      rref(sys, p);
      FpMat R(d);
      for (std::size_t i = 0; i < d && i < sys.size(); ++i) {
        // pivot row i corresponds to coordinate i when basis rows are
        // independent (they are); R[i][br] = coefficient of basis_i in img_br.
        std::size_t pc = 0;
        while (pc < d && sys[i][pc] == 0) ++pc;
        if (pc == d) continue;
        for (std::size_t br = 0; br < d; ++br) R.at(pc, br) = sys[i][d + br];
      }
      // Split by eigenvalues of R (diagonalizable: semisimple commutative
      // algebra, p does not divide |G|). A single Krylov vector may miss
      // eigenvalues, so accumulate roots over basis vectors until the
      // eigenspaces fill the subspace.
      std::vector<i64> roots;
      for (std::size_t vi = 0; vi < d; ++vi) {
        std::vector<i64> v0(d, 0);
        v0[vi] = 1;
        std::vector<i64> mp = local_min_poly(R, v0, p);
        for (i64 x = 0; x < p; ++x) {
          i64 val = 0;
          for (std::size_t k = mp.size(); k-- > 0;)
            val = (mulmod(val, x, p) + mp[k]) % p;
          if (val == 0 && std::find(roots.begin(), roots.end(), x) == roots.end())
            roots.push_back(x);
        }
        // Dimensions of the eigenspaces found so far.
        std::size_t total = 0;
        for (i64 lam : roots) {
          std::vector<std::vector<i64>> mat(d, std::vector<i64>(d, 0));
          for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
              mat[i][j] = ((R.at(i, j) - (i == j ? lam : 0)) % p + p) % p;
          total += d - rref(mat, p).size();
        }
        if (total == d) break;
      }
      std::sort(roots.begin(), roots.end());
      std::vector<std::vector<std::vector<i64>>> parts;
      std::size_t covered = 0;
      for (i64 lam : roots) {
        // kernel of (R - lam I) acting on column coordinate vectors
        std::vector<std::vector<i64>> ker(d, std::vector<i64>(d, 0));
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j)
            ker[i][j] = ((R.at(i, j) - (i == j ? lam : 0)) % p + p) % p;
        // kernel via rref of the matrix, free variables
        std::vector<std::vector<i64>> mat = ker;
        std::vector<std::size_t> piv = rref(mat, p);
        std::vector<bool> isp(d, false);
        for (std::size_t pc : piv) isp[pc] = true;
        std::vector<std::vector<i64>> sub;
        for (std::size_t free = 0; free < d; ++free) {
          if (isp[free]) continue;
          std::vector<i64> coords(d, 0);
          coords[free] = 1;
          for (std::size_t rr = 0; rr < piv.size(); ++rr)
            coords[piv[rr]] = ((-mat[rr][free]) % p + p) % p;
          // convert coordinates to ambient vector
          std::vector<i64> vec(r, 0);
          for (std::size_t br = 0; br < d; ++br) {
            if (coords[br] == 0) continue;
            for (std::size_t i = 0; i < r; ++i)
              vec[i] = (vec[i] + mulmod(coords[br], basis[br][i], p)) % p;
          }
          sub.push_back(std::move(vec));
        }
        if (!sub.empty()) {
          covered += sub.size();
          parts.push_back(std::move(sub));
        }
      }
      if (covered != d)
        throw Error(ErrorKind::Internal,
                    "character_table: eigenspaces do not fill the space");
      for (auto& s : parts) next_spaces.push_back(std::move(s));
    }
    spaces = std::move(next_spaces);
  }
  for (const auto& s : spaces)
    if (s.size() != 1)
      throw Error(ErrorKind::Internal,
                  "character_table: class matrices failed to separate");

  // Identity class index (class of element 0 is always size 1).
  std::size_t idc = t.classes.class_of[0];

  // Normalize each eigenline so that omega[idc] = 1.
  std::vector<std::vector<i64>> omegas;
  for (const auto& s : spaces) {
    std::vector<i64> w = s[0];
    if (w[idc] == 0)
      throw Error(ErrorKind::Internal, "character_table: omega vanishes at 1");
    i64 inv = invmod(w[idc], p);
    for (i64& x : w) x = mulmod(x, inv, p);
    omegas.push_back(std::move(w));
  }

  // Degrees and character values mod p.
  i64 gord = static_cast<i64>(g.order());
  std::vector<std::vector<i64>> chi_mod(omegas.size(), std::vector<i64>(r, 0));
  std::vector<i64> degs(omegas.size(), 0);
  for (std::size_t c = 0; c < omegas.size(); ++c) {
    i64 s = 0;
    for (std::size_t i = 0; i < r; ++i) {
      i64 term = mulmod(omegas[c][i], omegas[c][t.inverse_class[i]], p);
      s = (s + mulmod(term, invmod(static_cast<i64>(t.class_sizes[i]), p), p)) % p;
    }
    i64 d2 = mulmod(gord % p, invmod(s, p), p);
    i64 deg = 0;
    for (i64 cand = 1; cand * cand <= gord; ++cand)
      if (mulmod(cand, cand, p) == d2) {
        deg = cand;
        break;
      }
    if (deg == 0)
      throw Error(ErrorKind::Internal, "character_table: degree not found");
    degs[c] = deg;
    for (std::size_t i = 0; i < r; ++i)
      chi_mod[c][i] = mulmod(mulmod(deg, omegas[c][i], p),
                             invmod(static_cast<i64>(t.class_sizes[i]), p), p);
  }

  // Primitive e-th root of unity mod p.
  i64 z = 0;
  for (i64 a = 2; a < p; ++a) {
    i64 cand = powmod(a, (p - 1) / e, p);
    bool primitive = (powmod(cand, e, p) == 1);
    for (unsigned q = 2; q <= e && primitive; ++q)
      if (e % q == 0 && is_prime(q) && powmod(cand, e / q, p) == 1)
        primitive = false;
    if (primitive) {
      z = cand;
      break;
    }
  }
  if (z == 0 && e == 1) z = 1;
  if (z == 0)
    throw Error(ErrorKind::Internal, "character_table: no primitive root");

  // Power map on classes: pclass[i][t] = class of rep_i^t.
  std::vector<std::vector<std::size_t>> pclass(r);
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t rep = t.classes.representatives[i];
    unsigned long o = g.element_order(rep);
    pclass[i].resize(o);
    std::size_t cur = 0;
    for (unsigned long k = 0; k < o; ++k) {
      pclass[i][k] = t.classes.class_of[cur];
      cur = g.multiply(cur, rep);
    }
  }

  // Lift to exact cyclotomic values: multiplicity of eigenvalue zeta_o^j in
  // rho(g_i) is m_j = (1/o) sum_t chi(g_i^t) z_o^{-jt} (computed mod p, and
  // the true m_j lies in [0, deg] with deg < p).
  t.values.assign(omegas.size(), std::vector<CycNumber>(r, CycNumber(e)));
  for (std::size_t c = 0; c < omegas.size(); ++c) {
    for (std::size_t i = 0; i < r; ++i) {
      unsigned long o = pclass[i].size();
      i64 zo = powmod(z, e / static_cast<i64>(o), p);
      i64 oinv = invmod(static_cast<i64>(o), p);
      CycNumber val(e);
      for (unsigned long j = 0; j < o; ++j) {
        i64 m = 0;
        for (unsigned long tt = 0; tt < o; ++tt) {
          i64 zpow = powmod(zo, static_cast<i64>(((o - j) * tt) % o), p);
          m = (m + mulmod(chi_mod[c][pclass[i][tt]], zpow, p)) % p;
        }
        m = mulmod(m, oinv, p);
        if (m > degs[c])
          throw Error(ErrorKind::Internal,
                      "character_table: eigenvalue multiplicity out of range");
        if (m != 0)
          val = val + CycNumber::root_power(e, (e / o) * j) * Rat(m);
      }
      t.values[c][i] = std::move(val);
    }
    t.degrees.push_back(degs[c]);
  }

  // Order rows: trivial character first, then by degree.
  {
    std::vector<std::size_t> perm(t.values.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    auto is_trivial = [&](std::size_t c) {
      for (std::size_t i = 0; i < r; ++i)
        if (!(t.values[c][i].is_rational() &&
              t.values[c][i].rational_value() == 1))
          return false;
      return true;
    };
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      bool ta = is_trivial(a), tb = is_trivial(b);
      if (ta != tb) return ta;
      if (t.degrees[a] != t.degrees[b]) return t.degrees[a] < t.degrees[b];
      return a < b;
    });
    std::vector<std::vector<CycNumber>> nv;
    std::vector<long> nd;
    for (std::size_t i : perm) {
      nv.push_back(std::move(t.values[i]));
      nd.push_back(t.degrees[i]);
    }
    t.values = std::move(nv);
    t.degrees = std::move(nd);
  }

  // Frobenius-Schur indicators: (1/|G|) sum_g chi(g^2).
  for (std::size_t c = 0; c < t.values.size(); ++c) {
    CycNumber s(e);
    for (std::size_t i = 0; i < r; ++i) {
      std::size_t sq = pclass[i].size() > 1 ? pclass[i][2 % pclass[i].size()]
                                            : pclass[i][0];
      s = s + t.values[c][sq] * Rat(static_cast<long>(t.class_sizes[i]));
    }
    s = s * make_rat(1, static_cast<long>(g.order()));
    Rat v = s.rational_value();
    if (v != 0 && v != 1 && v != -1)
      throw Error(ErrorKind::Internal, "character_table: indicator not in {-1,0,1}");
    t.indicators.push_back(static_cast<int>(v.get_num().get_si()));
  }

  // Galois orbits under zeta -> zeta^k: chi^sigma_k(g) = chi(g^k).
  {
    std::size_t nc = t.values.size();
    std::vector<std::size_t> orbit_id(nc, static_cast<std::size_t>(-1));
    for (std::size_t c = 0; c < nc; ++c) {
      if (orbit_id[c] != static_cast<std::size_t>(-1)) continue;
      std::size_t oid = t.galois_orbits.size();
      t.galois_orbits.emplace_back();
      std::vector<std::size_t> stack{c};
      orbit_id[c] = oid;
      while (!stack.empty()) {
        std::size_t cur = stack.back();
        stack.pop_back();
        t.galois_orbits[oid].push_back(cur);
        for (unsigned long k = 1; k < e || (e == 1 && k < 2); ++k) {
          if (e > 1 && gcd(Int(static_cast<long>(k)), Int(e)) != 1) continue;
          // image character row: values composed with the power map
          std::vector<CycNumber> img(r, CycNumber(e));
          for (std::size_t i = 0; i < r; ++i)
            img[i] = t.values[cur][pclass[i][k % pclass[i].size()]];
          for (std::size_t other = 0; other < nc; ++other) {
            if (orbit_id[other] != static_cast<std::size_t>(-1)) continue;
            if (t.values[other] == img) {
              orbit_id[other] = oid;
              stack.push_back(other);
            }
          }
        }
      }
      std::sort(t.galois_orbits[oid].begin(), t.galois_orbits[oid].end());
    }
  }

  return t;
}

}  // namespace ck
