#include "crystalkit/repanalysis.hpp"

#include <algorithm>

#include "crystalkit/errors.hpp"
#include "crystalkit/linalg.hpp"

namespace ck {

namespace {

RatVector flatten(const RatMatrix& m) {
  RatVector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

// Incremental echelon span over Q with membership queries.
class Span {
public:
  explicit Span(std::size_t dim) : dim_(dim) {}

  // Returns true when v was linearly independent (and is absorbed).
  bool add(RatVector v) {
    reduce(v);
    for (std::size_t i = 0; i < dim_; ++i)
      if (v[i] != 0) {
        Rat inv = 1 / v[i];
        for (std::size_t j = 0; j < dim_; ++j) v[j] *= inv;
        rows_.push_back(std::move(v));
        pivots_.push_back(i);
        return true;
      }
    return false;
  }

  bool contains(RatVector v) const {
    reduce(v);
    for (const Rat& q : v)
      if (q != 0) return false;
    return true;
  }

  std::size_t size() const { return rows_.size(); }

private:
  void reduce(RatVector& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      Rat f = v[pivots_[r]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) v[j] -= f * rows_[r][j];
    }
  }

  std::size_t dim_;
  std::vector<RatVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

IntegralRep IntegralRep::from_generators(std::vector<IntMatrix> gens,
                                         std::size_t order_cap) {
  IntegralRep r;
  r.group = FiniteMatrixGroup::close_group(gens, order_cap);
  return r;
}

IntegralRep IntegralRep::conjugate(const IntMatrix& u) const {
  IntMatrix uinv = u.inverse_unimodular();
  std::vector<IntMatrix> gens;
  for (std::size_t gi : group.generator_indices())
    gens.push_back(u * group.element(gi) * uinv);
  IntegralRep r;
  r.group = FiniteMatrixGroup::close_group(gens, group.order() + 1);
  r.generator_labels = generator_labels;
  return r;
}

CommutantAlgebra commutant(const IntegralRep& rho) {
  std::size_t n = rho.degree();
  const auto& gens = rho.group.generator_indices();
  // Unknown X (n x n), equations (X M - M X)_{ij} = 0 per generator.
  std::size_t rows = std::max<std::size_t>(gens.size(), 1) * n * n;
  IntMatrix sys(rows, n * n);
  std::size_t row = 0;
  for (std::size_t gi : gens) {
    const IntMatrix& m = rho.group.element(gi);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        // coefficient of X_{ab}: [a==i] M_{bj} - M_{ia} [b==j]
        for (std::size_t b = 0; b < n; ++b)
          sys.at(row, i * n + b) += m.at(b, j);
        for (std::size_t a = 0; a < n; ++a)
          sys.at(row, a * n + j) -= m.at(i, a);
        ++row;
      }
  }
  CommutantAlgebra alg;
  alg.degree = n;
  for (const auto& k : integer_kernel(sys)) {
    RatMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b.at(i, j) = Rat(k[i * n + j]);
    alg.basis.push_back(std::move(b));
  }
  // Sanity: contains the identity and is closed under products.
  Span span(n * n);
  for (const auto& b : alg.basis) span.add(flatten(b));
  if (!span.contains(flatten(RatMatrix::identity(n))))
    throw Error(ErrorKind::Internal, "commutant: identity not in span");
  for (const auto& a : alg.basis)
    for (const auto& b : alg.basis)
      if (!span.contains(flatten(a * b)))
        throw Error(ErrorKind::Internal, "commutant: not closed under product");
  return alg;
}

RatPoly matrix_min_poly(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInputError("min poly of non-square");
  std::size_t n = m.rows();
  std::size_t dim = n * n;
  std::vector<RatVector> rows;
  std::vector<std::size_t> pivots;
  std::vector<std::vector<Rat>> combos;  // combos[r][k]: coefficient of M^k
  RatMatrix power = RatMatrix::identity(n);
  for (std::size_t k = 0;; ++k) {
    RatVector v = flatten(power);
    std::vector<Rat> combo(k + 1, Rat(0));
    combo[k] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Rat f = v[pivots[r]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) v[j] -= f * rows[r][j];
      for (std::size_t j = 0; j < combos[r].size(); ++j)
        combo[j] -= f * combos[r][j];
    }
    std::size_t piv = dim;
    for (std::size_t j = 0; j < dim; ++j)
      if (v[j] != 0) {
        piv = j;
        break;
      }
    if (piv == dim) return RatPoly(combo).monic();
    Rat inv = 1 / v[piv];
    for (std::size_t j = 0; j < dim; ++j) v[j] *= inv;
    for (Rat& c : combo) c *= inv;
    rows.push_back(std::move(v));
    pivots.push_back(piv);
    combos.push_back(std::move(combo));
    power = power * m;
  }
}

namespace {

// Extended Euclid in Q[x]: s a + t b = g, g monic.
std::tuple<RatPoly, RatPoly, RatPoly> poly_ext_gcd(const RatPoly& a,
                                                   const RatPoly& b) {
  RatPoly r0 = a, r1 = b;
  RatPoly s0 = RatPoly::constant(1), s1;
  RatPoly t0, t1 = RatPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    RatPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  Rat lead = r0.leading();
  return {r0.monic(), s0 * (1 / lead), t0 * (1 / lead)};
}

RatMatrix eval_poly_at(const RatPoly& p, const RatMatrix& m) {
  std::size_t n = m.rows();
  RatMatrix acc(n, n);
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    acc = acc * m;
    if (p.coeff(k) != 0) acc = acc + RatMatrix::identity(n) * p.coeff(k);
  }
  return acc;
}

}  // namespace

std::vector<BlockReport> block_decomposition(const CommutantAlgebra& algebra,
                                             std::uint64_t seed) {
  std::size_t n = algebra.degree;
  std::size_t dim = algebra.dimension();
  if (dim == 0) throw InvalidInputError("block_decomposition: empty algebra");

  // Center: X = sum c_i B_i with X B_j = B_j X for all j.
  std::vector<RatMatrix> center;
  {
    RatMatrix sys(dim * n * n, dim);
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t i = 0; i < dim; ++i) {
        RatMatrix comm = algebra.basis[i] * algebra.basis[j] -
                         algebra.basis[j] * algebra.basis[i];
        RatVector f = flatten(comm);
        for (std::size_t k = 0; k < n * n; ++k) sys.at(j * n * n + k, i) = f[k];
      }
    for (const RatVector& c : sys.kernel_basis()) {
      RatMatrix z(n, n);
      for (std::size_t i = 0; i < dim; ++i)
        if (c[i] != 0) z = z + algebra.basis[i] * c[i];
      center.push_back(std::move(z));
    }
  }
  std::size_t zdim = center.size();

  // Generic center element: random integer combination whose minimal
  // polynomial is squarefree of degree = center dimension.
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  long width = 5;
  RatMatrix gamma(n, n);
  RatPoly mu;
  bool found = false;
  for (int attempt = 0; attempt < 48 && !found; ++attempt) {
    RatMatrix cand(n, n);
    for (std::size_t i = 0; i < zdim; ++i)
      cand = cand + center[i] * Rat(rng.range(-width, width));
    RatPoly m = matrix_min_poly(cand);
    if (static_cast<std::size_t>(m.degree()) == zdim &&
        gcd(m, m.derivative()).degree() == 0) {
      gamma = cand;
      mu = m;
      found = true;
    }
    if (attempt % 8 == 7) width *= 2;
  }
  if (!found)
    throw Error(ErrorKind::Internal,
                "GenericElementFailure: no squarefree generic center element");

  PolyFactorization fact = factor_rational_poly(mu);

  std::vector<BlockReport> blocks;
  RatMatrix idem_sum(n, n);
  std::size_t dims_sum = 0;
  for (const auto& [f, mult] : fact.factors) {
    if (mult != 1)
      throw Error(ErrorKind::Internal, "block: min poly not squarefree");
    RatPoly cof = mu.exact_div(f);
    auto [g, s, t] = poly_ext_gcd(cof, f);
    if (g.degree() != 0)
      throw Error(ErrorKind::Internal, "block: factors not coprime");
    // e = (s * cof)(gamma): 1 mod f, 0 mod the cofactor.
    RatMatrix e = eval_poly_at(s * cof, gamma);
    if (!(e * e == e))
      throw Error(ErrorKind::Internal, "block: idempotent fails e^2 = e");

    BlockReport br;
    br.idempotent = e;
    br.center_degree = static_cast<std::size_t>(f.degree());
    // Canonical center polynomial: x for Q, x^2 - d (d squarefree) for
    // quadratic fields; higher degrees keep the generic-element factor.
    if (f.degree() == 1) {
      br.center_min_poly = RatPoly{0, 1};
    } else if (f.degree() == 2) {
      Rat disc = f.coeff(1) * f.coeff(1) - 4 * f.coeff(0);
      auto d = try_squarefree_part(disc);
      if (d)
        br.center_min_poly =
            RatPoly(std::vector<Rat>{Rat(-*d), Rat(0), Rat(1)});
      else
        br.center_min_poly = f;
    } else {
      br.center_min_poly = f;
    }

    // Block basis: span of {e * B_i}.
    Span span(n * n);
    std::vector<RatMatrix> bbasis;
    for (const auto& b : algebra.basis) {
      RatMatrix eb = e * b;
      if (span.add(flatten(eb))) bbasis.push_back(eb);
    }
    br.dimension = bbasis.size();
    dims_sum += br.dimension;
    idem_sum = idem_sum + e;

    bool commutative = (br.dimension == br.center_degree);
    if (commutative) {
      br.division = Cert::Yes;  // a number field
      if (br.center_degree == 1) {
        br.classification = BlockClass::RationalField;
      } else if (br.center_degree == 2) {
        Rat p = f.coeff(1), q = f.coeff(0);  // monic x^2 + p x + q
        br.classification = (p * p - 4 * q < 0) ? BlockClass::ImaginaryQuadratic
                                                : BlockClass::InfiniteUnits;
      } else {
        br.classification = BlockClass::InfiniteUnits;
      }
      blocks.push_back(std::move(br));
      continue;
    }

    // Coordinates inside the block.
    std::size_t bd = bbasis.size();
    RatMatrix coord_sys(n * n, bd);
    for (std::size_t i = 0; i < bd; ++i) {
      RatVector fb = flatten(bbasis[i]);
      for (std::size_t k = 0; k < n * n; ++k) coord_sys.at(k, i) = fb[k];
    }
    auto express = [&](const RatMatrix& x) {
      RatVector sol;
      if (!coord_sys.solve(flatten(x), sol))
        throw Error(ErrorKind::Internal, "block: element not in block");
      return sol;
    };
    auto lmat = [&](const RatMatrix& x) {
      RatMatrix l(bd, bd);
      for (std::size_t i = 0; i < bd; ++i) {
        RatVector c = express(x * bbasis[i]);
        for (std::size_t j = 0; j < bd; ++j) l.at(j, i) = c[j];
      }
      return l;
    };

    if (br.center_degree == 1 && br.dimension == 4) {
      // Quaternion algebra over Q.
      auto trd = [&](const RatMatrix& x) -> Rat { return lmat(x).trace() / 2; };
      RatMatrix trow(1, 4);
      for (std::size_t i = 0; i < 4; ++i) trow.at(0, i) = trd(bbasis[i]);
      std::vector<RatVector> tz = trow.kernel_basis();
      auto combine4 = [&](const RatVector& c) {
        RatMatrix x(n, n);
        for (std::size_t i = 0; i < 4; ++i)
          if (c[i] != 0) x = x + bbasis[i] * c[i];
        return x;
      };
      RatVector eco = express(e);
      auto scalar_of = [&](const RatMatrix& x) {
        RatVector xs = express(x);
        std::size_t piv = 0;
        while (piv < 4 && eco[piv] == 0) ++piv;
        Rat val = xs[piv] / eco[piv];
        for (std::size_t k = 0; k < 4; ++k)
          if (xs[k] != val * eco[k])
            throw Error(ErrorKind::Internal, "block: square not scalar");
        return val;
      };

      // Definiteness of the reduced norm form first (no factoring involved):
      // Gram matrix of nrd(x) = (trd(x)^2 - trd(x^2)) / 2, leading minors.
      auto nrd = [&](const RatMatrix& x) -> Rat {
        Rat t1 = trd(x);
        Rat t2 = trd(x * x);
        return (t1 * t1 - t2) / 2;
      };
      RatMatrix gram(4, 4);
      std::vector<Rat> diag(4);
      for (std::size_t i = 0; i < 4; ++i) diag[i] = nrd(bbasis[i]);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
          if (i == j) gram.at(i, j) = diag[i];
          else {
            Rat q = nrd(bbasis[i] + bbasis[j]);
            gram.at(i, j) = (q - diag[i] - diag[j]) / 2;
          }
        }
      bool posdef = true;
      for (std::size_t k = 1; k <= 4 && posdef; ++k) {
        RatMatrix lead(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) lead.at(i, j) = gram.at(i, j);
        if (lead.det() <= 0) posdef = false;
      }

      // Quaternion parameters (a, b): search small integer combinations of
      // the trace-zero basis to keep the square classes factorable. Scale
      // basis vectors to primitive integer coordinates first.
      for (RatVector& v : tz) {
        Int den = 1;
        for (const Rat& q : v) den = lcm(den, q.get_den());
        Int content = 0;
        for (Rat& q : v) {
          q *= Rat(den);
          content = gcd(content, q.get_num());
        }
        if (content != 0)
          for (Rat& q : v) q /= Rat(content);
      }
      auto size_of = [](const Rat& q) {
        return mpz_sizeinbase(q.get_num().get_mpz_t(), 2) +
               mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
      };
      bool split = false;
      bool have_i = false;
      Rat a;
      RatMatrix iel(n, n);
      for (long c0 = -2; c0 <= 2 && !split; ++c0)
        for (long c1 = -2; c1 <= 2 && !split; ++c1)
          for (long c2 = -2; c2 <= 2 && !split; ++c2) {
            if (c0 == 0 && c1 == 0 && c2 == 0) continue;
            RatVector cc(4, Rat(0));
            for (std::size_t k = 0; k < 4; ++k)
              cc[k] = Rat(c0) * tz[0][k] + Rat(c1) * tz[1][k] + Rat(c2) * tz[2][k];
            RatMatrix cand = combine4(cc);
            Rat ca = scalar_of(cand * cand);
            if (ca == 0) {
              split = true;  // nonzero nilpotent
              break;
            }
            if (!have_i || size_of(ca) < size_of(a)) {
              a = ca;
              iel = cand;
              have_i = true;
            }
          }
      Rat b;
      bool have_j = false;
      if (!split) {
        RatMatrix anti(n * n, 3);
        for (std::size_t k = 0; k < 3; ++k) {
          RatMatrix vk = combine4(tz[k]);
          RatVector fw = flatten(iel * vk + vk * iel);
          for (std::size_t r = 0; r < n * n; ++r) anti.at(r, k) = fw[r];
        }
        std::vector<RatVector> jc = anti.kernel_basis();
        if (jc.empty())
          throw Error(ErrorKind::Internal, "block: no anticommuting element");
        for (RatVector& v : jc) {
          Int den = 1;
          for (const Rat& q : v) den = lcm(den, q.get_den());
          Int content = 0;
          for (Rat& q : v) {
            q *= Rat(den);
            content = gcd(content, q.get_num());
          }
          if (content != 0)
            for (Rat& q : v) q /= Rat(content);
        }
        long range = static_cast<long>(jc.size() > 1 ? 2 : 1);
        for (long c0 = -range; c0 <= range && !split; ++c0)
          for (long c1 = (jc.size() > 1 ? -range : 0);
               c1 <= (jc.size() > 1 ? range : 0) && !split; ++c1) {
            if (c0 == 0 && c1 == 0) continue;
            RatMatrix cand(n, n);
            for (std::size_t k = 0; k < 3; ++k) {
              Rat coef = Rat(c0) * jc[0][k] +
                         (jc.size() > 1 ? Rat(c1) * jc[1][k] : Rat(0));
              if (coef != 0) cand = cand + combine4(tz[k]) * coef;
            }
            if (cand.is_zero()) continue;
            Rat cb = scalar_of(cand * cand);
            if (cb == 0) {
              split = true;
              break;
            }
            if (!have_j || size_of(cb) < size_of(b)) {
              b = cb;
              have_j = true;
            }
          }
        if (!split && !have_j)
          throw Error(ErrorKind::Internal, "block: quaternion j not found");
      }

      if (split) {
        br.classification = BlockClass::InfiniteUnits;
        br.division = Cert::No;
        blocks.push_back(std::move(br));
        continue;
      }

      br.quaternion_params = {a, b};
      if (posdef) {
        // Definite quaternions are division algebras (ramified at infinity).
        br.division = Cert::Yes;
        br.classification = BlockClass::DefiniteQuaternion;
      } else {
        br.classification = BlockClass::InfiniteUnits;
        try {
          br.division =
              quaternion_is_division(a, b) ? Cert::Yes : Cert::No;
        } catch (const CapExceededError&) {
          br.division = Cert::Indeterminate;  // square classes out of reach
        }
      }
      blocks.push_back(std::move(br));
      continue;
    }

    // Remaining noncommutative shapes: infinite unit groups; division-ness
    // certified negatively when a block element has a reducible minimal
    // polynomial (zero divisor), otherwise left for character-side forcings.
    br.classification = BlockClass::InfiniteUnits;
    br.division = Cert::Indeterminate;
    Rng r2(seed ^ 0xABCD1234u);
    for (int trial = 0; trial < 24 && br.division == Cert::Indeterminate;
         ++trial) {
      RatMatrix x(n, n);
      for (const auto& bb : bbasis) x = x + bb * Rat(r2.range(-3, 3));
      RatVector sol;
      if (!coord_sys.solve(flatten(x), sol)) continue;
      RatPoly mp = matrix_min_poly(lmat(x));
      auto fr = factor_rational_poly(mp);
      if (fr.factors.size() > 1 || fr.factors[0].second > 1)
        br.division = Cert::No;
    }
    blocks.push_back(std::move(br));
  }

  if (dims_sum != dim)
    throw Error(ErrorKind::Internal,
                "block dimensions do not sum to algebra dimension");
  if (!(idem_sum == RatMatrix::identity(n)))
    throw Error(ErrorKind::Internal, "block idempotents do not sum to identity");
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      if (!(blocks[i].idempotent * blocks[j].idempotent).is_zero())
        throw Error(ErrorKind::Internal, "block idempotents not orthogonal");
  return blocks;
}

MultiplicityVector complex_multiplicities(const IntegralRep& rho,
                                          const CharacterTable& table) {
  if (table.group_order != rho.group.order() ||
      table.classes.class_of.size() != rho.group.order())
    throw InvalidInputError("TableMismatch: table built from another group");
  std::size_t r = table.num_classes();
  unsigned e = table.exponent;
  std::vector<CycNumber> trace(r, CycNumber(e));
  for (std::size_t i = 0; i < r; ++i) {
    Int t = rho.group.element(table.classes.representatives[i]).trace();
    trace[i] = CycNumber::from_rational(e, Rat(t));
  }
  MultiplicityVector mv;
  for (std::size_t c = 0; c < table.num_chars(); ++c) {
    CycNumber ip = table.inner(trace, table.values[c]);
    if (!ip.is_rational() || !is_integer(ip.rational_value()) ||
        ip.rational_value() < 0)
      throw Error(ErrorKind::Internal, "multiplicity is not a nonneg integer");
    mv.per_char.push_back(
        static_cast<long>(ip.rational_value().get_num().get_si()));
  }
  long total = 0;
  for (std::size_t c = 0; c < table.num_chars(); ++c)
    total += mv.per_char[c] * table.degrees[c];
  if (total != static_cast<long>(rho.degree()))
    throw Error(ErrorKind::Internal, "sum a_chi chi(1) != degree");
  for (const auto& orbit : table.galois_orbits) {
    long m = mv.per_char[orbit[0]];
    for (std::size_t c : orbit)
      if (mv.per_char[c] != m)
        throw Error(ErrorKind::Internal, "multiplicity not orbit-constant");
    mv.per_orbit.push_back(m);
  }
  return mv;
}

namespace {

// Isotypic projector of a Galois orbit from character data:
// p_O = (1/|G|) sum_i [sum_{chi in O} chi(1) conj(chi(g_i))] classsum_i.
RatMatrix orbit_projector(const IntegralRep& rho, const CharacterTable& t,
                          const std::vector<std::size_t>& orbit) {
  std::size_t n = rho.degree();
  RatMatrix p(n, n);
  for (std::size_t i = 0; i < t.num_classes(); ++i) {
    CycNumber coef(t.exponent);
    for (std::size_t c : orbit)
      coef = coef + t.values[c][i].conjugate() * Rat(t.degrees[c]);
    Rat rc = coef.rational_value();  // orbit sums are rational
    if (rc == 0) continue;
    IntMatrix classsum(n, n);
    for (std::size_t el : t.classes.members[i])
      classsum = classsum + rho.group.element(el);
    p = p + classsum.to_rational() *
                (rc / Rat(static_cast<long>(rho.group.order())));
  }
  return p;
}

std::vector<std::size_t> match_orbits_to_blocks(
    const IntegralRep& rho, const CharacterTable& t,
    const MultiplicityVector& mv, const std::vector<BlockReport>& blocks) {
  std::vector<std::size_t> match(t.galois_orbits.size(),
                                 static_cast<std::size_t>(-1));
  for (std::size_t o = 0; o < t.galois_orbits.size(); ++o) {
    if (mv.per_orbit[o] == 0) continue;
    RatMatrix p = orbit_projector(rho, t, t.galois_orbits[o]);
    bool found = false;
    for (std::size_t b = 0; b < blocks.size(); ++b)
      if (blocks[b].idempotent == p) {
        match[o] = b;
        found = true;
        break;
      }
    if (!found)
      throw CrossValidationError(
          "isotypic projector does not match any block idempotent");
  }
  return match;
}

// Per-orbit Q-multiplicity-freeness (m = 1).
Cert orbit_mult_free(const CharacterTable& t, const MultiplicityVector& mv,
                     std::size_t orbit, const BlockReport& block) {
  long a = mv.per_orbit[orbit];
  std::size_t chi = t.galois_orbits[orbit][0];
  if (a == 1) return Cert::Yes;
  if (block.dimension == block.center_degree) return Cert::Yes;  // commutative
  if (block.division == Cert::Yes) return Cert::Yes;
  if (block.division == Cert::No) return Cert::No;
  // linear characters have Schur index 1, so m = a
  if (t.degrees[chi] == 1) return a == 1 ? Cert::Yes : Cert::No;
  // indicator -1 forces even Schur index; with s | a and a = 2 this pins m = 1
  if (t.indicators[chi] == -1 && a == 2) return Cert::Yes;
  return Cert::Indeterminate;
}

}  // namespace

OutFiniteReport out_finite(const IntegralRep& rho, std::uint64_t seed) {
  OutFiniteReport rep;
  CharacterTable t = character_table(rho.group);
  MultiplicityVector mv = complex_multiplicities(rho, t);

  bool all_pass = true;
  for (std::size_t c = 0; c < t.num_chars(); ++c) {
    if (mv.per_char[c] == 0) continue;
    std::size_t osize = t.galois_orbits[t.orbit_of(c)].size();
    long a = mv.per_char[c];
    int ind = t.indicators[c];
    bool pass = (ind == 1 && osize == 1 && a == 1) ||
                (ind == 0 && osize == 2 && a == 1) ||
                (ind == -1 && osize == 1 && a == 2);
    rep.checklist.push_back({c, a, ind, osize, pass});
    if (!pass) all_pass = false;
  }
  rep.checklist_verdict = all_pass ? Finiteness::Finite : Finiteness::Infinite;

  auto blocks = block_decomposition(commutant(rho), seed);
  bool blocks_fine = true;
  for (const auto& b : blocks) {
    rep.block_classes.push_back(b.classification);
    if (b.classification == BlockClass::InfiniteUnits) blocks_fine = false;
  }
  rep.block_verdict = blocks_fine ? Finiteness::Finite : Finiteness::Infinite;

  if (rep.checklist_verdict != rep.block_verdict)
    throw CrossValidationError("out_finite: checklist and block route disagree");
  rep.verdict = rep.checklist_verdict;
  return rep;
}

Finiteness kahler_out_finite(const IntegralRep& rho, std::uint64_t seed) {
  CharacterTable t = character_table(rho.group);
  MultiplicityVector mv = complex_multiplicities(rho, t);
  auto blocks = block_decomposition(commutant(rho), seed);
  auto match = match_orbits_to_blocks(rho, t, mv, blocks);

  bool indeterminate = false;
  for (std::size_t o = 0; o < t.galois_orbits.size(); ++o) {
    if (mv.per_orbit[o] == 0) continue;
    std::size_t chi = t.galois_orbits[o][0];
    // A real-type constituent is R-irreducible and C-irreducible.
    if (t.indicators[chi] == 1) return Finiteness::Infinite;
    Cert free = orbit_mult_free(t, mv, o, blocks[match[o]]);
    if (free == Cert::No) return Finiteness::Infinite;
    if (free == Cert::Indeterminate) indeterminate = true;
  }
  return indeterminate ? Finiteness::Indeterminate : Finiteness::Finite;
}

bool calabi_yau_check(const IntegralRep& rho) {
  if (rho.degree() % 2 != 0)
    throw InvalidInputError("calabi_yau_check: degree must be even");
  CharacterTable t = character_table(rho.group);
  MultiplicityVector mv = complex_multiplicities(rho, t);
  for (std::size_t c = 0; c < t.num_chars(); ++c)
    if (t.indicators[c] == 1 && mv.per_char[c] % 2 != 0) return false;
  return true;
}

Cert mult_free_check(const IntegralRep& rho, std::uint64_t seed) {
  CharacterTable t = character_table(rho.group);
  MultiplicityVector mv = complex_multiplicities(rho, t);
  auto blocks = block_decomposition(commutant(rho), seed);
  auto match = match_orbits_to_blocks(rho, t, mv, blocks);
  bool indeterminate = false;
  for (std::size_t o = 0; o < t.galois_orbits.size(); ++o) {
    if (mv.per_orbit[o] == 0) continue;
    Cert free = orbit_mult_free(t, mv, o, blocks[match[o]]);
    if (free == Cert::No) return Cert::No;
    if (free == Cert::Indeterminate) indeterminate = true;
  }
  return indeterminate ? Cert::Indeterminate : Cert::Yes;
}

namespace {

int legendre(const Int& a, const Int& p) {
  Int r;
  Int e = (p - 1) / 2;
  mpz_powm(r.get_mpz_t(), fmod(a, p).get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

}  // namespace

int hilbert_symbol(const Rat& a_in, const Rat& b_in, const Int& v) {
  Int a = squarefree_part(a_in), b = squarefree_part(b_in);
  if (v == 0) return (a < 0 && b < 0) ? -1 : 1;  // real place
  if (v == 2) {
    auto val2 = [](Int x, Int& unit) {
      int k = 0;
      while (x % 2 == 0) {
        x /= 2;
        ++k;
      }
      unit = x;
      return k;
    };
    Int u, w;
    int alpha = val2(a, u), beta = val2(b, w);
    auto eps = [](const Int& x) { return fmod((x - 1) / 2, Int(2)).get_si(); };
    auto omega = [](const Int& x) {
      return fmod((x * x - 1) / 8, Int(2)).get_si();
    };
    long expo = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u);
    return (expo % 2 == 0) ? 1 : -1;
  }
  Int p = v;
  auto valp = [&](Int x, Int& unit) {
    int k = 0;
    while (x % p == 0) {
      x /= p;
      ++k;
    }
    unit = x;
    return k;
  };
  Int u, w;
  int alpha = valp(a, u), beta = valp(b, w);
  int s = 1;
  if (alpha % 2 == 1 && beta % 2 == 1 && fmod((p - 1) / 2, Int(2)) == 1)
    s = -s;
  if (beta % 2 == 1) s *= legendre(u, p);
  if (alpha % 2 == 1) s *= legendre(w, p);
  return s;
}

bool quaternion_is_division(const Rat& a, const Rat& b) {
  Int sa = squarefree_part(a), sb = squarefree_part(b);
  if (hilbert_symbol(a, b, Int(0)) == -1) return true;
  if (hilbert_symbol(a, b, Int(2)) == -1) return true;
  for (const auto& [p, e] : factor_integer(sa * sb)) {
    if (p == 2) continue;
    if (hilbert_symbol(a, b, p) == -1) return true;
  }
  return false;
}

std::string to_string(BlockClass c) {
  switch (c) {
    case BlockClass::RationalField: return "RationalField";
    case BlockClass::ImaginaryQuadratic: return "ImaginaryQuadratic";
    case BlockClass::DefiniteQuaternion: return "DefiniteQuaternion";
    case BlockClass::InfiniteUnits: return "InfiniteUnits";
  }
  return "?";
}

std::string to_string(Finiteness f) {
  switch (f) {
    case Finiteness::Finite: return "Finite";
    case Finiteness::Infinite: return "Infinite";
    case Finiteness::Indeterminate: return "Indeterminate";
  }
  return "?";
}

}  // namespace ck
