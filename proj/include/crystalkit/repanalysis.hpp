#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crystalkit/character.hpp"
#include "crystalkit/groups.hpp"
#include "crystalkit/poly.hpp"

namespace ck {

// A faithful integral representation, carried by its image: the map is the
// inclusion of the matrix group into GL(n,Z).
struct IntegralRep {
  FiniteMatrixGroup group;
  std::vector<std::string> generator_labels;  // optional, parallel to gens

  std::size_t degree() const { return group.degree(); }
  static IntegralRep from_generators(std::vector<IntMatrix> gens,
                                     std::size_t order_cap = 4096);
  // U rho U^{-1} for unimodular U.
  IntegralRep conjugate(const IntMatrix& u) const;
};

// Basis of {X : X phi(h) = phi(h) X for all h}, closed under product.
struct CommutantAlgebra {
  std::vector<RatMatrix> basis;
  std::size_t dimension() const { return basis.size(); }
  std::size_t degree = 0;
};

CommutantAlgebra commutant(const IntegralRep& rho);

enum class BlockClass {
  RationalField,
  ImaginaryQuadratic,
  DefiniteQuaternion,
  InfiniteUnits,
};

std::string to_string(BlockClass c);

// Tri-state for properties that may hinge on an uncomputable Schur index.
enum class Cert { Yes, No, Indeterminate };

struct BlockReport {
  RatMatrix idempotent;      // central idempotent cutting this block
  std::size_t dimension = 0; // over Q
  std::size_t center_degree = 0;
  RatPoly center_min_poly;   // irreducible; the block's center is Q[x]/(f)
  BlockClass classification = BlockClass::InfiniteUnits;
  Cert division = Cert::Indeterminate;  // is the block a division algebra?
  std::optional<std::pair<Rat, Rat>> quaternion_params;  // (a,b) with
      // i^2 = a, j^2 = b, ij = -ji, when the block is quaternion over Q
};

// Central idempotents from the minimal polynomial of a generic center
// element; each block classified by dimension, center and norm form.
std::vector<BlockReport> block_decomposition(const CommutantAlgebra& algebra,
                                             std::uint64_t seed = 0);

struct MultiplicityVector {
  std::vector<long> per_char;    // a_chi, indexed like the table rows
  std::vector<long> per_orbit;   // common multiplicity per Galois orbit
};

// a_chi = <trace(rho), chi>, exact; TableMismatch when the table belongs to a
// different group.
MultiplicityVector complex_multiplicities(const IntegralRep& rho,
                                          const CharacterTable& table);

enum class Finiteness { Finite, Infinite, Indeterminate };

std::string to_string(Finiteness f);

struct CharChecklistEntry {
  std::size_t chi;
  long multiplicity;
  int indicator;
  std::size_t orbit_size;
  bool passes;  // one of the three accepted shapes
};

struct OutFiniteReport {
  Finiteness verdict = Finiteness::Indeterminate;
  std::vector<CharChecklistEntry> checklist;  // characters with a_chi > 0
  std::vector<BlockClass> block_classes;
  Finiteness checklist_verdict = Finiteness::Indeterminate;
  Finiteness block_verdict = Finiteness::Indeterminate;
};

// Theorem-1 decision by two independent routes (character checklist and
// commutant block classification); disagreement raises CrossValidationError.
OutFiniteReport out_finite(const IntegralRep& rho, std::uint64_t seed = 0);

// Kahler variant: real-type constituents are excluded; for the rest only
// Q-multiplicity-freeness is required.
Finiteness kahler_out_finite(const IntegralRep& rho, std::uint64_t seed = 0);

// True iff every indicator +1 character has even multiplicity. Degree of rho
// must be even (intended use: dimension 6).
bool calabi_yau_check(const IntegralRep& rho);

// Q-multiplicity-freeness: every commutant block is a division algebra.
Cert mult_free_check(const IntegralRep& rho, std::uint64_t seed = 0);

// Hilbert symbol (a, b)_v over Q_v; v = 0 encodes the real place.
int hilbert_symbol(const Rat& a, const Rat& b, const Int& v);

// Is the rational quaternion algebra (a, b / Q) a division algebra?
bool quaternion_is_division(const Rat& a, const Rat& b);

// Minimal polynomial of a rational matrix.
RatPoly matrix_min_poly(const RatMatrix& m);

}  // namespace ck
