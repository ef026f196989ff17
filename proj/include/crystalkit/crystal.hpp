#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crystalkit/groups.hpp"
#include "crystalkit/linalg.hpp"

namespace ck {

// Element (h, t) of a crystallographic group: holonomy index into H plus the
// full rational translation, t = a(h) (mod Z^n).
struct GroupElement {
  std::size_t h = 0;
  RatVector t;
};

struct AbelianizationResult {
  std::vector<Int> divisors;  // nontrivial elementary divisors (> 1), ascending
  std::size_t free_rank = 0;
  bool operator==(const AbelianizationResult&) const = default;
};

struct InvariantsReport {
  std::size_t betti1 = 0;
  std::size_t center_rank = 0;
  bool orientable = false;
  std::size_t holonomy_order = 0;
  bool torsion_free = false;
};

// Fingerprint used for catalog identity checks.
struct Fingerprint {
  std::size_t dimension;
  std::size_t holonomy_order;
  bool orientable;
  std::size_t betti1;
  AbelianizationResult abelianization;
  bool operator==(const Fingerprint&) const = default;
  std::string str() const;
};

// A crystallographic group: dimension n, holonomy group H realized by its
// image matrices, and a vector system a : H -> Q^n stored reduced to [0,1)^n.
class CrystalGroup {
public:
  // Extends the generator data over all of H by breadth-first products and
  // verifies the cocycle identity on every pair. Throws InvalidInputError
  // ("InconsistentVectorSystem" / "NotFaithful"), CapExceededError.
  static CrystalGroup build(std::size_t n, std::vector<IntMatrix> gen_matrices,
                            std::vector<RatVector> gen_vectors,
                            std::string name = "", std::size_t order_cap = 4096);

  std::size_t dimension() const { return n_; }
  const FiniteMatrixGroup& holonomy() const { return h_; }
  const RatVector& vector_of(std::size_t h) const { return a_[h]; }
  const std::string& name() const { return name_; }
  void set_name(std::string s) { name_ = std::move(s); }
  // Generator data as supplied (matrices live inside the holonomy group).
  const std::vector<std::size_t>& generator_indices() const {
    return h_.generator_indices();
  }

  // Integer cocycle c(g,h) = a(g) + phi(g) a(h) - a(gh).
  std::vector<Int> cocycle(std::size_t g, std::size_t h) const;

  GroupElement identity_element() const;
  GroupElement element(std::size_t h) const;  // (h, a(h))
  GroupElement lattice_translation(const std::vector<Int>& z) const;
  GroupElement multiply(const GroupElement& x, const GroupElement& y) const;
  GroupElement inverse(const GroupElement& x) const;
  bool is_identity(const GroupElement& x) const;
  bool equal(const GroupElement& x, const GroupElement& y) const;

  std::string describe_element(const GroupElement& x) const;

private:
  friend CrystalGroup crystal_from_vector_system(std::size_t,
                                                 const FiniteMatrixGroup&,
                                                 std::vector<RatVector>,
                                                 std::string);
  std::size_t n_ = 0;
  FiniteMatrixGroup h_;
  std::vector<RatVector> a_;
  std::string name_;
};

// Internal-ish constructor used by cohomology materialization: the vector
// system is complete (one entry per element of H) and gets validated.
CrystalGroup crystal_from_vector_system(std::size_t n,
                                        const FiniteMatrixGroup& h,
                                        std::vector<RatVector> a,
                                        std::string name = "");

// Torsion test: (h, a(h)+z)^p = (1, N_h (a(h)+z)) must never vanish over the
// prime-order elements h. Returns a witness when torsion exists.
struct TorsionWitness {
  std::size_t h;
  std::vector<Int> z;
};
bool is_torsion_free(const CrystalGroup& g,
                     std::optional<TorsionWitness>* witness = nullptr);

// Cross-check route: every prime-order restriction of the extension class is
// nonzero in H^2(P, Z^n).
bool torsion_free_via_restrictions(const CrystalGroup& g);

InvariantsReport invariants_report(const CrystalGroup& g);
AbelianizationResult abelianization(const CrystalGroup& g);
Fingerprint fingerprint(const CrystalGroup& g);

// Group cohomology H^k(H, Z^n), k in {1, 2}, from the inhomogeneous bar
// complex. Kernel of d^k is obtained as the saturation of the image of
// d^{k-1} (exact over Q by Maschke), so C^{k+1} is never materialized.
class CohomologyResult {
public:
  int degree() const { return k_; }
  // Nontrivial elementary divisors (> 1) of the quotient.
  const std::vector<Int>& divisors() const { return divisors_; }
  // Total number of classes (product of divisors).
  Int class_count() const;

  // Coordinates of an integer cocycle (flat layout, see flatten_*) in the
  // quotient, one residue per nontrivial divisor.
  std::vector<Int> coordinates_of(const std::vector<Int>& cocycle) const;
  bool is_zero_class(const std::vector<Int>& cocycle) const;

  // Integer cocycle representing the i-th generator of the quotient.
  std::vector<Int> generator_cocycle(std::size_t i) const;
  // Representative of an arbitrary coordinate tuple.
  std::vector<Int> class_representative(const std::vector<Int>& coords) const;

  std::size_t ambient_dim() const { return sat_.rows(); }

private:
  friend CohomologyResult cohomology(const FiniteMatrixGroup&, int,
                                     std::size_t);
  int k_ = 1;
  std::size_t group_order_ = 0, n_ = 0;
  IntMatrix sat_;              // columns: basis of ker d^k (saturated)
  SmithResult sm_;             // Smith form of the inclusion im d^{k-1} -> ker
  IntMatrix uinv_;             // inverse of sm_.U
  std::vector<Int> divisors_;  // > 1 divisors
  std::vector<std::size_t> divisor_rows_;
};

CohomologyResult cohomology(const FiniteMatrixGroup& h, int k,
                            std::size_t cap = 32);

// Flat layouts for cocycles.
std::vector<Int> flatten_cocycle1(const std::vector<std::vector<Int>>& f,
                                  std::size_t n);
std::vector<Int> flatten_cocycle2(
    const std::vector<std::vector<std::vector<Int>>>& c, std::size_t n);

// The extension cocycle of a crystal group, flattened for H^2 machinery.
std::vector<Int> extension_cocycle(const CrystalGroup& g);

// Restriction of a flat 2-cocycle on H to a subgroup (given by the element
// indices of its members inside H, closed under product).
std::vector<Int> restrict_cocycle2(const FiniteMatrixGroup& h,
                                   const std::vector<Int>& cocycle,
                                   const std::vector<std::size_t>& subgroup,
                                   std::size_t n);

// Builds the crystal group defined by a flat integer 2-cocycle: solves
// d^1 a = c over Q and reduces the vector system mod Z^n.
CrystalGroup crystal_from_cocycle(const FiniteMatrixGroup& h,
                                  const std::vector<Int>& cocycle,
                                  std::string name = "");

// All torsion-free classes in H^2(H, Z^n), each materialized; class count
// must stay under the cap.
std::vector<CrystalGroup> torsion_free_classes(const FiniteMatrixGroup& h,
                                               std::size_t class_cap = 4096);

// Calabi reduction: quotient by a primitive fixed lattice vector.
struct CalabiReduction {
  CrystalGroup reduced;        // dimension n-1
  std::vector<Int> direction;  // the fixed primitive vector v
  RatVector functional;        // lambda with lambda(v) = 1, H-invariant
  Rat image_generator;         // lambda(Gamma) = c Z
};
CalabiReduction calabi_reduce(const CrystalGroup& g);

// Holonomy-with-lattice-catalog input for the minimal dimension search.
struct LatticeCatalogEntry {
  std::string name;
  std::vector<IntMatrix> generator_matrices;  // one per abstract generator
};
struct HolonomyCatalog {
  std::string name;
  std::size_t num_generators = 0;
  std::vector<LatticeCatalogEntry> lattices;
  bool complete = false;  // caller vouches the list of indecomposables
};

struct MinimalDimensionResult {
  std::size_t dimension = 0;
  CrystalGroup witness;
  std::vector<std::string> summands;
  bool exact = false;  // exact iff the catalog was flagged complete
};

// Smallest n realizable from direct sums of catalog lattices with a faithful
// action admitting a torsion-free class; optional Q-multiplicity-free
// constraint. Returns nothing when no dimension <= n_max works.
std::optional<MinimalDimensionResult> minimal_dimension_search(
    const HolonomyCatalog& catalog, std::size_t n_max, bool require_mult_free,
    std::uint64_t seed = 0);

// Normalizes a group of affine maps (integer matrices, rational translations)
// into crystal data: grows the lattice by the pure translations discovered
// during closure and rebases. Used by the amalgam machinery.
CrystalGroup crystal_from_affine_generators(
    std::size_t n, const std::vector<std::pair<IntMatrix, RatVector>>& gens,
    std::string name = "", std::size_t order_cap = 4096);

}  // namespace ck
