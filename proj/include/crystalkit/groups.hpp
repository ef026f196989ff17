#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "crystalkit/matrix.hpp"

namespace ck {

// A finite subgroup of GL(n,Z), materialized by breadth-first closure.
// Element 0 is always the identity. Immutable after construction.
class FiniteMatrixGroup {
public:
  // Throws NotInvertible (InvalidInputError) if some generator has |det| != 1,
  // CapExceededError if the closure passes order_cap.
  static FiniteMatrixGroup close_group(const std::vector<IntMatrix>& gens,
                                       std::size_t order_cap = 4096);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const IntMatrix& element(std::size_t i) const { return elements_[i]; }
  const std::vector<IntMatrix>& elements() const { return elements_; }
  // Indices of the generators inside the element list.
  const std::vector<std::size_t>& generator_indices() const { return gens_; }

  std::size_t index_of(const IntMatrix& m) const;  // throws if not a member
  bool contains(const IntMatrix& m) const;
  std::size_t multiply(std::size_t a, std::size_t b) const { return mul_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inv_[a]; }
  unsigned long element_order(std::size_t a) const;
  unsigned long exponent() const;  // lcm of element orders
  bool is_abelian() const;

  // Word in generator indices reaching element i from the identity
  // (BFS tree); empty for the identity.
  std::vector<std::size_t> word_for(std::size_t i) const;

private:
  std::size_t degree_ = 0;
  std::vector<IntMatrix> elements_;
  std::vector<std::size_t> gens_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> mul_;
  std::vector<std::size_t> inv_;
  std::vector<std::pair<std::size_t, std::size_t>> parent_;  // (parent, gen)
};

struct ConjugacyClasses {
  std::vector<std::size_t> representatives;      // element index per class
  std::vector<std::vector<std::size_t>> members; // element indices per class
  std::vector<std::size_t> class_of;             // element index -> class
};

ConjugacyClasses conjugacy_classes(const FiniteMatrixGroup& g);

// One generator per cyclic subgroup of prime order; every element of prime
// order lies in exactly one of these subgroups.
struct PrimeOrderSubgroup {
  std::size_t generator;   // element index
  unsigned long prime;
};
std::vector<PrimeOrderSubgroup> prime_order_elements(const FiniteMatrixGroup& g);

}  // namespace ck
