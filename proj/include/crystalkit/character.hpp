#pragma once

#include <vector>

#include "crystalkit/cyclotomic.hpp"
#include "crystalkit/groups.hpp"

namespace ck {

// Exact character table with values in Q(zeta_e), e = exponent of the group.
struct CharacterTable {
  unsigned exponent = 1;
  ConjugacyClasses classes;
  std::vector<std::size_t> class_sizes;
  std::vector<std::size_t> inverse_class;  // class index of g^{-1}
  // values[chi][class]
  std::vector<std::vector<CycNumber>> values;
  std::vector<long> degrees;
  std::vector<int> indicators;  // Frobenius-Schur, in {+1, 0, -1}
  std::vector<std::vector<std::size_t>> galois_orbits;
  std::size_t group_order = 0;

  std::size_t num_classes() const { return class_sizes.size(); }
  std::size_t num_chars() const { return values.size(); }
  // Class-weighted inner product <a, b> = (1/|G|) sum |C_i| a_i conj(b_i).
  CycNumber inner(const std::vector<CycNumber>& a,
                  const std::vector<CycNumber>& b) const;
  std::size_t orbit_of(std::size_t chi) const;
};

// Dixon's method: class-algebra eigenvectors over a prime field p = 1 mod e,
// lifted to exact cyclotomic values. Throws CapExceededError when the group
// order passes the cap.
CharacterTable character_table(const FiniteMatrixGroup& g,
                               std::size_t order_cap = 512);

}  // namespace ck
