#pragma once

#include <optional>
#include <vector>

#include "crystalkit/matrix.hpp"

namespace ck {

// U * A * V = D with |det U| = |det V| = 1, D diagonal with
// d1 | d2 | ... and nonnegative entries.
struct SmithResult {
  IntMatrix U, V, D;
  std::vector<Int> divisors() const;  // the diagonal, trailing zeros included
  std::size_t rank() const;           // number of nonzero divisors
};

// H = U * A, upper triangular (row HNF); pivots positive, entries above a
// pivot reduced into [0, pivot).
struct HermiteResult {
  IntMatrix U, H;
  std::size_t rank() const;
};

SmithResult smith_normal_form(const IntMatrix& a);
HermiteResult hermite_normal_form(const IntMatrix& a);

struct LinearSolution {
  std::vector<Int> particular;            // one x with A x = b
  std::vector<std::vector<Int>> kernel;   // basis of {x : A x = 0} over Z
};

// Decides A x = b over the integers via the Smith form.
std::optional<LinearSolution> solve_integer_linear(const IntMatrix& a,
                                                   const std::vector<Int>& b);

// Basis of the integer kernel of A (saturated lattice by construction).
std::vector<std::vector<Int>> integer_kernel(const IntMatrix& a);

// Lattice spanned by the columns of A, saturated inside Z^rows:
// basis (as columns) of span_Q(cols A) intersected with Z^rows.
IntMatrix saturate_column_lattice(const IntMatrix& a);

// Does b lie in the lattice spanned by the columns of L? If so, fills coeffs.
bool in_column_lattice(const IntMatrix& l, const std::vector<Int>& b,
                       std::vector<Int>* coeffs = nullptr);

// Column HNF basis of the lattice spanned by the columns (dropping zero
// columns): canonical basis for lattice equality tests.
IntMatrix column_lattice_basis(const IntMatrix& a);

}  // namespace ck
