#include "crystalkit/linalg.hpp"

#include <algorithm>

#include "crystalkit/errors.hpp"

namespace ck {

std::vector<Int> SmithResult::divisors() const {
  std::vector<Int> d;
  std::size_t n = std::min(D.rows(), D.cols());
  for (std::size_t i = 0; i < n; ++i) d.push_back(D.at(i, i));
  return d;
}

std::size_t SmithResult::rank() const {
  std::size_t r = 0;
  for (const Int& d : divisors())
    if (d != 0) ++r;
  return r;
}

std::size_t HermiteResult::rank() const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < H.rows(); ++i) {
    bool nz = false;
    for (std::size_t j = 0; j < H.cols(); ++j)
      if (H.at(i, j) != 0) {
        nz = true;
        break;
      }
    if (nz) ++r;
  }
  return r;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row[a] += c * row[b]
void add_row(IntMatrix& m, std::size_t a, std::size_t b, const Int& c) {
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) += c * m.at(b, j);
}

void add_col(IntMatrix& m, std::size_t a, std::size_t b, const Int& c) {
  for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, a) += c * m.at(i, b);
}

void negate_row(IntMatrix& m, std::size_t a) {
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
}

void negate_col(IntMatrix& m, std::size_t a) {
  for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, a) = -m.at(i, a);
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& a) {
  if (a.empty()) throw InvalidInputError("smith_normal_form: empty matrix");
  std::size_t m = a.rows(), n = a.cols();
  SmithResult r{IntMatrix::identity(m), IntMatrix::identity(n), a};
  IntMatrix& D = r.D;
  std::size_t t = std::min(m, n);

  for (std::size_t k = 0; k < t; ++k) {
    // Find a nonzero pivot in the remaining block.
    std::size_t pi = k, pj = k;
    bool found = false;
    for (std::size_t i = k; i < m && !found; ++i)
      for (std::size_t j = k; j < n && !found; ++j)
        if (D.at(i, j) != 0) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    if (pi != k) {
      swap_rows(D, k, pi);
      swap_rows(r.U, k, pi);
    }
    if (pj != k) {
      swap_cols(D, k, pj);
      swap_cols(r.V, k, pj);
    }

    // Clear row and column k; gcd steps may reintroduce entries, so loop.
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = k + 1; i < m; ++i) {
        if (D.at(i, k) == 0) continue;
        if (D.at(i, k) % D.at(k, k) != 0) {
          // Replace pivot by gcd via Bezout row operations.
          Int s, tt;
          Int g = gcdext(D.at(k, k), D.at(i, k), s, tt);
          Int akk = D.at(k, k) / g, aik = D.at(i, k) / g;
          for (std::size_t j = 0; j < n; ++j) {
            Int rk = s * D.at(k, j) + tt * D.at(i, j);
            Int ri = -aik * D.at(k, j) + akk * D.at(i, j);
            D.at(k, j) = rk;
            D.at(i, j) = ri;
          }
          for (std::size_t j = 0; j < m; ++j) {
            Int uk = s * r.U.at(k, j) + tt * r.U.at(i, j);
            Int ui = -aik * r.U.at(k, j) + akk * r.U.at(i, j);
            r.U.at(k, j) = uk;
            r.U.at(i, j) = ui;
          }
        } else {
          Int q = -(D.at(i, k) / D.at(k, k));
          add_row(D, i, k, q);
          add_row(r.U, i, k, q);
        }
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (D.at(k, j) == 0) continue;
        if (D.at(k, j) % D.at(k, k) != 0) {
          Int s, tt;
          Int g = gcdext(D.at(k, k), D.at(k, j), s, tt);
          Int akk = D.at(k, k) / g, akj = D.at(k, j) / g;
          for (std::size_t i = 0; i < m; ++i) {
            Int ck = s * D.at(i, k) + tt * D.at(i, j);
            Int cj = -akj * D.at(i, k) + akk * D.at(i, j);
            D.at(i, k) = ck;
            D.at(i, j) = cj;
          }
          for (std::size_t i = 0; i < n; ++i) {
            Int vk = s * r.V.at(i, k) + tt * r.V.at(i, j);
            Int vj = -akj * r.V.at(i, k) + akk * r.V.at(i, j);
            r.V.at(i, k) = vk;
            r.V.at(i, j) = vj;
          }
          dirty = true;  // row k below may have been disturbed
        } else {
          Int q = -(D.at(k, j) / D.at(k, k));
          add_col(D, j, k, q);
          add_col(r.V, j, k, q);
        }
      }
      if (!dirty) {
        for (std::size_t i = k + 1; i < m; ++i)
          if (D.at(i, k) != 0) {
            dirty = true;
            break;
          }
      }
    }
  }

  // Enforce the divisibility chain d_k | d_{k+1}.
  for (std::size_t k = 0; k + 1 < t; ++k) {
    for (std::size_t j = k + 1; j < t; ++j) {
      if (D.at(k, k) == 0 && D.at(j, j) != 0) {
        swap_rows(D, k, j);
        swap_rows(r.U, k, j);
        swap_cols(D, k, j);
        swap_cols(r.V, k, j);
      }
      if (D.at(k, k) == 0 || D.at(j, j) % D.at(k, k) == 0) continue;
      // Standard 2x2 trick: fold d_j into position (k,k) via gcd.
      add_col(D, k, j, Int(1));
      add_col(r.V, k, j, Int(1));
      // Now column k of D has entries d_k at row k and d_j at row j.
      Int s, tt;
      Int g = gcdext(D.at(k, k), D.at(j, k), s, tt);
      Int akk = D.at(k, k) / g, ajk = D.at(j, k) / g;
      for (std::size_t c = 0; c < n; ++c) {
        Int rk = s * D.at(k, c) + tt * D.at(j, c);
        Int rj = -ajk * D.at(k, c) + akk * D.at(j, c);
        D.at(k, c) = rk;
        D.at(j, c) = rj;
      }
      for (std::size_t c = 0; c < m; ++c) {
        Int uk = s * r.U.at(k, c) + tt * r.U.at(j, c);
        Int uj = -ajk * r.U.at(k, c) + akk * r.U.at(j, c);
        r.U.at(k, c) = uk;
        r.U.at(j, c) = uj;
      }
      // Clean the fill-in at (k, j); (j, k) is zero by the Bezout step.
      Int q = -(D.at(k, j) / D.at(k, k));
      add_col(D, j, k, q);
      add_col(r.V, j, k, q);
      // Restart the chain check from position k.
      j = k;
    }
  }

  for (std::size_t k = 0; k < t; ++k)
    if (D.at(k, k) < 0) {
      negate_row(D, k);
      negate_row(r.U, k);
    }
  return r;
}

HermiteResult hermite_normal_form(const IntMatrix& a) {
  if (a.empty()) throw InvalidInputError("hermite_normal_form: empty matrix");
  std::size_t m = a.rows(), n = a.cols();
  HermiteResult r{IntMatrix::identity(m), a};
  IntMatrix& H = r.H;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    // Reduce all entries below `row` in this column to zero via gcd steps.
    for (std::size_t i = row + 1; i < m; ++i) {
      if (H.at(i, col) == 0) continue;
      Int s, t;
      Int g = gcdext(H.at(row, col), H.at(i, col), s, t);
      Int ar = H.at(row, col) / g, ai = H.at(i, col) / g;
      for (std::size_t j = 0; j < n; ++j) {
        Int rr = s * H.at(row, j) + t * H.at(i, j);
        Int ri = -ai * H.at(row, j) + ar * H.at(i, j);
        H.at(row, j) = rr;
        H.at(i, j) = ri;
      }
      for (std::size_t j = 0; j < m; ++j) {
        Int ur = s * r.U.at(row, j) + t * r.U.at(i, j);
        Int ui = -ai * r.U.at(row, j) + ar * r.U.at(i, j);
        r.U.at(row, j) = ur;
        r.U.at(i, j) = ui;
      }
    }
    if (H.at(row, col) == 0) continue;  // no pivot in this column
    if (H.at(row, col) < 0) {
      negate_row(H, row);
      negate_row(r.U, row);
    }
    // Reduce entries above the pivot into [0, pivot).
    for (std::size_t i = 0; i < row; ++i) {
      Int q = fdiv(H.at(i, col), H.at(row, col));
      if (q != 0) {
        add_row(H, i, row, -q);
        add_row(r.U, i, row, -q);
      }
    }
    ++row;
  }
  return r;
}

std::optional<LinearSolution> solve_integer_linear(const IntMatrix& a,
                                                   const std::vector<Int>& b) {
  if (b.size() != a.rows()) throw InvalidInputError("solve shape");
  SmithResult s = smith_normal_form(a);
  std::size_t m = a.rows(), n = a.cols();
  std::vector<Int> ub = s.U * b;
  std::vector<Int> y(n, Int(0));
  std::size_t t = std::min(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    Int d = (i < t) ? s.D.at(i, i) : Int(0);
    if (d == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % d != 0) return std::nullopt;
      y[i] = ub[i] / d;
    }
  }
  LinearSolution sol;
  sol.particular = s.V * y;
  for (std::size_t j = 0; j < n; ++j) {
    Int d = (j < t) ? s.D.at(j, j) : Int(0);
    if (d != 0) continue;
    std::vector<Int> k(n, Int(0));
    for (std::size_t i = 0; i < n; ++i) k[i] = s.V.at(i, j);
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

std::vector<std::vector<Int>> integer_kernel(const IntMatrix& a) {
  SmithResult s = smith_normal_form(a);
  std::size_t n = a.cols();
  std::size_t t = std::min(a.rows(), n);
  std::vector<std::vector<Int>> basis;
  for (std::size_t j = 0; j < n; ++j) {
    Int d = (j < t) ? s.D.at(j, j) : Int(0);
    if (d != 0) continue;
    std::vector<Int> k(n, Int(0));
    for (std::size_t i = 0; i < n; ++i) k[i] = s.V.at(i, j);
    basis.push_back(std::move(k));
  }
  return basis;
}

IntMatrix saturate_column_lattice(const IntMatrix& a) {
  // U A V = D. The saturation of the column span is spanned by the first
  // r columns of U^{-1}, r = rank.
  SmithResult s = smith_normal_form(a);
  std::size_t r = s.rank();
  IntMatrix uinv = s.U.inverse_unimodular();
  IntMatrix basis(a.rows(), r);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < r; ++j) basis.at(i, j) = uinv.at(i, j);
  return basis;
}

bool in_column_lattice(const IntMatrix& l, const std::vector<Int>& b,
                       std::vector<Int>* coeffs) {
  auto sol = solve_integer_linear(l, b);
  if (!sol) return false;
  if (coeffs) *coeffs = sol->particular;
  return true;
}

IntMatrix column_lattice_basis(const IntMatrix& a) {
  // Row HNF of the transpose, transposed back, dropping zero columns.
  HermiteResult h = hermite_normal_form(a.transpose());
  std::size_t r = h.rank();
  IntMatrix basis(a.rows(), r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < a.rows(); ++j) basis.at(j, i) = h.H.at(i, j);
  return basis;
}

}  // namespace ck
