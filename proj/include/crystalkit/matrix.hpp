#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "crystalkit/numeric.hpp"

namespace ck {

class RatMatrix;

// Dense integer matrix, row-major, arbitrary-precision entries.
class IntMatrix {
public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const std::vector<Int>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  IntMatrix operator*(const Int& c) const;
  std::vector<Int> operator*(const std::vector<Int>& v) const;
  bool operator==(const IntMatrix& rhs) const = default;

  IntMatrix transpose() const;
  IntMatrix pow(unsigned long k) const;
  Int trace() const;
  Int det() const;  // Bareiss fraction-free elimination
  bool is_identity() const;
  bool is_zero() const;

  // Unique inverse over Z when det = +-1; throws InvalidInputError otherwise.
  IntMatrix inverse_unimodular() const;

  RatMatrix to_rational() const;

  // Canonical byte encoding of dimensions and entries; used as a hash key
  // during group closure.
  std::string encode() const;

  std::string str() const;

private:
  std::size_t rows_, cols_;
  std::vector<Int> e_;
};

using RatVector = std::vector<Rat>;

// Dense rational matrix; entries kept canonical by mpq_class.
class RatMatrix {
public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, Rat(0)) {}
  RatMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  RatMatrix operator*(const RatMatrix& rhs) const;
  RatMatrix operator+(const RatMatrix& rhs) const;
  RatMatrix operator-(const RatMatrix& rhs) const;
  RatMatrix operator*(const Rat& c) const;
  RatVector operator*(const RatVector& v) const;
  bool operator==(const RatMatrix& rhs) const = default;

  RatMatrix transpose() const;
  Rat trace() const;
  Rat det() const;
  bool is_zero() const;

  // Gauss-Jordan inverse; throws InvalidInputError when singular.
  RatMatrix inverse() const;

  std::size_t rank() const;

  // Solves A x = b exactly; returns false when inconsistent.
  bool solve(const RatVector& b, RatVector& x) const;

  // Basis of the right null space (as columns).
  std::vector<RatVector> kernel_basis() const;

  std::string str() const;

private:
  std::size_t rows_, cols_;
  std::vector<Rat> e_;
};

// Vector helpers shared across modules.
RatVector rat_vector(std::initializer_list<long> v);
RatVector add(const RatVector& a, const RatVector& b);
RatVector sub(const RatVector& a, const RatVector& b);
RatVector scale(const RatVector& a, const Rat& c);
RatVector mul(const IntMatrix& m, const RatVector& v);
Rat dot(const RatVector& a, const RatVector& b);
bool is_integral(const RatVector& v);
bool is_zero(const RatVector& v);
// Componentwise fractional part in [0,1)^n.
RatVector reduce_mod_lattice(const RatVector& v);
std::string str(const RatVector& v);

std::vector<Int> int_vector(std::initializer_list<long> v);
RatVector to_rational(const std::vector<Int>& v);

}  // namespace ck
