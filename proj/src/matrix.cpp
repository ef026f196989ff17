#include "crystalkit/matrix.hpp"

#include <sstream>

#include "crystalkit/errors.hpp"

namespace ck {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  e_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_)
      throw InvalidInputError("ragged initializer for IntMatrix");
    for (long v : r) e_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InvalidInputError("IntMatrix product shape");
  IntMatrix r(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        r.at(i, j) += a * rhs.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw InvalidInputError("IntMatrix sum shape");
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + rhs.e_[i];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw InvalidInputError("IntMatrix difference shape");
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - rhs.e_[i];
  return r;
}

IntMatrix IntMatrix::operator*(const Int& c) const {
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
  return r;
}

std::vector<Int> IntMatrix::operator*(const std::vector<Int>& v) const {
  if (v.size() != cols_) throw InvalidInputError("IntMatrix vector shape");
  std::vector<Int> r(rows_, Int(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

IntMatrix IntMatrix::pow(unsigned long k) const {
  if (rows_ != cols_) throw InvalidInputError("IntMatrix pow on non-square");
  IntMatrix r = identity(rows_);
  IntMatrix base = *this;
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

Int IntMatrix::trace() const {
  Int t = 0;
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
  return t;
}

Int IntMatrix::det() const {
  if (rows_ != cols_) throw InvalidInputError("det of non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  // Bareiss: exact, division-free apart from exact divisions.
  IntMatrix a = *this;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a.at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = num / prev;  // exact by Bareiss invariant
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool IntMatrix::is_zero() const {
  for (const Int& v : e_)
    if (v != 0) return false;
  return true;
}

IntMatrix IntMatrix::inverse_unimodular() const {
  Int d = det();
  if (d != 1 && d != -1)
    throw InvalidInputError("matrix is not unimodular");
  RatMatrix inv = to_rational().inverse();
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rat& q = inv.at(i, j);
      r.at(i, j) = q.get_num();  // denominator is 1 for unimodular inverse
    }
  return r;
}

RatMatrix IntMatrix::to_rational() const {
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = Rat(at(i, j));
  return r;
}

std::string IntMatrix::encode() const {
  std::ostringstream os;
  os << rows_ << 'x' << cols_ << ':';
  for (const Int& v : e_) os << v.get_str(62) << ',';
  return os.str();
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j)
      os << at(i, j) << (j + 1 < cols_ ? "," : "");
    os << ']' << (i + 1 < rows_ ? "," : "");
  }
  os << ']';
  return os.str();
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  e_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_)
      throw InvalidInputError("ragged initializer for RatMatrix");
    for (long v : r) e_.emplace_back(v);
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InvalidInputError("RatMatrix product shape");
  RatMatrix r(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        r.at(i, j) += a * rhs.at(k, j);
    }
  return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw InvalidInputError("RatMatrix sum shape");
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + rhs.e_[i];
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw InvalidInputError("RatMatrix difference shape");
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - rhs.e_[i];
  return r;
}

RatMatrix RatMatrix::operator*(const Rat& c) const {
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
  return r;
}

RatVector RatMatrix::operator*(const RatVector& v) const {
  if (v.size() != cols_) throw InvalidInputError("RatMatrix vector shape");
  RatVector r(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Rat RatMatrix::trace() const {
  Rat t = 0;
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
  return t;
}

bool RatMatrix::is_zero() const {
  for (const Rat& v : e_)
    if (v != 0) return false;
  return true;
}

Rat RatMatrix::det() const {
  if (rows_ != cols_) throw InvalidInputError("det of non-square matrix");
  RatMatrix a = *this;
  std::size_t n = rows_;
  Rat d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a.at(piv, k) == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
      d = -d;
    }
    d *= a.at(k, k);
    Rat inv = 1 / a.at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a.at(i, k) == 0) continue;
      Rat f = a.at(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
    }
  }
  return d;
}

RatMatrix RatMatrix::inverse() const {
  if (rows_ != cols_) throw InvalidInputError("inverse of non-square matrix");
  std::size_t n = rows_;
  RatMatrix a = *this;
  RatMatrix inv = identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a.at(piv, k) == 0) ++piv;
    if (piv == n) throw InvalidInputError("singular matrix");
    if (piv != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(k, j), a.at(piv, j));
        std::swap(inv.at(k, j), inv.at(piv, j));
      }
    Rat p = 1 / a.at(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a.at(k, j) *= p;
      inv.at(k, j) *= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a.at(i, k) == 0) continue;
      Rat f = a.at(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(k, j);
        inv.at(i, j) -= f * inv.at(k, j);
      }
    }
  }
  return inv;
}

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(RatMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a.at(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < a.cols(); ++j)
        std::swap(a.at(row, j), a.at(piv, j));
    Rat p = 1 / a.at(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) *= p;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a.at(i, col) == 0) continue;
      Rat f = a.at(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        a.at(i, j) -= f * a.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t RatMatrix::rank() const {
  RatMatrix a = *this;
  return echelon(a).size();
}

bool RatMatrix::solve(const RatVector& b, RatVector& x) const {
  if (b.size() != rows_) throw InvalidInputError("solve shape");
  RatMatrix aug(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  std::vector<std::size_t> pivots = echelon(aug);
  for (std::size_t p : pivots)
    if (p == cols_) return false;  // pivot in the constant column
  x.assign(cols_, Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
  return true;
}

std::vector<RatVector> RatMatrix::kernel_basis() const {
  RatMatrix a = *this;
  std::vector<std::size_t> pivots = echelon(a);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(cols_, Rat(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -a.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::string RatMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j)
      os << at(i, j) << (j + 1 < cols_ ? "," : "");
    os << ']' << (i + 1 < rows_ ? "," : "");
  }
  os << ']';
  return os.str();
}

RatVector rat_vector(std::initializer_list<long> v) {
  RatVector r;
  r.reserve(v.size());
  for (long x : v) r.emplace_back(x);
  return r;
}

RatVector add(const RatVector& a, const RatVector& b) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVector sub(const RatVector& a, const RatVector& b) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVector scale(const RatVector& a, const Rat& c) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

RatVector mul(const IntMatrix& m, const RatVector& v) {
  if (v.size() != m.cols()) throw InvalidInputError("mul shape");
  RatVector r(m.rows(), Rat(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) r[i] += Rat(m.at(i, j)) * v[j];
  return r;
}

Rat dot(const RatVector& a, const RatVector& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_integral(const RatVector& v) {
  for (const Rat& q : v)
    if (!is_integer(q)) return false;
  return true;
}

bool is_zero(const RatVector& v) {
  for (const Rat& q : v)
    if (q != 0) return false;
  return true;
}

RatVector reduce_mod_lattice(const RatVector& v) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = frac(v[i]);
  return r;
}

std::string str(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += v[i].get_str();
    if (i + 1 < v.size()) s += ",";
  }
  return s + ")";
}

std::vector<Int> int_vector(std::initializer_list<long> v) {
  std::vector<Int> r;
  r.reserve(v.size());
  for (long x : v) r.emplace_back(x);
  return r;
}

RatVector to_rational(const std::vector<Int>& v) {
  RatVector r;
  r.reserve(v.size());
  for (const Int& x : v) r.emplace_back(x);
  return r;
}

bool parse_rational(const std::string& text, Rat& out) {
  if (text.empty()) return false;
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Int n(text);
      out = Rat(n);
      return true;
    }
    std::string ns = text.substr(0, slash), ds = text.substr(slash + 1);
    if (ns.empty() || ds.empty()) return false;
    Int n(ns), d(ds);
    if (d == 0) return false;
    out = make_rat(n, d);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace ck
