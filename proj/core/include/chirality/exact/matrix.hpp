#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chirality/exact/polynomial.hpp"

namespace chirality::exact {

/// Thrown when a cooperative progress hook asks an enumeration to stop.
struct Cancelled : std::runtime_error {
  Cancelled() : std::runtime_error("enumeration cancelled") {}
};

/// Called periodically with the number of visited candidates; returning
/// false cancels the enumeration (which then throws Cancelled).
using ProgressHook = std::function<bool(std::uint64_t visited)>;

/// Dense row-major matrix with exact entries.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw std::invalid_argument("Matrix: entry count does not match shape");
    }
  }
  /// Row-list construction, e.g. IntMatrix::from_rows({{0, -1}, {1, 1}}).
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    std::vector<T> e;
    for (const auto& r : rows) {
      if (r.size() != c) throw std::invalid_argument("Matrix::from_rows: ragged rows");
      e.insert(e.end(), r.begin(), r.end());
    }
    return Matrix(rows.size(), c, std::move(e));
  }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<T>& entries() const { return entries_; }

  T& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix r = a;
    for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] += b.entries_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix r = a;
    for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] -= b.entries_[k];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: inner dimensions differ");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }
  friend Matrix operator*(const T& s, const Matrix& m) {
    Matrix r = m;
    for (auto& e : r.entries_) e *= s;
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  /// "[[0,-1],[1,1]]"
  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ",";
        s += (*this)(i, j).get_str();
      }
      s += "]";
    }
    return s + "]";
  }

 private:
  void require_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("Matrix: shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

using IntMatrix = Matrix<mpz_class>;
using RatMatrix = Matrix<mpq_class>;

RatMatrix to_rational(const IntMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
mpz_class determinant(const IntMatrix& m);

/// det(X*I - M) via Hessenberg reduction over Q. Monic of degree n.
IntPolynomial char_poly(const IntMatrix& m);

/// Companion matrix of a monic polynomial: ones on the subdiagonal and
/// -c_0, ..., -c_{n-1} in the last column.
IntMatrix companion_matrix(const IntPolynomial& monic);

/// Inverse over Z; throws std::domain_error unless det = +-1.
IntMatrix integer_inverse(const IntMatrix& m);

std::size_t rational_rank(const IntMatrix& m);

/// Reduced row echelon form over Q.
struct RowEchelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};
RowEchelon rref(RatMatrix m);

/// Some x with A x = b over Q, or nullopt when the system is inconsistent.
std::optional<std::vector<mpq_class>> rational_solve(const RatMatrix& a, const std::vector<mpq_class>& b);

/// Row-style Hermite normal form of the lattice spanned by the rows of `m`.
/// Zero rows are dropped; pivots are positive and entries above a pivot lie
/// in [0, pivot). The result is unique for a given lattice.
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Z-basis (rows, in Hermite normal form) of {x in Z^n : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

/// Integer coefficients c with c * hnf = v, or nullopt if v is not in the
/// lattice. `hnf` must be in Hermite normal form.
std::optional<std::vector<mpz_class>> lattice_coordinates(const IntMatrix& hnf,
                                                          const std::vector<mpz_class>& v);

/// Visits every lattice vector c * hnf whose entries all lie in
/// [-bound, bound]. Pivot columns of the Hermite basis bound each coefficient
/// in turn, so the visit is exhaustive for the box.
void enumerate_lattice_box(const IntMatrix& hnf, const mpz_class& bound,
                           const std::function<void(const std::vector<mpz_class>&)>& visit,
                           const ProgressHook& progress = {});

/// Basis of the integer solution lattice {G : G * f1 = f2 * G}, each basis
/// element an n x n matrix. Empty iff only G = 0 solves the equation.
std::vector<IntMatrix> intertwiner_lattice(const IntMatrix& f1, const IntMatrix& f2);

/// The intertwiner basis flattened row-major into the rows of one matrix
/// (Hermite normal form), convenient for enumeration and membership tests.
IntMatrix intertwiner_lattice_hnf(const IntMatrix& f1, const IntMatrix& f2);

IntMatrix unflatten(const std::vector<mpz_class>& row_major, std::size_t n);

}  // namespace chirality::exact
