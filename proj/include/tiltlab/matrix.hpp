#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace tiltlab {

// Exact arithmetic everywhere: rationals with arbitrary-precision
// numerator/denominator, kept in canonical reduced form by gmp.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

std::string rat_str(const Rat& q);

/// Dense matrix over the rationals, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rat(0)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative size");
  }
  Matrix(int rows, int cols, std::vector<Rat> entries) : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != static_cast<size_t>(rows) * cols)
      throw std::invalid_argument("Matrix: entry count must be rows*cols");
  }

  static Matrix identity(int n);
  /// Small-literal constructor for tests and fixtures.
  static Matrix from_rows(const std::vector<std::vector<long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator-() const;
  Matrix scaled(const Rat& c) const;
  bool operator==(const Matrix& rhs) const { return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_; }

  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;
  bool is_integral() const;

  /// Rows i of this and rows of other stacked vertically.
  Matrix vstack(const Matrix& below) const;

  std::string str() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

/// Result of Gauss-Jordan elimination.  Pivot choice is deterministic:
/// leftmost nonzero column first, smallest row index within the column.
struct Rref {
  Matrix m;
  std::vector<int> pivot_cols;  // one per pivot row, increasing
};

Rref rref(Matrix m);
int rank(const Matrix& m);
Rat det(const Matrix& m);
Matrix inverse(const Matrix& m);

/// Basis of the right kernel {x : A x = 0}; each entry is a cols x 1 matrix.
/// Free coordinates are 0/1 as read off the rref.
std::vector<Matrix> kernel_basis(const Matrix& a);

/// All solutions X of A X = B as an affine family.
struct LinearSolution {
  bool consistent = false;
  Matrix particular;            // cols(A) x cols(B)
  std::vector<Matrix> kernel;   // kernel basis of A, cols(A) x 1 each
};

LinearSolution rref_solve(const Matrix& a, const Matrix& b);

/// Monic characteristic polynomial via Faddeev-LeVerrier; coeffs[k] is the
/// coefficient of x^k, coeffs[n] = 1.
std::vector<Rat> char_poly(const Matrix& a);

Matrix matrix_power(const Matrix& a, unsigned long e);

/// True iff the matrix is integral with determinant +1 or -1.
/// Throws on non-integer entries.
bool is_unimodular(const Matrix& a);

/// Integer-coefficient polynomial, coeffs[k] the coefficient of x^k.
struct IntPoly {
  std::vector<Int> coeffs;
  bool operator==(const IntPoly& o) const { return coeffs == o.coeffs; }
  std::string str() const;
};

/// char_poly with an integrality assertion on the result (Coxeter use).
IntPoly char_poly_int(const Matrix& a);

/// Incrementally maintained row space in reduced row echelon form.
/// Used for canonical complements, quotients and membership tests.
class RowSpace {
 public:
  explicit RowSpace(int cols) : cols_(cols) {}

  /// Reduce v against the current rows; returns the normal form.
  std::vector<Rat> reduce(std::vector<Rat> v) const;
  /// Reduce and, if nonzero, insert (keeping full rref).  True if rank grew.
  bool insert(std::vector<Rat> v);
  bool contains(std::vector<Rat> v) const;

  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  const std::vector<std::vector<Rat>>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

 private:
  int cols_;
  std::vector<std::vector<Rat>> rows_;
  std::vector<int> pivots_;
};

/// Coordinates of v in the span of the given independent rows, or empty if
/// v is outside the span.  basis is d x n (rows are the basis vectors).
std::vector<Rat> coordinates_in(const Matrix& basis, const std::vector<Rat>& v);

}  // namespace tiltlab
