#include "tiltlab/matrix.hpp"

#include <sstream>

namespace tiltlab {

std::string rat_str(const Rat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  Matrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("from_rows: ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rat(rows[i][j]);
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("Matrix multiply: dimension mismatch");
  Matrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        const Rat& y = rhs.at(k, j);
        if (y != 0) out.at(i, j) += x * y;
      }
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("Matrix add: shape mismatch");
  Matrix out = *this;
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] += rhs.a_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("Matrix sub: shape mismatch");
  Matrix out = *this;
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] -= rhs.a_[i];
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (auto& x : out.a_) x = -x;
  return out;
}

Matrix Matrix::scaled(const Rat& c) const {
  Matrix out = *this;
  for (auto& x : out.a_) x *= c;
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool Matrix::is_integral() const {
  for (const auto& x : a_)
    if (!is_integer(x)) return false;
  return true;
}

Matrix Matrix::vstack(const Matrix& below) const {
  if (rows_ == 0 && cols_ == 0) return below;
  if (below.rows_ == 0 && below.cols_ == 0) return *this;
  if (cols_ != below.cols_) throw std::invalid_argument("vstack: column mismatch");
  Matrix out(rows_ + below.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
  for (int i = 0; i < below.rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(rows_ + i, j) = below.at(i, j);
  return out;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
  }
  os << "]";
  return os.str();
}

Rref rref(Matrix m) {
  Rref out;
  int r = 0;
  for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
    Rat inv = m.at(r, col);
    for (int j = col; j < m.cols(); ++j) m.at(r, j) /= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      Rat f = m.at(i, col);
      if (f == 0) continue;
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    out.pivot_cols.push_back(col);
    ++r;
  }
  out.m = std::move(m);
  return out;
}

int rank(const Matrix& m) { return static_cast<int>(rref(m).pivot_cols.size()); }

Rat det(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: non-square matrix");
  Matrix w = m;
  Rat d(1);
  int n = w.rows();
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (w.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(w.at(piv, j), w.at(col, j));
      d = -d;
    }
    d *= w.at(col, col);
    Rat inv = w.at(col, col);
    for (int i = col + 1; i < n; ++i) {
      Rat f = w.at(i, col) / inv;
      if (f == 0) continue;
      for (int j = col; j < n; ++j) w.at(i, j) -= f * w.at(col, j);
    }
  }
  return d;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: non-square matrix");
  int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  Rref r = rref(std::move(aug));
  for (int i = 0; i < n; ++i)
    if (i >= static_cast<int>(r.pivot_cols.size()) || r.pivot_cols[i] != i)
      throw std::invalid_argument("inverse: singular matrix");
  Matrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = r.m.at(i, n + j);
  return out;
}

std::vector<Matrix> kernel_basis(const Matrix& a) {
  Rref r = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  std::vector<Matrix> basis;
  for (int j = 0; j < a.cols(); ++j) {
    if (is_pivot[j]) continue;
    Matrix v(a.cols(), 1);
    v.at(j, 0) = 1;
    for (size_t pr = 0; pr < r.pivot_cols.size(); ++pr) v.at(r.pivot_cols[pr], 0) = -r.m.at(static_cast<int>(pr), j);
    basis.push_back(std::move(v));
  }
  return basis;
}

LinearSolution rref_solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("rref_solve: A and B must have equal row counts");
  int n = a.cols(), k = b.cols();
  Matrix aug(a.rows(), n + k);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    for (int j = 0; j < k; ++j) aug.at(i, n + j) = b.at(i, j);
  }
  Rref r = rref(std::move(aug));
  LinearSolution sol;
  for (size_t pr = 0; pr < r.pivot_cols.size(); ++pr)
    if (r.pivot_cols[pr] >= n) return sol;  // pivot in the B block: inconsistent
  sol.consistent = true;
  sol.particular = Matrix(n, k);
  for (size_t pr = 0; pr < r.pivot_cols.size(); ++pr)
    for (int j = 0; j < k; ++j) sol.particular.at(r.pivot_cols[pr], j) = r.m.at(static_cast<int>(pr), n + j);
  sol.kernel = kernel_basis(a);
  return sol;
}

std::vector<Rat> char_poly(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("char_poly: non-square matrix");
  int n = a.rows();
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = 1;
  Matrix m(n, n);  // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    // M_k = A (M_{k-1} + c_{n-k+1} I)
    for (int i = 0; i < n; ++i) m.at(i, i) += c[n - k + 1];
    m = a * m;
    Rat tr(0);
    for (int i = 0; i < n; ++i) tr += m.at(i, i);
    c[n - k] = -tr / k;
  }
  return c;
}

Matrix matrix_power(const Matrix& a, unsigned long e) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix_power: non-square matrix");
  Matrix acc = Matrix::identity(a.rows());
  Matrix base = a;
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

bool is_unimodular(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("is_unimodular: non-square matrix");
  if (!a.is_integral()) throw std::invalid_argument("is_unimodular: non-integer entries");
  Rat d = det(a);
  return d == 1 || d == -1;
}

std::string IntPoly::str() const {
  std::ostringstream os;
  bool first = true;
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
    const Int& c = coeffs[k];
    if (c == 0) continue;
    Int abs_c = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (k == 0 || abs_c != 1) os << abs_c.get_str();
    if (k > 0) {
      os << "x";
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  return os.str();
}

IntPoly char_poly_int(const Matrix& a) {
  std::vector<Rat> c = char_poly(a);
  IntPoly p;
  p.coeffs.reserve(c.size());
  for (const Rat& q : c) {
    if (!is_integer(q)) throw std::domain_error("char_poly_int: non-integer coefficient");
    p.coeffs.push_back(q.get_num());
  }
  return p;
}

std::vector<Rat> RowSpace::reduce(std::vector<Rat> v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("RowSpace: size mismatch");
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Rat& f = v[pivots_[r]];
    if (f == 0) continue;
    Rat c = f;  // pivot entries are normalized to 1
    for (int j = 0; j < cols_; ++j)
      if (rows_[r][j] != 0) v[j] -= c * rows_[r][j];
  }
  return v;
}

bool RowSpace::insert(std::vector<Rat> v) {
  v = reduce(std::move(v));
  int piv = -1;
  for (int j = 0; j < cols_; ++j)
    if (v[j] != 0) {
      piv = j;
      break;
    }
  if (piv < 0) return false;
  Rat inv = v[piv];
  for (int j = 0; j < cols_; ++j)
    if (v[j] != 0) v[j] /= inv;
  for (size_t r = 0; r < rows_.size(); ++r) {
    Rat f = rows_[r][piv];
    if (f == 0) continue;
    for (int j = 0; j < cols_; ++j)
      if (v[j] != 0) rows_[r][j] -= f * v[j];
  }
  // keep rows sorted by pivot column
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, piv);
  return true;
}

bool RowSpace::contains(std::vector<Rat> v) const {
  v = reduce(std::move(v));
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

std::vector<Rat> coordinates_in(const Matrix& basis, const std::vector<Rat>& v) {
  // solve basis^T c = v
  Matrix bt = basis.transpose();
  Matrix rhs(static_cast<int>(v.size()), 1);
  for (size_t i = 0; i < v.size(); ++i) rhs.at(static_cast<int>(i), 0) = v[i];
  LinearSolution s = rref_solve(bt, rhs);
  if (!s.consistent) return {};
  std::vector<Rat> out(basis.rows());
  for (int i = 0; i < basis.rows(); ++i) out[i] = s.particular.at(i, 0);
  return out;
}

}  // namespace tiltlab
