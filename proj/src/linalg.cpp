#include "critconf/linalg.hpp"

#include <sstream>
#include <utility>

#include "critconf/error.hpp"

namespace critconf {

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) invalid_input("dot: size mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec cross(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != 3 || b.size() != 3) invalid_input("cross: 3-vectors required");
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec scaled(std::span<const Rational> v, const Rational& s) {
  Vec out(v.begin(), v.end());
  for (auto& x : out) x *= s;
  return out;
}

HVector::HVector(Vec coords) : coords_(std::move(coords)) {
  if (coords_.empty() || critconf::is_zero(coords_)) invalid_input("zero vector is not a projective point");
}

HVector HVector::normalized() const {
  for (const auto& x : coords_) {
    if (!x.is_zero()) return HVector(scaled(coords_, Rational(1) / x));
  }
  return *this;
}

std::string HVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
  os << ')';
  return os.str();
}

bool proj_equal(std::span<const Rational> u, std::span<const Rational> v) {
  if (u.size() != v.size()) invalid_input("proj_equal: length mismatch");
  if (is_zero(u) || is_zero(v)) invalid_input("proj_equal: zero vector");
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      if (u[i] * v[j] != u[j] * v[i]) return false;
    }
  }
  return true;
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) invalid_input("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) invalid_input("ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols) { return from_rows(cols).transpose(); }

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::col(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

bool Matrix::is_zero() const { return critconf::is_zero(data_); }

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::symmetric_part() const {
  if (rows_ != cols_) invalid_input("symmetric_part: square matrix required");
  Matrix s(rows_, cols_);
  const Rational half(1, 2);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) s(i, j) = half * ((*this)(i, j) + (*this)(j, i));
  }
  return s;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) invalid_input("matrix sum: shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) invalid_input("matrix difference: shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) invalid_input("matrix product: shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Matrix operator*(const Rational& s, const Matrix& m) {
  Matrix out = m;
  for (auto& x : out.data_) x *= s;
  return out;
}

Vec operator*(const Matrix& m, std::span<const Rational> v) {
  if (m.cols_ != v.size()) invalid_input("matrix-vector product: shape mismatch");
  Vec out(m.rows_);
  for (std::size_t r = 0; r < m.rows_; ++r) {
    for (std::size_t c = 0; c < m.cols_; ++c) out[r] += m(r, c) * v[c];
  }
  return out;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

Rational bilinear(std::span<const Rational> x, const Matrix& m, std::span<const Rational> y) {
  return dot(x, m * y);
}

namespace {

// Bareiss elimination in place; returns the rank and the sign of the row permutation.
std::size_t bareiss(Matrix& a, int* perm_sign) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  Rational prev(1);
  std::size_t r = 0;
  int sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(piv, k), a(r, k));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        a(i, k) = (a(r, c) * a(i, k) - a(i, c) * a(r, k)) / prev;
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  if (perm_sign) *perm_sign = sign;
  return r;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  Matrix a = m;
  return bareiss(a, nullptr);
}

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) invalid_input("determinant: square matrix required");
  if (m.rows() == 0) return 1;
  Matrix a = m;
  int sign = 1;
  if (bareiss(a, &sign) < m.rows()) return 0;
  const Rational& d = a(m.rows() - 1, m.cols() - 1);
  return sign > 0 ? d : -d;
}

Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots) {
  Matrix a = m;
  std::vector<std::size_t> piv_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) {
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(piv, k), a(r, k));
    }
    const Rational inv = Rational(1) / a(r, c);
    for (std::size_t k = c; k < a.cols(); ++k) a(r, k) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Rational f = a(i, c);
      for (std::size_t k = c; k < a.cols(); ++k) a(i, k) -= f * a(r, k);
    }
    piv_cols.push_back(c);
    ++r;
  }
  if (pivots) *pivots = std::move(piv_cols);
  return a;
}

std::vector<Vec> nullspace(const Matrix& m) {
  std::vector<std::size_t> pivots;
  const Matrix r = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    // First nonzero coordinate scaled to 1.
    for (const auto& x : v) {
      if (!x.is_zero()) {
        const Rational inv = Rational(1) / x;
        for (auto& y : v) y *= inv;
        break;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vec> left_nullspace(const Matrix& m) { return nullspace(m.transpose()); }

Matrix cross_matrix(std::span<const Rational> v) {
  if (v.size() != 3) invalid_input("cross_matrix: 3-vector required");
  return Matrix{{0, -v[2], v[1]}, {v[2], 0, -v[0]}, {-v[1], v[0], 0}};
}

bool proj_equal(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return proj_equal(std::span<const Rational>(a.entries()), std::span<const Rational>(b.entries()));
}

Matrix sign_normalized(const Matrix& m) {
  for (const auto& x : m.entries()) {
    if (x.sign() < 0) return Rational(-1) * m;
    if (x.sign() > 0) return m;
  }
  return m;
}

}  // namespace critconf
