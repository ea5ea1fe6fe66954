#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "critconf/rational.hpp"

namespace critconf {

using Vec = std::vector<Rational>;

bool is_zero(std::span<const Rational> v);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Vec cross(std::span<const Rational> a, std::span<const Rational> b);
Vec scaled(std::span<const Rational> v, const Rational& s);

/// Point of P^n in homogeneous coordinates. Never the zero vector.
class HVector {
 public:
  explicit HVector(Vec coords);
  HVector(std::initializer_list<Rational> coords) : HVector(Vec(coords)) {}

  std::size_t size() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const Vec& coords() const noexcept { return coords_; }
  operator std::span<const Rational>() const noexcept { return coords_; }  // NOLINT

  /// Representative with first nonzero coordinate equal to 1.
  HVector normalized() const;
  std::string str() const;

 private:
  Vec coords_;
};

/// Projective equality: every 2x2 minor of [u; v] vanishes.
bool proj_equal(std::span<const Rational> u, std::span<const Rational> v);
inline bool proj_equal(const HVector& u, const HVector& v) {
  return proj_equal(std::span<const Rational>(u.coords()), std::span<const Rational>(v.coords()));
}

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows);
  static Matrix from_columns(const std::vector<Vec>& cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  /// Entries in row-major order.
  const Vec& entries() const noexcept { return data_; }
  bool is_zero() const;
  bool is_symmetric() const;

  Matrix transpose() const;
  Matrix symmetric_part() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& m);
  friend Vec operator*(const Matrix& m, std::span<const Rational> v);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec data_;
};

inline Vec operator*(const Matrix& m, const HVector& v) {
  return m * std::span<const Rational>(v.coords());
}

/// x^T M y.
Rational bilinear(std::span<const Rational> x, const Matrix& m, std::span<const Rational> y);

/// Exact rank (Bareiss fraction-free elimination).
std::size_t rank(const Matrix& m);
/// Exact determinant of a square matrix (Bareiss).
Rational determinant(const Matrix& m);
/// Reduced row echelon form; `pivots` receives pivot columns.
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);
/// Basis of the right kernel, each vector scaled so its first nonzero coordinate is 1.
std::vector<Vec> nullspace(const Matrix& m);
/// Left kernel (kernel of the transpose), same normalization.
std::vector<Vec> left_nullspace(const Matrix& m);
/// [v]_x such that [v]_x w = v x w.
Matrix cross_matrix(std::span<const Rational> v);
/// Projective equality of matrices of equal shape.
bool proj_equal(const Matrix& a, const Matrix& b);
/// Scale so the first nonzero entry (row-major) is positive.
Matrix sign_normalized(const Matrix& m);

}  // namespace critconf
