#pragma once

#include <cstddef>

#include "critconf/camera.hpp"
#include "critconf/linalg.hpp"

namespace critconf {

/// Nonzero 3x3 form on image x image: F(x, y) = x^T M y, x in the first image.
class BilinearForm {
 public:
  explicit BilinearForm(Matrix matrix);

  const Matrix& matrix() const noexcept { return matrix_; }
  std::size_t rank() const { return critconf::rank(matrix_); }
  Rational operator()(std::span<const Rational> x, std::span<const Rational> y) const {
    return bilinear(x, matrix_, y);
  }
  /// Kernel of x -> x^T M (first image). Empty unless rank < 3.
  std::vector<Vec> left_kernel() const { return left_nullspace(matrix_); }
  /// Kernel of y -> M y (second image).
  std::vector<Vec> right_kernel() const { return nullspace(matrix_); }

  friend bool operator==(const BilinearForm& a, const BilinearForm& b) { return a.matrix_ == b.matrix_; }

 private:
  Matrix matrix_;
};

/// Projective equality of forms.
bool proj_equal(const BilinearForm& a, const BilinearForm& b);

/// The determinant form det[[P1, x, 0], [P2, 0, y]] via its nine 4x4 cofactors,
/// sign-normalized so the first nonzero entry is positive. Always rank 2.
BilinearForm fundamental_form(const CameraPair& pair);

struct Epipole {
  HVector point;
  int which_image;   // 1 or 2
  int which_center;  // 1 or 2
};

/// e_i^j = P_i(p_j), indices 1-based.
Epipole epipole(const CameraPair& pair, int i, int j);

/// A conjugate with the same fundamental form is trivial.
bool is_trivial_conjugate(const BilinearForm& fp, const BilinearForm& fq);

}  // namespace critconf
