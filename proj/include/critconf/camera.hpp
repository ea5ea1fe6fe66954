#pragma once

#include <utility>

#include "critconf/linalg.hpp"

namespace critconf {

class BilinearForm;

/// Full-rank 3x4 projective camera.
class Camera {
 public:
  explicit Camera(Matrix matrix);

  const Matrix& matrix() const noexcept { return matrix_; }
  /// Camera center: the right kernel, first nonzero coordinate 1.
  const HVector& center() const noexcept { return center_; }

 private:
  Matrix matrix_;
  HVector center_;
};

/// Two cameras with distinct centers.
class CameraPair {
 public:
  CameraPair(Camera first, Camera second);

  const Camera& first() const noexcept { return first_; }
  const Camera& second() const noexcept { return second_; }
  const Camera& operator[](int i) const { return i == 0 ? first_ : second_; }

 private:
  Camera first_;
  Camera second_;
};

using ImagePair = std::pair<HVector, HVector>;

HVector center(const Camera& camera);
/// P x; throws UndefinedCase at the camera center.
HVector project(const Camera& camera, const HVector& x);
ImagePair joint_image(const CameraPair& pair, const HVector& x);
/// Is x on the line spanned by the two centers?
bool on_baseline(const CameraPair& pair, const HVector& x);
bool is_center(const CameraPair& pair, const HVector& x);

/// Canonical realization of a rank-2 form: first = [I | 0], second = [[e]_x F^T | e] with F e = 0.
CameraPair camera_pair_from_form(const BilinearForm& form);

/// The cameras used throughout the classification fixtures:
/// [[1,0,0,0],[0,1,0,0],[0,0,1,0]] and [[1,0,0,0],[0,1,0,0],[0,0,0,1]].
CameraPair canonical_pair();

}  // namespace critconf
