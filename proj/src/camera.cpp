#include "critconf/camera.hpp"

#include "critconf/error.hpp"
#include "critconf/fundamental.hpp"

namespace critconf {

namespace {

HVector kernel_point(const Matrix& m) {
  if (m.rows() != 3 || m.cols() != 4) invalid_input("camera matrix must be 3x4");
  const auto kernel = nullspace(m);
  if (kernel.size() != 1) invalid_input("camera matrix must have rank 3");
  return HVector(kernel.front());
}

}  // namespace

Camera::Camera(Matrix matrix) : matrix_(std::move(matrix)), center_(kernel_point(matrix_)) {}

CameraPair::CameraPair(Camera first, Camera second) : first_(std::move(first)), second_(std::move(second)) {
  if (proj_equal(first_.center(), second_.center())) invalid_input("camera centers coincide");
}

HVector center(const Camera& camera) { return camera.center(); }

HVector project(const Camera& camera, const HVector& x) {
  if (x.size() != 4) invalid_input("space points have 4 coordinates");
  Vec image = camera.matrix() * x;
  if (is_zero(image)) undefined_case("projection undefined at the camera center " + x.str());
  return HVector(std::move(image));
}

ImagePair joint_image(const CameraPair& pair, const HVector& x) {
  return {project(pair.first(), x), project(pair.second(), x)};
}

bool on_baseline(const CameraPair& pair, const HVector& x) {
  return rank(Matrix::from_rows({pair.first().center().coords(), pair.second().center().coords(), x.coords()})) < 3;
}

bool is_center(const CameraPair& pair, const HVector& x) {
  return proj_equal(x, pair.first().center()) || proj_equal(x, pair.second().center());
}

CameraPair camera_pair_from_form(const BilinearForm& form) {
  if (form.rank() != 2) invalid_input("not a fundamental form: rank must be 2");
  const Vec e = form.right_kernel().front();
  const Matrix m = cross_matrix(e) * form.matrix().transpose();
  Matrix second(3, 4);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) second(r, c) = m(r, c);
    second(r, 3) = e[r];
  }
  Matrix first(3, 4);
  for (std::size_t i = 0; i < 3; ++i) first(i, i) = 1;
  return {Camera(std::move(first)), Camera(std::move(second))};
}

CameraPair canonical_pair() {
  return {Camera(Matrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}),
          Camera(Matrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}})};
}

}  // namespace critconf
