#include "critconf/fundamental.hpp"

#include "critconf/error.hpp"

namespace critconf {

BilinearForm::BilinearForm(Matrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != 3 || matrix_.cols() != 3) invalid_input("bilinear forms are 3x3");
  if (matrix_.is_zero()) invalid_input("bilinear form must be nonzero");
}

bool proj_equal(const BilinearForm& a, const BilinearForm& b) { return proj_equal(a.matrix(), b.matrix()); }

BilinearForm fundamental_form(const CameraPair& pair) {
  const Matrix& p1 = pair.first().matrix();
  const Matrix& p2 = pair.second().matrix();
  Matrix f(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      // Laplace expansion along the x and y columns of the 6x6 matrix.
      Matrix minor(4, 4);
      std::size_t row = 0;
      for (std::size_t a = 0; a < 3; ++a) {
        if (a == i) continue;
        for (std::size_t c = 0; c < 4; ++c) minor(row, c) = p1(a, c);
        ++row;
      }
      for (std::size_t b = 0; b < 3; ++b) {
        if (b == j) continue;
        for (std::size_t c = 0; c < 4; ++c) minor(row, c) = p2(b, c);
        ++row;
      }
      const Rational d = determinant(minor);
      f(i, j) = (i + j) % 2 == 0 ? d : -d;
    }
  }
  return BilinearForm(sign_normalized(f));
}

Epipole epipole(const CameraPair& pair, int i, int j) {
  if (i < 1 || i > 2 || j < 1 || j > 2) invalid_input("epipole indices are 1 or 2");
  if (i == j) invalid_input("epipole needs i != j");
  const Camera& cam = pair[i - 1];
  const Camera& other = pair[j - 1];
  return {project(cam, other.center()), i, j};
}

bool is_trivial_conjugate(const BilinearForm& fp, const BilinearForm& fq) { return proj_equal(fp, fq); }

}  // namespace critconf
