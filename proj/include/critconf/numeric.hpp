#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "critconf/camera.hpp"
#include "critconf/polynomial.hpp"
#include "critconf/quadric_pencil.hpp"

// Floating-point realization of conjugates whose fundamental form is irrational.
// Classification never happens here.
namespace critconf::numeric {

using Mat34 = Eigen::Matrix<double, 3, 4>;

struct CameraPair {
  Mat34 first;
  Mat34 second;
};

struct Configuration {
  CameraPair pair;
  std::vector<Eigen::Vector4d> points;
};

Eigen::MatrixXd to_eigen(const Matrix& m);
Eigen::VectorXd to_eigen(std::span<const Rational> v);
CameraPair to_numeric(const critconf::CameraPair& pair);

/// A rank-2 member t * F0 + F_P refined from an isolating interval.
struct RealizedForm {
  Eigen::Matrix3d form;
  long double parameter = 0;
  /// |det| of the refined member before the rank-2 projection (unit Frobenius norm).
  double determinant_residual = 0;
  /// Second singular value of the projected form (unit Frobenius norm).
  double second_singular_value = 0;
};

/// Newton on det(t F0 + F_P) inside the interval, then the smallest singular value is zeroed.
RealizedForm realize_interval_member(const FormPencil& pencil, const IsolatingInterval& interval);

/// first = [I | 0], second = [[e]_x F^T | e] with F e = 0.
CameraPair camera_pair_from_form(const Eigen::Matrix3d& form);

/// Least-squares intersection of the two back-projected rays. nullopt when the
/// rays coincide (fiber is a line), judged by the singular value gap.
std::optional<Eigen::Vector4d> triangulate(const CameraPair& pair, const Eigen::Vector3d& x, const Eigen::Vector3d& y);

/// Sine of the angle between two image vectors after max-abs scaling.
double image_residual(const Eigen::Vector3d& a, const Eigen::Vector3d& b);

/// Is x (numerically) one of the pair's centers?
bool near_center(const CameraPair& pair, const Eigen::Vector4d& x, double tolerance);

}  // namespace critconf::numeric
