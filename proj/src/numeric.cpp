#include "critconf/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace critconf::numeric {

Eigen::MatrixXd to_eigen(const Matrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c).to_double();
    }
  }
  return out;
}

Eigen::VectorXd to_eigen(std::span<const Rational> v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i].to_double();
  return out;
}

CameraPair to_numeric(const critconf::CameraPair& pair) {
  return {to_eigen(pair.first().matrix()), to_eigen(pair.second().matrix())};
}

RealizedForm realize_interval_member(const FormPencil& pencil, const IsolatingInterval& interval) {
  const BinaryForm det = BinaryForm::interpolate(3, [&](const Rational& a, const Rational& b) {
    return determinant(pencil.member(a, b));
  });
  const Polynomial& f = det.dehomogenized();
  const Polynomial df = f.derivative();
  const long double lo = interval.lo.to_long_double();
  const long double hi = interval.hi.to_long_double();
  long double t = ((interval.lo + interval.hi) / Rational(2)).to_long_double();
  for (int iter = 0; iter < 8; ++iter) {
    const long double slope = df.eval(t);
    if (slope == 0.0L) break;
    const long double next = t - f.eval(t) / slope;
    if (!(next > lo && next < hi)) break;
    if (next == t) break;
    t = next;
  }

  const Eigen::Matrix3d f0 = to_eigen(pencil.generator().matrix());
  const Eigen::Matrix3d fp = to_eigen(pencil.base().matrix());
  Eigen::Matrix3d member = static_cast<double>(t) * f0 + fp;
  member /= member.norm();
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(member, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Vector3d sigma = svd.singularValues();
  RealizedForm out;
  out.parameter = t;
  out.determinant_residual = std::abs(member.determinant());
  sigma(2) = 0.0;
  out.form = svd.matrixU() * sigma.asDiagonal() * svd.matrixV().transpose();
  out.form /= out.form.norm();
  out.second_singular_value = sigma(1) / sigma.norm();
  return out;
}

CameraPair camera_pair_from_form(const Eigen::Matrix3d& form) {
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(form, Eigen::ComputeFullV);
  const Eigen::Vector3d e = svd.matrixV().col(2);
  Eigen::Matrix3d ex;
  ex << 0, -e(2), e(1), e(2), 0, -e(0), -e(1), e(0), 0;
  CameraPair out;
  out.first.setZero();
  out.first.leftCols<3>().setIdentity();
  out.second.leftCols<3>() = ex * form.transpose();
  out.second.col(3) = e;
  return out;
}

namespace {

Eigen::Matrix3d skew(const Eigen::Vector3d& v) {
  Eigen::Matrix3d m;
  m << 0, -v(2), v(1), v(2), 0, -v(0), -v(1), v(0), 0;
  return m;
}

}  // namespace

std::optional<Eigen::Vector4d> triangulate(const CameraPair& pair, const Eigen::Vector3d& x, const Eigen::Vector3d& y) {
  Eigen::Matrix<double, 6, 4> a;
  a.topRows<3>() = skew(x.normalized()) * pair.first;
  a.bottomRows<3>() = skew(y.normalized()) * pair.second;
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    const double n = a.row(r).norm();
    if (n > 0) a.row(r) /= n;
  }
  Eigen::JacobiSVD<Eigen::Matrix<double, 6, 4>> svd(a, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  if (s(2) < 1e-7 * s(0)) return std::nullopt;
  return Eigen::Vector4d(svd.matrixV().col(3));
}

double image_residual(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  const double ma = a.cwiseAbs().maxCoeff();
  const double mb = b.cwiseAbs().maxCoeff();
  if (ma == 0.0 || mb == 0.0) return 1.0;
  const Eigen::Vector3d u = a / ma;
  const Eigen::Vector3d v = b / mb;
  return u.cross(v).norm() / (u.norm() * v.norm());
}

bool near_center(const CameraPair& pair, const Eigen::Vector4d& x, double tolerance) {
  const Eigen::Vector4d u = x.normalized();
  return (pair.first * u).norm() < tolerance * pair.first.norm() ||
         (pair.second * u).norm() < tolerance * pair.second.norm();
}

}  // namespace critconf::numeric
