#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "critconf/camera.hpp"
#include "critconf/fundamental.hpp"
#include "critconf/numeric.hpp"
#include "critconf/quadric_pencil.hpp"

namespace critconf {

/// Two cameras and a list of space points, none of them a camera center.
class Configuration {
 public:
  Configuration(CameraPair pair, std::vector<HVector> points);

  const CameraPair& pair() const noexcept { return pair_; }
  const std::vector<HVector>& points() const noexcept { return points_; }

 private:
  CameraPair pair_;
  std::vector<HVector> points_;
};

numeric::Configuration to_numeric(const Configuration& config);

/// Echelon basis of the symmetric forms vanishing on the points and both centers.
std::vector<Quadric> quadrics_through(const std::vector<HVector>& points, const std::pair<HVector, HVector>& centers);

/// The space point seen as (x, y). Errors: "not a correspondence" (invalid input),
/// "fiber is a line" (undefined case).
HVector triangulate(const CameraPair& pair, const ImagePair& images);

bool one_view_critical(const Camera& camera, const std::vector<HVector>& points);
/// Projective dimension of span(center, points).
int span_dimension(const Camera& camera, const std::vector<HVector>& points);

struct PointMatch {
  bool match = false;
  double residual = 0;
};

struct ImageComparison {
  std::vector<PointMatch> points;

  bool all_match() const;
  double max_residual() const;
  std::vector<std::size_t> mismatches() const;
};

/// Exact comparison (projective equality of the joint images).
ImageComparison verify_same_images(const Configuration& a, const Configuration& b);
/// Tolerance comparison: sine of the angle between max-abs-scaled images < tolerance.
ImageComparison verify_same_images(const numeric::Configuration& a, const numeric::Configuration& b, double tolerance);

enum class PointStatus {
  Ok,
  OnBaseline,             // the conjugate is any point of a line
  EpipolarIntersection,   // maps to both epipoles of the conjugate form
  ConjugateAtCenter,      // the conjugate is a camera center of the conjugate pair
};

std::string_view to_string(PointStatus status);

enum class RealizationMode { Exact, Numeric };
std::string_view to_string(RealizationMode mode);

struct ConjugatePoint {
  PointStatus status = PointStatus::Ok;
  std::optional<HVector> exact;
  std::optional<Eigen::Vector4d> numeric;
};

struct Conjugate {
  RealizationMode mode = RealizationMode::Exact;
  /// Exact realization.
  std::optional<BilinearForm> form;
  std::optional<CameraPair> pair;
  /// Parameters (alpha : beta) of the member alpha * F0 + beta * F_P, when rational.
  std::optional<std::pair<Rational, Rational>> parameter;
  /// Numeric realization.
  std::optional<numeric::RealizedForm> realized;
  std::optional<IsolatingInterval> interval;
  std::optional<numeric::CameraPair> numeric_pair;

  std::vector<ConjugatePoint> points;
  /// One entry per Ok point, in order.
  ImageComparison verification;
  bool verified = false;

  std::vector<std::size_t> ok_indices() const;
};

/// Exact conjugate of a configuration for a rank-2 form F_Q pulling back to a quadric
/// through every point. Points on the baseline, on both epipolar lines, or mapping to a
/// center are flagged and skipped.
Conjugate conjugate_configuration(const Configuration& config, const BilinearForm& fq);

/// Numeric conjugate for the irrational member t * F0 + F_P, t in `interval`.
Conjugate conjugate_configuration(const Configuration& config, const FormPencil& pencil,
                                  const IsolatingInterval& interval, double tolerance);

struct CriticalityOptions {
  std::size_t samples = 5;
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
};

/// Classification of a quadric through the centers together with all its conjugates.
struct QuadricConjugates {
  Quadric quadric;
  FormPencil pencil;
  AppendixCase appendix_case;
  CriticalClass verdict;
  std::vector<Conjugate> conjugates;
};

/// Every points[i] must lie on the quadric.
QuadricConjugates conjugates_of_quadric(const Quadric& quadric, const Configuration& config,
                                        const CriticalityOptions& options = {});

enum class Criticality { Critical, NotCritical, Undetermined };
std::string_view to_string(Criticality c);

struct ConjugateReport {
  Configuration original;
  Criticality status = Criticality::NotCritical;
  /// Dimension of the linear family of quadrics through the points and centers.
  std::size_t family_dimension = 0;
  std::vector<Quadric> family;
  /// Witness (critical) or the classified unique quadric (not critical).
  std::optional<QuadricConjugates> witness;
  bool trivial_flag = false;
  std::vector<std::string> warnings;

  bool critical() const { return status == Criticality::Critical; }
};

ConjugateReport is_critical(const Configuration& config, const CriticalityOptions& options = {});

}  // namespace critconf
