#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "critconf/camera.hpp"
#include "critconf/criticality.hpp"
#include "critconf/quadric_pencil.hpp"

namespace critconf {

/// A line of P^3 as the common zero set of two independent covectors.
class SpaceLine {
 public:
  explicit SpaceLine(Matrix covectors);

  /// 2x4, rows independent.
  const Matrix& covectors() const noexcept { return covectors_; }
  /// Two distinct points spanning the line.
  std::pair<HVector, HVector> points() const;
  bool contains(const HVector& x) const { return is_zero(covectors_ * x); }
  bool lies_on(const Quadric& s) const;

  friend bool operator==(const SpaceLine& a, const SpaceLine& b);

 private:
  Matrix covectors_;
};

/// Back-projection through P of the image point e.
SpaceLine epipolar_line(const Camera& camera, const HVector& e);

/// The lines g12 = P1^-1(e_Q1^2) and g21 = P2^-1(e_Q2^1) for the conjugate form F_Q.
std::pair<SpaceLine, SpaceLine> epipolar_lines(const CameraPair& pair, const BilinearForm& fq);

struct PermissibleReport {
  bool on_quadric_through_centers = false;  // condition 1
  bool intersection_singular = false;       // condition 2
  bool singular_points_shared = false;      // condition 3
  bool same_plane = false;                  // condition 4 (vacuous unless S is a plane pair)
  bool distinct = false;                    // the coincident pair of F_P is excluded

  bool conditions_hold() const {
    return on_quadric_through_centers && intersection_singular && singular_points_shared && same_plane;
  }
  bool permissible() const { return conditions_hold() && distinct; }
};

PermissibleReport permissible_check(const Quadric& s, const std::pair<HVector, HVector>& centers,
                                    const SpaceLine& g12, const SpaceLine& g21);

struct PermissibleConjugate {
  Conjugate conjugate;
  /// Exact conjugates only; numeric ones have irrational epipoles.
  std::optional<std::pair<SpaceLine, SpaceLine>> lines;
  std::optional<PermissibleReport> report;
};

struct PermissibleCorrespondence {
  QuadricConjugates classification;
  std::vector<PermissibleConjugate> pairs;
  /// No two conjugates share a line pair.
  bool injective = false;
  bool all_permissible() const;
};

/// Throws UndefinedCase when both centers are singular points of S.
PermissibleCorrespondence conjugates_from_permissible(const Quadric& s, const CameraPair& pair,
                                                      const CriticalityOptions& options = {});

struct CurveTypeQC {
  int a = 0, b = 0, c1 = 0, c2 = 0;
  friend bool operator==(const CurveTypeQC&, const CurveTypeQC&) = default;
};

struct CurveTypePlanes {
  int a = 0, b = 0, c0 = 0, c1 = 0, c2 = 0;
  friend bool operator==(const CurveTypePlanes&, const CurveTypePlanes&) = default;
};

/// (a, a+b-c1-c2, a-c2, a-c1). Negative output is an error.
CurveTypeQC curve_type_conjugate_quadric(const CurveTypeQC& t);
/// (2a-c0-c1-c2, b, a-c1-c2, a-c0-c2, a-c0-c1). Negative output is an error.
CurveTypePlanes curve_type_conjugate_planes(const CurveTypePlanes& t);

enum class SurfaceCase { Smooth, Cone, Planes };
std::string_view to_string(SurfaceCase c);
std::optional<SurfaceCase> surface_case_from_string(std::string_view text);

using IntersectionTable = std::array<std::array<int, 4>, 4>;

/// Smooth: {L1, L2, E1, E2}; cone and planes: {L, E0, E1, E2}.
struct DivisorClass {
  SurfaceCase surface;
  std::array<int, 4> coeffs;
};

const IntersectionTable& intersection_table(SurfaceCase c);
int pairing(const DivisorClass& x, const DivisorClass& y);
DivisorClass hyperplane_class(SurfaceCase c);
std::string_view basis_name(SurfaceCase c, int i);

}  // namespace critconf
