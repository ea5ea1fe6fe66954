#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "critconf/camera.hpp"
#include "critconf/fundamental.hpp"
#include "critconf/polynomial.hpp"

namespace critconf {

/// Symmetric nonzero 4x4 matrix; contains(x) iff x^T M x = 0.
class Quadric {
 public:
  explicit Quadric(Matrix matrix);

  const Matrix& matrix() const noexcept { return matrix_; }
  Rational operator()(std::span<const Rational> x) const { return bilinear(x, matrix_, x); }
  bool contains(const HVector& x) const { return (*this)(x.coords()).is_zero(); }
  bool singular_at(const HVector& x) const { return is_zero(matrix_ * x); }
  std::size_t rank() const { return critconf::rank(matrix_); }

 private:
  Matrix matrix_;
};

bool proj_equal(const Quadric& a, const Quadric& b);

/// The line alpha * generator + beta * base of bilinear forms, base = F_P of rank 2.
class FormPencil {
 public:
  FormPencil(BilinearForm base, BilinearForm generator);

  const BilinearForm& base() const noexcept { return base_; }
  const BilinearForm& generator() const noexcept { return generator_; }
  /// alpha * generator + beta * base (may be any rank, never zero).
  Matrix member(const Rational& alpha, const Rational& beta) const;

 private:
  BilinearForm base_;
  BilinearForm generator_;
};

enum class AppendixCaseTag {
  ThreeDistinctReal,
  ComplexPair,
  DoubleAtBase,
  DoubleAtOther,
  TripleAtBase,
  Rank1Double,
  LineTwoRealRank1,
  LineTwoComplexRank1,
  LineOneRank1Double,
  LineOneRank1Simple,
  LineNoRank1SharedKernel,
  LineNoRank1DistinctKernels,
};

inline constexpr int kAppendixCaseCount = 12;
std::string_view to_string(AppendixCaseTag tag);
std::optional<AppendixCaseTag> appendix_case_from_string(std::string_view text);

enum class KernelSide { None, Left, Right, Both };
std::string_view to_string(KernelSide side);

struct AppendixCase {
  AppendixCaseTag tag;
  /// det(alpha * F0 + beta * F_P), a binary cubic.
  BinaryForm determinant;
  /// Intersection of the line with the rank-2 locus; empty when the line lies inside it.
  std::optional<RootProfile> intersection;
  /// Line inside the locus: gcd of the 2x2 minors, whose roots are the rank-1 members.
  std::optional<BinaryForm> rank_one_locus;
  std::optional<RootProfile> rank_one_profile;
  /// Line inside the locus: which kernel all rank-2 members share.
  KernelSide shared_kernel = KernelSide::None;

  bool line_in_locus() const { return !intersection.has_value(); }
};

enum class QuadricKind {
  SmoothCamerasNotOnLine,
  SmoothCamerasOnLine,
  ConeCamerasNotOnLine,
  ConeOneCameraAtVertex,
  TwoPlanesCamerasInSamePlane,
  TwoPlanesOneCameraOnSingularLine,
  TwoPlanesCamerasOnSingularLine,
  DoublePlane,
  SmoothNonRuled,
  TwoPlanesCamerasInDifferentPlanes,
  ConeCamerasOnLine,
  ComplexConjugatePlanes,
};

std::string_view to_string(QuadricKind kind);

enum class ConjugateCount { Zero, One, Two, Infinite };
std::string_view to_string(ConjugateCount count);

struct CriticalClass {
  QuadricKind kind;
  ConjugateCount conjugate_count;
  /// Kind of the conjugate quadric S_Q (critical kinds only).
  std::optional<QuadricKind> conjugate_kind;

  bool critical() const { return conjugate_count != ConjugateCount::Zero; }
};

/// S(x) = F(P1 x, P2 x) as the symmetric part of P1^T F P2; nullopt when F is
/// projectively the pair's own fundamental form (it pulls back to zero).
std::optional<Quadric> pullback_quadric(const BilinearForm& form, const CameraPair& pair);

/// The line through F_P of forms pulling back to S. Generator: the member with
/// pullback exactly S whose entry at F_P's first nonzero position is 0.
FormPencil form_line_from_quadric(const Quadric& quadric, const CameraPair& pair);

AppendixCase classify_pencil(const FormPencil& pencil);
CriticalClass criticality_verdict(AppendixCaseTag tag);
inline CriticalClass criticality_verdict(const AppendixCase& c) { return criticality_verdict(c.tag); }

/// A member alpha * F0 + beta * F_P with exact parameters.
struct PencilMember {
  Rational alpha;
  Rational beta;
  BilinearForm form;
};

/// The rank-2 members of a line inside the rank-2 locus, minus F_P and the rank-1 members.
class PencilFamily {
 public:
  PencilFamily(FormPencil pencil, std::optional<BinaryForm> rank_one_locus);

  const FormPencil& pencil() const noexcept { return pencil_; }
  bool excludes(const Rational& alpha, const Rational& beta) const;
  /// `count` pairwise distinct rank-2 members; deterministic for a given seed.
  std::vector<PencilMember> sample(std::size_t count, std::uint64_t seed = 1) const;

 private:
  FormPencil pencil_;
  std::optional<BinaryForm> rank_one_locus_;
};

struct Rank2Forms {
  /// Rational rank-2 members other than F_P.
  std::vector<PencilMember> exact;
  /// Irrational members t * F0 + F_P, t inside each interval.
  std::vector<IsolatingInterval> intervals;
  /// Infinite families (line inside the locus, critical kinds).
  std::optional<PencilFamily> family;

  std::size_t finite_count() const { return exact.size() + intervals.size(); }
};

Rank2Forms rank2_forms_on_line(const FormPencil& pencil, const AppendixCase& c);
inline Rank2Forms rank2_forms_on_line(const FormPencil& pencil) {
  return rank2_forms_on_line(pencil, classify_pencil(pencil));
}

}  // namespace critconf
