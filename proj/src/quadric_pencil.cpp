#include "critconf/quadric_pencil.hpp"

#include <array>
#include <random>
#include <stdexcept>

#include "critconf/error.hpp"

namespace critconf {

Quadric::Quadric(Matrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != 4 || matrix_.cols() != 4) invalid_input("quadrics are 4x4");
  if (!matrix_.is_symmetric()) invalid_input("quadric matrix must be symmetric");
  if (matrix_.is_zero()) invalid_input("quadric matrix must be nonzero");
}

bool proj_equal(const Quadric& a, const Quadric& b) { return proj_equal(a.matrix(), b.matrix()); }

FormPencil::FormPencil(BilinearForm base, BilinearForm generator)
    : base_(std::move(base)), generator_(std::move(generator)) {
  if (base_.rank() != 2) invalid_input("invalid pencil: base form must have rank 2");
  if (proj_equal(base_, generator_)) invalid_input("invalid pencil: generators are projectively equal");
}

Matrix FormPencil::member(const Rational& alpha, const Rational& beta) const {
  return alpha * generator_.matrix() + beta * base_.matrix();
}

std::string_view to_string(AppendixCaseTag tag) {
  switch (tag) {
    case AppendixCaseTag::ThreeDistinctReal: return "three-distinct-real";
    case AppendixCaseTag::ComplexPair: return "complex-pair";
    case AppendixCaseTag::DoubleAtBase: return "double-at-FP";
    case AppendixCaseTag::DoubleAtOther: return "double-at-other";
    case AppendixCaseTag::TripleAtBase: return "triple-at-FP";
    case AppendixCaseTag::Rank1Double: return "rank1-double";
    case AppendixCaseTag::LineTwoRealRank1: return "line-in-locus/two-real-rank1";
    case AppendixCaseTag::LineTwoComplexRank1: return "line-in-locus/two-complex-rank1";
    case AppendixCaseTag::LineOneRank1Double: return "line-in-locus/one-rank1-mult2";
    case AppendixCaseTag::LineOneRank1Simple: return "line-in-locus/one-rank1-mult1";
    case AppendixCaseTag::LineNoRank1SharedKernel: return "line-in-locus/no-rank1-shared-kernel";
    case AppendixCaseTag::LineNoRank1DistinctKernels: return "line-in-locus/no-rank1-distinct-kernels";
  }
  return "unknown";
}

std::optional<AppendixCaseTag> appendix_case_from_string(std::string_view text) {
  for (int i = 0; i < kAppendixCaseCount; ++i) {
    const auto tag = static_cast<AppendixCaseTag>(i);
    if (to_string(tag) == text) return tag;
  }
  return std::nullopt;
}

std::string_view to_string(KernelSide side) {
  switch (side) {
    case KernelSide::None: return "none";
    case KernelSide::Left: return "left";
    case KernelSide::Right: return "right";
    case KernelSide::Both: return "both";
  }
  return "none";
}

std::string_view to_string(QuadricKind kind) {
  switch (kind) {
    case QuadricKind::SmoothCamerasNotOnLine: return "smooth-quadric/cameras-not-on-a-line";
    case QuadricKind::SmoothCamerasOnLine: return "smooth-quadric/cameras-on-a-line";
    case QuadricKind::ConeCamerasNotOnLine: return "cone/cameras-not-on-a-line";
    case QuadricKind::ConeOneCameraAtVertex: return "cone/one-camera-at-vertex";
    case QuadricKind::TwoPlanesCamerasInSamePlane: return "two-planes/cameras-in-same-plane";
    case QuadricKind::TwoPlanesOneCameraOnSingularLine: return "two-planes/one-camera-on-singular-line";
    case QuadricKind::TwoPlanesCamerasOnSingularLine: return "two-planes/cameras-on-singular-line";
    case QuadricKind::DoublePlane: return "double-plane/cameras-in-plane";
    case QuadricKind::SmoothNonRuled: return "smooth-non-ruled-quadric";
    case QuadricKind::TwoPlanesCamerasInDifferentPlanes: return "two-planes/cameras-in-different-planes";
    case QuadricKind::ConeCamerasOnLine: return "cone/cameras-on-a-line-not-at-vertex";
    case QuadricKind::ComplexConjugatePlanes: return "complex-conjugate-planes/cameras-on-intersection";
  }
  return "unknown";
}

std::string_view to_string(ConjugateCount count) {
  switch (count) {
    case ConjugateCount::Zero: return "0";
    case ConjugateCount::One: return "1";
    case ConjugateCount::Two: return "2";
    case ConjugateCount::Infinite: return "infinite";
  }
  return "0";
}

std::optional<Quadric> pullback_quadric(const BilinearForm& form, const CameraPair& pair) {
  const Matrix& p1 = pair.first().matrix();
  const Matrix& p2 = pair.second().matrix();
  Matrix s = (p1.transpose() * form.matrix() * p2).symmetric_part();
  if (s.is_zero()) return std::nullopt;
  return Quadric(std::move(s));
}

FormPencil form_line_from_quadric(const Quadric& quadric, const CameraPair& pair) {
  if (!quadric.contains(pair.first().center()) || !quadric.contains(pair.second().center())) {
    invalid_input("quadric does not pass through camera centers");
  }
  const Matrix& p1 = pair.first().matrix();
  const Matrix& p2 = pair.second().matrix();
  const Matrix& s = quadric.matrix();
  // Unknowns: the 9 entries of F (row-major) and lambda; one equation per i <= j.
  Matrix system(10, 10);
  std::size_t row = 0;
  const Rational half(1, 2);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i; j < 4; ++j, ++row) {
      for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = 0; b < 3; ++b) {
          system(row, 3 * a + b) = half * (p1(a, i) * p2(b, j) + p1(a, j) * p2(b, i));
        }
      }
      system(row, 9) = -s(i, j);
    }
  }
  const auto solutions = nullspace(system);
  const Vec* with_lambda = nullptr;
  for (const auto& v : solutions) {
    if (!v[9].is_zero()) {
      with_lambda = &v;
      break;
    }
  }
  if (with_lambda == nullptr) invalid_input("quadric is not a pullback of any bilinear form");

  const BilinearForm fp = fundamental_form(pair);
  Matrix g(3, 3);
  for (std::size_t k = 0; k < 9; ++k) g(k / 3, k % 3) = (*with_lambda)[k] / (*with_lambda)[9];
  const Vec& fp_entries = fp.matrix().entries();
  for (std::size_t k = 0; k < 9; ++k) {
    if (fp_entries[k].is_zero()) continue;
    g = g - (g.entries()[k] / fp_entries[k]) * fp.matrix();
    break;
  }
  return {fp, BilinearForm(std::move(g))};
}

namespace {

BinaryForm pencil_determinant(const FormPencil& pencil) {
  return BinaryForm::interpolate(3, [&](const Rational& a, const Rational& b) {
    return determinant(pencil.member(a, b));
  });
}

BinaryForm rank_one_gcd(const FormPencil& pencil) {
  std::optional<BinaryForm> g;
  for (std::size_t r1 = 0; r1 < 3; ++r1) {
    for (std::size_t r2 = r1 + 1; r2 < 3; ++r2) {
      for (std::size_t c1 = 0; c1 < 3; ++c1) {
        for (std::size_t c2 = c1 + 1; c2 < 3; ++c2) {
          const BinaryForm minor = BinaryForm::interpolate(2, [&](const Rational& a, const Rational& b) {
            const Matrix m = pencil.member(a, b);
            return m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1);
          });
          if (minor.is_zero()) continue;
          g = g ? gcd(*g, minor) : minor;
        }
      }
    }
  }
  // F_P has rank 2, so some minor is nonzero.
  if (!g) throw std::logic_error("pencil has no nonzero 2x2 minor");
  return *g;
}

std::size_t member_rank(const FormPencil& pencil, const ProjectiveRoot& root) {
  return rank(pencil.member(root.alpha, root.beta));
}

KernelSide kernel_sharing(const FormPencil& pencil) {
  static const std::array<std::pair<long, long>, 7> candidates{
      {{0, 1}, {1, 1}, {1, -1}, {1, 2}, {2, 1}, {1, -2}, {1, 3}}};
  std::vector<Vec> lefts;
  std::vector<Vec> rights;
  for (const auto& [a, b] : candidates) {
    const Matrix m = pencil.member(a, b);
    if (rank(m) != 2) continue;
    lefts.push_back(left_nullspace(m).front());
    rights.push_back(nullspace(m).front());
    if (lefts.size() == 3) break;
  }
  // A kernel is quadratic in the parameter: three agreements force constancy.
  auto constant = [](const std::vector<Vec>& ks) {
    for (std::size_t i = 1; i < ks.size(); ++i) {
      if (!proj_equal(std::span<const Rational>(ks[0]), std::span<const Rational>(ks[i]))) return false;
    }
    return true;
  };
  const bool left = constant(lefts);
  const bool right = constant(rights);
  if (left && right) return KernelSide::Both;
  if (left) return KernelSide::Left;
  if (right) return KernelSide::Right;
  return KernelSide::None;
}

AppendixCase classify_line_in_locus(const FormPencil& pencil, BinaryForm det) {
  AppendixCase out{AppendixCaseTag::LineNoRank1DistinctKernels, std::move(det), std::nullopt, std::nullopt,
                   std::nullopt, KernelSide::None};
  const BinaryForm g = rank_one_gcd(pencil);
  out.rank_one_locus = g;
  out.shared_kernel = kernel_sharing(pencil);
  if (g.degree() == 0) {
    if (out.shared_kernel == KernelSide::Both) {
      throw std::logic_error("line in rank-2 locus sharing both kernels must contain rank-1 forms");
    }
    out.tag = out.shared_kernel == KernelSide::None ? AppendixCaseTag::LineNoRank1DistinctKernels
                                                    : AppendixCaseTag::LineNoRank1SharedKernel;
    return out;
  }
  out.rank_one_profile = root_profile(g);
  const RootProfile& prof = *out.rank_one_profile;
  if (g.degree() == 1) {
    out.tag = AppendixCaseTag::LineOneRank1Simple;
  } else if (prof.complex_pairs == 1) {
    out.tag = AppendixCaseTag::LineTwoComplexRank1;
  } else if (prof.real_double == 1) {
    out.tag = AppendixCaseTag::LineOneRank1Double;
  } else {
    out.tag = AppendixCaseTag::LineTwoRealRank1;
  }
  return out;
}

}  // namespace

AppendixCase classify_pencil(const FormPencil& pencil) {
  BinaryForm det = pencil_determinant(pencil);
  auto profile = root_profile(det);
  if (!profile) return classify_line_in_locus(pencil, std::move(det));

  AppendixCase out{AppendixCaseTag::ThreeDistinctReal, std::move(det), profile, std::nullopt, std::nullopt,
                   KernelSide::None};
  int base_multiplicity = 0;
  std::vector<const ProjectiveRoot*> others;
  for (const auto& r : profile->roots) {
    if (r.exact && r.alpha.is_zero()) {
      base_multiplicity = r.multiplicity;
    } else {
      others.push_back(&r);
    }
  }
  if (base_multiplicity == 0) throw std::logic_error("pencil determinant does not vanish at F_P");

  // A rank-1 member is a singular point of the determinant cubic, so simple roots have rank 2.
  for (const auto* r : others) {
    if (r->multiplicity == 1 && r->exact && member_rank(pencil, *r) != 2) {
      throw std::logic_error("simple intersection with the rank-2 locus has rank 1");
    }
  }

  if (base_multiplicity == 3) {
    out.tag = AppendixCaseTag::TripleAtBase;
  } else if (base_multiplicity == 2) {
    out.tag = AppendixCaseTag::DoubleAtBase;
  } else if (profile->complex_pairs == 1) {
    out.tag = AppendixCaseTag::ComplexPair;
  } else if (others.size() == 2) {
    out.tag = AppendixCaseTag::ThreeDistinctReal;
  } else {
    out.tag = member_rank(pencil, *others.front()) == 1 ? AppendixCaseTag::Rank1Double
                                                        : AppendixCaseTag::DoubleAtOther;
  }
  return out;
}

CriticalClass criticality_verdict(AppendixCaseTag tag) {
  using K = QuadricKind;
  using C = ConjugateCount;
  switch (tag) {
    case AppendixCaseTag::ThreeDistinctReal: return {K::SmoothCamerasNotOnLine, C::Two, K::SmoothCamerasNotOnLine};
    case AppendixCaseTag::ComplexPair: return {K::SmoothNonRuled, C::Zero, std::nullopt};
    // Tangency at F_P is equivalent to the baseline lying on the quadric.
    case AppendixCaseTag::DoubleAtBase: return {K::SmoothCamerasOnLine, C::One, K::ConeCamerasNotOnLine};
    case AppendixCaseTag::DoubleAtOther: return {K::ConeCamerasNotOnLine, C::One, K::SmoothCamerasOnLine};
    case AppendixCaseTag::TripleAtBase: return {K::ConeCamerasOnLine, C::Zero, std::nullopt};
    case AppendixCaseTag::Rank1Double: return {K::TwoPlanesCamerasInDifferentPlanes, C::Zero, std::nullopt};
    case AppendixCaseTag::LineTwoRealRank1:
      return {K::TwoPlanesCamerasOnSingularLine, C::Infinite, K::TwoPlanesCamerasOnSingularLine};
    case AppendixCaseTag::LineTwoComplexRank1: return {K::ComplexConjugatePlanes, C::Zero, std::nullopt};
    case AppendixCaseTag::LineOneRank1Double: return {K::DoublePlane, C::Infinite, K::DoublePlane};
    case AppendixCaseTag::LineOneRank1Simple:
      return {K::TwoPlanesOneCameraOnSingularLine, C::Infinite, K::TwoPlanesOneCameraOnSingularLine};
    case AppendixCaseTag::LineNoRank1SharedKernel:
      return {K::ConeOneCameraAtVertex, C::Infinite, K::ConeOneCameraAtVertex};
    case AppendixCaseTag::LineNoRank1DistinctKernels:
      return {K::TwoPlanesCamerasInSamePlane, C::Infinite, K::TwoPlanesCamerasInSamePlane};
  }
  throw std::logic_error("unknown appendix case");
}

PencilFamily::PencilFamily(FormPencil pencil, std::optional<BinaryForm> rank_one_locus)
    : pencil_(std::move(pencil)), rank_one_locus_(std::move(rank_one_locus)) {}

bool PencilFamily::excludes(const Rational& alpha, const Rational& beta) const {
  if (alpha.is_zero()) return true;  // F_P itself
  if (rank_one_locus_ && (*rank_one_locus_)(alpha, beta).is_zero()) return true;
  return rank(pencil_.member(alpha, beta)) != 2;
}

std::vector<PencilMember> PencilFamily::sample(std::size_t count, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 7);
  std::vector<PencilMember> out;
  std::vector<Rational> used;
  // The generator itself comes first when admissible.
  if (count > 0 && !excludes(1, 0)) out.push_back({1, 0, pencil_.generator()});
  while (out.size() < count) {
    const Rational t(num(rng), den(rng));
    if (t.is_zero()) continue;
    bool seen = false;
    for (const auto& u : used) seen = seen || u == t;
    if (seen) continue;
    used.push_back(t);
    if (excludes(t, 1)) continue;
    out.push_back({t, 1, BilinearForm(pencil_.member(t, 1))});
  }
  return out;
}

Rank2Forms rank2_forms_on_line(const FormPencil& pencil, const AppendixCase& c) {
  Rank2Forms out;
  const CriticalClass verdict = criticality_verdict(c.tag);
  if (!verdict.critical()) return out;
  if (c.line_in_locus()) {
    out.family.emplace(pencil, c.rank_one_locus);
    return out;
  }
  for (const auto& r : c.intersection->roots) {
    if (r.exact && r.alpha.is_zero()) continue;
    if (r.exact) {
      out.exact.push_back({r.alpha, r.beta, BilinearForm(pencil.member(r.alpha, r.beta))});
    } else {
      out.intervals.push_back(r.interval);
    }
  }
  return out;
}

}  // namespace critconf
