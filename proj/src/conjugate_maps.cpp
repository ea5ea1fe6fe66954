#include "critconf/conjugate_maps.hpp"

#include "critconf/error.hpp"

namespace critconf {

namespace {

Matrix stack(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  }
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, c) = b(r, c);
  }
  return out;
}

bool all_on(const SpaceLine& line, const std::vector<Vec>& basis) {
  for (const auto& v : basis) {
    if (!line.contains(HVector(v))) return false;
  }
  return true;
}

}  // namespace

SpaceLine::SpaceLine(Matrix covectors) : covectors_(std::move(covectors)) {
  if (covectors_.rows() != 2 || covectors_.cols() != 4 || rank(covectors_) != 2) {
    invalid_input("a space line needs two independent covectors");
  }
}

std::pair<HVector, HVector> SpaceLine::points() const {
  const auto basis = nullspace(covectors_);
  return {HVector(basis[0]), HVector(basis[1])};
}

bool SpaceLine::lies_on(const Quadric& s) const {
  const auto [a, b] = points();
  return s.contains(a) && s.contains(b) && bilinear(a, s.matrix(), b).is_zero();
}

bool operator==(const SpaceLine& a, const SpaceLine& b) { return rank(stack(a.covectors_, b.covectors_)) == 2; }

SpaceLine epipolar_line(const Camera& camera, const HVector& e) {
  if (e.size() != 3) invalid_input("image points have 3 coordinates");
  const auto annihilator = nullspace(Matrix::from_rows({e.coords()}));
  return SpaceLine(Matrix::from_rows(annihilator) * camera.matrix());
}

std::pair<SpaceLine, SpaceLine> epipolar_lines(const CameraPair& pair, const BilinearForm& fq) {
  if (fq.rank() != 2) invalid_input("conjugate form must have rank 2", "form");
  return {epipolar_line(pair.first(), HVector(fq.left_kernel().front())),
          epipolar_line(pair.second(), HVector(fq.right_kernel().front()))};
}

PermissibleReport permissible_check(const Quadric& s, const std::pair<HVector, HVector>& centers,
                                    const SpaceLine& g12, const SpaceLine& g21) {
  PermissibleReport r;
  r.on_quadric_through_centers =
      g12.lies_on(s) && g21.lies_on(s) && g12.contains(centers.first) && g21.contains(centers.second);

  r.intersection_singular = true;
  for (const auto& v : nullspace(stack(g12.covectors(), g21.covectors()))) {
    if (!is_zero(s.matrix() * v)) r.intersection_singular = false;
  }

  r.singular_points_shared = all_on(g21, nullspace(stack(s.matrix(), g12.covectors()))) &&
                             all_on(g12, nullspace(stack(s.matrix(), g21.covectors())));

  r.same_plane = true;
  if (s.rank() <= 2) {
    const auto [a, b] = g12.points();
    const auto [c, d] = g21.points();
    const std::vector<const HVector*> span{&a, &b, &c, &d};
    for (const auto* u : span) {
      for (const auto* v : span) {
        if (!bilinear(*u, s.matrix(), *v).is_zero()) r.same_plane = false;
      }
    }
  }
  r.distinct = !(g12 == g21);
  return r;
}

bool PermissibleCorrespondence::all_permissible() const {
  for (const auto& p : pairs) {
    if (!p.report || !p.report->permissible()) return false;
  }
  return true;
}

PermissibleCorrespondence conjugates_from_permissible(const Quadric& s, const CameraPair& pair,
                                                      const CriticalityOptions& options) {
  if (s.singular_at(pair.first().center()) && s.singular_at(pair.second().center())) {
    undefined_case("correspondence not 1:1 in this case: both centers are singular points of the quadric", "quadric");
  }
  const Configuration empty(pair, {});
  PermissibleCorrespondence out{conjugates_of_quadric(s, empty, options), {}, true};
  const std::pair<HVector, HVector> centers{pair.first().center(), pair.second().center()};
  for (const auto& q : out.classification.conjugates) {
    PermissibleConjugate pc{q, std::nullopt, std::nullopt};
    if (q.form) {
      pc.lines = epipolar_lines(pair, *q.form);
      pc.report = permissible_check(s, centers, pc.lines->first, pc.lines->second);
    }
    out.pairs.push_back(std::move(pc));
  }
  for (std::size_t i = 0; i < out.pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < out.pairs.size(); ++j) {
      const auto& a = out.pairs[i].lines;
      const auto& b = out.pairs[j].lines;
      if (a && b && a->first == b->first && a->second == b->second) out.injective = false;
    }
  }
  return out;
}

CurveTypeQC curve_type_conjugate_quadric(const CurveTypeQC& t) {
  const CurveTypeQC out{t.a, t.a + t.b - t.c1 - t.c2, t.a - t.c2, t.a - t.c1};
  if (out.a < 0 || out.b < 0 || out.c1 < 0 || out.c2 < 0) {
    invalid_input("conjugate type would have a negative entry", "type");
  }
  return out;
}

CurveTypePlanes curve_type_conjugate_planes(const CurveTypePlanes& t) {
  const CurveTypePlanes out{2 * t.a - t.c0 - t.c1 - t.c2, t.b, t.a - t.c1 - t.c2, t.a - t.c0 - t.c2,
                            t.a - t.c0 - t.c1};
  if (out.a < 0 || out.b < 0 || out.c0 < 0 || out.c1 < 0 || out.c2 < 0) {
    invalid_input("conjugate type would have a negative entry", "type");
  }
  return out;
}

std::string_view to_string(SurfaceCase c) {
  switch (c) {
    case SurfaceCase::Smooth: return "smooth";
    case SurfaceCase::Cone: return "cone";
    case SurfaceCase::Planes: return "planes";
  }
  return "?";
}

std::optional<SurfaceCase> surface_case_from_string(std::string_view text) {
  for (auto c : {SurfaceCase::Smooth, SurfaceCase::Cone, SurfaceCase::Planes}) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

const IntersectionTable& intersection_table(SurfaceCase c) {
  static const IntersectionTable smooth{{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}}};
  static const IntersectionTable cone{{{0, 1, 0, 0}, {1, -2, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}}};
  static const IntersectionTable planes{{{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}}};
  switch (c) {
    case SurfaceCase::Smooth: return smooth;
    case SurfaceCase::Cone: return cone;
    case SurfaceCase::Planes: return planes;
  }
  return smooth;
}

int pairing(const DivisorClass& x, const DivisorClass& y) {
  if (x.surface != y.surface) invalid_input("divisor classes live on different surfaces");
  const auto& t = intersection_table(x.surface);
  int sum = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) sum += x.coeffs[i] * t[i][j] * y.coeffs[j];
  }
  return sum;
}

DivisorClass hyperplane_class(SurfaceCase c) {
  switch (c) {
    case SurfaceCase::Smooth: return {c, {2, 1, -1, -1}};
    case SurfaceCase::Cone: return {c, {3, 1, -1, -1}};
    case SurfaceCase::Planes: return {c, {2, -1, -1, -1}};
  }
  return {c, {}};
}

std::string_view basis_name(SurfaceCase c, int i) {
  static constexpr std::array<std::string_view, 4> smooth{"L1", "L2", "E1", "E2"};
  static constexpr std::array<std::string_view, 4> other{"L", "E0", "E1", "E2"};
  return c == SurfaceCase::Smooth ? smooth.at(i) : other.at(i);
}

}  // namespace critconf
