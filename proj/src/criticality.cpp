#include "critconf/criticality.hpp"

#include <algorithm>

#include "critconf/error.hpp"

namespace critconf {

namespace {

std::string point_locus(std::size_t i) { return "points[" + std::to_string(i) + "]"; }

Eigen::Vector3d to_eigen3(const HVector& v) {
  return {v[0].to_double(), v[1].to_double(), v[2].to_double()};
}

PointMatch compare_exact(const ImagePair& a, const ImagePair& b) {
  PointMatch m;
  m.match = proj_equal(a.first, b.first) && proj_equal(a.second, b.second);
  m.residual = std::max(numeric::image_residual(to_eigen3(a.first), to_eigen3(b.first)),
                        numeric::image_residual(to_eigen3(a.second), to_eigen3(b.second)));
  if (m.match) m.residual = 0;
  return m;
}

}  // namespace

Configuration::Configuration(CameraPair pair, std::vector<HVector> points)
    : pair_(std::move(pair)), points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].size() != 4) invalid_input("space points have 4 coordinates", point_locus(i));
    if (is_center(pair_, points_[i])) invalid_input("point coincides with a camera center", point_locus(i));
  }
}

numeric::Configuration to_numeric(const Configuration& config) {
  numeric::Configuration out{numeric::to_numeric(config.pair()), {}};
  for (const auto& x : config.points()) out.points.emplace_back(numeric::to_eigen(x));
  return out;
}

std::vector<Quadric> quadrics_through(const std::vector<HVector>& points, const std::pair<HVector, HVector>& centers) {
  if (points.empty()) invalid_input("at least one point is required", "points");
  std::vector<const HVector*> all{&centers.first, &centers.second};
  for (const auto& p : points) all.push_back(&p);
  Matrix system(all.size(), 10);
  for (std::size_t r = 0; r < all.size(); ++r) {
    const HVector& x = *all[r];
    if (x.size() != 4) invalid_input("space points have 4 coordinates");
    std::size_t k = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i; j < 4; ++j, ++k) {
        system(r, k) = (i == j ? Rational(1) : Rational(2)) * x[i] * x[j];
      }
    }
  }
  std::vector<Quadric> out;
  for (const auto& v : nullspace(system)) {
    Matrix m(4, 4);
    std::size_t k = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i; j < 4; ++j, ++k) m(i, j) = m(j, i) = v[k];
    }
    out.emplace_back(std::move(m));
  }
  return out;
}

HVector triangulate(const CameraPair& pair, const ImagePair& images) {
  const auto& [x, y] = images;
  if (x.size() != 3 || y.size() != 3) invalid_input("image points have 3 coordinates");
  const Matrix a = cross_matrix(x) * pair.first().matrix();
  const Matrix b = cross_matrix(y) * pair.second().matrix();
  Matrix stack(6, 4);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      stack(r, c) = a(r, c);
      stack(r + 3, c) = b(r, c);
    }
  }
  const auto kernel = nullspace(stack);
  if (kernel.empty()) invalid_input("not a correspondence: the back-projected lines do not meet");
  if (kernel.size() > 1) undefined_case("fiber is a line: both images are epipoles");
  return HVector(kernel.front());
}

int span_dimension(const Camera& camera, const std::vector<HVector>& points) {
  std::vector<Vec> rows{camera.center().coords()};
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != 4) invalid_input("space points have 4 coordinates", point_locus(i));
    if (proj_equal(points[i], camera.center())) invalid_input("point coincides with the camera center", point_locus(i));
    rows.push_back(points[i].coords());
  }
  return static_cast<int>(rank(Matrix::from_rows(rows))) - 1;
}

bool one_view_critical(const Camera& camera, const std::vector<HVector>& points) {
  const int dim = span_dimension(camera, points);
  const int n = static_cast<int>(points.size());
  return n > 1 && dim < n;
}

bool ImageComparison::all_match() const {
  return std::all_of(points.begin(), points.end(), [](const PointMatch& m) { return m.match; });
}

double ImageComparison::max_residual() const {
  double r = 0;
  for (const auto& m : points) r = std::max(r, m.residual);
  return r;
}

std::vector<std::size_t> ImageComparison::mismatches() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!points[i].match) out.push_back(i);
  }
  return out;
}

ImageComparison verify_same_images(const Configuration& a, const Configuration& b) {
  if (a.points().size() != b.points().size()) invalid_input("configurations have different point counts");
  ImageComparison out;
  for (std::size_t i = 0; i < a.points().size(); ++i) {
    out.points.push_back(compare_exact(joint_image(a.pair(), a.points()[i]), joint_image(b.pair(), b.points()[i])));
  }
  return out;
}

ImageComparison verify_same_images(const numeric::Configuration& a, const numeric::Configuration& b, double tolerance) {
  if (a.points.size() != b.points.size()) invalid_input("configurations have different point counts");
  ImageComparison out;
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    const double r1 = numeric::image_residual(a.pair.first * a.points[i], b.pair.first * b.points[i]);
    const double r2 = numeric::image_residual(a.pair.second * a.points[i], b.pair.second * b.points[i]);
    PointMatch m;
    m.residual = std::max(r1, r2);
    m.match = m.residual < tolerance;
    out.points.push_back(m);
  }
  return out;
}

std::string_view to_string(PointStatus status) {
  switch (status) {
    case PointStatus::Ok: return "ok";
    case PointStatus::OnBaseline: return "on-baseline";
    case PointStatus::EpipolarIntersection: return "epipolar-intersection";
    case PointStatus::ConjugateAtCenter: return "conjugate-at-center";
  }
  return "?";
}

std::string_view to_string(RealizationMode mode) {
  return mode == RealizationMode::Exact ? "exact" : "numeric";
}

std::vector<std::size_t> Conjugate::ok_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].status == PointStatus::Ok) out.push_back(i);
  }
  return out;
}

Conjugate conjugate_configuration(const Configuration& config, const BilinearForm& fq) {
  if (fq.rank() != 2) invalid_input("conjugate form must have rank 2", "form");
  const auto s = pullback_quadric(fq, config.pair());
  if (!s) invalid_input("trivial conjugate: the form equals the pair's fundamental form", "form");
  for (std::size_t i = 0; i < config.points().size(); ++i) {
    if (!s->contains(config.points()[i])) invalid_input("point not on critical quadric", point_locus(i));
  }

  Conjugate out;
  out.mode = RealizationMode::Exact;
  out.form = fq;
  out.pair = camera_pair_from_form(fq);
  const CameraPair& q = *out.pair;
  for (const auto& x : config.points()) {
    ConjugatePoint cp;
    if (on_baseline(config.pair(), x)) {
      cp.status = PointStatus::OnBaseline;
    } else {
      const ImagePair images = joint_image(config.pair(), x);
      try {
        HVector y = triangulate(q, images);
        if (is_center(q, y)) {
          cp.status = PointStatus::ConjugateAtCenter;
        } else {
          out.verification.points.push_back(compare_exact(images, joint_image(q, y)));
          cp.exact = std::move(y);
        }
      } catch (const GeometryError& e) {
        if (e.code() != ErrorCode::UndefinedCase) throw;
        cp.status = PointStatus::EpipolarIntersection;
      }
    }
    out.points.push_back(std::move(cp));
  }
  out.verified = out.verification.all_match();
  return out;
}

Conjugate conjugate_configuration(const Configuration& config, const FormPencil& pencil,
                                  const IsolatingInterval& interval, double tolerance) {
  const auto s = pullback_quadric(pencil.generator(), config.pair());
  if (!s) invalid_input("trivial conjugate: the form equals the pair's fundamental form", "form");
  for (std::size_t i = 0; i < config.points().size(); ++i) {
    if (!s->contains(config.points()[i])) invalid_input("point not on critical quadric", point_locus(i));
  }

  Conjugate out;
  out.mode = RealizationMode::Numeric;
  out.interval = interval;
  out.realized = numeric::realize_interval_member(pencil, interval);
  out.numeric_pair = numeric::camera_pair_from_form(out.realized->form);
  const numeric::CameraPair& q = *out.numeric_pair;
  for (const auto& x : config.points()) {
    ConjugatePoint cp;
    if (on_baseline(config.pair(), x)) {
      cp.status = PointStatus::OnBaseline;
      out.points.push_back(std::move(cp));
      continue;
    }
    const ImagePair images = joint_image(config.pair(), x);
    const Eigen::Vector3d u = to_eigen3(images.first);
    const Eigen::Vector3d v = to_eigen3(images.second);
    const auto y = numeric::triangulate(q, u, v);
    if (!y) {
      cp.status = PointStatus::EpipolarIntersection;
    } else if (numeric::near_center(q, *y, tolerance)) {
      cp.status = PointStatus::ConjugateAtCenter;
    } else {
      PointMatch m;
      m.residual = std::max(numeric::image_residual(u, q.first * *y), numeric::image_residual(v, q.second * *y));
      m.match = m.residual < tolerance;
      out.verification.points.push_back(m);
      cp.numeric = *y;
    }
    out.points.push_back(std::move(cp));
  }
  out.verified = out.verification.all_match();
  return out;
}

QuadricConjugates conjugates_of_quadric(const Quadric& quadric, const Configuration& config,
                                        const CriticalityOptions& options) {
  for (std::size_t i = 0; i < config.points().size(); ++i) {
    if (!quadric.contains(config.points()[i])) invalid_input("point not on the quadric", point_locus(i));
  }
  FormPencil pencil = form_line_from_quadric(quadric, config.pair());
  AppendixCase c = classify_pencil(pencil);
  const CriticalClass verdict = criticality_verdict(c);
  QuadricConjugates out{quadric, pencil, c, verdict, {}};
  const Rank2Forms forms = rank2_forms_on_line(pencil, c);
  for (const auto& member : forms.exact) {
    Conjugate q = conjugate_configuration(config, member.form);
    q.parameter = std::make_pair(member.alpha, member.beta);
    out.conjugates.push_back(std::move(q));
  }
  for (const auto& interval : forms.intervals) {
    out.conjugates.push_back(conjugate_configuration(config, pencil, interval, options.tolerance));
  }
  if (forms.family) {
    for (const auto& member : forms.family->sample(options.samples, options.seed)) {
      Conjugate q = conjugate_configuration(config, member.form);
      q.parameter = std::make_pair(member.alpha, member.beta);
      out.conjugates.push_back(std::move(q));
    }
  }
  return out;
}

std::string_view to_string(Criticality c) {
  switch (c) {
    case Criticality::Critical: return "critical";
    case Criticality::NotCritical: return "not-critical";
    case Criticality::Undetermined: return "undetermined";
  }
  return "?";
}

namespace {

// Fixed grid of combinations of a family basis.
std::vector<Quadric> sampled_family(const std::vector<Quadric>& basis) {
  std::vector<Quadric> out = basis;
  for (int k = 0; k < 20; ++k) {
    Matrix m(4, 4);
    bool any = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const int c = static_cast<int>(((k + 1) * (i + 1) * (i + 2) + 3 * k) % 7) - 3;
      if (c == 0) continue;
      any = true;
      m = m + Rational(c) * basis[i].matrix();
    }
    if (any && !m.is_zero()) out.emplace_back(std::move(m));
  }
  return out;
}

}  // namespace

ConjugateReport is_critical(const Configuration& config, const CriticalityOptions& options) {
  ConjugateReport report{config, Criticality::NotCritical, 0, {}, std::nullopt, false, {}};
  const CameraPair& pair = config.pair();
  report.family = quadrics_through(config.points(), {pair.first().center(), pair.second().center()});
  report.family_dimension = report.family.size();
  report.trivial_flag = !config.points().empty() &&
                        std::all_of(config.points().begin(), config.points().end(),
                                    [&](const HVector& x) { return on_baseline(pair, x); });

  if (report.family.empty()) {
    report.status = Criticality::NotCritical;
    return report;
  }
  const auto candidates = report.family.size() == 1 ? report.family : sampled_family(report.family);
  std::optional<QuadricConjugates> first;
  for (const auto& s : candidates) {
    const FormPencil pencil = form_line_from_quadric(s, pair);
    const AppendixCase c = classify_pencil(pencil);
    if (criticality_verdict(c).critical()) {
      report.witness = conjugates_of_quadric(s, config, options);
      report.status = Criticality::Critical;
      break;
    }
    if (!first) first = QuadricConjugates{s, pencil, c, criticality_verdict(c), {}};
  }
  if (!report.witness) {
    report.witness = std::move(first);
    report.status = report.family.size() == 1 ? Criticality::NotCritical : Criticality::Undetermined;
    if (report.status == Criticality::Undetermined) {
      report.warnings.push_back("no witness found in sampled family of quadrics");
    }
    return report;
  }

  for (std::size_t i = 0; i < config.points().size(); ++i) {
    if (on_baseline(pair, config.points()[i])) {
      report.warnings.push_back(point_locus(i) + ": on the baseline, conjugate not unique");
    }
  }
  const auto& conjugates = report.witness->conjugates;
  for (std::size_t k = 0; k < conjugates.size(); ++k) {
    for (std::size_t i = 0; i < conjugates[k].points.size(); ++i) {
      const PointStatus st = conjugates[k].points[i].status;
      if (st == PointStatus::Ok || st == PointStatus::OnBaseline) continue;
      report.warnings.push_back(point_locus(i) + ": " + std::string(to_string(st)) + " in conjugate " +
                                std::to_string(k));
    }
  }
  return report;
}

}  // namespace critconf
