#include <doctest.h>

#include <algorithm>

#include "critconf/conjugate_maps.hpp"
#include "critconf/criticality.hpp"
#include "oracle.hpp"

using namespace critconf;

namespace {

constexpr int kCases = 200;

struct Fixture {
  CameraPair pair;
  Quadric quadric;
  std::vector<HVector> points;
};

// Points on the pullback of a random form, in a random frame.
std::optional<Fixture> random_fixture(testing::Sampler& s, std::size_t n) {
  const CameraPair pair = s.integer(0, 2) == 0 ? canonical_pair() : s.camera_pair();
  const BilinearForm fp = fundamental_form(pair);
  Matrix f0 = s.form(-1, 1);
  if (s.integer(0, 2) == 0) f0 = s.form(-3, 3);
  if (proj_equal(f0, fp.matrix())) return std::nullopt;
  const auto q = pullback_quadric(BilinearForm(f0), pair);
  if (!q) return std::nullopt;
  const std::vector<HVector> centers{pair.first().center(), pair.second().center()};
  auto pts = s.points_on(*q, centers, n, centers);
  if (pts.size() != n) return std::nullopt;
  return Fixture{pair, *q, std::move(pts)};
}

Matrix times_inverse_points(const Matrix& h, const HVector& x) {
  // solve h y = x
  Matrix aug(4, 5);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) aug(r, c) = h(r, c);
    aug(r, 4) = -x[r];
  }
  const auto k = nullspace(aug);
  Matrix y(4, 1);
  const Vec& v = k.front();
  for (std::size_t i = 0; i < 4; ++i) y(i, 0) = v[i] / v[4];
  return y;
}

struct Summary {
  Criticality status;
  std::optional<QuadricKind> kind;
  std::size_t conjugates;
};

Summary summarize(const ConjugateReport& r) {
  Summary out{r.status, std::nullopt, 0};
  if (r.witness) {
    out.kind = r.witness->verdict.kind;
    out.conjugates = r.witness->conjugates.size();
  }
  return out;
}

}  // namespace

TEST_CASE("is_critical is invariant under permutation, PGL(4) and left factors") {
  testing::Sampler s(301);
  int checked = 0;
  int critical = 0;
  while (checked < kCases) {
    auto fx = random_fixture(s, 8);
    if (!fx) continue;
    const Configuration config(fx->pair, fx->points);
    const ConjugateReport base = is_critical(config);
    if (base.family_dimension != 1) continue;
    const Summary a = summarize(base);
    critical += base.critical() ? 1 : 0;

    auto shuffled = fx->points;
    std::shuffle(shuffled.begin(), shuffled.end(), s.engine());
    const Summary b = summarize(is_critical(Configuration(fx->pair, shuffled)));
    CHECK(b.status == a.status);
    CHECK(b.kind == a.kind);
    CHECK(b.conjugates == a.conjugates);

    const Matrix h = s.invertible(4);
    std::vector<HVector> moved;
    for (const auto& x : fx->points) moved.emplace_back(times_inverse_points(h, x).col(0));
    const CameraPair moved_pair(Camera(fx->pair.first().matrix() * h), Camera(fx->pair.second().matrix() * h));
    const Summary c = summarize(is_critical(Configuration(moved_pair, moved)));
    CHECK(c.status == a.status);
    CHECK(c.kind == a.kind);
    CHECK(c.conjugates == a.conjugates);

    const CameraPair left(Camera(s.invertible(3) * fx->pair.first().matrix()),
                          Camera(s.invertible(3) * fx->pair.second().matrix()));
    const Summary d = summarize(is_critical(Configuration(left, fx->points)));
    CHECK(d.status == a.status);
    CHECK(d.kind == a.kind);
    CHECK(d.conjugates == a.conjugates);
    ++checked;
  }
  MESSAGE("critical fixtures: " << critical << " of " << checked);
  CHECK(critical > kCases / 4);
}

TEST_CASE("conjugate counts, verification and conjugate kinds") {
  testing::Sampler s(302);
  int checked = 0;
  while (checked < kCases) {
    auto fx = random_fixture(s, 9);
    if (!fx) continue;
    const Configuration config(fx->pair, fx->points);
    const QuadricConjugates qc = conjugates_of_quadric(fx->quadric, config, {5, static_cast<std::uint64_t>(checked), 1e-9});
    const CriticalClass v = qc.verdict;
    switch (v.conjugate_count) {
      case ConjugateCount::Zero: CHECK(qc.conjugates.empty()); break;
      case ConjugateCount::One: CHECK(qc.conjugates.size() == 1); break;
      case ConjugateCount::Two: CHECK(qc.conjugates.size() == 2); break;
      case ConjugateCount::Infinite: CHECK(qc.conjugates.size() == 5); break;
    }
    const BilinearForm fp = fundamental_form(fx->pair);
    for (std::size_t k = 0; k < qc.conjugates.size(); ++k) {
      const Conjugate& q = qc.conjugates[k];
      CHECK(q.verified);
      if (q.mode == RealizationMode::Numeric) {
        CHECK(q.verification.max_residual() < 1e-9);
        continue;
      }
      CHECK_FALSE(proj_equal(*q.form, fp));
      for (std::size_t j = k + 1; j < qc.conjugates.size(); ++j) {
        if (qc.conjugates[j].form) CHECK_FALSE(proj_equal(*q.form, *qc.conjugates[j].form));
      }
      // the conjugate quadric is the pullback of F_P through the conjugate cameras
      const auto sq = pullback_quadric(fp, *q.pair);
      REQUIRE(sq);
      const QuadricKind kind = testing::geometric_kind(*sq, q.pair->first().center(), q.pair->second().center());
      CHECK(v.conjugate_kind == kind);
      // a singular S_P forces the conjugate baseline onto S_Q
      if (fx->quadric.rank() < 4) {
        CHECK(sq->contains(q.pair->first().center()));
        CHECK(bilinear(q.pair->first().center(), sq->matrix(), q.pair->second().center()).is_zero());
      }
      // epipolar lines of the conjugate lie on S_P
      const auto [g12, g21] = epipolar_lines(fx->pair, *q.form);
      CHECK(g12.lies_on(fx->quadric));
      CHECK(g21.lies_on(fx->quadric));
    }
    ++checked;
  }
}
