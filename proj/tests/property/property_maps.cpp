#include <doctest.h>

#include "critconf/conjugate_maps.hpp"
#include "critconf/error.hpp"
#include "oracle.hpp"

using namespace critconf;

namespace {
constexpr int kCases = 200;
}

TEST_CASE("quadric curve map is an involution on its domain") {
  testing::Sampler s(401);
  int checked = 0;
  while (checked < kCases) {
    const CurveTypeQC t{s.integer(0, 6), s.integer(0, 6), s.integer(0, 4), s.integer(0, 4)};
    CurveTypeQC image;
    try {
      image = curve_type_conjugate_quadric(t);
    } catch (const GeometryError&) {
      CHECK((t.a + t.b - t.c1 - t.c2 < 0 || t.a < t.c1 || t.a < t.c2));
      continue;
    }
    CHECK(curve_type_conjugate_quadric(image) == t);
    ++checked;
  }
}

TEST_CASE("plane-pair curve map is an involution on its domain") {
  testing::Sampler s(402);
  int checked = 0;
  while (checked < kCases) {
    const CurveTypePlanes t{s.integer(0, 6), s.integer(0, 6), s.integer(0, 3), s.integer(0, 3), s.integer(0, 3)};
    CurveTypePlanes image;
    try {
      image = curve_type_conjugate_planes(t);
    } catch (const GeometryError&) {
      continue;
    }
    CHECK(curve_type_conjugate_planes(image) == t);
    ++checked;
  }
}

TEST_CASE("pairings are symmetric and bilinear") {
  testing::Sampler s(403);
  for (int i = 0; i < kCases; ++i) {
    const auto c = static_cast<SurfaceCase>(s.integer(0, 2));
    DivisorClass x{c, {s.integer(-4, 4), s.integer(-4, 4), s.integer(-4, 4), s.integer(-4, 4)}};
    DivisorClass y{c, {s.integer(-4, 4), s.integer(-4, 4), s.integer(-4, 4), s.integer(-4, 4)}};
    DivisorClass sum{c, {}};
    for (std::size_t k = 0; k < 4; ++k) sum.coeffs[k] = x.coeffs[k] + y.coeffs[k];
    const DivisorClass h = hyperplane_class(c);
    CHECK(pairing(x, y) == pairing(y, x));
    CHECK(pairing(h, sum) == pairing(h, x) + pairing(h, y));
  }
}

TEST_CASE("epipolar lines pass through the center") {
  testing::Sampler s(404);
  for (int i = 0; i < kCases; ++i) {
    const Camera cam = s.camera();
    const HVector e = s.point(3);
    const SpaceLine g = epipolar_line(cam, e);
    CHECK(g.contains(cam.center()));
    const auto [a, b] = g.points();
    // every point of the line projects to e (or is the center)
    for (const auto* p : {&a, &b}) {
      const Vec img = cam.matrix() * *p;
      if (!is_zero(img)) CHECK(proj_equal(HVector(img), e));
    }
  }
}
