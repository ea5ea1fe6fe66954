#include <doctest.h>

#include "critconf/camera.hpp"
#include "critconf/error.hpp"
#include "critconf/fundamental.hpp"
#include "oracle.hpp"

using namespace critconf;

TEST_CASE("centers of the canonical cameras") {
  const CameraPair pair = canonical_pair();
  CHECK(center(pair.first()).coords() == Vec{0, 0, 0, 1});
  CHECK(center(pair.second()).coords() == Vec{0, 0, 1, 0});
  const Matrix a{{2, 1, 0}, {0, 1, 0}, {1, 0, 3}};
  CHECK(proj_equal(Camera(a * pair.first().matrix()).center(), HVector{0, 0, 0, 1}));
}

TEST_CASE("camera validation") {
  CHECK_THROWS_AS(Camera(Matrix{{1, 0, 0, 0}, {2, 0, 0, 0}, {0, 0, 1, 0}}), GeometryError);
  CHECK_THROWS_AS(Camera(Matrix::identity(3)), GeometryError);
  const Camera p(Matrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
  CHECK_THROWS_AS(CameraPair(p, Camera(Matrix{{2, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}})), GeometryError);
}

TEST_CASE("projection") {
  const CameraPair pair = canonical_pair();
  CHECK(project(pair.first(), HVector{1, 2, 3, 4}).coords() == Vec{1, 2, 3});
  CHECK(project(pair.second(), HVector{1, -1, 1, 1}).coords() == Vec{1, -1, 1});
  try {
    project(pair.first(), HVector{0, 0, 0, 1});
    FAIL("projection at the center must fail");
  } catch (const GeometryError& e) {
    CHECK(e.code() == ErrorCode::UndefinedCase);
  }
}

TEST_CASE("joint image") {
  const CameraPair pair = canonical_pair();
  const auto [x, y] = joint_image(pair, HVector{1, -1, 1, 1});
  CHECK(x.coords() == Vec{1, -1, 1});
  CHECK(y.coords() == Vec{1, -1, 1});
  CHECK_THROWS_AS(joint_image(pair, HVector{0, 0, 0, 1}), GeometryError);
  // on the baseline but not a center: defined, both images are epipoles
  const auto [u, v] = joint_image(pair, HVector{0, 0, 1, 1});
  CHECK(proj_equal(u, HVector{0, 0, 1}));
  CHECK(proj_equal(v, HVector{0, 0, 1}));
  CHECK(on_baseline(pair, HVector{0, 0, 3, -2}));
  CHECK_FALSE(on_baseline(pair, HVector{1, 0, 3, -2}));
}

TEST_CASE("camera_pair_from_form") {
  const BilinearForm fp(testing::canonical_fp());
  const CameraPair pair = camera_pair_from_form(fp);
  CHECK(pair.first().matrix() == Matrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
  CHECK(proj_equal(fundamental_form(pair), fp));
  CHECK_FALSE(proj_equal(pair.first().center(), pair.second().center()));
  CHECK_THROWS_AS(camera_pair_from_form(BilinearForm(Matrix::identity(3))), GeometryError);
  CHECK_THROWS_AS(camera_pair_from_form(BilinearForm(Matrix{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}})), GeometryError);
}

TEST_CASE("camera_pair_from_form roundtrip on random rank-2 forms") {
  testing::Sampler s(11);
  int checked = 0;
  while (checked < 50) {
    const Matrix m = s.form(-3, 3);
    if (rank(m) != 2) continue;
    const BilinearForm f(m);
    CHECK(proj_equal(fundamental_form(camera_pair_from_form(f)), f));
    ++checked;
  }
}
