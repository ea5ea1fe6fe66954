#include <doctest.h>

#include "critconf/error.hpp"
#include "critconf/fundamental.hpp"
#include "oracle.hpp"

using namespace critconf;

TEST_CASE("canonical fundamental form") {
  const BilinearForm f = fundamental_form(canonical_pair());
  CHECK(f.matrix() == testing::canonical_fp());
  CHECK(f.rank() == 2);
}

TEST_CASE("fundamental form annihilates joint images") {
  testing::Sampler s(5);
  for (int trial = 0; trial < 5; ++trial) {
    const CameraPair pair = s.camera_pair();
    const BilinearForm f = fundamental_form(pair);
    CHECK(f.rank() == 2);
    int tested = 0;
    while (tested < 20) {
      const HVector x = s.point(4);
      if (is_center(pair, x)) continue;
      const auto [u, v] = joint_image(pair, x);
      CHECK(f(u, v).is_zero());
      ++tested;
    }
  }
}

TEST_CASE("epipoles") {
  const CameraPair pair = canonical_pair();
  const Epipole e12 = epipole(pair, 1, 2);
  CHECK(e12.point.coords() == Vec{0, 0, 1});
  CHECK(e12.which_image == 1);
  CHECK(e12.which_center == 2);
  CHECK(epipole(pair, 2, 1).point.coords() == Vec{0, 0, 1});
  CHECK_THROWS_AS(epipole(pair, 1, 1), GeometryError);

  const BilinearForm f = fundamental_form(pair);
  CHECK(is_zero(f.matrix() * epipole(pair, 2, 1).point));
  CHECK(is_zero(f.matrix().transpose() * epipole(pair, 1, 2).point));
}

TEST_CASE("epipoles span the kernels for random pairs") {
  testing::Sampler s(8);
  for (int trial = 0; trial < 20; ++trial) {
    const CameraPair pair = s.camera_pair();
    const BilinearForm f = fundamental_form(pair);
    CHECK(proj_equal(HVector(f.left_kernel().front()), epipole(pair, 1, 2).point));
    CHECK(proj_equal(HVector(f.right_kernel().front()), epipole(pair, 2, 1).point));
  }
}

TEST_CASE("trivial conjugates") {
  const BilinearForm f(testing::canonical_fp());
  CHECK(is_trivial_conjugate(f, BilinearForm(Rational(7) * f.matrix())));
  CHECK_FALSE(is_trivial_conjugate(f, BilinearForm(Matrix{{0, 0, 0}, {1, 0, 0}, {0, 0, 1}})));
  Matrix nudged = f.matrix();
  nudged(2, 2) = Rational(1, 1000000007);
  CHECK_FALSE(is_trivial_conjugate(f, BilinearForm(nudged)));
  CHECK_THROWS_AS(BilinearForm(Matrix(3, 3)), GeometryError);
}

TEST_CASE("fundamental form under the PGL(4) action") {
  testing::Sampler s(9);
  for (int trial = 0; trial < 10; ++trial) {
    const CameraPair pair = s.camera_pair();
    const Matrix h = s.invertible(4);
    const CameraPair moved(Camera(pair.first().matrix() * h), Camera(pair.second().matrix() * h));
    CHECK(proj_equal(fundamental_form(pair), fundamental_form(moved)));
  }
}
