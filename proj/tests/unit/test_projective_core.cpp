#include <doctest.h>

#include "critconf/error.hpp"
#include "critconf/linalg.hpp"
#include "critconf/polynomial.hpp"

using namespace critconf;

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational::parse("10/4").str() == "5/2");
  CHECK(Rational::parse("-1.25") == Rational(-5, 4));
  CHECK(Rational::parse("3e-2") == Rational(3, 100));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::from_double(0.1) != Rational(1, 10));
  CHECK(Rational::from_double(0.375) == Rational(3, 8));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("abc"));
  CHECK_THROWS(Rational(1) / Rational(0));
  CHECK(pow2(-3) == Rational(1, 8));
  CHECK(Rational(1, 3).to_long_double() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("proj_equal") {
  CHECK(proj_equal(HVector{1, 2, 3}, HVector{2, 4, 6}));
  CHECK_FALSE(proj_equal(HVector{1, 0, 0}, HVector{0, 1, 0}));
  CHECK(proj_equal(HVector{0, 0, 1, 0}, HVector{0, 0, -5, 0}));
  CHECK_THROWS_AS(HVector({0, 0, 0}), GeometryError);
}

TEST_CASE("rank") {
  CHECK(rank(Matrix{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}) == 2);
  CHECK(rank(Matrix::identity(3)) == 3);
  CHECK(rank(Matrix(3, 3)) == 0);
  CHECK(rank(Matrix{{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 0, 0, 1}}) == 2);
  CHECK(determinant(Matrix{{2, 1}, {7, 4}}) == Rational(1));
  CHECK(determinant(Matrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}) == Rational(1));
}

TEST_CASE("nullspace") {
  const auto k = nullspace(Matrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
  REQUIRE(k.size() == 1);
  CHECK(k[0] == Vec{0, 0, 1, 0});
  CHECK(nullspace(Matrix::identity(3)).empty());
  const auto r = nullspace(Matrix{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}});
  REQUIRE(r.size() == 1);
  CHECK(r[0] == Vec{0, 0, 1});
  const auto scaled = nullspace(Matrix{{2, 4, 6}});
  REQUIRE(scaled.size() == 2);
  for (const auto& v : scaled) {
    CHECK(dot(v, Vec{2, 4, 6}).is_zero());
    CHECK(v[0] == Rational(1));
  }
}

TEST_CASE("cross_matrix") {
  const Vec v{1, 2, 3};
  const Vec w{-4, 0, 5};
  CHECK(cross_matrix(v) * std::span<const Rational>(w) == cross(v, w));
}

TEST_CASE("cubic_root_profile: row 1 cubic") {
  // -a^2 b + a b^2
  const auto p = cubic_root_profile({0, -1, 1, 0});
  REQUIRE(p);
  CHECK(p->real_simple == 3);
  CHECK(p->complex_pairs == 0);
  REQUIRE(p->roots.size() == 3);
  for (const auto& r : p->roots) CHECK(r.exact);
  CHECK(p->roots[0].alpha == Rational(0));
  CHECK(p->roots[1].alpha == Rational(1));
  CHECK(p->roots[1].beta == Rational(1));
  CHECK(p->roots[2].at_infinity());
}

TEST_CASE("cubic_root_profile: triple and complex pair") {
  const auto triple = cubic_root_profile({1, 0, 0, 0});
  REQUIRE(triple);
  CHECK(triple->real_triple == 1);
  CHECK(triple->roots.size() == 1);
  CHECK(triple->roots[0].multiplicity == 3);
  CHECK(triple->roots[0].alpha == Rational(0));

  // a (a^2 + b^2)
  const auto mixed = cubic_root_profile({1, 0, 1, 0});
  REQUIRE(mixed);
  CHECK(mixed->real_simple == 1);
  CHECK(mixed->complex_pairs == 1);
  CHECK(mixed->roots.size() == 1);
}

TEST_CASE("cubic_root_profile: zero form is the line-in-locus sentinel") {
  CHECK_FALSE(cubic_root_profile({0, 0, 0, 0}).has_value());
}

TEST_CASE("cubic_root_profile: irrational roots isolate") {
  // t^3 - 2t, roots 0 and +-sqrt(2)
  const auto p = cubic_root_profile({1, 0, -2, 0});
  REQUIRE(p);
  CHECK(p->real_simple == 3);
  int intervals = 0;
  for (const auto& r : p->roots) {
    if (r.exact) continue;
    ++intervals;
    const Rational& lo = r.interval.lo;
    const Rational& hi = r.interval.hi;
    if (lo.sign() > 0) {
      CHECK(lo * lo < Rational(2));
      CHECK(hi * hi > Rational(2));
    } else {
      CHECK(hi * hi < Rational(2));
      CHECK(lo * lo > Rational(2));
    }
    CHECK(r.interval.hi - r.interval.lo <= default_isolation_width());
  }
  CHECK(intervals == 2);
}

TEST_CASE("cubic_root_profile: rational roots with large denominators are exact") {
  // (7a - 3b)(11a + 5b) b
  const Polynomial f = Polynomial(Vec{-3, 7}) * Polynomial(Vec{5, 11});
  const BinaryForm form(3, f);
  const auto p = root_profile(form);
  REQUIRE(p);
  CHECK(p->real_simple == 3);
  bool seen37 = false, seen511 = false;
  for (const auto& r : p->roots) {
    REQUIRE(r.exact);
    seen37 = seen37 || r.alpha == Rational(3, 7);
    seen511 = seen511 || r.alpha == Rational(-5, 11);
  }
  CHECK(seen37);
  CHECK(seen511);
}

TEST_CASE("binary forms") {
  const BinaryForm f = BinaryForm::from_high_first({1, -3, 2, 0});
  CHECK(f.multiplicity_at_infinity() == 0);
  CHECK(f(Rational(1), Rational(1)) == Rational(0));
  CHECK(f(Rational(2), Rational(1)) == Rational(0));
  CHECK(f.swapped().high_first() == Vec{0, 2, -3, 1});
  const BinaryForm g = BinaryForm::from_high_first({0, 1, -1});
  CHECK(g.multiplicity_at_infinity() == 1);
  const BinaryForm d = gcd(BinaryForm::from_high_first({0, 0, 1}), BinaryForm::from_high_first({0, 1, 0}));
  CHECK(d.degree() == 1);
  CHECK(d(Rational(1), Rational(0)) == Rational(0));
}

TEST_CASE("squarefree decomposition") {
  // (t - 1)^2 (t + 2)
  const Polynomial f = Polynomial(Vec{-1, 1}) * Polynomial(Vec{-1, 1}) * Polynomial(Vec{2, 1});
  const auto parts = squarefree_decomposition(f);
  int total = 0;
  for (const auto& [g, m] : parts) total += g.degree() * m;
  CHECK(total == 3);
}
