#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "critconf/criticality.hpp"
#include "critconf/linalg.hpp"
#include "critconf/polynomial.hpp"
#include "oracle.hpp"

using namespace critconf;

namespace {

constexpr int kCases = 200;

// Rank as the size of the largest nonvanishing minor (Laplace expansion).
Rational minor_det(const Matrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  if (rows.size() == 1) return m(rows[0], cols[0]);
  Rational sum;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    std::vector<std::size_t> sub_cols;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (k != j) sub_cols.push_back(cols[k]);
    }
    const Rational term = m(rows[0], cols[j]) * minor_det(m, sub_rows, sub_cols);
    sum += (j % 2 == 0) ? term : -term;
  }
  return sum;
}

bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::size_t brute_force_rank(const Matrix& m) {
  for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
    std::vector<std::size_t> rows(k);
    std::iota(rows.begin(), rows.end(), 0);
    do {
      std::vector<std::size_t> cols(k);
      std::iota(cols.begin(), cols.end(), 0);
      do {
        if (!minor_det(m, rows, cols).is_zero()) return k;
      } while (next_subset(cols, m.cols()));
    } while (next_subset(rows, m.rows()));
  }
  return 0;
}

TEST_CASE("rank agrees with the minor oracle and is scale invariant") {
  testing::Sampler s(101);
  for (int i = 0; i < kCases; ++i) {
    const std::size_t r = static_cast<std::size_t>(s.integer(1, 4));
    const std::size_t c = static_cast<std::size_t>(s.integer(1, 4));
    // low-rank products make degenerate cases common
    const std::size_t k = static_cast<std::size_t>(s.integer(0, 3));
    Matrix m = k == 0 ? Matrix(r, c) : s.integer_matrix(r, k, -3, 3) * s.integer_matrix(k, c, -3, 3);
    const std::size_t expected = brute_force_rank(m);
    CHECK(rank(m) == expected);
    CHECK(rank(s.rational(7, 5).is_zero() ? m : Rational(-3, 7) * m) == expected);
  }
}

TEST_CASE("nullspace vectors are killed and counted by the rank") {
  testing::Sampler s(102);
  for (int i = 0; i < kCases; ++i) {
    const std::size_t r = static_cast<std::size_t>(s.integer(1, 4));
    const std::size_t c = static_cast<std::size_t>(s.integer(2, 6));
    const std::size_t k = static_cast<std::size_t>(s.integer(1, 3));
    const Matrix m = s.integer_matrix(r, k, -3, 3) * s.integer_matrix(k, c, -3, 3);
    const auto basis = nullspace(m);
    CHECK(basis.size() == c - rank(m));
    for (const auto& v : basis) {
      CHECK(is_zero(m * std::span<const Rational>(v)));
      const auto first = std::find_if(v.begin(), v.end(), [](const Rational& x) { return !x.is_zero(); });
      REQUIRE(first != v.end());
      CHECK(*first == Rational(1));
    }
  }
}

TEST_CASE("proj_equal is an equivalence relation") {
  testing::Sampler s(103);
  for (int i = 0; i < kCases; ++i) {
    const HVector u = s.point(4, 2);
    Rational a = s.rational(5, 3);
    Rational b = s.rational(5, 3);
    if (a.is_zero()) a = 1;
    if (b.is_zero()) b = -2;
    const HVector v(scaled(u, a));
    const HVector w(scaled(v, b));
    CHECK(proj_equal(u, u));
    CHECK(proj_equal(u, v) == proj_equal(v, u));
    CHECK(proj_equal(u, w));
    const HVector x = s.point(4, 2);
    CHECK(proj_equal(u, x) == proj_equal(x, u));
    if (proj_equal(u, x)) CHECK(proj_equal(w, x));
  }
}

TEST_CASE("root profiles: multiplicities sum to the degree and swap symmetrically") {
  testing::Sampler s(104);
  for (int i = 0; i < kCases; ++i) {
    // products of small linear and quadratic factors produce every multiplicity pattern
    std::array<Rational, 4> c;
    const int shape = s.integer(0, 3);
    Polynomial p;
    const Polynomial l1(Vec{s.integer(-3, 3), s.integer(-3, 3)});
    const Polynomial l2(Vec{s.integer(-3, 3), s.integer(-3, 3)});
    const Polynomial l3(Vec{s.integer(-3, 3), s.integer(-3, 3)});
    const Polynomial q(Vec{s.integer(-4, 4), s.integer(-4, 4), s.integer(-4, 4)});
    switch (shape) {
      case 0: p = l1 * l2 * l3; break;
      case 1: p = l1 * q; break;
      case 2: p = l1 * l1 * l2; break;
      default: p = Polynomial(Vec{s.integer(-9, 9), s.integer(-9, 9), s.integer(-9, 9), s.integer(-9, 9)});
    }
    if (p.is_zero()) continue;
    for (int k = 0; k < 4; ++k) c[static_cast<std::size_t>(3 - k)] = p.coeff(k);
    const auto prof = cubic_root_profile(c);
    REQUIRE(prof);
    int total = 2 * prof->complex_pairs;
    for (const auto& r : prof->roots) total += r.multiplicity;
    CHECK(total == 3);
    CHECK(prof->real_simple + 2 * prof->real_double + 3 * prof->real_triple + 2 * prof->complex_pairs == 3);

    const auto swapped = cubic_root_profile({c[3], c[2], c[1], c[0]});
    REQUIRE(swapped);
    CHECK(swapped->real_simple == prof->real_simple);
    CHECK(swapped->real_double == prof->real_double);
    CHECK(swapped->real_triple == prof->real_triple);
    CHECK(swapped->complex_pairs == prof->complex_pairs);
    // exact roots map (a:b) -> (b:a)
    for (const auto& r : prof->roots) {
      if (!r.exact) continue;
      const bool found = std::any_of(swapped->roots.begin(), swapped->roots.end(), [&](const ProjectiveRoot& t) {
        return t.exact && t.multiplicity == r.multiplicity && (t.alpha * r.alpha == t.beta * r.beta) &&
               !(t.alpha.is_zero() && t.beta.is_zero());
      });
      CHECK(found);
    }
    // each exact root is a root; each interval brackets a sign change
    const BinaryForm f = BinaryForm::from_high_first(Vec(c.begin(), c.end()));
    for (const auto& r : prof->roots) {
      if (r.exact) {
        CHECK(f(r.alpha, r.beta).is_zero());
      } else {
        CHECK(f(r.interval.lo, 1).sign() * f(r.interval.hi, 1).sign() <= 0);
      }
    }
  }
}

TEST_CASE("one-view criticality matches the rank oracle") {
  testing::Sampler s(105);
  int checked = 0;
  while (checked < kCases) {
    const Camera cam = s.camera();
    const int n = s.integer(1, 5);
    // points drawn from a random low-dimensional subspace through the center half the time
    const int dim = s.integer(1, 4);
    std::vector<HVector> span{cam.center()};
    for (int k = 1; k < dim; ++k) span.push_back(s.point(4, 3));
    std::vector<HVector> pts;
    for (int k = 0; k < n; ++k) {
      if (s.integer(0, 1) == 0) {
        pts.push_back(s.point(4, 3));
        continue;
      }
      Vec v(4);
      for (const auto& b : span) {
        const Rational c(s.integer(-3, 3));
        for (std::size_t j = 0; j < 4; ++j) v[j] += c * b[j];
      }
      if (is_zero(v)) v = s.point(4, 3).coords();
      pts.emplace_back(std::move(v));
    }
    if (std::any_of(pts.begin(), pts.end(), [&](const HVector& p) { return proj_equal(p, cam.center()); })) continue;
    std::vector<Vec> rows{cam.center().coords()};
    for (const auto& p : pts) rows.push_back(p.coords());
    const bool expected = n > 1 && brute_force_rank(Matrix::from_rows(rows)) <= static_cast<std::size_t>(n);
    CHECK(one_view_critical(cam, pts) == expected);
    // adding a point inside the span keeps a critical set critical
    if (expected) {
      Vec v(4);
      for (const auto& p : pts) {
        const Rational c(s.integer(-2, 2));
        for (std::size_t j = 0; j < 4; ++j) v[j] += c * p[j];
      }
      if (!is_zero(v) && !proj_equal(HVector(v), cam.center())) {
        auto more = pts;
        more.emplace_back(v);
        CHECK(one_view_critical(cam, more));
      }
    }
    ++checked;
  }
}
