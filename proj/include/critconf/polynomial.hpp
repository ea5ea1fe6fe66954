#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "critconf/linalg.hpp"
#include "critconf/rational.hpp"

namespace critconf {

/// Univariate polynomial over Q, coefficients stored low degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Vec coeffs);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Rational coeff(int i) const;
  const Rational& leading() const { return coeffs_.back(); }
  const Vec& coeffs() const noexcept { return coeffs_; }

  Rational operator()(const Rational& t) const;
  long double eval(long double t) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Quotient and remainder; divisor must be nonzero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

  std::string str() const;

 private:
  void trim();
  Vec coeffs_;
};

/// Monic gcd (zero if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Yun's square-free decomposition: f = c * prod g_i^i with square-free, pairwise coprime g_i.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f);

std::vector<Polynomial> sturm_sequence(const Polynomial& p);
/// Sign changes of the sequence evaluated at x (zeros skipped).
int sign_variations(const std::vector<Polynomial>& seq, const Rational& x);

/// Open interval (lo, hi) holding exactly one root.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
};

/// Real roots of a square-free polynomial. Exact roots come back with lo == hi.
std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& squarefree, const Rational& width);

/// Homogeneous polynomial in (alpha:beta), term k is a_k * alpha^k * beta^(d-k).
class BinaryForm {
 public:
  BinaryForm(int degree, Polynomial dehomogenized);
  /// Coefficients ordered alpha^d, alpha^(d-1) beta, ..., beta^d.
  static BinaryForm from_high_first(const Vec& coeffs);
  /// Recovers the form of the given degree from its values (exact interpolation).
  static BinaryForm interpolate(int degree,
                                const std::function<Rational(const Rational&, const Rational&)>& f);

  int degree() const noexcept { return degree_; }
  bool is_zero() const noexcept { return dehom_.is_zero(); }
  /// p(t, 1) with t = alpha / beta.
  const Polynomial& dehomogenized() const noexcept { return dehom_; }
  /// Multiplicity of the root (1:0), i.e. beta = 0.
  int multiplicity_at_infinity() const;
  Rational operator()(const Rational& alpha, const Rational& beta) const;
  /// p(beta, alpha).
  BinaryForm swapped() const;
  Vec high_first() const;

 private:
  int degree_;
  Polynomial dehom_;
};

/// Gcd of binary forms, as a form of degree = number of common roots with multiplicity.
BinaryForm gcd(const BinaryForm& a, const BinaryForm& b);

/// A real root (alpha:beta) of a binary form.
struct ProjectiveRoot {
  bool exact = true;
  /// Exact root, normalized to (t:1) or (1:0).
  Rational alpha;
  Rational beta;
  /// Irrational root: t = alpha/beta lies in this interval (beta = 1).
  IsolatingInterval interval;
  int multiplicity = 1;

  bool at_infinity() const { return exact && beta.is_zero(); }
  std::string str() const;
};

struct RootProfile {
  int degree = 0;
  int real_simple = 0;
  int real_double = 0;
  int real_triple = 0;
  int complex_pairs = 0;
  /// Real roots, ordered by t = alpha/beta with (1:0) last.
  std::vector<ProjectiveRoot> roots;

  int real_root_count() const { return static_cast<int>(roots.size()); }
};

inline const Rational& default_isolation_width() {
  static const Rational w = pow2(-64);
  return w;
}

/// Root profile of a nonzero form of degree <= 3; nullopt when the form is identically zero.
std::optional<RootProfile> root_profile(const BinaryForm& p,
                                        const Rational& width = default_isolation_width());

/// Coefficients ordered alpha^3, alpha^2 beta, alpha beta^2, beta^3.
std::optional<RootProfile> cubic_root_profile(const std::array<Rational, 4>& coeffs,
                                              const Rational& width = default_isolation_width());

}  // namespace critconf
