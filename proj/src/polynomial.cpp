#include "critconf/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "critconf/error.hpp"

namespace critconf {

Polynomial::Polynomial(Vec coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

long double Polynomial::eval(long double t) const {
  long double acc = 0.0L;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->to_long_double();
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (degree() < 1) return {};
  Vec d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return (Rational(1) / leading()) * *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Vec out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Rational(-1) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Vec out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  Vec out = p.coeffs_;
  for (auto& c : out) c *= s;
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) invalid_input("polynomial division by zero");
  Vec rem = a.coeffs_;
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  Vec quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Rational lead_inv = Rational(1) / b.leading();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + b.degree())] * lead_inv;
    quot[static_cast<std::size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= b.degree(); ++j) {
      rem[static_cast<std::size_t>(k + j)] -= q * b.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    os << (first ? "" : " + ") << "(" << c << ")";
    if (i > 0) os << "*t^" << i;
    first = false;
  }
  return os.str();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = Polynomial::divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f) {
  std::vector<std::pair<Polynomial, int>> out;
  if (f.degree() < 1) return out;
  const Polynomial df = f.derivative();
  const Polynomial a0 = gcd(f, df);
  Polynomial b = Polynomial::divmod(f, a0).first;
  Polynomial c = Polynomial::divmod(df, a0).first;
  Polynomial d = c - b.derivative();
  for (int i = 1; b.degree() >= 1; ++i) {
    const Polynomial a = gcd(b, d);
    if (a.degree() >= 1) out.emplace_back(a, i);
    b = Polynomial::divmod(b, a).first;
    c = Polynomial::divmod(d, a).first;
    d = c - b.derivative();
  }
  return out;
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    Polynomial r = Polynomial::divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(Rational(-1) * r);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

int sign_variations(const std::vector<Polynomial>& seq, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    const int s = p(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

namespace {

// Largest denominator a rational root of p can have: the leading coefficient of
// the primitive integer multiple of p.
mpz_class root_denominator_bound(const Polynomial& p) {
  mpz_class lcm_den(1);
  for (const auto& c : p.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
  mpz_class content(0);
  std::vector<mpz_class> ints;
  for (const auto& c : p.coeffs()) {
    mpz_class v = c.numerator() * (lcm_den / c.denominator());
    ints.push_back(v);
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  }
  mpz_class lead = abs(ints.back() / content);
  return lead;
}

// Best rational approximations of x; returns the root in [lo, hi] if it is rational with
// denominator <= bound.
std::optional<Rational> rational_root_near(const Polynomial& p, const Rational& lo, const Rational& hi,
                                           const mpz_class& bound) {
  const Rational x = (lo + hi) / Rational(2);
  mpz_class h_prev(1), h_prev2(0), k_prev(0), k_prev2(1);
  mpq_class rest = x.get();
  for (int iter = 0; iter < 4096; ++iter) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
    const mpz_class h = a * h_prev + h_prev2;
    const mpz_class k = a * k_prev + k_prev2;
    if (k > bound) break;
    const Rational candidate(mpq_class(h, k));
    if (lo <= candidate && candidate <= hi && p(candidate).is_zero()) return candidate;
    const mpq_class frac = rest - a;
    if (frac == 0) break;
    rest = 1 / frac;
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
  }
  return std::nullopt;
}

Rational split_point(const Polynomial& p, const Rational& lo, const Rational& hi) {
  // Midpoint, nudged off any root so Sturm counts stay well defined.
  Rational m = (lo + hi) / Rational(2);
  for (long k = 3; p(m).is_zero(); ++k) m = lo + (hi - lo) / Rational(k);
  return m;
}

}  // namespace

std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& p, const Rational& width) {
  std::vector<IsolatingInterval> out;
  if (p.degree() < 1) return out;
  if (p.degree() == 1) {
    const Rational r = -p.coeff(0) / p.coeff(1);
    out.push_back({r, r});
    return out;
  }
  const auto seq = sturm_sequence(p);
  Rational bound(1);
  for (int i = 0; i < p.degree(); ++i) bound = std::max(bound, Rational(1) + abs(p.coeff(i) / p.leading()));

  std::vector<IsolatingInterval> stack{{-bound, bound}};
  std::vector<IsolatingInterval> isolated;
  while (!stack.empty()) {
    const IsolatingInterval iv = stack.back();
    stack.pop_back();
    const int count = sign_variations(seq, iv.lo) - sign_variations(seq, iv.hi);
    if (count == 0) continue;
    if (count == 1) {
      isolated.push_back(iv);
      continue;
    }
    const Rational m = split_point(p, iv.lo, iv.hi);
    stack.push_back({m, iv.hi});
    stack.push_back({iv.lo, m});
  }

  const mpz_class den_bound = root_denominator_bound(p);
  const Rational legendre_width = Rational(mpq_class(mpz_class(1), 2 * den_bound * den_bound));
  for (IsolatingInterval iv : isolated) {
    // Simple root of a square-free polynomial: p changes sign across it.
    const int sign_lo = p(iv.lo).sign();
    std::optional<Rational> exact;
    auto bisect_to = [&](const Rational& target) {
      while (!exact && iv.hi - iv.lo >= target) {
        const Rational m = (iv.lo + iv.hi) / Rational(2);
        const int s = p(m).sign();
        if (s == 0) {
          exact = m;
        } else if (s == sign_lo) {
          iv.lo = m;
        } else {
          iv.hi = m;
        }
      }
    };
    bisect_to(legendre_width);
    if (!exact) exact = rational_root_near(p, iv.lo, iv.hi, den_bound);
    if (!exact) bisect_to(width);
    if (exact) {
      out.push_back({*exact, *exact});
    } else {
      out.push_back(iv);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  return out;
}

BinaryForm::BinaryForm(int degree, Polynomial dehomogenized) : degree_(degree), dehom_(std::move(dehomogenized)) {
  if (degree_ < 0 || dehom_.degree() > degree_) invalid_input("binary form degree mismatch");
}

BinaryForm BinaryForm::from_high_first(const Vec& coeffs) {
  if (coeffs.empty()) invalid_input("binary form needs coefficients");
  Vec low(coeffs.rbegin(), coeffs.rend());
  return {static_cast<int>(coeffs.size()) - 1, Polynomial(std::move(low))};
}

BinaryForm BinaryForm::interpolate(int degree, const std::function<Rational(const Rational&, const Rational&)>& f) {
  const auto n = static_cast<std::size_t>(degree + 1);
  Matrix system(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational t(static_cast<long>(i));
    Rational power(1);
    for (std::size_t k = 0; k < n; ++k) {
      system(i, k) = power;
      power *= t;
    }
    system(i, n) = f(t, Rational(1));
  }
  const Matrix r = rref(system);
  Vec coeffs(n);
  for (std::size_t k = 0; k < n; ++k) coeffs[k] = r(k, n);
  return {degree, Polynomial(std::move(coeffs))};
}

int BinaryForm::multiplicity_at_infinity() const {
  if (is_zero()) return degree_;
  return degree_ - dehom_.degree();
}

Rational BinaryForm::operator()(const Rational& alpha, const Rational& beta) const {
  Rational acc;
  for (int k = 0; k <= degree_; ++k) {
    Rational term = dehom_.coeff(k);
    if (term.is_zero()) continue;
    for (int i = 0; i < k; ++i) term *= alpha;
    for (int i = 0; i < degree_ - k; ++i) term *= beta;
    acc += term;
  }
  return acc;
}

BinaryForm BinaryForm::swapped() const {
  Vec rev(static_cast<std::size_t>(degree_ + 1));
  for (int k = 0; k <= degree_; ++k) rev[static_cast<std::size_t>(degree_ - k)] = dehom_.coeff(k);
  return {degree_, Polynomial(std::move(rev))};
}

Vec BinaryForm::high_first() const {
  Vec out;
  for (int k = degree_; k >= 0; --k) out.push_back(dehom_.coeff(k));
  return out;
}

BinaryForm gcd(const BinaryForm& a, const BinaryForm& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const Polynomial finite = gcd(a.dehomogenized(), b.dehomogenized());
  const int inf = std::min(a.multiplicity_at_infinity(), b.multiplicity_at_infinity());
  return {finite.degree() + inf, finite};
}

std::string ProjectiveRoot::str() const {
  std::ostringstream os;
  if (exact) {
    os << "(" << alpha << ":" << beta << ")";
  } else {
    os << "(t:1), t in (" << interval.lo << ", " << interval.hi << ")";
  }
  os << " x" << multiplicity;
  return os.str();
}

std::optional<RootProfile> root_profile(const BinaryForm& p, const Rational& width) {
  if (p.is_zero()) return std::nullopt;
  if (p.degree() > 3) invalid_input("root profiles are limited to degree 3");
  RootProfile prof;
  prof.degree = p.degree();
  auto tally = [&](int mult) {
    if (mult == 1) ++prof.real_simple;
    if (mult == 2) ++prof.real_double;
    if (mult == 3) ++prof.real_triple;
  };
  for (const auto& [factor, mult] : squarefree_decomposition(p.dehomogenized())) {
    const auto roots = isolate_real_roots(factor, width);
    for (const auto& iv : roots) {
      ProjectiveRoot r;
      r.multiplicity = mult;
      if (iv.lo == iv.hi) {
        r.alpha = iv.lo;
        r.beta = 1;
      } else {
        r.exact = false;
        r.interval = iv;
      }
      prof.roots.push_back(r);
      tally(mult);
    }
    const int complex_roots = factor.degree() - static_cast<int>(roots.size());
    prof.complex_pairs += complex_roots / 2;
  }
  std::sort(prof.roots.begin(), prof.roots.end(), [](const ProjectiveRoot& a, const ProjectiveRoot& b) {
    const Rational& ta = a.exact ? a.alpha : a.interval.lo;
    const Rational& tb = b.exact ? b.alpha : b.interval.lo;
    return ta < tb;
  });
  if (const int inf = p.multiplicity_at_infinity(); inf > 0) {
    ProjectiveRoot r;
    r.alpha = 1;
    r.beta = 0;
    r.multiplicity = inf;
    prof.roots.push_back(r);
    tally(inf);
  }
  return prof;
}

std::optional<RootProfile> cubic_root_profile(const std::array<Rational, 4>& coeffs, const Rational& width) {
  return root_profile(BinaryForm::from_high_first(Vec(coeffs.begin(), coeffs.end())), width);
}

}  // namespace critconf
