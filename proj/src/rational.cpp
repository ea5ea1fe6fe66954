#include "critconf/rational.hpp"

#include <cmath>

#include "critconf/error.hpp"

namespace critconf {

Rational::Rational(long num, long den) {
  if (den == 0) invalid_input("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) invalid_input("division by zero");
  value_ /= o.value_;
  return *this;
}

long double Rational::to_long_double() const {
  if (is_zero()) return 0.0L;
  // Integer quotient with ~70 significant bits, then rescale.
  const mpz_class num = abs(value_.get_num());
  const mpz_class den = value_.get_den();
  const long exp_diff = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
                        static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  const long shift = 70 - exp_diff;
  mpz_class quotient;
  if (shift >= 0) {
    quotient = (num << static_cast<unsigned long>(shift)) / den;
  } else {
    quotient = num / (den << static_cast<unsigned long>(-shift));
  }
  const mpz_class high = quotient >> 32;
  const mpz_class low = quotient - (high << 32);
  long double out = std::ldexp(static_cast<long double>(high.get_d()), 32) +
                    static_cast<long double>(low.get_d());
  out = std::ldexp(out, static_cast<int>(-shift));
  return sign() < 0 ? -out : out;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) invalid_input("empty number");
  if (s.find('/') != std::string::npos) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) invalid_input("malformed rational '" + s + "'");
    if (q.get_den() == 0) invalid_input("zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(q);
  }
  // Decimal: [sign] digits [. digits] [e|E [sign] digits]
  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') {
    negative = s[pos] == '-';
    ++pos;
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  bool any_digit = false;
  for (; pos < s.size(); ++pos) {
    const char c = s[pos];
    if (c >= '0' && c <= '9') {
      digits.push_back(c);
      any_digit = true;
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) invalid_input("malformed number '" + s + "'");
  long exponent = 0;
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') invalid_input("malformed number '" + s + "'");
    ++pos;
    std::size_t used = 0;
    try {
      exponent = std::stol(s.substr(pos), &used);
    } catch (const std::exception&) {
      invalid_input("malformed exponent in '" + s + "'");
    }
    if (pos + used != s.size()) invalid_input("malformed number '" + s + "'");
    if (exponent > 10000 || exponent < -10000) invalid_input("exponent out of range in '" + s + "'");
  }
  mpz_class mant(digits, 10);
  if (negative) mant = -mant;
  const long shift = exponent - frac_digits;
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  mpq_class q = shift >= 0 ? mpq_class(mant * power) : mpq_class(mant, power);
  q.canonicalize();
  return Rational(q);
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) invalid_input("non-finite number");
  mpq_class q(value);  // exact conversion
  return Rational(q);
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow2(int exponent) {
  mpz_class p(1);
  if (exponent >= 0) {
    p <<= static_cast<unsigned long>(exponent);
    return Rational(p);
  }
  p <<= static_cast<unsigned long>(-exponent);
  return Rational(mpq_class(mpz_class(1), p));
}

}  // namespace critconf
