#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <gmp.h>

#include <string>

#include "qtensor/errors.hpp"

namespace qtensor {

/// Exact arbitrary-precision scalars. All multiplicity arithmetic uses
/// Integer; all matrix entries use Rational. No floating point anywhere.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer int_pow(const Integer& base, unsigned n) {
  Integer r;
  mpz_pow_ui(r.backend().data(), base.backend().data(), n);
  return r;
}

/// floor(x^(1/n)) for x >= 0, n >= 1.
inline Integer nth_root_floor(const Integer& x, unsigned n) {
  if (n == 0) throw InvalidArgumentError("nth_root_floor: n must be positive");
  if (x < 0) throw InvalidArgumentError("nth_root_floor: negative radicand");
  Integer r;
  mpz_root(r.backend().data(), x.backend().data(), n);
  return r;
}

/// An n-th root b^(1/n) held exactly as scaled/10^frac_digits, where
/// scaled = floor((b * 10^(n*frac_digits))^(1/n)). The decimal text is the
/// truncated value; the rational form supports exact comparisons.
struct DecimalRoot {
  Integer scaled;
  int frac_digits = 0;
  std::string text;

  Rational value() const { return Rational(scaled, int_pow(Integer(10), static_cast<unsigned>(frac_digits))); }
};

/// b^(1/n) to roughly `significant_digits` significant decimal digits,
/// computed with big-integer n-th roots only.
inline DecimalRoot nth_root_decimal(const Integer& b, unsigned n, int significant_digits = 30) {
  if (n == 0) throw InvalidArgumentError("nth_root_decimal: n must be positive");
  if (b < 0) throw InvalidArgumentError("nth_root_decimal: negative radicand");
  DecimalRoot out;
  if (b == 0) {
    out.scaled = 0;
    out.frac_digits = 0;
    out.text = "0";
    return out;
  }
  // Integer-part digit count of b^(1/n): digits(b) <= n * digits(root).
  const int b_digits = static_cast<int>(b.str().size());
  const int int_digits = (b_digits + static_cast<int>(n) - 1) / static_cast<int>(n);
  int frac = significant_digits - int_digits;
  if (frac < 0) frac = 0;
  const Integer scale = int_pow(Integer(10), static_cast<unsigned>(frac) * n);
  out.scaled = nth_root_floor(b * scale, n);
  out.frac_digits = frac;
  std::string digits = out.scaled.str();
  if (frac == 0) {
    out.text = digits;
  } else {
    if (static_cast<int>(digits.size()) <= frac) digits.insert(0, frac + 1 - digits.size(), '0');
    digits.insert(digits.size() - frac, ".");
    out.text = digits;
  }
  return out;
}

/// Parses "p", "-p" or "p/q" with big-integer parts.
inline Rational parse_rational(const std::string& s) {
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    const Integer num(s.substr(0, slash));
    const Integer den(s.substr(slash + 1));
    if (den == 0) throw ParseError("rational with zero denominator: " + s);
    return Rational(num, den);
  } catch (const std::exception&) {
    throw ParseError("not a rational: '" + s + "'");
  }
}

inline std::string format_rational(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace qtensor
