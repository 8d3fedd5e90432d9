#ifndef EIGENCUBIC_RATIONAL_HPP
#define EIGENCUBIC_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>

#include "eigencubic/errors.hpp"

namespace eigencubic {

// Arbitrary-precision integers and rationals, GMP-backed. mpq_rational keeps
// gcd(num, den) = 1 and den > 0 canonically.
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Int numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline double toDouble(const Rational& r) { return r.convert_to<double>(); }

inline Rational ratPow(const Rational& base, unsigned e) {
  Rational r = 1;
  Rational b = base;
  unsigned k = e;
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

// Parses "p" or "p/q". Throws SyntaxError on malformed input.
inline Rational ratFromString(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw SyntaxError("bad rational literal '" + s + "'", 0);
  }
}

inline std::string ratToString(const Rational& r) { return r.str(); }

// Best rational approximation of x with denominator <= bound, by continued
// fractions. Returns nullopt for non-finite input.
inline std::optional<Rational> continuedFractionApprox(double x, const Int& bound) {
  if (!std::isfinite(x)) return std::nullopt;
  bool neg = x < 0;
  double v = neg ? -x : x;
  // convergents p/q
  Int p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = v;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(frac);
    if (fl > 9.2e18) break;
    Int a = static_cast<std::int64_t>(fl);
    Int p2 = a * p1 + p0;
    Int q2 = a * q1 + q0;
    if (q2 > bound) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double rem = frac - fl;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  if (q1 == 0) return std::nullopt;
  Rational r(p1, q1);
  if (neg) r = -r;
  return r;
}

}  // namespace eigencubic

#endif
