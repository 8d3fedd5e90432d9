#ifndef EIGENCUBIC_UNIVARIATE_HPP
#define EIGENCUBIC_UNIVARIATE_HPP

#include <complex>
#include <vector>

#include "eigencubic/rational.hpp"

namespace eigencubic {

// Dense univariate polynomial over Q, ascending coefficients.
// Used for minimal polynomials of field generators and for Hilbert numerators.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UniPoly constant(const Rational& a) { return UniPoly({a}); }
  static UniPoly monomial(const Rational& a, std::size_t k) {
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = a;
    return UniPoly(std::move(v));
  }

  bool isZero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const { return c_.back(); }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return UniPoly(std::move(v));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
    return UniPoly(std::move(v));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.isZero() || b.isZero()) return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(v));
  }
  friend UniPoly operator*(const Rational& s, const UniPoly& a) {
    if (s == 0) return {};
    std::vector<Rational> v = a.c_;
    for (auto& x : v) x *= s;
    return UniPoly(std::move(v));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  UniPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = Rational(static_cast<int>(i)) * c_[i];
    return UniPoly(std::move(v));
  }

  UniPoly monic() const {
    if (isZero()) return {};
    Rational inv = Rational(1) / leading();
    return inv * *this;
  }

  // Euclidean division; returns {quotient, remainder}.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
    if (d.isZero()) throw DivisionByZero("univariate division by zero");
    UniPoly r = *this;
    std::vector<Rational> q(degree() >= d.degree() ? degree() - d.degree() + 1 : 0, Rational(0));
    while (!r.isZero() && r.degree() >= d.degree()) {
      Rational f = r.leading() / d.leading();
      int shift = r.degree() - d.degree();
      q[shift] = f;
      r = r - UniPoly::monomial(f, shift) * d;
    }
    return {UniPoly(std::move(q)), r};
  }

  friend UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.isZero()) {
      UniPoly r = a.divmod(b).second;
      a = b;
      b = r;
    }
    return a.monic();
  }

  Rational evaluate(const Rational& x) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }
  std::complex<double> evaluate(std::complex<double> x) const {
    std::complex<double> r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + toDouble(*it);
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

}  // namespace eigencubic

#endif
