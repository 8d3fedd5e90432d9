#ifndef EIGENCUBIC_FIELD_HPP
#define EIGENCUBIC_FIELD_HPP

#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "eigencubic/complex_eigen.hpp"
#include "eigencubic/errors.hpp"
#include "eigencubic/univariate.hpp"

namespace eigencubic {

struct ComplexApprox {
  double real = 0.0;
  double imaginary = 0.0;
};

// A simple extension Q[t]/(m(t)) with a chosen complex embedding. m must be
// squarefree; irreducibility is the caller's responsibility and a zero divisor
// surfaces as NotInvertible on inversion.
class FieldDescriptor {
 public:
  UniPoly minimalPolynomial;                     // monic, degree d >= 1
  std::vector<std::complex<double>> complexRoots;  // sorted (re rounded 1e-9, im)
  int chosenRootIndex = 0;
  // Named elements (e.g. "i", "theta") as coefficient vectors in t.
  std::map<std::string, std::vector<Rational>> namedElements;

  int degree() const { return minimalPolynomial.degree(); }

  // reduction of t^(d+k) mod m, for k = 0..d-2
  const std::vector<std::vector<Rational>>& powerReductions() const { return powRed_; }

  void precomputeReductions() {
    int d = degree();
    powRed_.clear();
    // t^d = -(m - t^d)
    std::vector<Rational> cur(d, Rational(0));
    for (int i = 0; i < d; ++i) cur[i] = -minimalPolynomial[static_cast<std::size_t>(i)];
    powRed_.push_back(cur);
    for (int k = 1; k <= d - 2; ++k) {
      std::vector<Rational> nxt(d, Rational(0));
      // multiply cur by t, reduce
      Rational top = cur[static_cast<std::size_t>(d - 1)];
      for (int i = d - 1; i >= 1; --i) nxt[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
      nxt[0] = 0;
      if (top != 0)
        for (int i = 0; i < d; ++i) nxt[static_cast<std::size_t>(i)] += top * powRed_[0][static_cast<std::size_t>(i)];
      powRed_.push_back(nxt);
      cur = nxt;
    }
  }

 private:
  std::vector<std::vector<Rational>> powRed_;
};

using FieldPtr = std::shared_ptr<const FieldDescriptor>;

// Roots of a monic rational polynomial as eigenvalues of its companion matrix.
inline std::vector<std::complex<double>> companionRoots(const UniPoly& monic) {
  int d = monic.degree();
  ComplexMatrix c = ComplexMatrix::Zero(d, d);
  for (int i = 1; i < d; ++i) c(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) c(i, d - 1) = -toDouble(monic[static_cast<std::size_t>(i)]);
  auto res = complexEigen(c);
  std::vector<std::complex<double>> roots = res.eigenvalues;
  std::sort(roots.begin(), roots.end(), [](std::complex<double> a, std::complex<double> b) {
    double ra = std::round(a.real() * 1e9), rb = std::round(b.real() * 1e9);
    if (ra != rb) return ra < rb;
    return a.imag() < b.imag();
  });
  return roots;
}

inline FieldPtr makeField(const UniPoly& minimalPolynomial, int chosenRootIndex) {
  if (minimalPolynomial.degree() < 1) throw NotSquarefree("minimal polynomial must have degree >= 1");
  UniPoly m = minimalPolynomial.monic();
  UniPoly g = gcd(m, m.derivative());
  if (g.degree() != 0) throw NotSquarefree("minimal polynomial is not squarefree");
  auto fd = std::make_shared<FieldDescriptor>();
  fd->minimalPolynomial = m;
  fd->complexRoots = companionRoots(m);
  if (chosenRootIndex < 0 || chosenRootIndex >= m.degree())
    throw InvalidRootIndex("root index out of range");
  fd->chosenRootIndex = chosenRootIndex;
  fd->precomputeReductions();
  return fd;
}

// Element of Q or of Q[t]/(m). A null descriptor means a plain rational.
class FieldElement {
 public:
  FieldElement() : c_(1, Rational(0)) {}
  explicit FieldElement(Rational r) : c_(1, std::move(r)) {}
  FieldElement(int v) : c_(1, Rational(v)) {}
  FieldElement(FieldPtr f, std::vector<Rational> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) {
    if (field_ && static_cast<int>(c_.size()) != field_->degree())
      throw DimensionMismatch("extension element coefficient length");
  }

  static FieldElement generator(const FieldPtr& f) {
    std::vector<Rational> v(static_cast<std::size_t>(f->degree()), Rational(0));
    if (f->degree() == 1) {
      // t reduces to the rational root
      v[0] = -f->minimalPolynomial[0];
    } else {
      v[1] = 1;
    }
    return FieldElement(f, std::move(v));
  }

  static FieldElement named(const FieldPtr& f, const std::string& name) {
    auto it = f->namedElements.find(name);
    if (it == f->namedElements.end()) throw UnknownVariable("no element named '" + name + "' in field");
    return FieldElement(f, it->second);
  }

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coefficients() const { return c_; }

  bool isZero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }
  bool isRational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  const Rational& rationalValue() const {
    if (!isRational()) throw DimensionMismatch("element is not rational");
    return c_[0];
  }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    auto [x, y] = align(a, b);
    return x.c_ == y.c_;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  friend FieldElement operator-(const FieldElement& a) {
    FieldElement r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    auto [x, y] = align(a, b);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    auto [x, y] = align(a, b);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    auto [x, y] = align(a, b);
    if (!x.field_) {
      x.c_[0] *= y.c_[0];
      return x;
    }
    const int d = x.field_->degree();
    std::vector<Rational> prod(static_cast<std::size_t>(2 * d - 1), Rational(0));
    for (int i = 0; i < d; ++i) {
      if (x.c_[static_cast<std::size_t>(i)] == 0) continue;
      for (int j = 0; j < d; ++j) {
        if (y.c_[static_cast<std::size_t>(j)] == 0) continue;
        prod[static_cast<std::size_t>(i + j)] += x.c_[static_cast<std::size_t>(i)] * y.c_[static_cast<std::size_t>(j)];
      }
    }
    std::vector<Rational> red(static_cast<std::size_t>(d), Rational(0));
    for (int i = 0; i < d; ++i) red[static_cast<std::size_t>(i)] = prod[static_cast<std::size_t>(i)];
    const auto& pr = x.field_->powerReductions();
    for (int k = d; k <= 2 * d - 2; ++k) {
      const Rational& ck = prod[static_cast<std::size_t>(k)];
      if (ck == 0) continue;
      const auto& row = pr[static_cast<std::size_t>(k - d)];
      for (int i = 0; i < d; ++i) red[static_cast<std::size_t>(i)] += ck * row[static_cast<std::size_t>(i)];
    }
    return FieldElement(x.field_, std::move(red));
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * invert(b); }

  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  // Extended Euclid modulo the minimal polynomial. NotInvertible signals a
  // zero divisor (reducible m).
  friend FieldElement invert(const FieldElement& e) {
    if (e.isZero()) throw DivisionByZero("invert(0)");
    if (!e.field_ || e.isRational()) {
      FieldElement r = e;
      for (auto& x : r.c_) x = 0;
      r.c_[0] = Rational(1) / e.c_[0];
      return r;
    }
    UniPoly a(std::vector<Rational>(e.c_));
    const UniPoly& m = e.field_->minimalPolynomial;
    // extended gcd of a and m: find u with u*a = g mod m
    UniPoly r0 = m, r1 = a;
    UniPoly s0, s1 = UniPoly::constant(1);  // coefficients of a
    while (!r1.isZero()) {
      auto [q, r2] = r0.divmod(r1);
      UniPoly s2 = s0 - q * s1;
      r0 = r1; r1 = r2;
      s0 = s1; s1 = s2;
    }
    if (r0.degree() != 0) throw NotInvertible("element is a zero divisor modulo m");
    UniPoly u = (Rational(1) / r0.leading()) * s0;
    u = u.divmod(m).second;
    std::vector<Rational> v(static_cast<std::size_t>(e.field_->degree()), Rational(0));
    for (int i = 0; i <= u.degree(); ++i) v[static_cast<std::size_t>(i)] = u[static_cast<std::size_t>(i)];
    return FieldElement(e.field_, std::move(v));
  }

  ComplexApprox embedComplex() const {
    if (!field_) return {toDouble(c_[0]), 0.0};
    std::complex<double> root = field_->complexRoots[static_cast<std::size_t>(field_->chosenRootIndex)];
    std::complex<double> r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * root + toDouble(*it);
    return {r.real(), r.imag()};
  }
  std::complex<double> toComplex() const {
    auto a = embedComplex();
    return {a.real, a.imaginary};
  }

 private:
  // Promote rationals into the other side's field; reject mixing two
  // different extensions.
  static std::pair<FieldElement, FieldElement> align(const FieldElement& a, const FieldElement& b) {
    if (a.field_ == b.field_) return {a, b};
    if (!a.field_) return {promote(a, b.field_), b};
    if (!b.field_) return {a, promote(b, a.field_)};
    if (a.field_->minimalPolynomial == b.field_->minimalPolynomial &&
        a.field_->chosenRootIndex == b.field_->chosenRootIndex)
      return {a, b};
    throw DimensionMismatch("elements of different field extensions");
  }
  static FieldElement promote(const FieldElement& a, const FieldPtr& f) {
    std::vector<Rational> v(static_cast<std::size_t>(f->degree()), Rational(0));
    v[0] = a.c_[0];
    return FieldElement(f, std::move(v));
  }

  FieldPtr field_;  // null = Q
  std::vector<Rational> c_;
};

inline FieldElement embedRational(const Rational& r) { return FieldElement(r); }

}  // namespace eigencubic

#endif
