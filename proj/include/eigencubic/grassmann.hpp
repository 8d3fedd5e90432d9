#ifndef EIGENCUBIC_GRASSMANN_HPP
#define EIGENCUBIC_GRASSMANN_HPP

#include <optional>
#include <vector>

#include "eigencubic/tensor.hpp"

namespace eigencubic {

// Fixed ordered basis of the quadrics in x0..x3, λ:
// x0^2, x0x1, x0x2, x0x3, x1^2, x1x2, x1x3, x2^2, x2x3, x3^2,
// x0λ, x1λ, x2λ, x3λ, λ^2
inline const std::vector<Monomial>& quadricBasisOrder() {
  static const std::vector<Monomial> basis = [] {
    std::vector<Monomial> b;
    auto mk = [](std::size_t i, std::size_t j) {
      return Monomial::variable(i) * Monomial::variable(j);
    };
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i; j < 4; ++j) b.push_back(mk(i, j));
    for (std::size_t i = 0; i < 4; ++i) b.push_back(mk(i, 4));
    b.push_back(mk(4, 4));
    return b;
  }();
  return basis;
}

constexpr std::size_t kLambdaSquareColumn = 14;
constexpr std::size_t kLambdaBlockStart = 10;

// Row space of the 4x15 matrix whose rows are q_i - λx_i in quadricBasisOrder.
struct EigenPlane {
  ExactMatrix matrix;  // 4 x 15
};

inline EigenPlane planeFromTensor(const PartiallySymmetricTensor& t) {
  if (t.n != 3) throw DimensionMismatch("eigenplanes require n = 3");
  t.validate();
  ContextPtr ctx = xContext(4, /*withLambda=*/true);
  std::vector<int> varMap{0, 1, 2, 3};
  MonomialOrder ord = MonomialOrder::Grevlex(5);
  EigenPlane plane;
  plane.matrix = ExactMatrix(4, 15);
  const auto& basis = quadricBasisOrder();
  for (std::size_t i = 0; i < 4; ++i) {
    Polynomial row = t.quadrics[i].mapContext(ctx, varMap, ord) -
                     Polynomial::variable(ctx, 4) * Polynomial::variable(ctx, i);
    for (std::size_t c = 0; c < 15; ++c) plane.matrix.at(i, c) = row.coefficientOf(basis[c]);
  }
  return plane;
}

// 1365 maximal minors, lexicographic over ascending column 4-subsets.
inline std::vector<FieldElement> plueckerCoordinates(const EigenPlane& p) {
  return p.matrix.maximalMinors();
}

struct EigenplaneConditions {
  bool condition1 = false;  // λ^2 column identically zero
  bool condition2 = false;  // λx block invertible
};

inline EigenplaneConditions checkEigenplaneConditions(const ExactMatrix& m) {
  if (m.rows() != 4 || m.cols() != 15) throw DimensionMismatch("eigenplane matrix must be 4x15");
  EigenplaneConditions c;
  c.condition1 = true;
  for (std::size_t i = 0; i < 4; ++i)
    if (!m.at(i, kLambdaSquareColumn).isZero()) c.condition1 = false;
  ExactMatrix block(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) block.at(i, j) = m.at(i, kLambdaBlockStart + j);
  c.condition2 = !block.determinant().isZero();
  return c;
}

// Row-reduce against the λx block to read the quadric slices back off.
inline PartiallySymmetricTensor tensorFromPlane(const ExactMatrix& m) {
  EigenplaneConditions c = checkEigenplaneConditions(m);
  if (!c.condition1 || !c.condition2)
    throw ConditionsViolated("matrix does not satisfy the eigenplane conditions");
  ExactMatrix block(4, 4), xpart(4, 10);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) block.at(i, j) = m.at(i, kLambdaBlockStart + j);
    for (std::size_t j = 0; j < 10; ++j) xpart.at(i, j) = m.at(i, j);
  }
  // rows of -B^{-1} (A | B | 0) are (q_i | -e_i | 0)
  ExactMatrix q = block.inverse() * xpart;
  ContextPtr ctx = xContext(4);
  MonomialOrder ord = MonomialOrder::Grevlex(4);
  const auto& basis = quadricBasisOrder();
  PartiallySymmetricTensor t;
  t.n = 3;
  t.context = ctx;
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<Polynomial::Term> terms;
    for (std::size_t col = 0; col < 10; ++col) {
      FieldElement v = -q.at(i, col);
      if (!v.isZero()) terms.push_back({basis[col], v});
    }
    t.quadrics.push_back(Polynomial::fromTerms(ctx, std::move(terms), ord));
  }
  return t;
}

// All six linear symmetry conditions ∂q_i/∂x_j = ∂q_j/∂x_i.
inline bool isSymmetricPoint(const PartiallySymmetricTensor& t) {
  for (int i = 0; i <= t.n; ++i)
    for (int j = i + 1; j <= t.n; ++j)
      if (t.quadrics[static_cast<std::size_t>(i)].partialDerivative(static_cast<std::size_t>(j)) !=
          t.quadrics[static_cast<std::size_t>(j)].partialDerivative(static_cast<std::size_t>(i)))
        return false;
  return true;
}

// Euler-integrated cubic witness f = (1/3) Σ x_i q_i, valid when the
// symmetry conditions hold (then tensorFromCubic(f) = T).
inline std::optional<CubicForm> symmetricWitness(const PartiallySymmetricTensor& t) {
  if (!isSymmetricPoint(t)) return std::nullopt;
  Polynomial f(t.context);
  for (int i = 0; i <= t.n; ++i)
    f += Polynomial::variable(t.context, static_cast<std::size_t>(i)) * t.quadrics[static_cast<std::size_t>(i)];
  f = FieldElement(Rational(1, 3)) * f;
  return makeCubic(t.n, f);
}

// Degree-2 monomial values of a point of P^4, in quadricBasisOrder.
inline std::vector<FieldElement> veronese(const std::vector<FieldElement>& p) {
  if (p.size() != 5) throw DimensionMismatch("veronese expects 5 coordinates");
  bool allZero = true;
  for (const auto& c : p)
    if (!c.isZero()) allZero = false;
  if (allZero) throw DimensionMismatch("zero vector is not a projective point");
  std::vector<FieldElement> out;
  for (const auto& m : quadricBasisOrder()) {
    FieldElement v(Rational(1));
    for (std::size_t i = 0; i < 5; ++i)
      for (int k = 0; k < m.e[i]; ++k) v *= p[i];
    out.push_back(v);
  }
  return out;
}

// Coefficient-against-monomial pairing; by design <coeffs(q), ν2(p)> = q(p).
inline FieldElement apolarPairing(const std::vector<FieldElement>& coeffs,
                                  const std::vector<FieldElement>& monomialValues) {
  if (coeffs.size() != monomialValues.size()) throw DimensionMismatch("pairing arity");
  FieldElement s(Rational(0));
  for (std::size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] * monomialValues[i];
  return s;
}

// p in P^4 (λ last) lies on Ẽ(T) iff every row of H_T pairs to zero against
// ν2(p).
inline bool eigenpairVeroneseCheck(const PartiallySymmetricTensor& t,
                                   const std::vector<FieldElement>& p) {
  EigenPlane plane = planeFromTensor(t);
  std::vector<FieldElement> v = veronese(p);
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<FieldElement> row;
    for (std::size_t c = 0; c < 15; ++c) row.push_back(plane.matrix.at(i, c));
    if (!apolarPairing(row, v).isZero()) return false;
  }
  return true;
}

// The displayed 2x6 matrix of a binary cubic a0x0^3+a1x0^2x1+a2x0x1^2+a3x1^3
// over the basis x0^2, x0x1, x0λ, x1^2, x1λ, λ^2.
inline ExactMatrix binaryMatrix(const FieldElement& a0, const FieldElement& a1,
                                const FieldElement& a2, const FieldElement& a3) {
  ExactMatrix m(2, 6);
  m.at(0, 0) = FieldElement(Rational(3)) * a0;
  m.at(0, 1) = FieldElement(Rational(2)) * a1;
  m.at(0, 2) = FieldElement(Rational(-1));
  m.at(0, 3) = a2;
  m.at(1, 0) = a1;
  m.at(1, 1) = FieldElement(Rational(2)) * a2;
  m.at(1, 3) = FieldElement(Rational(3)) * a3;
  m.at(1, 4) = FieldElement(Rational(-1));
  return m;
}

namespace detail {

inline ContextPtr binaryCoeffContext() {
  static ContextPtr ctx = makeContext({"a0", "a1", "a2", "a3"});
  return ctx;
}

// discriminant 18b0b1b2b3 - 4b1^3b3 + b1^2b2^2 - 4b0b2^3 - 27b0^2b3^2 of a
// binary cubic with symbolic coefficients
inline Polynomial cubicDiscriminant(const Polynomial& b0, const Polynomial& b1,
                                    const Polynomial& b2, const Polynomial& b3) {
  auto k = [&](int v) { return Polynomial::constant(b0.context(), FieldElement(Rational(v))); };
  return k(18) * b0 * b1 * b2 * b3 - k(4) * b1.pow(3) * b3 + b1.pow(2) * b2.pow(2) -
         k(4) * b0 * b2.pow(3) - k(27) * b0.pow(2) * b3.pow(2);
}

}  // namespace detail

// Discriminant of g = x0 q1 - x1 q0 for the binary cubic
// f = a0x0^3 + a1x0^2x1 + a2x0x1^2 + a3x1^3, symbolically over Q[a0..a3].
inline Polynomial binaryEigendiscriminant() {
  ContextPtr ctx = detail::binaryCoeffContext();
  auto a = [&](std::size_t i) { return Polynomial::variable(ctx, i); };
  auto k = [&](int v) { return Polynomial::constant(ctx, FieldElement(Rational(v))); };
  // g = a1x0^3 + (2a2-3a0)x0^2x1 + (3a3-2a1)x0x1^2 - a2x1^3
  Polynomial b0 = a(1);
  Polynomial b1 = k(2) * a(2) - k(3) * a(0);
  Polynomial b2 = k(3) * a(3) - k(2) * a(1);
  Polynomial b3 = -a(2);
  return detail::cubicDiscriminant(b0, b1, b2, b3);
}

// Tangency locus of the two conics p_i = q_i - λx_i, computed independently:
// the λ-resultant of (p0, p1) is the binary cubic x1q0 - x0q1, whose
// discriminant cuts out exactly the non-transverse intersections.
inline Polynomial binaryRestrictedHurwitz() {
  ContextPtr full = makeContext({"a0", "a1", "a2", "a3", "x0", "x1"});
  MonomialOrder ord = MonomialOrder::Grevlex(6);
  auto a = [&](std::size_t i) { return Polynomial::variable(full, i); };
  Polynomial x0 = Polynomial::variable(full, 4), x1 = Polynomial::variable(full, 5);
  auto k = [&](int v) { return Polynomial::constant(full, FieldElement(Rational(v))); };
  // partials of f = a0x0^3 + a1x0^2x1 + a2x0x1^2 + a3x1^3
  Polynomial q0 = k(3) * a(0) * x0 * x0 + k(2) * a(1) * x0 * x1 + a(2) * x1 * x1;
  Polynomial q1 = a(1) * x0 * x0 + k(2) * a(2) * x0 * x1 + k(3) * a(3) * x1 * x1;
  // resultant in λ of (q0 - λx0, q1 - λx1): determinant of the 2x2 Sylvester
  // matrix (-x0 q0; -x1 q1)
  Polynomial res = x1 * q0 - x0 * q1;
  // coefficients of res = c0x0^3 + c1x0^2x1 + c2x0x1^2 + c3x1^3 as
  // polynomials in a0..a3
  ContextPtr actx = detail::binaryCoeffContext();
  MonomialOrder aord = MonomialOrder::Grevlex(4);
  std::vector<int> down{0, 1, 2, 3, -1, -1};
  std::vector<Polynomial> c(4, Polynomial(actx, aord));
  for (const auto& [m, coeff] : res.terms()) {
    int j = m.e[5];  // x1 exponent
    Monomial am;
    for (std::size_t v = 0; v < 4; ++v) {
      am.e[v] = m.e[v];
      am.deg = static_cast<std::uint16_t>(am.deg + m.e[v]);
    }
    c[static_cast<std::size_t>(j)] += Polynomial::fromTerms(actx, {{am, coeff}}, aord);
  }
  return detail::cubicDiscriminant(c[0], c[1], c[2], c[3]);
}

// The §-display of the restricted Hurwitz form exactly as printed, including
// its two transcription anomalies, for term-level comparison.
inline Polynomial printedHurwitzDisplay() {
  ContextPtr ctx = detail::binaryCoeffContext();
  MonomialOrder ord = MonomialOrder::Grevlex(4);
  auto mono = [&](int c, int e0, int e1, int e2, int e3) {
    Monomial m;
    m.e[0] = static_cast<std::uint16_t>(e0);
    m.e[1] = static_cast<std::uint16_t>(e1);
    m.e[2] = static_cast<std::uint16_t>(e2);
    m.e[3] = static_cast<std::uint16_t>(e3);
    m.deg = static_cast<std::uint16_t>(e0 + e1 + e2 + e3);
    return Polynomial::Term{m, FieldElement(Rational(c))};
  };
  std::vector<Polynomial::Term> terms{
      mono(36, 2, 2, 0, 0),  mono(32, 0, 4, 0, 0),   mono(-108, 3, 0, 1, 0),
      mono(-156, 1, 2, 1, 0), mono(216, 2, 0, 2, 0), mono(61, 0, 2, 2, 0),
      mono(-144, 1, 0, 3, 0), mono(32, 0, 0, 4, 0),  mono(-108, 2, 1, 0, 1),
      mono(-144, 0, 3, 0, 1), mono(306, 1, 1, 1, 1), mono(-156, 0, 1, 0, 3),
      mono(81, 2, 0, 0, 2),   mono(216, 0, 2, 0, 2), mono(-108, 0, 1, 1, 2),
      mono(36, 0, 0, 2, 2),   mono(-108, 0, 1, 0, 3)};
  return Polynomial::fromTerms(ctx, std::move(terms), ord);
}

struct ConjectureReport {
  Rational ratio;              // restrictedHurwitz / eigendiscriminant, pre-normalization
  bool normalizedEqual = false;  // after scaling both so the a1^4 coefficient is +32
  Polynomial eigendiscriminant;
  Polynomial restrictedHurwitz;
  Polynomial diffAgainstPrinted;  // normalized eigendiscriminant minus the printed display
};

inline ConjectureReport compareConjecture() {
  ConjectureReport r;
  r.eigendiscriminant = binaryEigendiscriminant();
  r.restrictedHurwitz = binaryRestrictedHurwitz();
  // scalar ratio via matching coefficients
  Monomial a1q;
  a1q.e[1] = 4;
  a1q.deg = 4;
  Rational ed = r.eigendiscriminant.coefficientOf(a1q).rationalValue();
  Rational hu = r.restrictedHurwitz.coefficientOf(a1q).rationalValue();
  r.ratio = hu / ed;
  Polynomial scaled = FieldElement(r.ratio) * r.eigendiscriminant;
  if (scaled != r.restrictedHurwitz)
    throw std::logic_error("restricted Hurwitz form is not proportional to the eigendiscriminant");
  FieldElement se(Rational(32) / ed), sh(Rational(32) / hu);
  r.normalizedEqual = (se * r.eigendiscriminant == sh * r.restrictedHurwitz);
  r.diffAgainstPrinted = se * r.eigendiscriminant - printedHurwitzDisplay();
  return r;
}

}  // namespace eigencubic

#endif
