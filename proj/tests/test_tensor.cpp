#include "doctest.h"

#include <random>

#include "eigencubic/instances.hpp"
#include "eigencubic/tensor.hpp"

using namespace eigencubic;

namespace {

PartiallySymmetricTensor randomTensor(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> d(-4, 4);
  ContextPtr ctx = xContext(n + 1);
  PartiallySymmetricTensor t;
  t.n = n;
  t.context = ctx;
  MonomialOrder ord = MonomialOrder::Grevlex(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    std::vector<Polynomial::Term> terms;
    for (const auto& m : degreeMonomials(static_cast<std::size_t>(n + 1), 2))
      terms.push_back({m, FieldElement(Rational(d(rng)))});
    t.quadrics.push_back(Polynomial::fromTerms(ctx, std::move(terms), ord));
  }
  return t;
}

CubicForm randomCubic(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> d(-4, 4);
  ContextPtr ctx = xContext(n + 1);
  MonomialOrder ord = MonomialOrder::Grevlex(static_cast<std::size_t>(n + 1));
  std::vector<Polynomial::Term> terms;
  for (const auto& m : degreeMonomials(static_cast<std::size_t>(n + 1), 3))
    terms.push_back({m, FieldElement(Rational(d(rng)))});
  return makeCubic(n, Polynomial::fromTerms(ctx, std::move(terms), ord));
}

}  // namespace

TEST_CASE("tensorFromCubic takes partial derivatives") {
  CubicForm f = cubicFromText("x0^3+x1^3+x2^3", 2, nullptr);
  PartiallySymmetricTensor t = tensorFromCubic(f);
  CHECK(t.quadrics[0] == parsePolynomial("3*x0^2", f.context));
  CHECK(t.quadrics[1] == parsePolynomial("3*x1^2", f.context));
  CHECK(t.quadrics[2] == parsePolynomial("3*x2^2", f.context));
}

TEST_CASE("eigenscheme of the Fermat ternary cubic") {
  CubicForm f = cubicFromText("x0^3+x1^3+x2^3", 2, nullptr);
  EigenschemeReport r = analyze(f);
  CHECK(r.eigenData.projectiveDimension == 0);
  CHECK(r.eigenData.degree == 7);
  CHECK(r.dimReg() == 0);
  CHECK(r.dimIrr() == -1);
  CHECK(r.regularData.degree == 7);
}

TEST_CASE("eigenpair scheme contains the apex and is Euler-consistent") {
  CubicForm f = cubicFromText("x0^3+x1^2*x2", 2, nullptr);
  PartiallySymmetricTensor t = tensorFromCubic(f);
  Ideal ep = eigenpairIdeal(t);
  std::vector<FieldElement> apex(4, FieldElement(Rational(0)));
  apex[3] = FieldElement(Rational(1));
  for (const auto& g : ep.generators) CHECK(g.evaluate(apex).isZero());
  // the eigenpair [1,1,1,3] of the Fermat cubic
  CubicForm fermat = cubicFromText("x0^3+x1^3+x2^3", 2, nullptr);
  Ideal ep2 = eigenpairIdeal(tensorFromCubic(fermat));
  std::vector<FieldElement> pt{FieldElement(Rational(1)), FieldElement(Rational(1)),
                               FieldElement(Rational(1)), FieldElement(Rational(3))};
  for (const auto& g : ep2.generators) CHECK(g.evaluate(pt).isZero());
}

TEST_CASE("table 1 dimensions") {
  for (const auto& c : table1Cells()) {
    CAPTURE(c.name);
    EigenschemeReport r = analyze(cubicFromText(c.text, c.n, c.field));
    CHECK(r.dimReg() == c.expectedDelta);
    CHECK(r.dimIrr() == c.expectedEpsilon);
  }
}

TEST_CASE("twisted action transports the eigenscheme ideal") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 25; ++trial) {
    int n = (trial % 2 == 0) ? 2 : 3;
    PartiallySymmetricTensor t = randomTensor(rng, n);
    ExactMatrix u(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(n + 1));
    do {
      for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i)
        for (std::size_t j = 0; j <= static_cast<std::size_t>(n); ++j)
          u.at(i, j) = FieldElement(Rational(d(rng)));
    } while (u.determinant().isZero());
    PartiallySymmetricTensor tu = twistedAction(u, t);
    // E(Psi_U T) = U^{-1} E(T): substituting xU into I(E(T)) gives I(E(Psi_U T))
    std::vector<std::vector<FieldElement>> um(u.rows());
    for (std::size_t i = 0; i < u.rows(); ++i)
      for (std::size_t j = 0; j < u.cols(); ++j) um[i].push_back(u.at(i, j));
    std::vector<Polynomial> moved;
    for (const auto& g : eigenschemeIdeal(t).generators) moved.push_back(g.linearSubstitute(um));
    CHECK(idealEqual(eigenschemeIdeal(tu), Ideal(t.context, std::move(moved))));
  }
}

TEST_CASE("twisted action rejects singular matrices") {
  std::mt19937_64 rng(5);
  PartiallySymmetricTensor t = randomTensor(rng, 2);
  ExactMatrix u(3, 3);  // zero matrix
  CHECK_THROWS_AS(twistedAction(u, t), SingularMatrix);
}

TEST_CASE("trivial eigenscheme witness") {
  ContextPtr ctx = xContext(3);
  Polynomial ell = parsePolynomial("x0+2*x1-x2", ctx);
  PartiallySymmetricTensor t;
  t.n = 2;
  t.context = ctx;
  for (std::size_t i = 0; i < 3; ++i) t.quadrics.push_back(ell * Polynomial::variable(ctx, i));
  auto w = trivialEigenschemeWitness(t);
  REQUIRE(w.has_value());
  CHECK(*w == ell);
  // a generic tensor has no witness
  std::mt19937_64 rng(9);
  CHECK_FALSE(trivialEigenschemeWitness(randomTensor(rng, 2)).has_value());
}

TEST_CASE("cone reduction ideal identity") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    CubicForm base = randomCubic(rng, 2);  // ternary cubic
    // lift to the cone in P^3 over the same equation
    ContextPtr big = xContext(4);
    std::vector<int> up{0, 1, 2};
    CubicForm cone = makeCubic(3, base.f.mapContext(big, up, MonomialOrder::Grevlex(4)));
    CHECK(cone.f.partialDerivative(3).isZero());
    CubicForm back = coneReduce(cone);
    CHECK(back.f == base.f);
    // Reg(cone) = phi(Reg(base)): same ideal after adding the hyperplane
    Ideal regCone = regularIdeal(tensorFromCubic(cone));
    Ideal regBase = regularIdeal(tensorFromCubic(base));
    std::vector<Polynomial> lifted;
    for (const auto& g : regBase.generators)
      lifted.push_back(g.mapContext(big, up, MonomialOrder::Grevlex(4)));
    lifted.push_back(Polynomial::variable(big, 3));
    CHECK(idealEqual(regCone, Ideal(big, std::move(lifted))));
  }
}

TEST_CASE("coneReduce rejects non-cones") {
  CubicForm f = cubicFromText("x0^3+x3^3", 3, nullptr);
  CHECK_THROWS_AS(coneReduce(f), NotACone);
}

TEST_CASE("apex jacobian is minus the identity") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    int n = (trial % 2 == 0) ? 2 : 3;
    CHECK(apexJacobianCheck(randomTensor(rng, n)));
  }
}

TEST_CASE("cubicFromPoints recovers a known cubic") {
  // the three coordinate points and [1,1,1] are eigenpoints of x0^3+x1^3+x2^3
  std::vector<std::vector<FieldElement>> pts{
      {FieldElement(Rational(1)), FieldElement(Rational(0)), FieldElement(Rational(0))},
      {FieldElement(Rational(0)), FieldElement(Rational(1)), FieldElement(Rational(0))},
      {FieldElement(Rational(0)), FieldElement(Rational(0)), FieldElement(Rational(1))},
      {FieldElement(Rational(1)), FieldElement(Rational(1)), FieldElement(Rational(1))}};
  CubicFitResult r = cubicFromPoints(pts, 2);
  ContextPtr ctx = xContext(3);
  Polynomial fermat = parsePolynomial("x0^3+x1^3+x2^3", ctx);
  // fermat must lie in the span of the nullspace basis: check via rank
  std::vector<Monomial> monos = degreeMonomials(3, 3);
  ExactMatrix m(r.nullspaceBasis.size() + 1, monos.size());
  for (std::size_t b = 0; b < r.nullspaceBasis.size(); ++b)
    for (std::size_t c = 0; c < monos.size(); ++c)
      m.at(b, c) = r.nullspaceBasis[b].f.coefficientOf(monos[c]);
  for (std::size_t c = 0; c < monos.size(); ++c)
    m.at(r.nullspaceBasis.size(), c) = fermat.coefficientOf(monos[c]);
  CHECK(m.rank() == r.nullspaceBasis.size());
}

TEST_CASE("dimension relation when Reg is a hypersurface") {
  // x0(x1^2+x2^2+x3^2): delta = 2 = n-1, so epsilon must be n-2 = 1
  EigenschemeReport r = analyze(cubicFromText("x0*(x1^2+x2^2+x3^2)", 3, nullptr));
  CHECK(r.dimReg() == 2);
  CHECK(r.dimIrr() == 1);
}
