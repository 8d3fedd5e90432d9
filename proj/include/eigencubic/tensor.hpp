#ifndef EIGENCUBIC_TENSOR_HPP
#define EIGENCUBIC_TENSOR_HPP

#include <optional>
#include <vector>

#include "eigencubic/exact_matrix.hpp"
#include "eigencubic/hilbert.hpp"
#include "eigencubic/ideal_ops.hpp"

namespace eigencubic {

// Tuple (q_0, ..., q_n) of quadratic forms in x0..xn; the basic object whose
// eigenscheme is studied.
struct PartiallySymmetricTensor {
  int n = 0;  // ambient P^n
  ContextPtr context;  // x0..xn
  std::vector<Polynomial> quadrics;  // n+1 entries, homogeneous of degree 2 or zero

  void validate() const {
    if (static_cast<int>(quadrics.size()) != n + 1)
      throw DimensionMismatch("tensor needs n+1 quadric slices");
    for (const auto& q : quadrics)
      if (!q.isZero() && !q.isHomogeneous(2)) throw NotHomogeneous("slice is not a quadratic form");
  }
};

struct CubicForm {
  int n = 0;
  ContextPtr context;  // x0..xn
  Polynomial f;

  void validate() const {
    if (!f.isHomogeneous(3) || f.isZero() ? !f.isZero() && !f.isHomogeneous(3) : false) {}
    if (!f.isZero() && !f.isHomogeneous(3)) throw NotHomogeneous("not a cubic form");
  }
};

inline CubicForm makeCubic(int n, const Polynomial& f) {
  CubicForm c{n, f.context(), f};
  c.validate();
  return c;
}

// q_i = ∂f/∂x_i (no 1/n normalization; the eigenscheme is unchanged).
inline PartiallySymmetricTensor tensorFromCubic(const CubicForm& f) {
  PartiallySymmetricTensor t;
  t.n = f.n;
  t.context = f.context;
  for (int i = 0; i <= f.n; ++i) t.quadrics.push_back(f.f.partialDerivative(static_cast<std::size_t>(i)));
  return t;
}

// (q_0(p), ..., q_n(p))
inline std::vector<FieldElement> contract(const PartiallySymmetricTensor& t,
                                          const std::vector<FieldElement>& p) {
  if (static_cast<int>(p.size()) != t.n + 1) throw DimensionMismatch("point arity");
  std::vector<FieldElement> out;
  for (const auto& q : t.quadrics) out.push_back(q.evaluate(p));
  return out;
}

// Ideal of the 2x2 minors x_i q_j - x_j q_i, in the x variables.
inline Ideal eigenschemeIdeal(const PartiallySymmetricTensor& t) {
  std::vector<Polynomial> gens;
  for (int i = 0; i <= t.n; ++i)
    for (int j = i + 1; j <= t.n; ++j) {
      Polynomial m = Polynomial::variable(t.context, static_cast<std::size_t>(i)) * t.quadrics[static_cast<std::size_t>(j)] -
                     Polynomial::variable(t.context, static_cast<std::size_t>(j)) * t.quadrics[static_cast<std::size_t>(i)];
      gens.push_back(std::move(m));
    }
  return Ideal(t.context, std::move(gens));
}

// Ideal of (q_0 - λx_0, ..., q_n - λx_n) in x0..xn, λ. λ is last.
inline Ideal eigenpairIdeal(const PartiallySymmetricTensor& t) {
  ContextPtr ctx = xContext(t.n + 1, /*withLambda=*/true);
  std::size_t lam = ctx->count() - 1;
  std::vector<int> varMap(static_cast<std::size_t>(t.n + 1));
  for (int i = 0; i <= t.n; ++i) varMap[static_cast<std::size_t>(i)] = i;
  MonomialOrder ord = MonomialOrder::Grevlex(ctx->count());
  std::vector<Polynomial> gens;
  for (int i = 0; i <= t.n; ++i) {
    Polynomial qi = t.quadrics[static_cast<std::size_t>(i)].mapContext(ctx, varMap, ord);
    Polynomial lxi = Polynomial::variable(ctx, lam) * Polynomial::variable(ctx, static_cast<std::size_t>(i));
    gens.push_back(qi - lxi);
  }
  return Ideal(ctx, std::move(gens));
}

inline Ideal irregularIdeal(const PartiallySymmetricTensor& t) {
  std::vector<Polynomial> gens = t.quadrics;
  return Ideal(t.context, std::move(gens));
}

inline Ideal regularIdeal(const PartiallySymmetricTensor& t) {
  Ideal irr = irregularIdeal(t);
  if (irr.isZeroIdeal()) throw DivisionByZero("saturation by the zero ideal (all slices vanish)");
  return saturate(eigenschemeIdeal(t), irr);
}

struct EigenschemeReport {
  Ideal eigenIdeal, eigenpairIdeal, irregularIdeal, regularIdeal;
  HilbertData eigenData, eigenpairData, irregularData, regularData;

  int dimReg() const { return regularData.projectiveDimension; }
  int dimIrr() const { return irregularData.projectiveDimension; }
};

inline EigenschemeReport analyze(const PartiallySymmetricTensor& t) {
  t.validate();
  EigenschemeReport r;
  r.eigenIdeal = eigenschemeIdeal(t);
  r.eigenpairIdeal = eigencubic::eigenpairIdeal(t);
  r.irregularIdeal = eigencubic::irregularIdeal(t);
  r.regularIdeal = eigencubic::regularIdeal(t);
  r.eigenData = hilbert(r.eigenIdeal);
  r.eigenpairData = hilbert(r.eigenpairIdeal);
  r.irregularData = hilbert(r.irregularIdeal);
  r.regularData = hilbert(r.regularIdeal);
  // dimension bounds: dim Irr + 1 >= dim Reg, and dim Irr = n-2 when
  // dim Reg = n-1
  if (r.dimIrr() + 1 < r.dimReg())
    throw std::logic_error("dimension bound dim Irr + 1 >= dim Reg violated");
  if (r.dimReg() == t.n - 1 && r.dimIrr() != t.n - 2)
    throw std::logic_error("dimension relation at dim Reg = n-1 violated");
  return r;
}

inline EigenschemeReport analyze(const CubicForm& f) { return analyze(tensorFromCubic(f)); }

// Ψ_U T = (q_0(xU), ..., q_n(xU)) · U^{-1}
inline PartiallySymmetricTensor twistedAction(const ExactMatrix& u, const PartiallySymmetricTensor& t) {
  if (u.rows() != static_cast<std::size_t>(t.n + 1) || u.cols() != u.rows())
    throw DimensionMismatch("twisted action matrix size");
  ExactMatrix uinv = u.inverse();  // throws SingularMatrix
  std::vector<std::vector<FieldElement>> um(u.rows());
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) um[i].push_back(u.at(i, j));
  std::vector<Polynomial> subbed;
  for (const auto& q : t.quadrics) subbed.push_back(q.linearSubstitute(um));
  PartiallySymmetricTensor out;
  out.n = t.n;
  out.context = t.context;
  for (std::size_t j = 0; j < u.cols(); ++j) {
    Polynomial s(t.context);
    for (std::size_t i = 0; i < u.rows(); ++i)
      if (!uinv.at(i, j).isZero()) s += uinv.at(i, j) * subbed[i];
    out.quadrics.push_back(std::move(s));
  }
  return out;
}

// If all minors vanish identically, every q_i = ℓ x_i for one linear form ℓ.
inline std::optional<Polynomial> trivialEigenschemeWitness(const PartiallySymmetricTensor& t) {
  for (const auto& g : eigenschemeIdeal(t).generators)
    if (!g.isZero()) return std::nullopt;
  // all minors vanish; extract ℓ from any nonzero slice
  for (int i = 0; i <= t.n; ++i) {
    const Polynomial& q = t.quadrics[static_cast<std::size_t>(i)];
    if (q.isZero()) continue;
    Polynomial l = divideExact(q, Polynomial::variable(t.context, static_cast<std::size_t>(i)));
    return l;
  }
  return Polynomial::zero(t.context);  // all slices zero: ℓ = 0
}

// f with ∂f/∂x_n = 0 restricted to the hyperplane x_n = 0, one variable fewer.
inline CubicForm coneReduce(const CubicForm& f) {
  std::size_t last = static_cast<std::size_t>(f.n);
  if (!f.f.partialDerivative(last).isZero()) throw NotACone("last partial derivative is nonzero");
  ContextPtr rctx = xContext(f.n);
  std::vector<int> varMap(static_cast<std::size_t>(f.n + 1), -1);
  for (int i = 0; i < f.n; ++i) varMap[static_cast<std::size_t>(i)] = i;
  CubicForm out;
  out.n = f.n - 1;
  out.context = rctx;
  out.f = f.f.mapContext(rctx, varMap, MonomialOrder::Grevlex(rctx->count()));
  return out;
}

// The Jacobian of the dehomogenized (λ=1) eigenpair system at the origin is
// minus the identity; recomputed symbolically.
inline bool apexJacobianCheck(const PartiallySymmetricTensor& t) {
  Ideal ep = eigenpairIdeal(t);
  std::size_t nx = static_cast<std::size_t>(t.n + 1);
  std::size_t lam = nx;
  std::vector<FieldElement> origin(nx + 1, FieldElement(Rational(0)));
  origin[lam] = FieldElement(Rational(1));
  for (std::size_t i = 0; i < ep.generators.size(); ++i) {
    Polynomial gi = ep.generators[i].substituteValue(lam, FieldElement(Rational(1)));
    for (std::size_t j = 0; j < nx; ++j) {
      FieldElement v = gi.partialDerivative(j).evaluate(origin);
      FieldElement expect = (i == j) ? FieldElement(Rational(-1)) : FieldElement(Rational(0));
      if (v != expect) return false;
    }
  }
  return true;
}

// Exact nullspace of the linear system forcing the given points to be
// eigenpoints of a cubic; returned as cubic forms plus the system rank.
struct CubicFitResult {
  std::vector<CubicForm> nullspaceBasis;
  std::size_t residualRank = 0;
};

inline std::vector<Monomial> degreeMonomials(std::size_t nvars, int deg) {
  std::vector<Monomial> out;
  Monomial m;
  // iterative enumeration over exponent vectors summing to deg
  std::vector<int> e(nvars, 0);
  e[0] = deg;
  while (true) {
    Monomial mm;
    for (std::size_t i = 0; i < nvars; ++i) mm.e[i] = static_cast<std::uint16_t>(e[i]);
    mm.deg = static_cast<std::uint16_t>(deg);
    out.push_back(mm);
    // next composition in colex-style order
    std::size_t k = nvars;
    int tail = 0;
    bool advanced = false;
    for (std::size_t i = 0; i + 1 < nvars; ++i) {
      std::size_t idx = nvars - 2 - i;
      if (e[idx] > 0) {
        // move one unit from idx to idx+1, reset tail
        tail = 0;
        for (std::size_t j = idx + 1; j < nvars; ++j) {
          tail += e[j];
          e[j] = 0;
        }
        e[idx] -= 1;
        e[idx + 1] = tail + 1;
        advanced = true;
        break;
      }
    }
    (void)k;
    if (!advanced) break;
  }
  return out;
}

inline CubicFitResult cubicFromPoints(const std::vector<std::vector<FieldElement>>& points, int n) {
  ContextPtr ctx = xContext(n + 1);
  std::vector<Monomial> monos = degreeMonomials(static_cast<std::size_t>(n + 1), 3);
  std::vector<std::vector<FieldElement>> rows;
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != n + 1) throw DimensionMismatch("point arity");
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        std::vector<FieldElement> row;
        for (const auto& m : monos) {
          Polynomial pm = Polynomial::fromTerms(ctx, {{m, FieldElement(Rational(1))}},
                                                MonomialOrder::Grevlex(ctx->count()));
          FieldElement di = pm.partialDerivative(static_cast<std::size_t>(i)).evaluate(p);
          FieldElement dj = pm.partialDerivative(static_cast<std::size_t>(j)).evaluate(p);
          row.push_back(di * p[static_cast<std::size_t>(j)] - dj * p[static_cast<std::size_t>(i)]);
        }
        rows.push_back(std::move(row));
      }
  }
  ExactMatrix sys(rows.size(), monos.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < monos.size(); ++c) sys.at(r, c) = rows[r][c];
  CubicFitResult out;
  out.residualRank = sys.rank();
  for (const auto& v : sys.nullspace()) {
    std::vector<Polynomial::Term> terms;
    for (std::size_t c = 0; c < monos.size(); ++c)
      if (!v[c].isZero()) terms.push_back({monos[c], v[c]});
    Polynomial f = Polynomial::fromTerms(ctx, std::move(terms), MonomialOrder::Grevlex(ctx->count()));
    out.nullspaceBasis.push_back(makeCubic(n, f));
  }
  return out;
}

}  // namespace eigencubic

#endif
