#ifndef EIGENCUBIC_IDEAL_OPS_HPP
#define EIGENCUBIC_IDEAL_OPS_HPP

#include <vector>

#include "eigencubic/groebner.hpp"

namespace eigencubic {

// Exact division by a single polynomial; the remainder must vanish.
inline Polynomial divideExact(const Polynomial& p, const Polynomial& g) {
  if (g.isZero()) throw DivisionByZero("exact division by zero polynomial");
  MonomialOrder ord = MonomialOrder::Grevlex(p.nvars());
  Polynomial r = p.withOrder(ord);
  Polynomial gg = g.withOrder(ord);
  FieldElement lcInv = invert(gg.leadingCoefficient());
  Polynomial q(p.context(), ord);
  while (!r.isZero()) {
    if (!gg.leadingMonomial().divides(r.leadingMonomial()))
      throw DivisionByZero("polynomial is not a multiple of the divisor");
    Monomial m = r.leadingMonomial().dividedBy(gg.leadingMonomial());
    FieldElement c = r.leadingCoefficient() * lcInv;
    Polynomial t = Polynomial::fromTerms(p.context(), {{m, c}}, ord);
    q += t;
    r -= t * gg;
  }
  return q;
}

namespace detail {

// Extended context with one auxiliary variable in front.
struct AuxContext {
  ContextPtr ctx;
  std::vector<int> intoAux;   // old index -> aux index
  std::vector<int> fromAux;   // aux index -> old index (-1 for aux var)
};

inline AuxContext auxContext(const ContextPtr& base, const std::string& auxName) {
  AuxContext a;
  std::vector<std::string> names{auxName};
  for (const auto& n : base->names) names.push_back(n);
  a.ctx = makeContext(std::move(names));
  a.intoAux.resize(base->count());
  a.fromAux.assign(base->count() + 1, -1);
  for (std::size_t i = 0; i < base->count(); ++i) {
    a.intoAux[i] = static_cast<int>(i + 1);
    a.fromAux[i + 1] = static_cast<int>(i);
  }
  return a;
}

}  // namespace detail

// I ∩ J via the auxiliary-variable construction w·I + (1−w)·J and
// elimination of w.
inline Ideal intersect(const Ideal& i, const Ideal& j) {
  if (i.isZeroIdeal()) return i;
  if (j.isZeroIdeal()) return j;
  auto aux = detail::auxContext(i.context, "w");
  MonomialOrder elim = MonomialOrder::Elimination(1, aux.ctx->count());
  Polynomial w = Polynomial::variable(aux.ctx, 0);
  Polynomial oneMinusW = Polynomial::constant(aux.ctx, FieldElement(Rational(1))) - w;
  std::vector<Polynomial> gens;
  for (const auto& p : i.generators) gens.push_back(w * p.mapContext(aux.ctx, aux.intoAux, elim));
  for (const auto& p : j.generators) gens.push_back(oneMinusW * p.mapContext(aux.ctx, aux.intoAux, elim));
  ReducedGroebnerBasis b = groebner(Ideal(aux.ctx, std::move(gens)), elim);
  MonomialOrder back = MonomialOrder::Grevlex(i.context->count());
  std::vector<Polynomial> out;
  for (const auto& p : b.elements)
    if (!p.involvesVariable(0)) out.push_back(p.mapContext(i.context, aux.fromAux, back));
  return Ideal(i.context, std::move(out));
}

// I : (g) = (I ∩ (g)) / g
inline Ideal quotient(const Ideal& i, const Polynomial& g) {
  if (g.isZero()) throw DivisionByZero("ideal quotient by zero polynomial");
  Ideal inter = intersect(i, Ideal(i.context, {g}));
  std::vector<Polynomial> out;
  for (const auto& p : inter.generators) out.push_back(divideExact(p, g));
  return Ideal(i.context, std::move(out));
}

inline Ideal quotientIdeal(const Ideal& i, const Ideal& j) {
  if (j.isZeroIdeal()) throw DivisionByZero("ideal quotient by the zero ideal");
  bool first = true;
  Ideal acc;
  for (const auto& g : j.generators) {
    Ideal q = quotient(i, g);
    acc = first ? q : intersect(acc, q);
    first = false;
  }
  return acc;
}

// I : J^∞ as the fixed point of iterated quotients. Keeps every intermediate
// ideal homogeneous when the inputs are.
inline Ideal saturate(const Ideal& i, const Ideal& j) {
  Ideal cur = i;
  while (true) {
    Ideal nxt = quotientIdeal(cur, j);
    if (idealEqual(cur, nxt)) return cur;
    cur = std::move(nxt);
  }
}

// Eliminate the given variables; the result lives in the context with those
// variables removed. Variables are moved to the front internally and a block
// order is used.
inline Ideal eliminateVariables(const Ideal& i, const std::vector<std::size_t>& vars) {
  std::size_t n = i.context->count();
  std::vector<bool> kill(n, false);
  for (auto v : vars) {
    if (v >= n) throw DimensionMismatch("eliminated variable out of range");
    kill[v] = true;
  }
  std::size_t k = vars.size();
  // permuted context: eliminated variables first
  std::vector<std::string> names;
  std::vector<int> perm(n, -1);  // old -> permuted
  {
    std::size_t pos = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (kill[v]) {
        names.push_back(i.context->names[v]);
        perm[v] = static_cast<int>(pos++);
      }
    for (std::size_t v = 0; v < n; ++v)
      if (!kill[v]) {
        names.push_back(i.context->names[v]);
        perm[v] = static_cast<int>(pos++);
      }
  }
  ContextPtr pctx = makeContext(names);
  MonomialOrder elim = MonomialOrder::Elimination(k, n);
  std::vector<Polynomial> gens;
  for (const auto& p : i.generators) gens.push_back(p.mapContext(pctx, perm, elim));
  ReducedGroebnerBasis b = groebner(Ideal(pctx, std::move(gens)), elim);

  // reduced context without the eliminated variables
  std::vector<std::string> keepNames;
  for (std::size_t v = 0; v < n; ++v)
    if (!kill[v]) keepNames.push_back(i.context->names[v]);
  ContextPtr rctx = makeContext(keepNames);
  std::vector<int> down(n, -1);  // permuted -> reduced
  for (std::size_t v = k; v < n; ++v) down[v] = static_cast<int>(v - k);
  MonomialOrder back = MonomialOrder::Grevlex(rctx->count());
  std::vector<Polynomial> out;
  for (const auto& p : b.elements) {
    bool touches = false;
    for (std::size_t v = 0; v < k && !touches; ++v)
      if (p.involvesVariable(v)) touches = true;
    if (!touches) out.push_back(p.mapContext(rctx, down, back));
  }
  return Ideal(rctx, std::move(out));
}

// Eliminate the first k variables (spec form).
inline Ideal eliminate(const Ideal& i, std::size_t k) {
  if (k == 0 || k >= i.context->count()) throw DimensionMismatch("invalid elimination block");
  std::vector<std::size_t> vars(k);
  for (std::size_t v = 0; v < k; ++v) vars[v] = v;
  return eliminateVariables(i, vars);
}

// p ∈ rad(I), by the Rabinowitsch trick: 1 ∈ I + (1 − w p).
inline bool radicalContainsPolynomial(const Ideal& i, const Polynomial& p) {
  auto aux = detail::auxContext(i.context, "w");
  MonomialOrder ord = MonomialOrder::Grevlex(aux.ctx->count());
  Polynomial w = Polynomial::variable(aux.ctx, 0);
  std::vector<Polynomial> gens;
  for (const auto& g : i.generators) gens.push_back(g.mapContext(aux.ctx, aux.intoAux, ord));
  gens.push_back(Polynomial::constant(aux.ctx, FieldElement(Rational(1))) -
                 w * p.mapContext(aux.ctx, aux.intoAux, ord));
  ReducedGroebnerBasis b = groebner(Ideal(aux.ctx, std::move(gens)), ord);
  return b.isUnit();
}

}  // namespace eigencubic

#endif
