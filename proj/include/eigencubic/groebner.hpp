#ifndef EIGENCUBIC_GROEBNER_HPP
#define EIGENCUBIC_GROEBNER_HPP

#include <optional>
#include <set>
#include <vector>

#include "eigencubic/polynomial.hpp"

namespace eigencubic {

struct Ideal {
  ContextPtr context;
  std::vector<Polynomial> generators;  // nonzero, shared context

  Ideal() = default;
  Ideal(ContextPtr ctx, std::vector<Polynomial> gens) : context(std::move(ctx)) {
    for (auto& g : gens)
      if (!g.isZero()) generators.push_back(std::move(g));
  }

  bool isZeroIdeal() const { return generators.empty(); }
  bool isHomogeneous() const {
    for (const auto& g : generators)
      if (!g.isHomogeneous()) return false;
    return true;
  }
};

struct ReducedGroebnerBasis {
  MonomialOrder order;
  std::vector<Polynomial> elements;  // monic, tail-reduced, sorted by leading monomial

  bool isUnit() const {
    return elements.size() == 1 && elements[0].terms().size() == 1 &&
           elements[0].leadingMonomial().deg == 0;
  }
  bool isZero() const { return elements.empty(); }
};

// Remainder on division by G: no term of the result is divisible by any
// leading monomial of G. Assumes all elements of G are monic.
inline Polynomial normalForm(const Polynomial& pIn, const std::vector<Polynomial>& g,
                             const MonomialOrder& order) {
  Polynomial p = pIn.withOrder(order);
  Polynomial rem(p.context(), order);
  while (!p.isZero()) {
    const Monomial& lm = p.leadingMonomial();
    const Polynomial* divisor = nullptr;
    for (const auto& gi : g)
      if (gi.leadingMonomial().divides(lm)) {
        divisor = &gi;
        break;
      }
    if (divisor) {
      Monomial q = lm.dividedBy(divisor->leadingMonomial());
      Polynomial mono(p.context(), order);
      mono = Polynomial::fromTerms(p.context(), {{q, p.leadingCoefficient()}}, order);
      p -= mono * *divisor;
    } else {
      Polynomial lead = Polynomial::fromTerms(p.context(), {{lm, p.leadingCoefficient()}}, order);
      rem += lead;
      p -= lead;
    }
  }
  return rem;
}

inline Polynomial normalForm(const Polynomial& p, const ReducedGroebnerBasis& g) {
  return normalForm(p, g.elements, g.order);
}

namespace detail {

inline Polynomial sPolynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  Monomial l = lcm(f.leadingMonomial(), g.leadingMonomial());
  Monomial mf = l.dividedBy(f.leadingMonomial());
  Monomial mg = l.dividedBy(g.leadingMonomial());
  // f, g monic
  Polynomial a = Polynomial::fromTerms(f.context(), {{mf, FieldElement(Rational(1))}}, order) * f;
  Polynomial b = Polynomial::fromTerms(g.context(), {{mg, FieldElement(Rational(1))}}, order) * g;
  return a - b;
}

}  // namespace detail

// Buchberger with the product and chain pair-elimination criteria and
// degree-normal selection.
inline ReducedGroebnerBasis groebner(const Ideal& ideal, const MonomialOrder& order) {
  std::vector<Polynomial> g;
  for (const auto& p : ideal.generators)
    if (!p.isZero()) g.push_back(p.withOrder(order).monic());

  struct Pair {
    std::size_t i, j;
    Monomial l;
  };
  auto pairLess = [&order](const Pair& a, const Pair& b) {
    if (a.l.deg != b.l.deg) return a.l.deg < b.l.deg;
    return order.cmp(a.l, b.l) < 0;
  };

  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> considered;
  auto addPairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i)
      pairs.push_back({i, j, lcm(g[i].leadingMonomial(), g[j].leadingMonomial())});
  };
  for (std::size_t j = 0; j < g.size(); ++j) addPairs(j);

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), pairLess);
    Pair pr = *it;
    pairs.erase(it);
    considered.insert({pr.i, pr.j});
    // product criterion
    if (g[pr.i].leadingMonomial().coprimeWith(g[pr.j].leadingMonomial())) continue;
    // chain criterion
    bool skip = false;
    for (std::size_t k = 0; k < g.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!g[k].leadingMonomial().divides(pr.l)) continue;
      auto key1 = std::minmax(pr.i, k);
      auto key2 = std::minmax(pr.j, k);
      if (considered.count({key1.first, key1.second}) && considered.count({key2.first, key2.second}))
        skip = true;
    }
    if (skip) continue;
    Polynomial s = detail::sPolynomial(g[pr.i], g[pr.j], order);
    Polynomial r = normalForm(s, g, order);
    if (!r.isZero()) {
      g.push_back(r.monic());
      addPairs(g.size() - 1);
    }
  }

  // minimalize
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      if (g[j].leadingMonomial().divides(g[i].leadingMonomial())) {
        if (!(g[i].leadingMonomial() == g[j].leadingMonomial()) || j < i) redundant = true;
      }
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  // inter-reduce tails
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(normalForm(minimal[i], others, order).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&order](const Polynomial& a, const Polynomial& b) {
    return order.cmp(a.leadingMonomial(), b.leadingMonomial()) < 0;
  });

  ReducedGroebnerBasis basis{order, std::move(reduced)};
  // membership sanity on the inputs
  for (const auto& p : ideal.generators)
    if (!normalForm(p, basis).isZero())
      throw std::logic_error("groebner: input generator does not reduce to zero");
  return basis;
}

inline bool sPolynomialsReduceToZero(const ReducedGroebnerBasis& b) {
  for (std::size_t i = 0; i < b.elements.size(); ++i)
    for (std::size_t j = i + 1; j < b.elements.size(); ++j) {
      Polynomial s = detail::sPolynomial(b.elements[i], b.elements[j], b.order);
      if (!normalForm(s, b.elements, b.order).isZero()) return false;
    }
  return true;
}

inline bool idealContainsPolynomial(const ReducedGroebnerBasis& b, const Polynomial& p) {
  return normalForm(p, b).isZero();
}

// J ⊆ I, both over the same context.
inline bool idealContains(const Ideal& i, const Ideal& j) {
  ReducedGroebnerBasis bi = groebner(i, MonomialOrder::Grevlex(i.context->count()));
  for (const auto& p : j.generators)
    if (!idealContainsPolynomial(bi, p)) return false;
  return true;
}

inline bool idealEqual(const Ideal& i, const Ideal& j) {
  MonomialOrder ord = MonomialOrder::Grevlex(i.context->count());
  ReducedGroebnerBasis bi = groebner(i, ord);
  ReducedGroebnerBasis bj = groebner(j, ord);
  if (bi.elements.size() != bj.elements.size()) return false;
  for (std::size_t k = 0; k < bi.elements.size(); ++k)
    if (bi.elements[k] != bj.elements[k]) return false;
  return true;
}

}  // namespace eigencubic

#endif
