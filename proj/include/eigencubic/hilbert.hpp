#ifndef EIGENCUBIC_HILBERT_HPP
#define EIGENCUBIC_HILBERT_HPP

#include <vector>

#include "eigencubic/groebner.hpp"

namespace eigencubic {

// Dimension/degree data of Proj of the quotient by a homogeneous ideal.
// degree is meaningful only when projectiveDimension >= 0.
struct HilbertData {
  int projectiveDimension = -1;
  Int degree = 0;
  std::vector<Int> hilbertNumerator;  // numerator over (1-t)^nvars, ascending
};

namespace detail {

using IntPoly = std::vector<Int>;  // ascending coefficients

inline IntPoly ipAdd(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}
inline IntPoly ipMul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}
inline IntPoly ipShift(const IntPoly& a, std::size_t k) {
  if (a.empty()) return {};
  IntPoly r(a.size() + k, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
  return r;
}
inline Int ipAtOne(const IntPoly& a) {
  Int s = 0;
  for (const auto& c : a) s += c;
  return s;
}
// 1 - t^d
inline IntPoly ipOneMinusPower(std::size_t d) {
  IntPoly r(d + 1, Int(0));
  r[0] = 1;
  r[d] = -1;
  return r;
}

inline std::vector<Monomial> minimalGenerators(std::vector<Monomial> gens) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j) continue;
      if (gens[j].divides(gens[i]) && !(gens[j] == gens[i])) redundant = true;
      if (gens[j] == gens[i] && j < i) redundant = true;
    }
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

// Numerator of the Hilbert series of R/(monomial ideal) over (1-t)^nvars,
// by the standard pivot recursion.
inline IntPoly hilbertNumerator(std::vector<Monomial> gens, std::size_t nvars) {
  gens = minimalGenerators(std::move(gens));
  if (gens.empty()) return {Int(1)};
  for (const auto& m : gens)
    if (m.deg == 0) return {};  // unit ideal
  // pairwise coprime base case
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size() && coprime; ++j)
      if (!gens[i].coprimeWith(gens[j])) coprime = false;
  if (coprime) {
    IntPoly r{Int(1)};
    for (const auto& m : gens) r = ipMul(r, ipOneMinusPower(m.deg));
    return r;
  }
  // pivot on the most shared variable
  std::size_t best = 0;
  int bestCount = -1;
  for (std::size_t v = 0; v < nvars; ++v) {
    int cnt = 0;
    for (const auto& m : gens)
      if (m.e[v] > 0) ++cnt;
    if (cnt > bestCount) {
      bestCount = cnt;
      best = v;
    }
  }
  // I + (x_v): keep generators free of x_v, plus x_v itself
  std::vector<Monomial> plus{Monomial::variable(best)};
  for (const auto& m : gens)
    if (m.e[best] == 0) plus.push_back(m);
  // I : x_v
  std::vector<Monomial> colon;
  for (const auto& m : gens) {
    Monomial q = m;
    if (q.e[best] > 0) {
      q.e[best]--;
      q.deg--;
    }
    colon.push_back(q);
  }
  return ipAdd(hilbertNumerator(std::move(plus), nvars),
               ipShift(hilbertNumerator(std::move(colon), nvars), 1));
}

// exact division by (1 - t); the caller checks divisibility via ipAtOne
inline IntPoly ipDivOneMinusT(const IntPoly& a) {
  if (a.empty()) return {};
  IntPoly q(a.size() - 1, Int(0));
  Int carry = 0;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    carry += a[i];
    q[i] = carry;
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
  return q;
}

}  // namespace detail

inline HilbertData hilbertFromLeadingTerms(const std::vector<Monomial>& lts, std::size_t nvars) {
  detail::IntPoly numer = detail::hilbertNumerator(lts, nvars);
  HilbertData h;
  h.hilbertNumerator = numer;
  if (numer.empty()) {
    h.projectiveDimension = -1;  // unit ideal, empty scheme
    return h;
  }
  std::size_t cancels = 0;
  detail::IntPoly n = numer;
  while (!n.empty() && detail::ipAtOne(n) == 0) {
    n = detail::ipDivOneMinusT(n);
    ++cancels;
  }
  int poleOrder = static_cast<int>(nvars) - static_cast<int>(cancels);
  h.projectiveDimension = poleOrder - 1;
  if (h.projectiveDimension >= 0) h.degree = detail::ipAtOne(n);
  return h;
}

// Dimension and degree of Proj of the quotient ring, from the leading-term
// ideal of a Groebner basis.
inline HilbertData hilbert(const Ideal& ideal) {
  if (!ideal.isHomogeneous()) throw NotHomogeneous("hilbert requires a homogeneous ideal");
  std::size_t n = ideal.context->count();
  ReducedGroebnerBasis b = groebner(ideal, MonomialOrder::Grevlex(n));
  std::vector<Monomial> lts;
  for (const auto& p : b.elements) lts.push_back(p.leadingMonomial());
  return hilbertFromLeadingTerms(lts, n);
}

// Hilbert function value predicted by the numerator: coefficient of t^d in
// N(t) / (1-t)^nvars.
inline Int hilbertFunctionValue(const HilbertData& h, std::size_t nvars, int d) {
  Int s = 0;
  for (std::size_t i = 0; i < h.hilbertNumerator.size(); ++i) {
    int k = d - static_cast<int>(i);
    if (k < 0) continue;
    // C(nvars - 1 + k, nvars - 1)
    Int binom = 1;
    for (std::size_t j = 1; j < nvars; ++j) binom = binom * (k + static_cast<int>(j)) / static_cast<int>(j);
    s += h.hilbertNumerator[i] * binom;
  }
  return s;
}

}  // namespace eigencubic

#endif
