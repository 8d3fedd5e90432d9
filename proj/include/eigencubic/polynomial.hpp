#ifndef EIGENCUBIC_POLYNOMIAL_HPP
#define EIGENCUBIC_POLYNOMIAL_HPP

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "eigencubic/field.hpp"

namespace eigencubic {

constexpr std::size_t kMaxVars = 8;

// Ordered variable names. λ, when present, is spelled "L" and is the last
// variable by convention.
struct VariableContext {
  std::vector<std::string> names;
  std::size_t count() const { return names.size(); }
  int indexOf(const std::string& n) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == n) return static_cast<int>(i);
    return -1;
  }
};

using ContextPtr = std::shared_ptr<const VariableContext>;

inline ContextPtr makeContext(std::vector<std::string> names) {
  if (names.size() > kMaxVars) throw DimensionMismatch("too many variables");
  auto c = std::make_shared<VariableContext>();
  c->names = std::move(names);
  return c;
}

// x0..x{n-1}
inline ContextPtr xContext(int n, bool withLambda = false) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  if (withLambda) names.push_back("L");
  return makeContext(std::move(names));
}

struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint16_t deg = 0;

  static Monomial one() { return {}; }
  static Monomial variable(std::size_t i) {
    Monomial m;
    m.e[i] = 1;
    m.deg = 1;
    return m;
  }
  std::uint16_t operator[](std::size_t i) const { return e[i]; }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.deg == b.deg && a.e == b.e; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
    m.deg = static_cast<std::uint16_t>(a.deg + b.deg);
    return m;
  }
  bool divides(const Monomial& b) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e[i] > b.e[i]) return false;
    return true;
  }
  Monomial dividedBy(const Monomial& b) const {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint16_t>(e[i] - b.e[i]);
    m.deg = static_cast<std::uint16_t>(deg - b.deg);
    return m;
  }
  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    std::uint16_t d = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      m.e[i] = std::max(a.e[i], b.e[i]);
      d = static_cast<std::uint16_t>(d + m.e[i]);
    }
    m.deg = d;
    return m;
  }
  bool coprimeWith(const Monomial& b) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e[i] > 0 && b.e[i] > 0) return false;
    return true;
  }
};

// Total order on monomials. elimination(k) is a block order that eliminates
// the first k variables.
struct MonomialOrder {
  enum class Kind { lex, grevlex, elimination };
  Kind kind = Kind::grevlex;
  std::size_t elimBlock = 0;
  std::size_t nvars = kMaxVars;

  static MonomialOrder Lex(std::size_t n) { return {Kind::lex, 0, n}; }
  static MonomialOrder Grevlex(std::size_t n) { return {Kind::grevlex, 0, n}; }
  static MonomialOrder Elimination(std::size_t k, std::size_t n) { return {Kind::elimination, k, n}; }

  // +1 if a > b, -1 if a < b, 0 if equal
  int cmp(const Monomial& a, const Monomial& b) const {
    switch (kind) {
      case Kind::lex:
        for (std::size_t i = 0; i < nvars; ++i)
          if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        return 0;
      case Kind::grevlex:
        return grevlexRange(a, b, 0, nvars);
      case Kind::elimination: {
        int da = 0, db = 0;
        for (std::size_t i = 0; i < elimBlock; ++i) {
          da += a.e[i];
          db += b.e[i];
        }
        if (da != db) return da > db ? 1 : -1;
        int c = grevlexRange(a, b, 0, elimBlock);
        if (c) return c;
        return grevlexRange(a, b, elimBlock, nvars);
      }
    }
    return 0;
  }
  bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind == b.kind && a.elimBlock == b.elimBlock && a.nvars == b.nvars;
  }

 private:
  static int grevlexRange(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    int da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a.e[i];
      db += b.e[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    return 0;
  }
};

// Sparse multivariate polynomial; terms kept sorted descending by the active
// order, no zero coefficients, no duplicate monomials.
class Polynomial {
 public:
  using Term = std::pair<Monomial, FieldElement>;

  Polynomial() = default;
  explicit Polynomial(ContextPtr ctx)
      : ctx_(std::move(ctx)), order_(MonomialOrder::Grevlex(ctx_->count())) {}
  Polynomial(ContextPtr ctx, MonomialOrder ord) : ctx_(std::move(ctx)), order_(ord) {}

  static Polynomial zero(const ContextPtr& ctx) { return Polynomial(ctx); }
  static Polynomial constant(const ContextPtr& ctx, FieldElement c) {
    Polynomial p(ctx);
    if (!c.isZero()) p.terms_.push_back({Monomial::one(), std::move(c)});
    return p;
  }
  static Polynomial variable(const ContextPtr& ctx, std::size_t i, FieldElement c = FieldElement(Rational(1))) {
    Polynomial p(ctx);
    if (i >= ctx->count()) throw DimensionMismatch("variable index out of range");
    if (!c.isZero()) p.terms_.push_back({Monomial::variable(i), std::move(c)});
    return p;
  }
  static Polynomial fromTerms(const ContextPtr& ctx, std::vector<Term> terms,
                              MonomialOrder ord) {
    Polynomial p(ctx, ord);
    std::map<Monomial, FieldElement, MonoLess> acc{MonoLess{ord}};
    for (auto& [m, c] : terms) {
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(m, std::move(c));
      else
        it->second += c;
    }
    for (auto& [m, c] : acc)
      if (!c.isZero()) p.terms_.push_back({m, c});
    std::reverse(p.terms_.begin(), p.terms_.end());
    return p;
  }

  const ContextPtr& context() const { return ctx_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t nvars() const { return ctx_->count(); }

  const Monomial& leadingMonomial() const { return terms_.front().first; }
  const FieldElement& leadingCoefficient() const { return terms_.front().second; }

  int totalDegree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max<int>(d, m.deg);
    return d;
  }

  bool isHomogeneous(int degree) const {
    for (const auto& [m, c] : terms_)
      if (m.deg != degree) return false;
    return true;
  }
  bool isHomogeneous() const {
    return terms_.empty() || isHomogeneous(terms_.front().first.deg);
  }

  Polynomial withOrder(MonomialOrder ord) const {
    if (ord == order_) return *this;
    return fromTerms(ctx_, terms_, ord);
  }

  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r = a;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& bIn) {
    a.requireSameContext(bIn);
    const Polynomial& b = (bIn.order_ == a.order_) ? bIn : bIn.withOrder(a.order_);
    std::vector<Term> t;
    t.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      int c = a.order_.cmp(a.terms_[i].first, b.terms_[j].first);
      if (c > 0)
        t.push_back(a.terms_[i++]);
      else if (c < 0)
        t.push_back(b.terms_[j++]);
      else {
        FieldElement s = a.terms_[i].second + b.terms_[j].second;
        if (!s.isZero()) t.push_back({a.terms_[i].first, std::move(s)});
        ++i;
        ++j;
      }
    }
    while (i < a.terms_.size()) t.push_back(a.terms_[i++]);
    while (j < b.terms_.size()) t.push_back(b.terms_[j++]);
    Polynomial r(a.ctx_, a.order_);
    r.terms_ = std::move(t);
    return r;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.requireSameContext(b);
    std::map<Monomial, FieldElement, MonoLess> acc{MonoLess{a.order_}};
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m = ma * mb;
        FieldElement c = ca * cb;
        auto it = acc.find(m);
        if (it == acc.end())
          acc.emplace(std::move(m), std::move(c));
        else
          it->second += c;
      }
    Polynomial r(a.ctx_, a.order_);
    for (auto& [m, c] : acc)
      if (!c.isZero()) r.terms_.push_back({m, c});
    std::reverse(r.terms_.begin(), r.terms_.end());
    return r;
  }
  friend Polynomial operator*(const FieldElement& s, const Polynomial& a) {
    Polynomial r(a.ctx_, a.order_);
    if (s.isZero()) return r;
    r.terms_ = a.terms_;
    for (auto& [m, c] : r.terms_) c = s * c;
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    Polynomial bb = b.withOrder(a.order_);
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].first == bb.terms_[i].first) || a.terms_[i].second != bb.terms_[i].second)
        return false;
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(unsigned e) const {
    Polynomial r = constant(ctx_, FieldElement(Rational(1)));
    r.order_ = order_;
    Polynomial b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  Polynomial monic() const {
    if (isZero()) return *this;
    return invert(leadingCoefficient()) * *this;
  }

  // formal partial derivative
  Polynomial partialDerivative(std::size_t variableIndex) const {
    if (variableIndex >= nvars()) throw DimensionMismatch("variable index out of range");
    Polynomial r(ctx_, order_);
    std::vector<Term> t;
    for (const auto& [m, c] : terms_) {
      if (m.e[variableIndex] == 0) continue;
      Monomial m2 = m;
      FieldElement c2 = FieldElement(Rational(static_cast<int>(m.e[variableIndex]))) * c;
      m2.e[variableIndex]--;
      m2.deg--;
      t.push_back({m2, std::move(c2)});
    }
    return fromTerms(ctx_, std::move(t), order_);
  }

  // f(xU) where (xU)_j = sum_i x_i U[i][j]; substitutes the first U.size()
  // variables and leaves the rest (e.g. λ) untouched.
  Polynomial linearSubstitute(const std::vector<std::vector<FieldElement>>& u) const {
    std::size_t k = u.size();
    if (k > nvars()) throw DimensionMismatch("substitution matrix larger than variable count");
    for (const auto& row : u)
      if (row.size() != k) throw DimensionMismatch("substitution matrix not square");
    std::vector<Polynomial> subs;  // image of x_j
    for (std::size_t j = 0; j < k; ++j) {
      Polynomial s(ctx_, order_);
      for (std::size_t i = 0; i < k; ++i)
        if (!u[i][j].isZero()) s += variable(ctx_, i, u[i][j]);
      subs.push_back(std::move(s));
    }
    Polynomial out(ctx_, order_);
    for (const auto& [m, c] : terms_) {
      Polynomial t = constant(ctx_, c);
      for (std::size_t j = 0; j < k; ++j)
        for (int rep = 0; rep < m.e[j]; ++rep) t = t * subs[j];
      // untouched tail variables
      Monomial tail;
      for (std::size_t j = k; j < nvars(); ++j) {
        tail.e[j] = m.e[j];
        tail.deg = static_cast<std::uint16_t>(tail.deg + m.e[j]);
      }
      if (tail.deg) {
        Polynomial mt(ctx_, order_);
        mt.terms_.push_back({tail, FieldElement(Rational(1))});
        t = t * mt;
      }
      out += t;
    }
    return out;
  }

  FieldElement evaluate(const std::vector<FieldElement>& point) const {
    if (point.size() != nvars()) throw DimensionMismatch("evaluation point arity");
    FieldElement acc(Rational(0));
    for (const auto& [m, c] : terms_) {
      FieldElement t = c;
      for (std::size_t i = 0; i < nvars(); ++i)
        for (int k = 0; k < m.e[i]; ++k) t *= point[i];
      acc += t;
    }
    return acc;
  }

  std::complex<double> evaluateComplex(const std::vector<std::complex<double>>& point) const {
    if (point.size() != nvars()) throw DimensionMismatch("evaluation point arity");
    std::complex<double> acc = 0;
    for (const auto& [m, c] : terms_) {
      std::complex<double> t = c.toComplex();
      for (std::size_t i = 0; i < nvars(); ++i)
        for (int k = 0; k < m.e[i]; ++k) t *= point[i];
      acc += t;
    }
    return acc;
  }

  // coefficient of a monomial (zero if absent)
  FieldElement coefficientOf(const Monomial& m) const {
    for (const auto& [mm, c] : terms_)
      if (mm == m) return c;
    return FieldElement(Rational(0));
  }

  bool involvesVariable(std::size_t i) const {
    for (const auto& [m, c] : terms_)
      if (m.e[i] > 0) return true;
    return false;
  }

  // Move the polynomial into another context: varMap[i] = index in the new
  // context of old variable i, or -1 when the variable does not occur.
  Polynomial mapContext(const ContextPtr& newCtx, const std::vector<int>& varMap,
                        MonomialOrder ord) const {
    std::vector<Term> t;
    for (const auto& [m, c] : terms_) {
      Monomial m2;
      for (std::size_t i = 0; i < nvars(); ++i) {
        if (m.e[i] == 0) continue;
        if (varMap[i] < 0) throw DimensionMismatch("variable lost in context mapping");
        m2.e[static_cast<std::size_t>(varMap[i])] =
            static_cast<std::uint16_t>(m2.e[static_cast<std::size_t>(varMap[i])] + m.e[i]);
      }
      m2.deg = m.deg;
      t.push_back({m2, c});
    }
    return fromTerms(newCtx, std::move(t), ord);
  }

  // Substitute value for a variable (used for dehomogenization).
  Polynomial substituteValue(std::size_t var, const FieldElement& value) const {
    std::vector<Term> t;
    for (const auto& [m, c] : terms_) {
      FieldElement c2 = c;
      for (int k = 0; k < m.e[var]; ++k) c2 *= value;
      Monomial m2 = m;
      m2.deg = static_cast<std::uint16_t>(m2.deg - m2.e[var]);
      m2.e[var] = 0;
      if (!c2.isZero()) t.push_back({m2, std::move(c2)});
    }
    return fromTerms(ctx_, std::move(t), order_);
  }

 private:
  struct MonoLess {
    MonomialOrder ord;
    bool operator()(const Monomial& a, const Monomial& b) const { return ord.cmp(a, b) < 0; }
  };
  void requireSameContext(const Polynomial& o) const {
    if (ctx_ != o.ctx_ && ctx_->names != o.ctx_->names)
      throw DimensionMismatch("polynomials from different variable contexts");
  }

  ContextPtr ctx_;
  MonomialOrder order_ = MonomialOrder::Grevlex(kMaxVars);
  std::vector<Term> terms_;
};

}  // namespace eigencubic

#endif
