#ifndef EIGENCUBIC_PARSER_HPP
#define EIGENCUBIC_PARSER_HPP

#include <cctype>
#include <string>

#include "eigencubic/polynomial.hpp"

namespace eigencubic {

// Recursive-descent parser for the ASCII polynomial grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := '(' expr ')' | rational | variable | generator
// Variables are x0..x9 and L; the field generator is t, with i / theta as
// aliases when the field defines them. Implicit multiplication is rejected.
class PolynomialParser {
 public:
  PolynomialParser(std::string text, ContextPtr ctx, FieldPtr field)
      : text_(std::move(text)), ctx_(std::move(ctx)), field_(std::move(field)) {}

  Polynomial parse() {
    Polynomial p = parseExpr();
    skipSpace();
    if (pos_ != text_.size()) throw SyntaxError("unexpected trailing input", pos_);
    return p;
  }

 private:
  Polynomial parseExpr() {
    skipSpace();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    Polynomial acc = parseTerm();
    if (neg) acc = -acc;
    while (true) {
      skipSpace();
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += parseTerm();
      } else if (c == '-') {
        ++pos_;
        acc -= parseTerm();
      } else {
        return acc;
      }
    }
  }

  Polynomial parseTerm() {
    Polynomial acc = parseFactor();
    while (true) {
      skipSpace();
      if (peek() == '*') {
        ++pos_;
        acc *= parseFactor();
      } else {
        return acc;
      }
    }
  }

  Polynomial parseFactor() {
    Polynomial base = parseBase();
    skipSpace();
    if (peek() == '^') {
      ++pos_;
      skipSpace();
      if (!std::isdigit(peek())) throw SyntaxError("expected exponent", pos_);
      unsigned e = 0;
      while (std::isdigit(peek())) e = e * 10 + static_cast<unsigned>(text_[pos_++] - '0');
      return base.pow(e);
    }
    return base;
  }

  Polynomial parseBase() {
    skipSpace();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = parseExpr();
      skipSpace();
      if (peek() != ')') throw SyntaxError("expected ')'", pos_);
      ++pos_;
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -parseBase();
    }
    if (std::isdigit(c)) {
      std::size_t start = pos_;
      while (std::isdigit(peek())) ++pos_;
      if (peek() == '/') {
        ++pos_;
        if (!std::isdigit(peek())) throw SyntaxError("expected denominator", pos_);
        while (std::isdigit(peek())) ++pos_;
      }
      Rational r = ratFromString(text_.substr(start, pos_ - start));
      return Polynomial::constant(ctx_, FieldElement(r));
    }
    if (std::isalpha(c)) {
      std::size_t start = pos_;
      while (std::isalnum(peek())) ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      int idx = ctx_->indexOf(name);
      if (idx >= 0) return Polynomial::variable(ctx_, static_cast<std::size_t>(idx));
      if (field_) {
        if (name == "t") return Polynomial::constant(ctx_, FieldElement::generator(field_));
        auto it = field_->namedElements.find(name);
        if (it != field_->namedElements.end())
          return Polynomial::constant(ctx_, FieldElement(field_, it->second));
      }
      throw UnknownVariable("unknown variable '" + name + "'");
    }
    throw SyntaxError("unexpected character", pos_);
  }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  std::string text_;
  ContextPtr ctx_;
  FieldPtr field_;
  std::size_t pos_ = 0;
};

inline Polynomial parsePolynomial(const std::string& text, const ContextPtr& ctx,
                                  const FieldPtr& field = nullptr) {
  return PolynomialParser(text, ctx, field).parse();
}

inline std::string formatCoefficient(const FieldElement& c) {
  if (c.isRational()) return ratToString(c.rationalValue());
  std::string s = "(";
  bool first = true;
  const auto& v = c.coefficients();
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    std::string part = ratToString(v[k]);
    if (!first && part[0] != '-') s += "+";
    s += part;
    if (k == 1) s += "*t";
    if (k > 1) s += "*t^" + std::to_string(k);
    first = false;
  }
  s += ")";
  return s;
}

// Emits the polynomial in the parser grammar so output is re-ingestible.
inline std::string formatPolynomial(const Polynomial& p) {
  if (p.isZero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    std::string cs = formatCoefficient(c);
    std::string ms;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (m.e[i] == 0) continue;
      if (!ms.empty()) ms += "*";
      ms += p.context()->names[i];
      if (m.e[i] > 1) ms += "^" + std::to_string(m.e[i]);
    }
    std::string term;
    if (ms.empty())
      term = cs;
    else if (cs == "1")
      term = ms;
    else if (cs == "-1")
      term = "-" + ms;
    else
      term = cs + "*" + ms;
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

}  // namespace eigencubic

#endif
