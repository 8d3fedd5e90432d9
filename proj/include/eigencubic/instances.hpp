#ifndef EIGENCUBIC_INSTANCES_HPP
#define EIGENCUBIC_INSTANCES_HPP

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "eigencubic/parser.hpp"
#include "eigencubic/tensor.hpp"

namespace eigencubic {

// Q(i), t^2 + 1, root +i.
inline FieldPtr gaussianField() {
  static FieldPtr f = [] {
    UniPoly m({Rational(1), Rational(0), Rational(1)});
    // companion roots sorted by (re, im): -i, +i
    auto fd = std::const_pointer_cast<FieldDescriptor>(makeField(m, 1));
    fd->namedElements["i"] = {Rational(0), Rational(1)};
    return FieldPtr(fd);
  }();
  return f;
}

// Q(theta, i) with theta^6 = -8/9 and i^2 = -1, presented as the simple
// extension generated by u = theta + i. The coefficient vectors below are
// exact and re-verified on first use.
inline FieldPtr compositumField() {
  static FieldPtr f = [] {
    std::vector<Rational> mc{
        Rational(1, 81),  Rational(0), Rational(98, 3),  Rational(0),
        Rational(-35, 3), Rational(0), Rational(196, 9), Rational(0),
        Rational(15),     Rational(0), Rational(6),      Rational(0),
        Rational(1)};
    UniPoly m(mc);
    std::vector<Rational> iCoeffs{
        Rational(0), Rational(321373, 6248),   Rational(0), Rational(-218701, 12496),
        Rational(0), Rational(53571, 1562),    Rational(0), Rational(13347, 568),
        Rational(0), Rational(58527, 6248),    Rational(0), Rational(19467, 12496)};
    std::vector<Rational> thetaCoeffs{
        Rational(0), Rational(-315125, 6248),  Rational(0), Rational(218701, 12496),
        Rational(0), Rational(-53571, 1562),   Rational(0), Rational(-13347, 568),
        Rational(0), Rational(-58527, 6248),   Rational(0), Rational(-19467, 12496)};
    // pick the complex root under which the stored i embeds to +i
    int rootIndex = -1;
    for (int k = 0; k < 12 && rootIndex < 0; ++k) {
      auto fk = std::const_pointer_cast<FieldDescriptor>(makeField(m, k));
      FieldElement ie(fk, iCoeffs);
      auto e = ie.embedComplex();
      if (std::abs(e.real) < 1e-8 && std::abs(e.imaginary - 1.0) < 1e-8) rootIndex = k;
    }
    if (rootIndex < 0) throw InvalidRootIndex("no embedding sends the stored i to +i");
    auto fd = std::const_pointer_cast<FieldDescriptor>(makeField(m, rootIndex));
    fd->namedElements["i"] = iCoeffs;
    fd->namedElements["theta"] = thetaCoeffs;
    FieldPtr out(fd);
    // exact sanity: i^2 = -1, theta^6 = -8/9, theta + i = generator
    FieldElement i = FieldElement::named(out, "i");
    FieldElement th = FieldElement::named(out, "theta");
    if (i * i != FieldElement(Rational(-1))) throw std::logic_error("stored i is wrong");
    FieldElement t6 = th * th * th;
    t6 = t6 * t6;
    if (t6 != FieldElement(Rational(-8, 9))) throw std::logic_error("stored theta is wrong");
    if (th + i != FieldElement::generator(out)) throw std::logic_error("generator mismatch");
    return out;
  }();
  return f;
}

// One nonempty cell of a dimensions table: the cubic plus the expected
// (delta, epsilon) = (dim Reg, dim Irr).
struct TableCell {
  std::string name;
  int n = 2;  // ambient P^n
  std::string text;
  FieldPtr field;  // null = Q
  int expectedDelta = 0;
  int expectedEpsilon = 0;
};

inline const std::vector<TableCell>& table1Cells() {
  static const std::vector<TableCell> cells{
      {"table1:delta-1-eps0", 2, "3*x0*(x1^2+x2^2)+(x1+i*x2)^3", gaussianField(), -1, 0},
      {"table1:delta-1-eps1", 2, "x0^2*(x1+i*x2)", gaussianField(), -1, 1},
      {"table1:delta0-eps-1", 2, "x0^3+x1^3+x2^3", nullptr, 0, -1},
      {"table1:delta0-eps0", 2, "x0^3+x1^3", nullptr, 0, 0},
      {"table1:delta0-eps1", 2, "x0^3", nullptr, 0, 1},
      {"table1:delta1-eps0", 2, "x0*(x1^2+x2^2)", nullptr, 1, 0},
  };
  return cells;
}

inline const std::vector<TableCell>& table2Cells() {
  static const std::vector<TableCell> cells{
      {"table2:delta-1-eps0", 3, "x0*(x1^2-x2^2-x3^2)+(theta*x1+i*x2+x3)^3", compositumField(), -1, 0},
      {"table2:delta-1-eps1", 3, "3*x0*(x1^2+x2^2)+(x1+i*x2)^3", gaussianField(), -1, 1},
      {"table2:delta-1-eps2", 3, "x0^2*(x1+i*x2)", gaussianField(), -1, 2},
      {"table2:delta0-eps-1", 3, "x0^3+x1^3+x2^3+x3^3", nullptr, 0, -1},
      {"table2:delta0-eps0", 3, "x0^3+x1^3+x2^3", nullptr, 0, 0},
      {"table2:delta0-eps1", 3, "x0^3+x1^3", nullptr, 0, 1},
      {"table2:delta0-eps2", 3, "x0^3", nullptr, 0, 2},
      {"table2:delta1-eps0", 3, "x0*x1^2+x0*x2^2+x0*x3^2+x1^3", nullptr, 1, 0},
      {"table2:delta1-eps1", 3, "x0*(x1^2+x2^2)", nullptr, 1, 1},
      {"table2:delta2-eps1", 3, "x0*(x1^2+x2^2+x3^2)", nullptr, 2, 1},
  };
  return cells;
}

// One row of the eigenpoint-count table: cubic plus the expected number of
// real points of Reg(f).
struct Table3Row {
  std::string name;
  int n = 2;
  std::string text;
  FieldPtr field;
  int expectedRealCount = 0;
};

inline const std::vector<Table3Row>& table3Rows() {
  static const std::vector<Table3Row> rows{
      {"table3:0", 2, "x0^2*(x1+i*x2)", gaussianField(), 0},
      {"table3:1", 2, "x0^3", nullptr, 1},
      {"table3:2", 2, "x1^2*x2", nullptr, 2},
      {"table3:3", 2, "x0^3+x1^3", nullptr, 3},
      {"table3:4", 2, "x0*x1*x2", nullptr, 4},
      {"table3:5", 2, "x0^3+x1^2*x2", nullptr, 5},
      {"table3:6", 2, "x0^2*x1+x0^2*x2+x1*x2^2", nullptr, 6},
      {"table3:7", 2, "x0^3+x1^3+x2^3", nullptr, 7},
      {"table3:8", 3, "x0^2*x1+x2^2*x3", nullptr, 8},
      {"table3:9", 3, "x0*x1*x2+x3^3", nullptr, 9},
      {"table3:10", 3, "x0*x1*x2+x0*x3^2+x1*x2^2", nullptr, 10},
      {"table3:11", 3, "x0^3+x1^2*x2+3*x3^3", nullptr, 11},
      {"table3:12", 3, "10*x1*x2^2-x0^2*x1-x0^2*x2-x0*x3^2", nullptr, 12},
      {"table3:13", 3, "x0^2*x1+x0^2*x2+x1*x2^2+x3^3", nullptr, 13},
      {"table3:14", 3, "x0*x3^2+x0*x1*x2+x1^3+10*x1*x2^2+x2^3", nullptr, 14},
      {"table3:15", 3, "x0^3+x1^3+x2^3+x3^3", nullptr, 15},
  };
  return rows;
}

inline CubicForm cubicFromText(const std::string& text, int n, const FieldPtr& field) {
  ContextPtr ctx = xContext(n + 1);
  Polynomial f = parsePolynomial(text, ctx, field);
  return makeCubic(n, f);
}

struct BuiltinInstance {
  std::string name;
  CubicForm cubic;
};

inline std::optional<BuiltinInstance> builtinByName(const std::string& name) {
  for (const auto& c : table1Cells())
    if (c.name == name) return BuiltinInstance{c.name, cubicFromText(c.text, c.n, c.field)};
  for (const auto& c : table2Cells())
    if (c.name == name) return BuiltinInstance{c.name, cubicFromText(c.text, c.n, c.field)};
  for (const auto& r : table3Rows())
    if (r.name == name) return BuiltinInstance{r.name, cubicFromText(r.text, r.n, r.field)};
  return std::nullopt;
}

}  // namespace eigencubic

#endif
