// Command line front end: analyze eigenschemes of cubics, solve for
// eigenpoints, reproduce the reference tables, and run the Grassmannian
// checks.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "eigencubic/grassmann.hpp"
#include "eigencubic/instances.hpp"
#include "eigencubic/zerodim.hpp"

using json = nlohmann::ordered_json;
using namespace eigencubic;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitWrongDimension = 4;
constexpr int kExitNumerical = 5;

struct Options {
  std::string input;
  std::string builtin;
  std::string fieldKind = "rational";
  std::string minpoly;
  int rootIndex = 0;
  int ambient = -1;  // -1 = infer from the input text
  std::uint64_t seed = 0;
  double residualTol = 1e-8;
  double realTol = 1e-6;
  double clusterTol = 1e-7;
  bool text = false;
};

FieldPtr resolveField(const Options& o) {
  if (o.fieldKind == "rational") return nullptr;
  if (o.fieldKind == "gaussian") return gaussianField();
  if (o.fieldKind == "ext") {
    if (o.minpoly.empty())
      throw SyntaxError("--field ext needs --minpoly c0,c1,...,cd (ascending)", 0);
    std::vector<Rational> coeffs;
    std::stringstream ss(o.minpoly);
    std::string tok;
    while (std::getline(ss, tok, ',')) coeffs.push_back(ratFromString(tok));
    return makeField(UniPoly(coeffs), o.rootIndex);
  }
  throw SyntaxError("unknown field kind '" + o.fieldKind + "'", 0);
}

int inferAmbient(const std::string& text) {
  int best = 1;
  for (std::size_t i = 0; i + 1 < text.size(); ++i)
    if (text[i] == 'x' && std::isdigit(static_cast<unsigned char>(text[i + 1])))
      best = std::max(best, text[i + 1] - '0');
  return best;
}

CubicForm loadCubic(const Options& o) {
  if (!o.builtin.empty()) {
    auto b = builtinByName(o.builtin);
    if (!b) throw SyntaxError("unknown builtin instance '" + o.builtin + "'", 0);
    return b->cubic;
  }
  if (o.input.empty()) throw SyntaxError("no input polynomial", 0);
  int n = o.ambient >= 0 ? o.ambient : inferAmbient(o.input);
  ContextPtr ctx = xContext(n + 1);
  Polynomial f = parsePolynomial(o.input, ctx, resolveField(o));
  if (f.isZero() || !f.isHomogeneous(3)) throw NotHomogeneous("input is not a nonzero cubic form");
  return makeCubic(n, f);
}

json idealJson(const Ideal& ideal) {
  ReducedGroebnerBasis b = groebner(ideal, MonomialOrder::Grevlex(ideal.context->count()));
  json gens = json::array();
  for (const auto& g : b.elements) gens.push_back(formatPolynomial(g));
  return gens;
}

json schemeJson(const Ideal& ideal, const HilbertData& h) {
  json j;
  j["groebnerBasis"] = idealJson(ideal);
  j["dimension"] = h.projectiveDimension;
  if (h.projectiveDimension >= 0) j["degree"] = h.degree.convert_to<long long>();
  return j;
}

json reportJson(const EigenschemeReport& r) {
  json j;
  j["eigenscheme"] = schemeJson(r.eigenIdeal, r.eigenData);
  j["eigenpairScheme"] = schemeJson(r.eigenpairIdeal, r.eigenpairData);
  j["irregular"] = schemeJson(r.irregularIdeal, r.irregularData);
  j["regular"] = schemeJson(r.regularIdeal, r.regularData);
  j["delta"] = r.dimReg();
  j["epsilon"] = r.dimIrr();
  return j;
}

void emit(const json& j, const Options& o) {
  if (o.text) {
    std::cout << j.dump(2) << "\n";  // the text form is the same pretty JSON
    return;
  }
  json out;
  out["schemaVersion"] = 1;
  for (auto& [k, v] : j.items()) out[k] = v;
  std::cout << out.dump(2) << "\n";
}

int cmdAnalyze(const Options& o) {
  EigenschemeReport r = analyze(loadCubic(o));
  json j;
  j["command"] = "analyze";
  j["report"] = reportJson(r);
  emit(j, o);
  return kExitOk;
}

json pointJson(const ProjectivePointC& p) {
  json coords = json::array();
  for (const auto& c : p.coordinates) {
    json z;
    z["re"] = c.real();
    z["im"] = c.imag();
    coords.push_back(z);
  }
  return coords;
}

int cmdSolve(const Options& o) {
  CubicForm f = loadCubic(o);
  EigenschemeReport r = analyze(f);
  if (r.dimReg() > 0) {
    std::cerr << "regular eigenscheme has dimension " << r.dimReg()
              << "; use analyze for positive-dimensional data\n";
    return kExitWrongDimension;
  }
  SolverConfig cfg;
  cfg.seed = o.seed;
  cfg.residualTol = o.residualTol;
  cfg.realTol = o.realTol;
  cfg.clusterTol = o.clusterTol;
  SolutionSet s = solveProjective(r.regularIdeal, cfg);
  json pts = json::array();
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    json p;
    p["coordinates"] = pointJson(s.points[i]);
    p["multiplicity"] = s.multiplicities[i];
    p["residual"] = s.residuals[i];
    auto rec = rationalRecover(s.points[i], r.regularIdeal, Int(1000000));
    if (rec) {
      json ex = json::array();
      for (const auto& c : *rec) ex.push_back(ratToString(c));
      p["exact"] = ex;
    }
    pts.push_back(p);
  }
  json j;
  j["command"] = "solve";
  j["totalDegree"] = s.totalDegree.convert_to<long long>();
  j["points"] = pts;
  j["realCount"] = countReal(s, cfg);
  emit(j, o);
  return kExitOk;
}

int cmdTables(int which, const Options& o) {
  json cells = json::array();
  bool allPass = true;
  if (which == 1 || which == 2) {
    for (const auto& c : (which == 1 ? table1Cells() : table2Cells())) {
      EigenschemeReport r = analyze(cubicFromText(c.text, c.n, c.field));
      bool pass = r.dimReg() == c.expectedDelta && r.dimIrr() == c.expectedEpsilon;
      allPass = allPass && pass;
      json j;
      j["cell"] = c.name;
      j["cubic"] = c.text;
      j["expected"] = {{"delta", c.expectedDelta}, {"epsilon", c.expectedEpsilon}};
      j["computed"] = {{"delta", r.dimReg()}, {"epsilon", r.dimIrr()}};
      j["pass"] = pass;
      cells.push_back(j);
    }
  } else if (which == 3) {
    for (const auto& row : table3Rows()) {
      EigenschemeReport r = analyze(cubicFromText(row.text, row.n, row.field));
      SolverConfig cfg;
      cfg.seed = o.seed;
      SolutionSet s = solveProjective(r.regularIdeal, cfg);
      int real = countReal(s, cfg);
      bool pass = r.dimReg() <= 0 && real == row.expectedRealCount;
      allPass = allPass && pass;
      json j;
      j["row"] = row.name;
      j["cubic"] = row.text;
      j["expectedRealCount"] = row.expectedRealCount;
      j["computedRealCount"] = real;
      j["pass"] = pass;
      cells.push_back(j);
    }
  } else {
    throw SyntaxError("table must be 1, 2 or 3", 0);
  }
  json j;
  j["command"] = "tables";
  j["table"] = which;
  j["cells"] = cells;
  j["allPass"] = allPass;
  emit(j, o);
  return allPass ? kExitOk : 1;
}

json matrixJson(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(formatCoefficient(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

int cmdGrass(const std::string& sub, const Options& o) {
  json j;
  j["command"] = "grass";
  j["subcommand"] = sub;
  if (sub == "binary-hurwitz") {
    ConjectureReport r = compareConjecture();
    j["eigendiscriminant"] = formatPolynomial(r.eigendiscriminant);
    j["restrictedHurwitz"] = formatPolynomial(r.restrictedHurwitz);
    j["ratio"] = ratToString(r.ratio);
    j["normalizedEqual"] = r.normalizedEqual;
    j["diffAgainstPrintedDisplay"] = formatPolynomial(r.diffAgainstPrinted);
    emit(j, o);
    return kExitOk;
  }
  CubicForm f = loadCubic(o);
  if (f.n != 3) {
    std::cerr << "grass subcommands need a quaternary cubic (n = 3)\n";
    return kExitPrecondition;
  }
  PartiallySymmetricTensor t = tensorFromCubic(f);
  EigenPlane plane = planeFromTensor(t);
  if (sub == "plane") {
    j["matrix"] = matrixJson(plane.matrix);
  } else if (sub == "pluecker") {
    json coords = json::array();
    for (const auto& c : plueckerCoordinates(plane)) coords.push_back(formatCoefficient(c));
    j["plueckerCoordinates"] = coords;
  } else if (sub == "check") {
    EigenplaneConditions c = checkEigenplaneConditions(plane.matrix);
    j["condition1"] = c.condition1;
    j["condition2"] = c.condition2;
  } else if (sub == "recover") {
    PartiallySymmetricTensor back = tensorFromPlane(plane.matrix);
    json qs = json::array();
    for (const auto& q : back.quadrics) qs.push_back(formatPolynomial(q));
    j["recoveredQuadrics"] = qs;
    bool same = true;
    for (std::size_t i = 0; i < 4; ++i) same = same && back.quadrics[i] == t.quadrics[i];
    j["roundtrip"] = same;
  } else if (sub == "symmetric") {
    j["isSymmetricPoint"] = isSymmetricPoint(t);
    auto w = symmetricWitness(t);
    if (w) j["witnessCubic"] = formatPolynomial(w->f);
  } else {
    throw SyntaxError("unknown grass subcommand '" + sub + "'", 0);
  }
  emit(j, o);
  return kExitOk;
}

int cmdFit(const std::string& path, const Options& o) {
  std::ifstream in(path);
  if (!in) throw SyntaxError("cannot open points file '" + path + "'", 0);
  std::vector<std::vector<FieldElement>> points;
  std::string line;
  int n = -1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<FieldElement> pt;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) pt.push_back(FieldElement(ratFromString(tok)));
    if (n < 0) n = static_cast<int>(pt.size()) - 1;
    if (static_cast<int>(pt.size()) != n + 1)
      throw SyntaxError("inconsistent point arity in points file", 0);
    points.push_back(std::move(pt));
  }
  if (points.empty()) throw SyntaxError("points file is empty", 0);
  CubicFitResult r = cubicFromPoints(points, n);
  json basis = json::array();
  for (const auto& c : r.nullspaceBasis) basis.push_back(formatPolynomial(c.f));
  json j;
  j["command"] = "fit";
  j["rank"] = r.residualRank;
  j["nullspaceBasis"] = basis;
  emit(j, o);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact eigenscheme toolkit for cubic forms"};
  app.require_subcommand(1);

  Options o;
  app.add_option("--field", o.fieldKind, "rational | gaussian | ext");
  app.add_option("--minpoly", o.minpoly, "comma-separated ascending coefficients for --field ext");
  app.add_option("--root", o.rootIndex, "complex root index for --field ext");
  app.add_option("--builtin", o.builtin, "named builtin instance, e.g. table2:delta-1-eps0");
  app.add_option("--n", o.ambient, "ambient projective dimension (default: inferred)");
  app.add_option("--seed", o.seed, "solver seed");
  app.add_option("--residual-tol", o.residualTol, "solver residual tolerance");
  app.add_option("--real-tol", o.realTol, "real-point tolerance");
  app.add_option("--cluster-tol", o.clusterTol, "point clustering tolerance");
  app.add_flag("--text", o.text, "plain output without the schema envelope");
  bool jsonFlag = false;
  app.add_flag("--json", jsonFlag, "JSON output (default)");

  std::string inputArg, grassSub, fitFile;
  int tableArg = 0;
  auto* analyzeCmd = app.add_subcommand("analyze", "eigenscheme dimensions and degrees");
  analyzeCmd->add_option("input", inputArg, "cubic form");
  auto* solveCmd = app.add_subcommand("solve", "numerical eigenpoints of the regular eigenscheme");
  solveCmd->add_option("input", inputArg, "cubic form");
  auto* tablesCmd = app.add_subcommand("tables", "reproduce a reference table");
  tablesCmd->add_option("which", tableArg, "1, 2 or 3")->required();
  auto* grassCmd = app.add_subcommand("grass", "Grassmannian correspondence checks");
  grassCmd->add_option("sub", grassSub, "plane|pluecker|check|recover|symmetric|binary-hurwitz")
      ->required();
  grassCmd->add_option("input", inputArg, "cubic form");
  auto* fitCmd = app.add_subcommand("fit", "cubics with the given eigenpoints");
  fitCmd->add_option("points", fitFile, "file with one comma-separated rational point per line")
      ->required();

  CLI11_PARSE(app, argc, argv);
  o.input = inputArg;

  try {
    if (analyzeCmd->parsed()) return cmdAnalyze(o);
    if (solveCmd->parsed()) return cmdSolve(o);
    if (tablesCmd->parsed()) return cmdTables(tableArg, o);
    if (grassCmd->parsed()) return cmdGrass(grassSub, o);
    if (fitCmd->parsed()) return cmdFit(fitFile, o);
  } catch (const SyntaxError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const UnknownVariable& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const NotHomogeneous& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const NotZeroDimensional& e) {
    std::cerr << "wrong dimension: " << e.what() << "\n";
    return kExitWrongDimension;
  } catch (const NoConvergence& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitOk;
}
