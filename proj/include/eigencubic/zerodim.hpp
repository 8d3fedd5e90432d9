#ifndef EIGENCUBIC_ZERODIM_HPP
#define EIGENCUBIC_ZERODIM_HPP

#include <complex>
#include <optional>
#include <random>
#include <vector>

#include "eigencubic/complex_eigen.hpp"
#include "eigencubic/hilbert.hpp"
#include "eigencubic/ideal_ops.hpp"

namespace eigencubic {

// Numerical point of projective space, scaled so its largest-magnitude
// coordinate is exactly 1.
struct ProjectivePointC {
  std::vector<std::complex<double>> coordinates;

  void normalize() {
    std::size_t best = 0;
    double bestAbs = std::abs(coordinates[0]);
    for (std::size_t i = 1; i < coordinates.size(); ++i) {
      double a = std::abs(coordinates[i]);
      if (a > bestAbs) {
        bestAbs = a;
        best = i;
      }
    }
    if (bestAbs == 0.0) throw DimensionMismatch("zero vector is not a projective point");
    std::complex<double> s = coordinates[best];
    for (auto& c : coordinates) c /= s;
    coordinates[best] = 1.0;  // kill rounding residue in the pivot slot
  }
};

// Chordal (Fubini-Study) distance between projective points.
inline double projectiveDistance(const ProjectivePointC& a, const ProjectivePointC& b) {
  std::complex<double> dot = 0;
  double na = 0, nb = 0;
  for (std::size_t i = 0; i < a.coordinates.size(); ++i) {
    dot += std::conj(a.coordinates[i]) * b.coordinates[i];
    na += std::norm(a.coordinates[i]);
    nb += std::norm(b.coordinates[i]);
  }
  double c2 = std::norm(dot) / (na * nb);
  if (c2 > 1.0) c2 = 1.0;
  return std::sqrt(1.0 - c2);
}

struct SolutionSet {
  std::vector<ProjectivePointC> points;
  std::vector<int> multiplicities;
  std::vector<double> residuals;
  Int totalDegree = 0;
};

struct SolverConfig {
  std::uint64_t seed = 0;
  double residualTol = 1e-8;
  double realTol = 1e-6;
  double clusterTol = 1e-7;
  bool ascendingCharts = false;  // chart order x_0=1 first instead of x_n=1

  void validate() const {
    if (residualTol <= 0 || realTol <= 0 || clusterTol <= 0)
      throw DimensionMismatch("tolerances must be positive");
  }
};

namespace detail {

constexpr std::size_t kStaircaseCap = 256;

// Monomial basis of the quotient ring: all monomials (in the chart
// variables) outside the leading-term ideal.
inline std::vector<Monomial> staircase(const ReducedGroebnerBasis& b,
                                       const std::vector<std::size_t>& vars) {
  auto reducible = [&b](const Monomial& m) {
    for (const auto& g : b.elements)
      if (g.leadingMonomial().divides(m)) return true;
    return false;
  };
  std::vector<Monomial> basis;
  std::vector<Monomial> frontier{Monomial::one()};
  auto seen = [&basis](const Monomial& m) {
    for (const auto& x : basis)
      if (x == m) return true;
    return false;
  };
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier) {
      if (reducible(m) || seen(m)) continue;
      basis.push_back(m);
      if (basis.size() > kStaircaseCap)
        throw NotZeroDimensional("quotient ring dimension exceeds the solver cap");
      for (auto v : vars) next.push_back(m * Monomial::variable(v));
    }
    frontier = std::move(next);
  }
  return basis;
}

struct ChartPoint {
  ProjectivePointC p;
  int multiplicity = 1;
};

// Solve in the affine chart x_chart = 1. Empty result when the chart misses
// every point.
inline std::vector<ChartPoint> solveChart(const Ideal& ideal, std::size_t chart,
                                          const SolverConfig& cfg, std::uint64_t chartSeed) {
  std::size_t n = ideal.context->count();
  std::vector<std::size_t> vars;
  for (std::size_t v = 0; v < n; ++v)
    if (v != chart) vars.push_back(v);

  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators)
    gens.push_back(g.substituteValue(chart, FieldElement(Rational(1))));
  MonomialOrder ord = MonomialOrder::Grevlex(n);
  ReducedGroebnerBasis b = groebner(Ideal(ideal.context, std::move(gens)), ord);
  if (b.isUnit()) return {};
  std::vector<Monomial> basis = staircase(b, vars);
  std::size_t d = basis.size();
  auto basisIndex = [&basis](const Monomial& m) -> std::size_t {
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i] == m) return i;
    throw std::logic_error("normal form term outside the staircase");
  };
  std::size_t oneIdx = basisIndex(Monomial::one());

  std::mt19937_64 rng(chartSeed);
  std::uniform_int_distribution<int> coeff(-97, 97);
  Polynomial ell(ideal.context, ord);
  for (auto v : vars) {
    int c = coeff(rng);
    if (c == 0) c = 1;
    ell += Polynomial::variable(ideal.context, v, FieldElement(Rational(c)));
  }

  // multiplication matrix of ell on the quotient ring
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<int>(d), static_cast<int>(d));
  for (std::size_t k = 0; k < d; ++k) {
    Polynomial bk = Polynomial::fromTerms(ideal.context, {{basis[k], FieldElement(Rational(1))}}, ord);
    Polynomial nf = normalForm(ell * bk, b);
    for (const auto& [mono, c] : nf.terms())
      m(static_cast<int>(basisIndex(mono)), static_cast<int>(k)) = c.toComplex();
  }

  // eigenvectors of the transpose are evaluation functionals
  EigenResult er = complexEigen(m.transpose());

  // normal forms of the chart variables, for reading coordinates off a
  // functional
  std::vector<std::vector<std::pair<std::size_t, std::complex<double>>>> varNf(n);
  for (auto v : vars) {
    Polynomial nf = normalForm(Polynomial::variable(ideal.context, v), b);
    for (const auto& [mono, c] : nf.terms()) varNf[v].push_back({basisIndex(mono), c.toComplex()});
  }

  std::vector<ChartPoint> raw;
  for (std::size_t e = 0; e < d; ++e) {
    const ComplexVector& w = er.eigenvectors[e];
    std::complex<double> w1 = w(static_cast<int>(oneIdx));
    if (std::abs(w1) < 1e-10 * w.norm())
      throw NoConvergence("degenerate evaluation functional in chart solve");
    ProjectivePointC p;
    p.coordinates.assign(n, 0.0);
    p.coordinates[chart] = 1.0;
    for (auto v : vars) {
      std::complex<double> val = 0;
      for (const auto& [idx, c] : varNf[v]) val += c * w(static_cast<int>(idx));
      p.coordinates[v] = val / w1;
    }
    p.normalize();
    raw.push_back({p, 1});
  }
  // cluster coincident points; cluster size = multiplicity
  std::vector<ChartPoint> out;
  double tol = std::max(cfg.clusterTol, 1e-7);
  for (const auto& cp : raw) {
    bool merged = false;
    for (auto& o : out)
      if (projectiveDistance(o.p, cp.p) < tol) {
        o.multiplicity += 1;
        merged = true;
        break;
      }
    if (!merged) out.push_back(cp);
  }
  return out;
}

inline double pointResidual(const Ideal& ideal, const ProjectivePointC& p) {
  double worst = 0;
  for (const auto& g : ideal.generators) {
    double cn = 0;
    for (const auto& [m, c] : g.terms()) cn += std::abs(c.toComplex());
    double v = std::abs(g.evaluateComplex(p.coordinates));
    worst = std::max(worst, v / std::max(1.0, cn));
  }
  return worst;
}

}  // namespace detail

// All points of a zero-dimensional projective scheme, by multiplication
// matrices chart by chart.
inline SolutionSet solveProjective(const Ideal& ideal, const SolverConfig& cfg = {}) {
  cfg.validate();
  HilbertData h = hilbert(ideal);
  SolutionSet s;
  if (h.projectiveDimension < 0) return s;  // empty scheme
  if (h.projectiveDimension > 0)
    throw NotZeroDimensional("ideal is not zero-dimensional (projective dimension " +
                             std::to_string(h.projectiveDimension) + ")");
  s.totalDegree = h.degree;

  std::size_t n = ideal.context->count();
  std::vector<std::size_t> charts;
  for (std::size_t i = 0; i < n; ++i)
    charts.push_back(cfg.ascendingCharts ? i : n - 1 - i);

  for (std::size_t ci = 0; ci < charts.size(); ++ci) {
    std::size_t chart = charts[ci];
    std::vector<detail::ChartPoint> found;
    int attempt = 0;
    while (true) {
      try {
        found = detail::solveChart(ideal, chart, cfg,
                                   cfg.seed + 0x9e3779b97f4a7c15ULL * (chart + 1) + attempt);
        break;
      } catch (const NoConvergence&) {
        if (++attempt >= 3) throw;
      }
    }
    for (const auto& cp : found) {
      bool dup = false;
      for (const auto& existing : s.points)
        if (projectiveDistance(existing, cp.p) < std::max(cfg.clusterTol, 1e-7)) {
          dup = true;
          break;
        }
      if (dup) continue;
      s.points.push_back(cp.p);
      s.multiplicities.push_back(cp.multiplicity);
      s.residuals.push_back(detail::pointResidual(ideal, cp.p));
    }
  }
  return s;
}

inline int countReal(const SolutionSet& s, const SolverConfig& cfg = {}) {
  int count = 0;
  for (const auto& p : s.points) {
    bool real = true;
    for (const auto& c : p.coordinates)
      if (std::abs(c.imag()) > cfg.realTol) {
        real = false;
        break;
      }
    if (real) ++count;
  }
  return count;
}

// Continued-fraction rounding of a numerical point, accepted only when the
// exact candidate annihilates every generator.
inline std::optional<std::vector<Rational>> rationalRecover(const ProjectivePointC& p,
                                                            const Ideal& ideal,
                                                            const Int& denominatorBound) {
  std::vector<Rational> cand;
  for (const auto& c : p.coordinates) {
    if (std::abs(c.imag()) > 1e-6) return std::nullopt;
    auto r = continuedFractionApprox(c.real(), denominatorBound);
    if (!r) return std::nullopt;
    cand.push_back(*r);
  }
  std::vector<FieldElement> pt;
  for (const auto& r : cand) pt.push_back(FieldElement(r));
  for (const auto& g : ideal.generators)
    if (!g.evaluate(pt).isZero()) return std::nullopt;
  return cand;
}

}  // namespace eigencubic

#endif
