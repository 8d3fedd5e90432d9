#ifndef EIGENCUBIC_COMPLEX_EIGEN_HPP
#define EIGENCUBIC_COMPLEX_EIGEN_HPP

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <complex>
#include <vector>

#include "eigencubic/errors.hpp"

namespace eigencubic {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

struct EigenResult {
  std::vector<std::complex<double>> eigenvalues;
  std::vector<ComplexVector> eigenvectors;
  std::vector<double> residuals;  // ||Mv - lv||_2 / max(1, ||M||_F)
};

// Dense complex eigendecomposition with per-pair residuals. Results sorted by
// (real, imaginary) of the eigenvalue so repeated calls are deterministic.
inline EigenResult complexEigen(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("complexEigen: matrix not square");
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(m, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success) throw NoConvergence("complexEigen: QR iteration failed");
  const auto n = m.rows();
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
  auto vals = solver.eigenvalues();
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (vals(a).real() != vals(b).real()) return vals(a).real() < vals(b).real();
    return vals(a).imag() < vals(b).imag();
  });
  double scale = std::max(1.0, m.norm());
  EigenResult out;
  for (int i : idx) {
    std::complex<double> l = vals(i);
    ComplexVector v = solver.eigenvectors().col(i);
    out.eigenvalues.push_back(l);
    out.eigenvectors.push_back(v);
    out.residuals.push_back((m * v - l * v).norm() / scale);
  }
  return out;
}

}  // namespace eigencubic

#endif
