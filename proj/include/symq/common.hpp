#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

namespace symq {

using Complex = std::complex<double>;

/// Default absolute tolerance for "is this invariant zero / negative" decisions.
/// The CLI lets the environment variable SYMQ_TOL override it.
inline constexpr double kDefaultTol = 1e-10;

/// exp(-i * angle * h) for a Hermitian matrix h, via eigendecomposition.
/// Unconditionally stable at the small dimensions used here; the result is
/// unitary to machine precision.
template <typename Derived>
Eigen::MatrixXcd expi_hermitian(const Eigen::MatrixBase<Derived>& h, double angle) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.derived());
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("expi_hermitian: eigendecomposition failed");
  }
  const Eigen::VectorXd lam = es.eigenvalues();
  Eigen::VectorXcd phase(lam.size());
  for (Eigen::Index k = 0; k < lam.size(); ++k) {
    phase[k] = std::exp(Complex(0.0, -angle * lam[k]));
  }
  return es.eigenvectors() * phase.asDiagonal() * es.eigenvectors().adjoint();
}

/// <psi| a |psi> for Hermitian a; the imaginary part is roundoff and dropped.
template <typename DerivedA, typename DerivedV>
double expectation(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedV>& psi) {
  return std::real(psi.derived().dot(a.derived() * psi.derived()));
}

}  // namespace symq
