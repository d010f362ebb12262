#pragma once

#include <Eigen/Dense>

#include "symq/common.hpp"

namespace symq {

/// Collective spin matrices for N spin-1/2 qubits restricted to the
/// permutation-symmetric subspace, i.e. the spin-S representation with
/// S = N/2. Basis order is M = S, S-1, ..., -S (index m maps to M = S - m).
struct SpinOps {
  int n_qubits = 0;
  int dim = 0;  // N + 1
  Eigen::MatrixXcd sx, sy, sz;
};

/// Pure symmetric N-qubit state expressed over the Dicke basis |S=N/2, M>.
/// amplitudes[m] multiplies |S, M = S - m>; the Euclidean norm is 1.
struct PureSymmetricState {
  int n_qubits = 0;
  Eigen::VectorXcd amplitudes;

  double m_value_at(Eigen::Index m) const { return 0.5 * n_qubits - static_cast<double>(m); }
};

/// Spin matrices for the spin-(two_s/2) irrep, dimension two_s + 1.
/// Ladder elements are sqrt(S(S+1) - M(M+-1)); sz is diagonal.
SpinOps spin_matrices_for_two_s(int two_s);

/// Collective spin operators for N qubits (S = N/2). Rejects N < 1.
SpinOps spin_operators(int n_qubits);

/// Dicke basis state |S=N/2, M>. M must step in integers within [-N/2, N/2].
PureSymmetricState dicke_state(int n_qubits, double m_value);

/// One-axis twisted state exp(-i * chi_t * Sx^2) |S, -S>.
///
/// The twisting generator is the x component: squaring the z component acts
/// on |S,-S> only by a global phase, while x-axis twisting reproduces the
/// closed-form pair parameters of ku_pair_closed exactly.
PureSymmetricState kitagawa_ueda_state(int n_qubits, double chi_t);

/// Steady state of N (even) two-level atoms in a squeezed bath,
/// A0 * exp(theta * Sz) * exp(-i pi/2 Sy) |S, 0> with theta = ln x, x in (0,1).
/// Amplitudes are real: a_M proportional to x^M * d^S_{M0}(pi/2), evaluated in
/// the log domain so extreme weight ratios neither overflow nor underflow.
PureSymmetricState squeezed_bath_state(int n_qubits, double x);

/// Wigner small-d element d^S_{M0}(pi/2) = <S,M| exp(-i pi/2 Sy) |S,0>,
/// computed as the matrix element of the dense operator exponential.
/// Exactly zero when S+M is odd (parity selection rule). S must be a
/// non-negative integer (the M'=0 column only exists for integer spin).
double wigner_d_half_pi(double spin, double m_value);

/// <S3> of the squeezed-bath steady state:
///   sum_M M x^{2M} d^2 / sum_M x^{2M} d^2,  d = d^S_{M0}(pi/2).
/// Always in [-N/2, 0] for x in (0,1). Log-domain weights.
double bath_mean_s3(int n_qubits, double x);

}  // namespace symq
