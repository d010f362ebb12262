#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "symq/collective.hpp"
#include "symq/common.hpp"

namespace symq {

/// Two-qubit reduced description of a symmetric state: mean single-qubit spin
/// s_i = <sigma_i> and the symmetric correlation matrix t_ij = <sigma_1i sigma_2j>.
/// For a symmetric pair Tr(T) = 1.
struct PairState {
  Eigen::Vector3d s = Eigen::Vector3d::Zero();
  Eigen::Matrix3d t = Eigen::Matrix3d::Zero();
};

/// The reconstructed 4x4 two-qubit density matrix, basis |00>,|01>,|10>,|11>
/// with |0> the sigma_z = +1 state.
struct PairDensity {
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
};

/// Diagnostics from checking the PairState physicality conditions.
struct PairValidity {
  bool ok = true;
  double min_density_eigenvalue = 0.0;
  std::vector<std::string> violations;
};

/// Reduce a pure symmetric state to its two-qubit description:
///   s_i  = (2/N) <S_i>
///   t_ij = [2 <S_i S_j + S_j S_i> - N delta_ij] / (N (N-1))
PairState reduce_pure(const PureSymmetricState& state);

/// rho = 1/4 (1 + sum_i (sigma_1i + sigma_2i) s_i + sum_ij sigma_1i sigma_2j t_ij).
/// Hermitian with unit trace by construction; positivity is checked by
/// check_pair, not enforced here.
PairDensity pair_density(const PairState& pair);

/// Symmetry, unit trace, |s| and diagonal bounds, and positivity of the
/// reconstructed density matrix, each at its documented tolerance.
PairValidity check_pair(const PairState& pair, double tol = kDefaultTol);

/// Closed-form pair parameters of the Dicke state |N/2, M>:
///   s = (0, 0, 2M/N),
///   T = diag((N^2-4M^2)/(2N(N-1)), (N^2-4M^2)/(2N(N-1)), (4M^2-N)/(N(N-1))).
PairState dicke_pair_closed(int n_qubits, double m_value);

/// Closed-form pair parameters of the one-axis twisted state:
///   s3  = -cos^{N-1}(chi_t),
///   t12 = cos^{N-2}(chi_t) sin(chi_t),
///   t22 = (1 - cos^{N-2}(2 chi_t)) / 2,  t33 = (1 + cos^{N-2}(2 chi_t)) / 2,
/// other entries zero.
PairState ku_pair_closed(int n_qubits, double chi_t);

/// Closed-form pair parameters of the squeezed-bath steady state, with the
/// bath factors expressed through the primitive sweep parameter x = e^theta:
/// e^{-2|xi|} -> -tanh(theta), e^{+2|xi|} -> -coth(theta) (theta = ln x < 0),
///   t1 = (2 <S3> tanh(theta) - N) / (N(N-1)),
///   t2 = (2 <S3> coth(theta) - N) / (N(N-1)),
///   t3 = (N^2 + N - 2 <S3> (tanh + coth)) / (N(N-1)),
/// with <S3> = bath_mean_s3(N, x). Validated against reduce_pure in tests.
PairState bath_pair_closed(int n_qubits, double x);

}  // namespace symq
