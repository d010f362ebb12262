#include "symq/reduction.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace symq {
namespace {

std::array<Eigen::Matrix2cd, 3> pauli_matrices() {
  std::array<Eigen::Matrix2cd, 3> sigma;
  sigma[0] << 0, 1, 1, 0;
  sigma[1] << 0, Complex(0, -1), Complex(0, 1), 0;
  sigma[2] << 1, 0, 0, -1;
  return sigma;
}

Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

double int_pow(double base, int exponent) {
  // Exact sign handling for negative bases; exponents here are small.
  double result = 1.0;
  for (int k = 0; k < exponent; ++k) result *= base;
  return result;
}

}  // namespace

PairState reduce_pure(const PureSymmetricState& state) {
  const int n = state.n_qubits;
  if (n < 2) throw std::invalid_argument("reduce_pure: pair undefined for N < 2");
  if (state.amplitudes.size() != n + 1) {
    throw std::invalid_argument("reduce_pure: amplitude vector has wrong length");
  }

  const SpinOps ops = spin_operators(n);
  const std::array<const Eigen::MatrixXcd*, 3> spin = {&ops.sx, &ops.sy, &ops.sz};
  std::array<Eigen::VectorXcd, 3> applied;
  for (int i = 0; i < 3; ++i) applied[i] = (*spin[i]) * state.amplitudes;

  PairState pair;
  for (int i = 0; i < 3; ++i) {
    pair.s[i] = 2.0 / n * std::real(state.amplitudes.dot(applied[i]));
    for (int j = i; j < 3; ++j) {
      // <S_i S_j + S_j S_i> = 2 Re <S_i psi | S_j psi>
      const double sym = 2.0 * std::real(applied[i].dot(applied[j]));
      const double tij = (2.0 * sym - (i == j ? n : 0.0)) / (static_cast<double>(n) * (n - 1));
      pair.t(i, j) = tij;
      pair.t(j, i) = tij;
    }
  }
  return pair;
}

PairDensity pair_density(const PairState& pair) {
  const auto sigma = pauli_matrices();
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();

  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Identity();
  for (int i = 0; i < 3; ++i) {
    rho += (kron2(sigma[i], id) + kron2(id, sigma[i])) * pair.s[i];
    for (int j = 0; j < 3; ++j) rho += kron2(sigma[i], sigma[j]) * pair.t(i, j);
  }
  PairDensity density;
  density.rho = 0.25 * rho;
  return density;
}

PairValidity check_pair(const PairState& pair, double tol) {
  PairValidity v;
  auto fail = [&v](const std::string& msg) {
    v.ok = false;
    v.violations.push_back(msg);
  };

  if ((pair.t - pair.t.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    fail("correlation matrix not symmetric");
  }
  if (std::abs(pair.t.trace() - 1.0) > tol) fail("Tr(T) differs from 1");
  if (pair.s.norm() > 1.0 + tol) fail("|s| exceeds 1");
  for (int i = 0; i < 3; ++i) {
    if (std::abs(pair.t(i, i)) > 1.0 + tol) fail("diagonal T entry outside [-1, 1]");
  }

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(pair_density(pair).rho);
  v.min_density_eigenvalue = es.eigenvalues().minCoeff();
  if (v.min_density_eigenvalue < -tol) fail("pair density matrix not positive semidefinite");
  return v;
}

PairState dicke_pair_closed(int n_qubits, double m_value) {
  dicke_state(n_qubits, m_value);  // reuse the (N, M) validation
  const double n = n_qubits;
  const double m = m_value;

  PairState pair;
  pair.s = Eigen::Vector3d(0.0, 0.0, 2.0 * m / n);
  const double transverse = (n * n - 4.0 * m * m) / (2.0 * n * (n - 1.0));
  const double longitudinal = (4.0 * m * m - n) / (n * (n - 1.0));
  pair.t = Eigen::Vector3d(transverse, transverse, longitudinal).asDiagonal();
  return pair;
}

PairState ku_pair_closed(int n_qubits, double chi_t) {
  if (n_qubits < 2) throw std::invalid_argument("ku_pair_closed: need at least two qubits");
  const int n = n_qubits;
  const double c2 = int_pow(std::cos(2.0 * chi_t), n - 2);

  PairState pair;
  pair.s = Eigen::Vector3d(0.0, 0.0, -int_pow(std::cos(chi_t), n - 1));
  pair.t(0, 1) = pair.t(1, 0) = int_pow(std::cos(chi_t), n - 2) * std::sin(chi_t);
  pair.t(1, 1) = 0.5 * (1.0 - c2);
  pair.t(2, 2) = 0.5 * (1.0 + c2);
  return pair;
}

PairState bath_pair_closed(int n_qubits, double x) {
  const double mean_s3 = bath_mean_s3(n_qubits, x);  // validates (N, x)
  const double n = n_qubits;
  const double theta = std::log(x);
  const double tanh_theta = std::tanh(theta);
  const double coth_theta = 1.0 / tanh_theta;

  PairState pair;
  pair.s = Eigen::Vector3d(0.0, 0.0, 2.0 * mean_s3 / n);
  const double t1 = (2.0 * mean_s3 * tanh_theta - n) / (n * (n - 1.0));
  const double t2 = (2.0 * mean_s3 * coth_theta - n) / (n * (n - 1.0));
  const double t3 = (n * n + n - 2.0 * mean_s3 * (tanh_theta + coth_theta)) / (n * (n - 1.0));
  pair.t = Eigen::Vector3d(t1, t2, t3).asDiagonal();
  return pair;
}

}  // namespace symq
