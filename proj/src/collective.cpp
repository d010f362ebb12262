#include "symq/collective.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace symq {
namespace {

// Round a half-integer quantum number and reject anything that is not one.
long long half_integer_twice(double value, const char* what) {
  const double twice = 2.0 * value;
  const long long rounded = std::llround(twice);
  if (std::abs(twice - static_cast<double>(rounded)) > 1e-9) {
    throw std::invalid_argument(std::string(what) + " must be a half-integer, got " + std::to_string(value));
  }
  return rounded;
}

}  // namespace

SpinOps spin_matrices_for_two_s(int two_s) {
  if (two_s < 0) throw std::invalid_argument("spin must be non-negative");
  const int dim = two_s + 1;
  const double s = 0.5 * two_s;

  Eigen::MatrixXcd sp = Eigen::MatrixXcd::Zero(dim, dim);  // raising operator S+
  Eigen::MatrixXcd sz = Eigen::MatrixXcd::Zero(dim, dim);
  for (int m = 0; m < dim; ++m) {
    const double mv = s - m;  // M at index m
    sz(m, m) = mv;
    if (m > 0) {
      // S+ |S, M> = sqrt(S(S+1) - M(M+1)) |S, M+1>; |S, M+1> sits at index m-1.
      sp(m - 1, m) = std::sqrt(s * (s + 1.0) - mv * (mv + 1.0));
    }
  }
  const Eigen::MatrixXcd sm = sp.adjoint();

  SpinOps ops;
  ops.n_qubits = two_s;
  ops.dim = dim;
  ops.sx = 0.5 * (sp + sm);
  ops.sy = Complex(0.0, -0.5) * (sp - sm);
  ops.sz = sz;
  return ops;
}

SpinOps spin_operators(int n_qubits) {
  if (n_qubits < 1) throw std::invalid_argument("spin_operators: need at least one qubit");
  return spin_matrices_for_two_s(n_qubits);
}

PureSymmetricState dicke_state(int n_qubits, double m_value) {
  if (n_qubits < 2) throw std::invalid_argument("dicke_state: need at least two qubits");
  const long long two_m = half_integer_twice(m_value, "m_value");
  const long long span = n_qubits - two_m;  // 2(S - M)
  if (span < 0 || span > 2LL * n_qubits || span % 2 != 0) {
    throw std::invalid_argument("dicke_state: M out of range for N=" + std::to_string(n_qubits));
  }
  PureSymmetricState state;
  state.n_qubits = n_qubits;
  state.amplitudes = Eigen::VectorXcd::Zero(n_qubits + 1);
  state.amplitudes[static_cast<Eigen::Index>(span / 2)] = 1.0;
  return state;
}

PureSymmetricState kitagawa_ueda_state(int n_qubits, double chi_t) {
  if (n_qubits < 2) throw std::invalid_argument("kitagawa_ueda_state: need at least two qubits");
  const SpinOps ops = spin_operators(n_qubits);
  PureSymmetricState state = dicke_state(n_qubits, -0.5 * n_qubits);
  state.amplitudes = expi_hermitian(ops.sx * ops.sx, chi_t) * state.amplitudes;
  return state;
}

double wigner_d_half_pi(double spin, double m_value) {
  const long long two_s = half_integer_twice(spin, "spin");
  const long long two_m = half_integer_twice(m_value, "m_value");
  if (two_s < 0 || std::llabs(two_m) > two_s || (two_s - two_m) % 2 != 0) {
    throw std::invalid_argument("wigner_d_half_pi: invalid (S, M) pair");
  }
  if (two_s % 2 != 0) {
    throw std::invalid_argument("wigner_d_half_pi: M'=0 requires integer spin");
  }
  // Parity selection rule: d^S_{M0}(pi/2) vanishes identically for odd S+M.
  if (((two_s + two_m) / 2) % 2 != 0) return 0.0;

  const SpinOps ops = spin_matrices_for_two_s(static_cast<int>(two_s));
  const Eigen::MatrixXcd rot = expi_hermitian(ops.sy, M_PI / 2.0);
  const Eigen::Index row = static_cast<Eigen::Index>((two_s - two_m) / 2);
  const Eigen::Index col = static_cast<Eigen::Index>(two_s / 2);  // M' = 0
  // exp(-i beta Sy) is real orthogonal in this basis; the imaginary part is roundoff.
  return std::real(rot(row, col));
}

PureSymmetricState squeezed_bath_state(int n_qubits, double x) {
  if (n_qubits < 2 || n_qubits % 2 != 0) {
    throw std::invalid_argument("squeezed_bath_state: N must be even and >= 2");
  }
  if (!(x > 0.0) || !(x < 1.0)) {
    throw std::invalid_argument("squeezed_bath_state: x must lie in (0,1)");
  }
  const int dim = n_qubits + 1;
  const double s = 0.5 * n_qubits;
  const double log_x = std::log(x);

  const SpinOps ops = spin_operators(n_qubits);
  const Eigen::MatrixXcd rot = expi_hermitian(ops.sy, M_PI / 2.0);
  const Eigen::Index m0 = static_cast<Eigen::Index>(n_qubits / 2);  // index of M = 0

  // a_M = x^M d^S_{M0}(pi/2) up to normalization; assemble log-magnitudes and
  // signs, shift by the maximum before exponentiating.
  std::vector<double> log_mag(dim, -std::numeric_limits<double>::infinity());
  std::vector<double> sign(dim, 0.0);
  double log_max = -std::numeric_limits<double>::infinity();
  for (int m = 0; m < dim; ++m) {
    const double mv = s - m;
    const bool parity_zero = (std::llround(s + mv) % 2) != 0;
    const double d = parity_zero ? 0.0 : std::real(rot(m, m0));
    if (d == 0.0) continue;
    log_mag[m] = mv * log_x + std::log(std::abs(d));
    sign[m] = d > 0.0 ? 1.0 : -1.0;
    log_max = std::max(log_max, log_mag[m]);
  }

  PureSymmetricState state;
  state.n_qubits = n_qubits;
  state.amplitudes = Eigen::VectorXcd::Zero(dim);
  for (int m = 0; m < dim; ++m) {
    if (sign[m] != 0.0) state.amplitudes[m] = sign[m] * std::exp(log_mag[m] - log_max);
  }
  state.amplitudes /= state.amplitudes.norm();
  return state;
}

double bath_mean_s3(int n_qubits, double x) {
  if (n_qubits < 2 || n_qubits % 2 != 0) {
    throw std::invalid_argument("bath_mean_s3: N must be even and >= 2");
  }
  if (!(x > 0.0) || !(x < 1.0)) {
    throw std::invalid_argument("bath_mean_s3: x must lie in (0,1)");
  }
  const double s = 0.5 * n_qubits;
  const double log_x = std::log(x);

  // Weight of |S, M> is x^{2M} d^2; work with logs, shift by the maximum.
  std::vector<double> log_w;
  std::vector<double> m_of;
  double log_max = -std::numeric_limits<double>::infinity();
  for (int m = 0; m <= n_qubits; ++m) {
    const double mv = s - m;
    const double d = wigner_d_half_pi(s, mv);
    if (d == 0.0) continue;
    const double lw = 2.0 * mv * log_x + 2.0 * std::log(std::abs(d));
    log_w.push_back(lw);
    m_of.push_back(mv);
    log_max = std::max(log_max, lw);
  }

  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < log_w.size(); ++k) {
    const double w = std::exp(log_w[k] - log_max);
    num += m_of[k] * w;
    den += w;
  }
  return num / den;
}

}  // namespace symq
