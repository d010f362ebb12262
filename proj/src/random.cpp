#include "symq/random.hpp"

#include <cmath>
#include <stdexcept>

namespace symq {

Eigen::Vector3d random_unit_vector(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Vector3d v;
  do {
    v = Eigen::Vector3d(gauss(rng), gauss(rng), gauss(rng));
  } while (v.norm() < 1e-6);
  return v.normalized();
}

Rotation3 random_rotation(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Vector4d q;
  do {
    q = Eigen::Vector4d(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
  } while (q.norm() < 1e-6);
  q.normalize();
  Rotation3 rot;
  rot.r = Eigen::Quaterniond(q[0], q[1], q[2], q[3]).toRotationMatrix();
  return rot;
}

PureSymmetricState random_pure_symmetric_state(int n_qubits, Rng& rng) {
  if (n_qubits < 2) {
    throw std::invalid_argument("random_pure_symmetric_state: need at least two qubits");
  }
  std::normal_distribution<double> gauss(0.0, 1.0);
  PureSymmetricState state;
  state.n_qubits = n_qubits;
  state.amplitudes.resize(n_qubits + 1);
  do {
    for (Eigen::Index m = 0; m <= n_qubits; ++m) {
      state.amplitudes[m] = Complex(gauss(rng), gauss(rng));
    }
  } while (state.amplitudes.norm() < 1e-6);
  state.amplitudes.normalize();
  return state;
}

SeparableEnsemble random_separable_ensemble(int max_terms, Rng& rng) {
  if (max_terms < 1) {
    throw std::invalid_argument("random_separable_ensemble: need at least one term");
  }
  std::uniform_int_distribution<int> term_count(1, max_terms);
  std::exponential_distribution<double> expo(1.0);  // flat Dirichlet via normalized exponentials
  const int terms = term_count(rng);

  SeparableEnsemble ensemble;
  ensemble.weights.resize(terms);
  ensemble.bloch_vectors.reserve(static_cast<std::size_t>(terms));
  for (int w = 0; w < terms; ++w) {
    ensemble.weights[w] = expo(rng);
    ensemble.bloch_vectors.push_back(random_unit_vector(rng));
  }
  ensemble.weights /= ensemble.weights.sum();
  return ensemble;
}

}  // namespace symq
