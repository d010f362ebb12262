#pragma once

#include <Eigen/Dense>

#include <random>

#include "symq/classify.hpp"
#include "symq/collective.hpp"
#include "symq/invariants.hpp"

namespace symq {

using Rng = std::mt19937_64;

/// Uniform direction on the unit sphere.
Eigen::Vector3d random_unit_vector(Rng& rng);

/// Haar-uniform SO(3) element (uniform quaternion on S^3).
Rotation3 random_rotation(Rng& rng);

/// Haar-like pure state in the Dicke basis: i.i.d. complex Gaussian
/// amplitudes, normalized.
PureSymmetricState random_pure_symmetric_state(int n_qubits, Rng& rng);

/// Up to max_terms product states with flat-Dirichlet weights and uniform
/// unit Bloch vectors.
SeparableEnsemble random_separable_ensemble(int max_terms, Rng& rng);

}  // namespace symq
