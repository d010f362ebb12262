#pragma once

#include <Eigen/Dense>

#include <vector>

#include "symq/common.hpp"
#include "symq/invariants.hpp"
#include "symq/reduction.hpp"

namespace symq {

/// Pairwise-entanglement predicates over an InvariantSet. Flags are
/// independent predicates, not exclusive classes; physically, spin_squeezed
/// and longitudinal can never hold together. A flag fires only when the
/// deciding invariant is negative beyond `tolerance`, so boundary states
/// (e.g. a spin coherent state with i5 = 0) set no flags.
struct ClassFlags {
  bool i3_nonzero = false;
  bool spin_squeezed = false;  // i3 != 0 and i5 <= 0
  bool longitudinal = false;   // i3 != 0 and i4 <= 0
  bool window = false;         // i3 != 0, i4 > 0 and i4 - i3^2 < 0
  bool zero_spin_i1 = false;   // i3 == 0 and i1 < 0
  bool any_entanglement_flag = false;
  double tolerance = kDefaultTol;
};

/// Probabilistic mixture of identical single-qubit product states: weights
/// p_w and unit Bloch vectors s^(w). Unit length is required, not optional:
/// mixed factors would break Tr T = 1 and leave the symmetric subspace.
struct SeparableEnsemble {
  Eigen::VectorXd weights;
  std::vector<Eigen::Vector3d> bloch_vectors;
};

/// The four invariant combinations that are provably non-negative on every
/// separable symmetric pair.
struct SeparableAudit {
  double i1 = 0;
  double i4 = 0;
  double i5 = 0;
  double comb = 0;
};

ClassFlags classify(const InvariantSet& inv, double tol = kDefaultTol);

/// Pair description of the ensemble: s = sum_w p_w s^(w),
/// t_ij = sum_w p_w s_i^(w) s_j^(w). Rejects non-normalized weights and
/// Bloch vectors off the unit sphere by more than 1e-10.
PairState separable_pair(const SeparableEnsemble& ensemble);

SeparableAudit separable_audit(const SeparableEnsemble& ensemble);

/// Minimum eigenvalue of the partial transpose (second qubit transposed).
/// Rejects inputs whose own minimum eigenvalue is below -1e-8 (not a
/// density matrix).
double ppt_min_eigenvalue(const PairDensity& rho);

/// Peres-Horodecki test, exact for two qubits: entangled iff the partial
/// transpose has an eigenvalue below -1e-10.
bool ppt_entangled(const PairDensity& rho);

}  // namespace symq
