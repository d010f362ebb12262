#pragma once

#include <Eigen/Dense>

#include "symq/collective.hpp"
#include "symq/common.hpp"
#include "symq/reduction.hpp"

namespace symq {

/// Pair data expressed in the frame whose z axis is the mean-spin direction:
/// the transverse 2x2 block of T is diagonalized and only rotation-invariant
/// numbers are kept.
struct AlignedPair {
  double s0 = 0;            // |s| = 2|<S>|/N
  double t_perp_plus = 0;   // larger transverse eigenvalue
  double t_perp_minus = 0;  // smaller transverse eigenvalue
  double t33 = 0;           // longitudinal correlation n.T.n
};

/// xi2 < 1 signals spin squeezing; max_fluct is the same expression built
/// from the larger transverse eigenvalue, so xi2 <= max_fluct always.
struct SqueezingReport {
  int n_qubits = 0;
  double xi2 = 0;
  double max_fluct = 0;
  double i5_identity_residual = 0;  // |i5 - collective identity RHS|
};

/// Collective second moments reconstructed from pair data alone.
/// The reconstruction <(S.k)^2> = N/4 + N(N-1)/4 k.T.k is exact on the
/// symmetric subspace.
struct CollectiveSignatures {
  bool has_mean_direction = false;  // |s| above tolerance
  double mean_projection_sq = 0;    // <(S.n)^2> along the mean spin; NaN if no direction
  double comb_threshold = 0;        // N/4 + (N-1)|<S>|^2/N; comb < 0 iff projection below it
  Eigen::Vector3d quadratic_factors = Eigen::Vector3d::Zero();  // <S_i^2> - N/4 on T eigenaxes, descending
};

/// Result of the generalized spin-squeezing inequality scan. The witness
/// condition is 4(dS_k)^2/N < 1 - 4<S_k>^2/N^2 (squared mean on the right,
/// the reading consistent with the zero-mean-spin case); the alternative
/// second-moment reading 1 - 4<S_k^2>/N^2 is reported alongside.
struct KorbiczWitness {
  bool found = false;
  Eigen::Vector3d direction = Eigen::Vector3d::UnitZ();
  double variance_lhs = 0;        // 4(dS_k)^2/N at the reported direction
  double rhs_mean_squared = 0;    // 1 - 4<S_k>^2/N^2
  double rhs_second_moment = 0;   // 1 - 4<S_k^2>/N^2
  double margin = 0;              // best rhs_mean_squared - variance_lhs over the scan
};

/// Rotate the mean spin onto +z and diagonalize the transverse block:
/// t_perp(+-) = [(t11 + t22) +- sqrt((t11 - t22)^2 + 4 t12^2)] / 2.
/// Requires |s| > 1e-12; a pair with no mean-spin direction has no
/// squeezing frame (use the zero-I3 branch of the classifier instead).
AlignedPair align_mean_spin(const PairState& pair);

/// xi^2 = 1 + (N-1) t_perp_minus.
double xi_squared(const AlignedPair& aligned, int n_qubits);

/// 4/N times the largest transverse collective variance:
/// 1 + (N-1) t_perp_plus.
double max_fluctuation(const AlignedPair& aligned, int n_qubits);

/// The collective form of i5:
///   8|<S>|^2 / (N(N-1))^2 * (xi^2 - 1)(max_fluct - 1)
/// which simplifies to 2 s0^2 t_perp_plus t_perp_minus.
double i5_collective_identity(const AlignedPair& aligned, int n_qubits);

/// Convenience bundle: aligns, evaluates xi^2 and the maximal fluctuation,
/// and records the residual of the i5 identity against compute_invariants.
SqueezingReport squeezing_report(const PairState& pair, int n_qubits);

CollectiveSignatures collective_signatures(const PairState& pair, int n_qubits);

/// Scan unit directions (Fibonacci sphere of n_directions points, plus the
/// mean-spin direction, the transverse eigendirections and the T eigenaxes)
/// for a violation of the generalized spin-squeezing inequality. The state
/// overload evaluates <S_k> and <S_k^2> directly against the collective
/// operators; the pair overload uses the exact symmetric-subspace
/// reconstruction. Requires n_directions >= 50.
KorbiczWitness korbicz_scan(const PureSymmetricState& state, int n_directions,
                            double tol = kDefaultTol);
KorbiczWitness korbicz_scan(const PairState& pair, int n_qubits, int n_directions,
                            double tol = kDefaultTol);

}  // namespace symq
