#pragma once

#include <Eigen/Dense>

#include <cmath>

#include "symq/common.hpp"
#include "symq/reduction.hpp"

namespace symq {

/// The six polynomial invariants of a symmetric pair under identical local
/// rotations, plus the derived combination comb = i4 - i3^2.
///   i1 = det T            i2 = Tr(T^2)
///   i3 = s.s              i4 = s.T.s
///   i5 = eps_ijk eps_lmn s_i s_l t_jm t_kn
///   i6 = eps_ijk s_i (Ts)_j (T^2 s)_k
struct InvariantSet {
  double i1 = 0, i2 = 0, i3 = 0, i4 = 0, i5 = 0, i6 = 0;
  double comb = 0;
};

/// Proper rotation: r^T r = I and det r = +1, both to 1e-10.
struct Rotation3 {
  Eigen::Matrix3d r = Eigen::Matrix3d::Identity();

  bool valid(double tol = 1e-10) const {
    return (r.transpose() * r - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() <= tol &&
           std::abs(r.determinant() - 1.0) <= tol;
  }
};

struct CanonicalPair {
  PairState pair;      // diagonal T, eigenvalues descending
  Rotation3 rotation;  // maps the input pair onto `pair`
};

InvariantSet compute_invariants(const PairState& pair);

/// s' = O s, T' = O T O^T. Rejects non-SO(3) input.
PairState local_rotate(const PairState& pair, const Rotation3& rot);

/// Diagonalize T by an identical local rotation. Eigenvalues are ordered
/// descending; only the invariant content of the result is canonical (the
/// frame is not unique under degenerate eigenvalues).
CanonicalPair canonical_form(const PairState& pair);

/// Closed-form invariants for the Dicke family, from the general-M pair
/// parameters; validated against direct numerical reduction in tests.
InvariantSet dicke_invariants_closed(int n_qubits, double m_value);

/// Closed-form invariants for the one-axis twisted family. The Tr(T^2)
/// expression uses cos^{2(N-2)}(2 chi_t), the argument that is consistent
/// with the closed-form correlation matrix.
InvariantSet ku_invariants_closed(int n_qubits, double chi_t);

/// Closed-form invariants for the squeezed-bath family, evaluated from the
/// closed-form (s, T) of bath_pair_closed.
InvariantSet bath_invariants_closed(int n_qubits, double x);

}  // namespace symq
