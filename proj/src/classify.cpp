#include "symq/classify.hpp"

#include <cmath>
#include <stdexcept>

namespace symq {

ClassFlags classify(const InvariantSet& inv, double tol) {
  ClassFlags flags;
  flags.tolerance = tol;
  flags.i3_nonzero = inv.i3 > tol;
  if (flags.i3_nonzero) {
    flags.spin_squeezed = inv.i5 <= -tol;
    flags.longitudinal = inv.i4 <= -tol;
    flags.window = inv.i4 > tol && inv.comb < -tol;
  } else {
    flags.zero_spin_i1 = inv.i1 < -tol;
  }
  flags.any_entanglement_flag =
      flags.spin_squeezed || flags.longitudinal || flags.window || flags.zero_spin_i1;
  return flags;
}

PairState separable_pair(const SeparableEnsemble& ensemble) {
  const Eigen::Index n_terms = ensemble.weights.size();
  if (n_terms == 0 || static_cast<std::size_t>(n_terms) != ensemble.bloch_vectors.size()) {
    throw std::invalid_argument("separable_pair: weights and Bloch vectors must pair up");
  }
  if (ensemble.weights.minCoeff() < 0.0 || std::abs(ensemble.weights.sum() - 1.0) > 1e-12) {
    throw std::invalid_argument("separable_pair: weights must be a probability vector");
  }

  PairState pair;
  pair.s.setZero();
  pair.t.setZero();
  for (Eigen::Index w = 0; w < n_terms; ++w) {
    const Eigen::Vector3d& bloch = ensemble.bloch_vectors[static_cast<std::size_t>(w)];
    if (std::abs(bloch.norm() - 1.0) > 1e-10) {
      throw std::invalid_argument(
          "separable_pair: Bloch vectors must be unit length (Tr T = 1 fails otherwise)");
    }
    pair.s += ensemble.weights[w] * bloch;
    pair.t += ensemble.weights[w] * (bloch * bloch.transpose());
  }
  return pair;
}

SeparableAudit separable_audit(const SeparableEnsemble& ensemble) {
  const InvariantSet inv = compute_invariants(separable_pair(ensemble));
  return SeparableAudit{inv.i1, inv.i4, inv.i5, inv.comb};
}

double ppt_min_eigenvalue(const PairDensity& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es_in(rho.rho);
  if (es_in.eigenvalues().minCoeff() < -1e-8) {
    throw std::invalid_argument("ppt_min_eigenvalue: input is not a density matrix");
  }

  // Transpose the second qubit: indices (a b, a' b') -> (a b', a' b).
  Eigen::Matrix4cd pt;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int ap = 0; ap < 2; ++ap) {
        for (int bp = 0; bp < 2; ++bp) {
          pt(2 * a + b, 2 * ap + bp) = rho.rho(2 * a + bp, 2 * ap + b);
        }
      }
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es_pt(pt);
  return es_pt.eigenvalues().minCoeff();
}

bool ppt_entangled(const PairDensity& rho) { return ppt_min_eigenvalue(rho) < -1e-10; }

}  // namespace symq
