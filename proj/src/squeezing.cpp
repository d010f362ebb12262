#include "symq/squeezing.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "symq/invariants.hpp"

namespace symq {
namespace {

Eigen::Matrix3d rotation_taking_to_z(const Eigen::Vector3d& v) {
  return Eigen::Quaterniond::FromTwoVectors(v, Eigen::Vector3d::UnitZ()).toRotationMatrix();
}

/// Fibonacci sphere plus the analytically distinguished directions of the
/// pair: mean spin, transverse eigendirections, T eigenaxes. The distinguished
/// directions make the known violation cases exact instead of grid-limited.
std::vector<Eigen::Vector3d> scan_directions(const PairState& pair, int n_directions) {
  if (n_directions < 50) {
    throw std::invalid_argument("korbicz_scan: need at least 50 directions");
  }
  std::vector<Eigen::Vector3d> dirs;
  dirs.reserve(static_cast<std::size_t>(n_directions) + 6);

  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < n_directions; ++i) {
    const double z = 1.0 - 2.0 * (i + 0.5) / n_directions;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden_angle * i;
    dirs.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
  }

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(pair.t);
  for (int k = 0; k < 3; ++k) dirs.emplace_back(es.eigenvectors().col(k));

  if (pair.s.norm() > 1e-12) {
    const Eigen::Vector3d n_hat = pair.s.normalized();
    dirs.emplace_back(n_hat);

    // Eigendirections of the transverse block, mapped back to the lab frame.
    const Eigen::Matrix3d rot = rotation_taking_to_z(pair.s);
    const Eigen::Matrix3d t_aligned = rot * pair.t * rot.transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es2(t_aligned.topLeftCorner<2, 2>());
    for (int k = 0; k < 2; ++k) {
      const Eigen::Vector2d v = es2.eigenvectors().col(k);
      dirs.emplace_back(rot.transpose() * Eigen::Vector3d(v[0], v[1], 0.0));
    }
  }
  return dirs;
}

/// Shared scan driver; `moments` maps a unit direction to (<S_k>, <S_k^2>).
KorbiczWitness scan_moments(
    const std::vector<Eigen::Vector3d>& dirs, int n_qubits, double tol,
    const std::function<std::pair<double, double>(const Eigen::Vector3d&)>& moments) {
  const double n = n_qubits;
  KorbiczWitness best;
  best.margin = -std::numeric_limits<double>::infinity();
  for (const Eigen::Vector3d& k_hat : dirs) {
    const auto [mean, second] = moments(k_hat);
    const double variance = second - mean * mean;
    const double lhs = 4.0 * variance / n;
    const double rhs = 1.0 - 4.0 * mean * mean / (n * n);
    const double margin = rhs - lhs;
    if (margin > best.margin) {
      best.margin = margin;
      best.direction = k_hat;
      best.variance_lhs = lhs;
      best.rhs_mean_squared = rhs;
      best.rhs_second_moment = 1.0 - 4.0 * second / (n * n);
    }
  }
  best.found = best.margin > tol;
  return best;
}

}  // namespace

AlignedPair align_mean_spin(const PairState& pair) {
  const double s_norm = pair.s.norm();
  if (s_norm <= 1e-12) {
    throw std::domain_error("align_mean_spin: mean spin vanishes, no squeezing frame exists");
  }
  const Eigen::Matrix3d rot = rotation_taking_to_z(pair.s);
  const Eigen::Matrix3d t = rot * pair.t * rot.transpose();

  AlignedPair out;
  out.s0 = s_norm;
  const double sum = t(0, 0) + t(1, 1);
  const double gap = std::sqrt((t(0, 0) - t(1, 1)) * (t(0, 0) - t(1, 1)) + 4.0 * t(0, 1) * t(0, 1));
  out.t_perp_plus = 0.5 * (sum + gap);
  out.t_perp_minus = 0.5 * (sum - gap);
  out.t33 = t(2, 2);
  return out;
}

double xi_squared(const AlignedPair& aligned, int n_qubits) {
  return 1.0 + (n_qubits - 1.0) * aligned.t_perp_minus;
}

double max_fluctuation(const AlignedPair& aligned, int n_qubits) {
  return 1.0 + (n_qubits - 1.0) * aligned.t_perp_plus;
}

double i5_collective_identity(const AlignedPair& aligned, int n_qubits) {
  const double n = n_qubits;
  const double mean_spin_sq = n * n * aligned.s0 * aligned.s0 / 4.0;  // |<S>|^2
  const double denom = n * (n - 1.0);
  return 8.0 * mean_spin_sq / (denom * denom) * (xi_squared(aligned, n_qubits) - 1.0) *
         (max_fluctuation(aligned, n_qubits) - 1.0);
}

SqueezingReport squeezing_report(const PairState& pair, int n_qubits) {
  const AlignedPair aligned = align_mean_spin(pair);
  SqueezingReport report;
  report.n_qubits = n_qubits;
  report.xi2 = xi_squared(aligned, n_qubits);
  report.max_fluct = max_fluctuation(aligned, n_qubits);
  report.i5_identity_residual =
      std::abs(compute_invariants(pair).i5 - i5_collective_identity(aligned, n_qubits));
  return report;
}

CollectiveSignatures collective_signatures(const PairState& pair, int n_qubits) {
  const double n = n_qubits;
  const double quad_scale = n * (n - 1.0) / 4.0;  // <(S.k)^2> = N/4 + quad_scale * k.T.k

  CollectiveSignatures sig;
  sig.has_mean_direction = pair.s.norm() > 1e-12;
  if (sig.has_mean_direction) {
    const Eigen::Vector3d n_hat = pair.s.normalized();
    sig.mean_projection_sq = n / 4.0 + quad_scale * n_hat.dot(pair.t * n_hat);
  } else {
    sig.mean_projection_sq = std::numeric_limits<double>::quiet_NaN();
  }

  const double mean_spin_sq = n * n * pair.s.squaredNorm() / 4.0;  // |<S>|^2
  sig.comb_threshold = n / 4.0 + (n - 1.0) * mean_spin_sq / n;

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(pair.t);
  for (int k = 0; k < 3; ++k) {
    sig.quadratic_factors[k] = quad_scale * es.eigenvalues()[2 - k];  // descending
  }
  return sig;
}

KorbiczWitness korbicz_scan(const PureSymmetricState& state, int n_directions, double tol) {
  const SpinOps ops = spin_operators(state.n_qubits);
  const std::vector<Eigen::Vector3d> dirs = scan_directions(reduce_pure(state), n_directions);
  return scan_moments(dirs, state.n_qubits, tol, [&](const Eigen::Vector3d& k_hat) {
    const Eigen::MatrixXcd sk = k_hat[0] * ops.sx + k_hat[1] * ops.sy + k_hat[2] * ops.sz;
    const Eigen::VectorXcd sk_psi = sk * state.amplitudes;
    const double mean = std::real(state.amplitudes.dot(sk_psi));
    const double second = sk_psi.squaredNorm();
    return std::pair{mean, second};
  });
}

KorbiczWitness korbicz_scan(const PairState& pair, int n_qubits, int n_directions, double tol) {
  const double n = n_qubits;
  const std::vector<Eigen::Vector3d> dirs = scan_directions(pair, n_directions);
  return scan_moments(dirs, n_qubits, tol, [&](const Eigen::Vector3d& k_hat) {
    const double mean = 0.5 * n * k_hat.dot(pair.s);
    const double second = n / 4.0 + n * (n - 1.0) / 4.0 * k_hat.dot(pair.t * k_hat);
    return std::pair{mean, second};
  });
}

}  // namespace symq
