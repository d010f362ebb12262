#include "symq/invariants.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace symq {
namespace {

struct Perm {
  int a, b, c;
  double sign;
};

// The six non-zero entries of the Levi-Civita symbol.
constexpr std::array<Perm, 6> kPerms = {{
    {0, 1, 2, +1.0},
    {1, 2, 0, +1.0},
    {2, 0, 1, +1.0},
    {0, 2, 1, -1.0},
    {2, 1, 0, -1.0},
    {1, 0, 2, -1.0},
}};

double levi_civita_i5(const Eigen::Vector3d& s, const Eigen::Matrix3d& t) {
  double sum = 0.0;
  for (const Perm& p : kPerms) {
    for (const Perm& q : kPerms) {
      sum += p.sign * q.sign * s[p.a] * s[q.a] * t(p.b, q.b) * t(p.c, q.c);
    }
  }
  return sum;
}

double int_pow(double base, int exponent) {
  double result = 1.0;
  for (int k = 0; k < exponent; ++k) result *= base;
  return result;
}

}  // namespace

InvariantSet compute_invariants(const PairState& pair) {
  const Eigen::Vector3d& s = pair.s;
  const Eigen::Matrix3d& t = pair.t;

  InvariantSet inv;
  inv.i1 = t.determinant();
  inv.i2 = (t * t).trace();
  inv.i3 = s.dot(s);
  inv.i4 = s.dot(t * s);
  inv.i5 = levi_civita_i5(s, t);
  const Eigen::Vector3d ts = t * s;
  inv.i6 = s.dot(ts.cross(t * ts));
  inv.comb = inv.i4 - inv.i3 * inv.i3;
  return inv;
}

PairState local_rotate(const PairState& pair, const Rotation3& rot) {
  if (!rot.valid()) throw std::invalid_argument("local_rotate: matrix is not a proper rotation");
  PairState out;
  out.s = rot.r * pair.s;
  out.t = rot.r * pair.t * rot.r.transpose();
  return out;
}

CanonicalPair canonical_form(const PairState& pair) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(pair.t);

  // Eigen orders ascending; we want T' = diag(t1 >= t2 >= t3), so the rotation
  // rows are the eigenvectors in reverse order.
  Eigen::Matrix3d rot;
  for (int k = 0; k < 3; ++k) rot.row(k) = es.eigenvectors().col(2 - k).transpose();
  if (rot.determinant() < 0.0) rot.row(2) *= -1.0;  // stay in SO(3)

  CanonicalPair out;
  out.rotation.r = rot;
  out.pair = local_rotate(pair, out.rotation);
  return out;
}

InvariantSet dicke_invariants_closed(int n_qubits, double m_value) {
  dicke_state(n_qubits, m_value);  // validate (N, M)
  const double n = n_qubits;
  const double m = m_value;
  const double transverse = (n * n - 4.0 * m * m) / (2.0 * n * (n - 1.0));
  const double longitudinal = (4.0 * m * m - n) / (n * (n - 1.0));

  InvariantSet inv;
  inv.i1 = transverse * transverse * longitudinal;
  inv.i2 = 2.0 * transverse * transverse + longitudinal * longitudinal;
  inv.i3 = 4.0 * m * m / (n * n);
  inv.i4 = inv.i3 * longitudinal;
  inv.i5 = 2.0 * inv.i3 * transverse * transverse;
  inv.i6 = 0.0;
  inv.comb = inv.i3 * (4.0 * m * m - n * n) / (n * n * (n - 1.0));
  return inv;
}

InvariantSet ku_invariants_closed(int n_qubits, double chi_t) {
  if (n_qubits < 2) throw std::invalid_argument("ku_invariants_closed: need at least two qubits");
  const int n = n_qubits;
  const double cos_pow = int_pow(std::cos(chi_t), n - 2);       // cos^{N-2}(chi t)
  const double sin_sq = std::sin(chi_t) * std::sin(chi_t);
  const double c2 = int_pow(std::cos(2.0 * chi_t), n - 2);      // cos^{N-2}(2 chi t)

  InvariantSet inv;
  inv.i1 = -0.5 * cos_pow * cos_pow * sin_sq * (1.0 + c2);
  inv.i2 = 2.0 * cos_pow * cos_pow * sin_sq + 0.5 * (1.0 + c2 * c2);
  inv.i3 = int_pow(std::cos(chi_t), 2 * (n - 1));
  inv.i4 = 0.5 * inv.i3 * (1.0 + c2);
  inv.i5 = -2.0 * inv.i3 * cos_pow * cos_pow * sin_sq;
  inv.i6 = 0.0;
  inv.comb = inv.i4 - inv.i3 * inv.i3;
  return inv;
}

InvariantSet bath_invariants_closed(int n_qubits, double x) {
  const PairState pair = bath_pair_closed(n_qubits, x);
  const double t1 = pair.t(0, 0), t2 = pair.t(1, 1), t3 = pair.t(2, 2);
  const double s3 = pair.s[2];

  InvariantSet inv;
  inv.i1 = t1 * t2 * t3;
  inv.i2 = t1 * t1 + t2 * t2 + t3 * t3;
  inv.i3 = s3 * s3;
  inv.i4 = inv.i3 * t3;
  inv.i5 = 2.0 * inv.i3 * t1 * t2;
  inv.i6 = 0.0;
  inv.comb = inv.i4 - inv.i3 * inv.i3;
  return inv;
}

}  // namespace symq
