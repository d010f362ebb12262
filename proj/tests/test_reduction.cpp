#include "symq/reduction.hpp"

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "symq/collective.hpp"
#include "symq/random.hpp"

using namespace symq;

namespace {

double pair_gap(const PairState& a, const PairState& b) {
  return std::max((a.s - b.s).norm(), (a.t - b.t).cwiseAbs().maxCoeff());
}

}  // namespace

TEST_CASE("reduce_pure: pinned Dicke reductions") {
  const PairState bell = reduce_pure(dicke_state(2, 0.0));
  CHECK(bell.s.norm() < 1e-14);
  CHECK((bell.t - Eigen::Vector3d(1, 1, -1).asDiagonal().toDenseMatrix()).cwiseAbs().maxCoeff() <
        1e-13);

  for (const int n : {2, 4, 9}) {
    const PairState top = reduce_pure(dicke_state(n, 0.5 * n));
    CHECK((top.s - Eigen::Vector3d(0, 0, 1)).norm() < 1e-13);
    CHECK((top.t - Eigen::Vector3d(0, 0, 1).asDiagonal().toDenseMatrix()).cwiseAbs().maxCoeff() <
          1e-13);
  }
}

TEST_CASE("reduce_pure: rejects undersized systems") {
  PureSymmetricState lone;
  lone.n_qubits = 1;
  lone.amplitudes = Eigen::Vector2cd(1, 0);
  CHECK_THROWS_AS(reduce_pure(lone), std::invalid_argument);
}

TEST_CASE("closed-form pair parameters agree with numerical reduction") {
  for (const int n : {2, 3, 4, 6, 8}) {
    for (int two_m = -n; two_m <= n; two_m += 2) {
      const double m = 0.5 * two_m;
      CHECK(pair_gap(dicke_pair_closed(n, m), reduce_pure(dicke_state(n, m))) < 1e-10);
    }
    for (double chi_t = 0.0; chi_t <= 3.2; chi_t += 0.37) {
      CHECK(pair_gap(ku_pair_closed(n, chi_t), reduce_pure(kitagawa_ueda_state(n, chi_t))) <
            1e-10);
    }
    if (n % 2 == 0) {
      for (const double x : {0.05, 0.31, 0.62, 0.93}) {
        CHECK(pair_gap(bath_pair_closed(n, x), reduce_pure(squeezed_bath_state(n, x))) < 1e-9);
      }
    }
  }
}

TEST_CASE("ku_pair_closed: pinned values") {
  const PairState start = ku_pair_closed(5, 0.0);
  CHECK((start.s - Eigen::Vector3d(0, 0, -1)).norm() == 0.0);
  CHECK((start.t - Eigen::Vector3d(0, 0, 1).asDiagonal().toDenseMatrix()).cwiseAbs().maxCoeff() ==
        0.0);

  const PairState quarter = ku_pair_closed(2, M_PI / 4.0);
  CHECK(quarter.s[2] == doctest::Approx(-std::sqrt(0.5)).epsilon(1e-13));
  CHECK(quarter.t(0, 1) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-13));
  CHECK(quarter.t(1, 1) == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(quarter.t(2, 2) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("bath_pair_closed: unit trace across the parameter range") {
  for (const int n : {2, 4, 10, 20}) {
    for (double x = 0.02; x < 1.0; x += 0.07) {
      const PairState pair = bath_pair_closed(n, x);
      CHECK(pair.t.trace() == doctest::Approx(1.0).epsilon(1e-10));
      CHECK(check_pair(pair).ok);
    }
  }
}

TEST_CASE("reduce_pure satisfies every pair invariant on random states") {
  Rng rng(20240817);
  for (const int n : {2, 3, 5, 8, 13, 20}) {
    for (int trial = 0; trial < 20; ++trial) {
      const PairState pair = reduce_pure(random_pure_symmetric_state(n, rng));
      const PairValidity validity = check_pair(pair);
      CAPTURE(n);
      CAPTURE(validity.min_density_eigenvalue);
      CHECK(validity.ok);
    }
  }
}

TEST_CASE("pair_density: pinned matrices") {
  PairState bell;
  bell.t = Eigen::Vector3d(1, 1, -1).asDiagonal();
  Eigen::Vector4cd triplet(0, 1, 1, 0);
  triplet /= std::sqrt(2.0);
  const Eigen::Matrix4cd projector = triplet * triplet.adjoint();
  CHECK((pair_density(bell).rho - projector).cwiseAbs().maxCoeff() < 1e-14);

  PairState up;
  up.s = Eigen::Vector3d(0, 0, 1);
  up.t = Eigen::Vector3d(0, 0, 1).asDiagonal();
  Eigen::Matrix4cd up_projector = Eigen::Matrix4cd::Zero();
  up_projector(0, 0) = 1.0;
  CHECK((pair_density(up).rho - up_projector).cwiseAbs().maxCoeff() < 1e-14);

  PairState isotropic;
  isotropic.t = Eigen::Vector3d(1.0 / 3, 1.0 / 3, 1.0 / 3).asDiagonal();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(pair_density(isotropic).rho);
  CHECK(es.eigenvalues().minCoeff() > -1e-14);
  CHECK(pair_density(isotropic).rho.trace().real() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("pair_density matches the full-register partial trace") {
  Rng rng(7119);
  for (const int n : {2, 3, 4}) {
    for (int trial = 0; trial < 10; ++trial) {
      const PureSymmetricState psi = random_pure_symmetric_state(n, rng);
      const Eigen::Matrix4cd direct = oracles::partial_trace_pair(psi);
      const Eigen::Matrix4cd reconstructed = pair_density(reduce_pure(psi)).rho;
      CHECK((direct - reconstructed).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("check_pair: flags each violated invariant by name") {
  PairState asym;
  asym.t << 0.4, 0.2, 0.0, -0.2, 0.4, 0.0, 0.0, 0.0, 0.2;
  const PairValidity v_asym = check_pair(asym);
  CHECK_FALSE(v_asym.ok);
  CHECK(v_asym.violations.front().find("symmetric") != std::string::npos);

  PairState traceless;
  traceless.t = Eigen::Vector3d(0.2, 0.2, 0.2).asDiagonal();
  CHECK_FALSE(check_pair(traceless).ok);

  PairState long_s;
  long_s.s = Eigen::Vector3d(0, 0, 1.5);
  long_s.t = Eigen::Vector3d(0, 0, 1).asDiagonal();
  CHECK_FALSE(check_pair(long_s).ok);

  PairState negative;  // diag(1,1,-1) with a mean spin cannot be a state
  negative.s = Eigen::Vector3d(0, 0, -1);
  negative.t = Eigen::Vector3d(1, 1, -1).asDiagonal();
  const PairValidity v_neg = check_pair(negative);
  CHECK_FALSE(v_neg.ok);
  CHECK(v_neg.min_density_eigenvalue < -0.1);
}
