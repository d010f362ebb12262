#include "symq/squeezing.hpp"

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "symq/classify.hpp"
#include "symq/collective.hpp"
#include "symq/invariants.hpp"
#include "symq/random.hpp"
#include "symq/reduction.hpp"

using namespace symq;

TEST_CASE("align_mean_spin: pinned frames") {
  const double r = std::sqrt(0.5);

  const AlignedPair ku = align_mean_spin(reduce_pure(kitagawa_ueda_state(2, M_PI / 4.0)));
  CHECK(ku.s0 == doctest::Approx(r).epsilon(1e-13));
  CHECK(ku.t_perp_plus == doctest::Approx(r).epsilon(1e-13));
  CHECK(ku.t_perp_minus == doctest::Approx(-r).epsilon(1e-13));
  CHECK(ku.t33 == doctest::Approx(1.0).epsilon(1e-13));

  const AlignedPair coherent = align_mean_spin(reduce_pure(dicke_state(4, 2.0)));
  CHECK(coherent.s0 == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(std::abs(coherent.t_perp_plus) < 1e-13);
  CHECK(std::abs(coherent.t_perp_minus) < 1e-13);
  CHECK(coherent.t33 == doctest::Approx(1.0).epsilon(1e-13));

  const AlignedPair dicke41 = align_mean_spin(reduce_pure(dicke_state(4, 1.0)));
  CHECK(dicke41.s0 == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(dicke41.t_perp_plus == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(dicke41.t_perp_minus == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(std::abs(dicke41.t33) < 1e-13);
  CHECK(xi_squared(dicke41, 4) == doctest::Approx(2.5).epsilon(1e-13));
  CHECK(max_fluctuation(dicke41, 4) == doctest::Approx(2.5).epsilon(1e-13));
}

TEST_CASE("align_mean_spin: frame data is rotation invariant and trace preserving") {
  Rng rng(61234);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const PairState pair = reduce_pure(random_pure_symmetric_state(n, rng));
    if (pair.s.norm() <= 1e-12) continue;
    const AlignedPair aligned = align_mean_spin(pair);
    CHECK(aligned.t_perp_plus + aligned.t_perp_minus + aligned.t33 ==
          doctest::Approx(pair.t.trace()).epsilon(1e-12));
    CHECK(aligned.t_perp_plus >= aligned.t_perp_minus);

    const AlignedPair rotated = align_mean_spin(local_rotate(pair, random_rotation(rng)));
    CHECK(rotated.s0 == doctest::Approx(aligned.s0).epsilon(1e-11));
    CHECK(rotated.t_perp_plus == doctest::Approx(aligned.t_perp_plus).epsilon(1e-10));
    CHECK(rotated.t_perp_minus == doctest::Approx(aligned.t_perp_minus).epsilon(1e-10));
    CHECK(rotated.t33 == doctest::Approx(aligned.t33).epsilon(1e-10));
  }
}

TEST_CASE("align_mean_spin rejects a vanishing mean spin") {
  CHECK_THROWS_AS(align_mean_spin(reduce_pure(dicke_state(2, 0.0))), std::domain_error);
  CHECK_THROWS_AS(align_mean_spin(reduce_pure(dicke_state(6, 0.0))), std::domain_error);
}

TEST_CASE("xi^2 and the maximal fluctuation match a direct variance extremization") {
  Rng rng(90210);
  int checked = 0;
  while (checked < 30) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const PureSymmetricState psi = random_pure_symmetric_state(n, rng);
    const PairState pair = reduce_pure(psi);
    if (pair.s.norm() <= 1e-10) continue;
    ++checked;

    const oracles::TransverseVariances direct = oracles::extremal_transverse_variances(psi);
    const AlignedPair aligned = align_mean_spin(pair);
    CHECK(xi_squared(aligned, n) == doctest::Approx(4.0 * direct.min / n).epsilon(1e-10));
    CHECK(max_fluctuation(aligned, n) == doctest::Approx(4.0 * direct.max / n).epsilon(1e-10));
  }
}

TEST_CASE("the collective identity reproduces i5") {
  const AlignedPair ku = align_mean_spin(reduce_pure(kitagawa_ueda_state(2, M_PI / 4.0)));
  CHECK(i5_collective_identity(ku, 2) == doctest::Approx(-0.5).epsilon(1e-13));

  Rng rng(5511);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const PureSymmetricState psi = random_pure_symmetric_state(n, rng);
    if (reduce_pure(psi).s.norm() <= 1e-12) continue;
    const SqueezingReport report = squeezing_report(reduce_pure(psi), n);
    CAPTURE(n);
    CHECK(report.i5_identity_residual < 1e-10);
    CHECK(report.xi2 <= report.max_fluct);
  }

  const SqueezingReport coherent = squeezing_report(reduce_pure(dicke_state(6, 3.0)), 6);
  CHECK(std::abs(coherent.xi2 - 1.0) < 1e-12);
  CHECK(std::abs(coherent.max_fluct - 1.0) < 1e-12);
  CHECK(coherent.i5_identity_residual < 1e-12);
}

TEST_CASE("squeezing_report is stable under identical local rotations") {
  Rng rng(777212);
  const PairState pair = reduce_pure(kitagawa_ueda_state(6, 0.35));
  const SqueezingReport reference = squeezing_report(pair, 6);
  CHECK(reference.xi2 < 1.0);  // this family squeezes at small twist
  for (int trial = 0; trial < 100; ++trial) {
    const SqueezingReport rotated =
        squeezing_report(local_rotate(pair, random_rotation(rng)), 6);
    CHECK(rotated.xi2 == doctest::Approx(reference.xi2).epsilon(1e-10));
    CHECK(rotated.max_fluct == doctest::Approx(reference.max_fluct).epsilon(1e-10));
  }
}

TEST_CASE("collective_signatures: pinned values and operator cross-check") {
  const CollectiveSignatures bell = collective_signatures(reduce_pure(dicke_state(2, 0.0)), 2);
  CHECK_FALSE(bell.has_mean_direction);
  CHECK(std::isnan(bell.mean_projection_sq));
  CHECK(bell.quadratic_factors[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(bell.quadratic_factors[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(bell.quadratic_factors[2] == doctest::Approx(-0.5).epsilon(1e-12));

  const CollectiveSignatures coherent = collective_signatures(reduce_pure(dicke_state(4, 2.0)), 4);
  CHECK(coherent.has_mean_direction);
  CHECK(coherent.mean_projection_sq == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(coherent.comb_threshold == doctest::Approx(4.0).epsilon(1e-12));

  // <(S.n)^2> from the pair reconstruction equals the direct operator value.
  Rng rng(8080);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const PureSymmetricState psi = random_pure_symmetric_state(n, rng);
    const PairState pair = reduce_pure(psi);
    if (pair.s.norm() <= 1e-10) continue;
    const CollectiveSignatures sig = collective_signatures(pair, n);

    const SpinOps ops = spin_operators(n);
    const Eigen::Vector3d n_hat = pair.s.normalized();
    const Eigen::MatrixXcd sn = n_hat[0] * ops.sx + n_hat[1] * ops.sy + n_hat[2] * ops.sz;
    const double direct = expectation(sn * sn, psi.amplitudes);
    CHECK(sig.mean_projection_sq == doctest::Approx(direct).epsilon(1e-9));
  }
}

TEST_CASE("collective_signatures: the comb sign matches the threshold comparison") {
  Rng rng(424242);
  int with_direction = 0;
  while (with_direction < 40) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const PairState pair = reduce_pure(random_pure_symmetric_state(n, rng));
    const InvariantSet inv = compute_invariants(pair);
    if (inv.i3 <= 1e-8 || std::abs(inv.comb) < 1e-10) continue;
    ++with_direction;
    const CollectiveSignatures sig = collective_signatures(pair, n);
    REQUIRE(sig.has_mean_direction);
    CHECK((inv.comb < 0.0) == (sig.mean_projection_sq < sig.comb_threshold));
  }
}

TEST_CASE("collective_signatures: a negative quadratic factor accompanies negative det T") {
  Rng rng(1618);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const PairState pair = reduce_pure(random_pure_symmetric_state(n, rng));
    const double i1 = compute_invariants(pair).i1;
    if (std::abs(i1) < 1e-10) continue;
    const CollectiveSignatures sig = collective_signatures(pair, n);
    const bool has_negative_factor = sig.quadratic_factors.minCoeff() < 0.0;
    const bool odd_negatives = (sig.quadratic_factors.array() < 0.0).count() % 2 == 1;
    CHECK(odd_negatives == (i1 < 0.0));
    if (i1 < 0.0) CHECK(has_negative_factor);
  }
}

TEST_CASE("korbicz_scan: coherent states show no violation") {
  for (const auto& [n, state] : {std::pair<int, PureSymmetricState>{4, dicke_state(4, 2.0)},
                                 {6, kitagawa_ueda_state(6, 0.0)}}) {
    const KorbiczWitness witness = korbicz_scan(state, 200);
    CAPTURE(n);
    CHECK_FALSE(witness.found);
    CHECK(witness.margin < 1e-10);  // at best a rounding-level sliver above zero
  }
}

TEST_CASE("korbicz_scan: pinned detections") {
  const KorbiczWitness twisted = korbicz_scan(kitagawa_ueda_state(4, 0.3), 200);
  CHECK(twisted.found);
  CHECK(twisted.variance_lhs < twisted.rhs_mean_squared);
  CHECK(twisted.margin > 0.0);

  const KorbiczWitness dicke = korbicz_scan(dicke_state(4, 0.0), 200);
  CHECK(dicke.found);
  // The optimal direction for a zero-M Dicke state is the z axis, where the
  // collective variance vanishes entirely.
  CHECK(std::abs(std::abs(dicke.direction[2]) - 1.0) < 1e-9);
  CHECK(dicke.variance_lhs < 1e-9);
}

TEST_CASE("korbicz_scan: pair reconstruction agrees with direct state moments") {
  Rng rng(995511);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const PureSymmetricState psi = random_pure_symmetric_state(n, rng);
    const KorbiczWitness by_state = korbicz_scan(psi, 120);
    const KorbiczWitness by_pair = korbicz_scan(reduce_pure(psi), n, 120);
    CAPTURE(n);
    CHECK(by_state.found == by_pair.found);
    CHECK(by_state.margin == doctest::Approx(by_pair.margin).epsilon(1e-9));
  }
}

TEST_CASE("every pairwise flag class is matched by a collective witness") {
  Rng rng(31337);
  int flagged = 0;
  for (int trial = 0; trial < 300 && flagged < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const PureSymmetricState psi = random_pure_symmetric_state(n, rng);
    // A wider flag tolerance keeps the implied witness margin clear of the
    // scan's own tolerance band.
    if (!classify(compute_invariants(reduce_pure(psi)), 1e-8).any_entanglement_flag) continue;
    ++flagged;
    CAPTURE(n);
    CHECK(korbicz_scan(psi, 100).found);
  }
  CHECK(flagged >= 10);
}

TEST_CASE("korbicz_scan rejects an undersized direction budget") {
  CHECK_THROWS_AS(korbicz_scan(dicke_state(4, 0.0), 10), std::invalid_argument);
  CHECK_THROWS_AS(korbicz_scan(reduce_pure(dicke_state(4, 0.0)), 4, 49), std::invalid_argument);
}
