#include "symq/audit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "symq/classify.hpp"
#include "symq/invariants.hpp"
#include "symq/random.hpp"
#include "symq/reduction.hpp"
#include "symq/squeezing.hpp"

namespace symq {
namespace {

/// Tracks the smallest signed headroom seen; negative headroom is a violation.
struct MarginTracker {
  double worst = std::numeric_limits<double>::infinity();
  std::string detail = "no applicable sample";

  void update(double margin, std::string sample) {
    if (margin < worst) {
      worst = margin;
      detail = std::move(sample);
    }
  }
};

AuditCheck to_check(std::string name, const MarginTracker& tracker) {
  AuditCheck check;
  check.name = std::move(name);
  check.worst_margin = tracker.worst;
  check.passed = tracker.worst >= 0.0;
  check.detail = tracker.detail;
  return check;
}

StateFile pure_state_file(const PureSymmetricState& state) {
  StateFile file;
  file.n_qubits = state.n_qubits;
  file.kind = StateKind::pure;
  file.pure = state;
  return file;
}

StateFile pair_state_file(const PairState& pair, int n_qubits) {
  StateFile file;
  file.n_qubits = n_qubits;
  file.kind = StateKind::pair;
  file.pair = pair;
  return file;
}

}  // namespace

AuditResult run_audit(const AuditOptions& options) {
  if (options.samples < 1) throw std::invalid_argument("audit: samples must be at least 1");

  Rng rng(options.seed);
  AuditResult result;
  const auto note_counterexample = [&result](const StateFile& file) {
    if (!result.has_counterexample) {
      result.has_counterexample = true;
      result.counterexample = file;
    }
  };

  // Separable ensembles: invariant non-negativity and the PPT-positive side.
  MarginTracker separable_nonneg;
  MarginTracker separable_ppt;
  for (int i = 0; i < options.samples; ++i) {
    const SeparableEnsemble ensemble = random_separable_ensemble(10, rng);
    const SeparableAudit audit = separable_audit(ensemble);
    const double min4 = std::min({audit.i1, audit.i4, audit.i5, audit.comb});
    const std::string sample =
        "ensemble " + std::to_string(i) + " (" + std::to_string(ensemble.weights.size()) +
        " terms), min invariant " + format_double(min4);
    separable_nonneg.update(min4 + 1e-10, sample);

    const PairState pair = separable_pair(ensemble);
    const double pt_min = ppt_min_eigenvalue(pair_density(pair));
    separable_ppt.update(pt_min + 1e-10,
                         "ensemble " + std::to_string(i) + ", partial-transpose minimum " +
                             format_double(pt_min));
    if (min4 + 1e-10 < 0.0 || pt_min + 1e-10 < 0.0) {
      note_counterexample(pair_state_file(pair, 2));
    }
  }

  // Random pure symmetric states: the squeezing iff, the i5 identity, and
  // the PPT-entangled side for every flagged state.
  MarginTracker squeezing_iff;
  MarginTracker i5_identity;
  MarginTracker flagged_ppt;
  for (int i = 0; i < options.samples; ++i) {
    const int n = 2 + (i % 9);
    const PureSymmetricState psi = random_pure_symmetric_state(n, rng);
    const PairState pair = reduce_pure(psi);
    const InvariantSet inv = compute_invariants(pair);
    const std::string sample = "state " + std::to_string(i) + " (N=" + std::to_string(n) + ")";
    bool violated = false;

    if (pair.s.norm() > 1e-6) {
      const AlignedPair aligned = align_mean_spin(pair);
      const double xi2 = xi_squared(aligned, n);
      if (std::abs(xi2 - 1.0) > 1e-8) {
        // Positive exactly when i5 and xi^2 - 1 share their sign.
        const double agreement = (xi2 - 1.0) * inv.i5;
        squeezing_iff.update(agreement, sample + ", xi2 " + format_double(xi2) + ", i5 " +
                                        format_double(inv.i5));
        violated = violated || agreement <= 0.0;
      }
      const double residual = std::abs(inv.i5 - i5_collective_identity(aligned, n));
      i5_identity.update(1e-10 - residual, sample + ", residual " + format_double(residual));
      violated = violated || residual > 1e-10;
    }

    const ClassFlags flags = classify(inv, options.tol);
    if (flags.any_entanglement_flag) {
      const double pt_min = ppt_min_eigenvalue(pair_density(pair));
      flagged_ppt.update(-1e-10 - pt_min,
                         sample + ", partial-transpose minimum " + format_double(pt_min));
      violated = violated || -1e-10 - pt_min < 0.0;
    }
    if (violated) note_counterexample(pure_state_file(psi));
  }

  result.checks.push_back(to_check("separable_nonneg", separable_nonneg));
  result.checks.push_back(to_check("squeezing_iff", squeezing_iff));
  result.checks.push_back(to_check("i5_identity", i5_identity));
  result.checks.push_back(to_check("ppt_flagged_entangled", flagged_ppt));
  result.checks.push_back(to_check("ppt_separable_positive", separable_ppt));

  if (options.inject_bad) {
    PairState bell;
    bell.s = Eigen::Vector3d::Zero();
    bell.t = Eigen::Vector3d(1.0, 1.0, -1.0).asDiagonal();
    AuditCheck injected;
    injected.name = "inject_bad_selftest";
    injected.passed = false;
    injected.worst_margin = compute_invariants(bell).i1 + 1e-10;
    injected.detail = "synthetic maximally entangled pair planted by --inject-bad";
    result.checks.push_back(injected);
    note_counterexample(pair_state_file(bell, 2));
  }

  result.all_passed = std::all_of(result.checks.begin(), result.checks.end(),
                                  [](const AuditCheck& check) { return check.passed; });
  return result;
}

std::string audit_report(const AuditResult& result) {
  std::string out;
  for (const AuditCheck& check : result.checks) {
    out += "check " + check.name + (check.passed ? " PASS" : " FAIL") + " worst_margin " +
           format_double(check.worst_margin) + " (" + check.detail + ")\n";
  }
  out += result.all_passed ? "audit PASS\n" : "audit FAIL\n";
  return out;
}

}  // namespace symq
