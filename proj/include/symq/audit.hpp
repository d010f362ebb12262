#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symq/common.hpp"
#include "symq/state_io.hpp"

namespace symq {

struct AuditOptions {
  std::uint64_t seed = 0;
  int samples = 1000;
  bool inject_bad = false;  // plant a synthetic violation to exercise the failure path
  double tol = kDefaultTol;
};

/// One property check: `worst_margin` is signed headroom (>= 0 passes),
/// `detail` identifies the extremal sample.
struct AuditCheck {
  std::string name;
  bool passed = true;
  double worst_margin = 0.0;
  std::string detail;
};

struct AuditResult {
  std::vector<AuditCheck> checks;
  bool all_passed = true;
  bool has_counterexample = false;
  StateFile counterexample;  // the first violating state, ready to serialize
};

/// Seeded property suite:
///   - separable non-negativity of i1, i4, i5 and i4 - i3^2,
///   - the spin-squeezing iff (i5 < 0 exactly when xi^2 < 1),
///   - the collective identity for i5 (residual below 1e-10),
///   - PPT soundness (flagged states are PPT-entangled, separable pairs are not).
/// Deterministic for a fixed (seed, samples, inject_bad) triple.
AuditResult run_audit(const AuditOptions& options);

/// One line per check plus a final verdict line.
std::string audit_report(const AuditResult& result);

}  // namespace symq
