#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "symq/classify.hpp"
#include "symq/invariants.hpp"

namespace symq {

enum class SweepFamily { ku, bath };

struct SweepOptions {
  SweepFamily family = SweepFamily::ku;
  int n_qubits = 2;
  double from = 0.0;
  double to = 1.0;
  int points = 2;
  double tol = kDefaultTol;
};

/// One CSV row: parameter value, the seven invariant numbers, the squeezing
/// pair (NaN when the mean spin vanishes), and the four entanglement flags.
struct SweepRow {
  double param = 0.0;
  InvariantSet inv;
  double xi2 = 0.0;
  double max_fluct = 0.0;
  ClassFlags flags;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  /// Closed-form vs numerical-pipeline disagreements beyond 1e-9, if any.
  std::vector<std::string> warnings;
};

inline constexpr std::string_view kSweepCsvHeader =
    "param,I1,I2,I3,I4,I5,I6,I4mI3sq,xi2,maxfluct,flag_ss,flag_long,flag_window,flag_zero_i1";

/// Evaluate the family along a uniformly spaced parameter grid through the
/// numerical pipeline (generate, reduce, invariants, squeezing, classify),
/// cross-checking each row against the closed forms. Throws
/// std::invalid_argument for points < 2 or an out-of-domain range.
SweepResult run_sweep(const SweepOptions& options);

/// Deterministic, locale-free CSV (17-significant-digit numbers, 0/1 flags).
std::string sweep_csv(const SweepResult& result);

}  // namespace symq
