#pragma once

#include <stdexcept>
#include <string>

#include "symq/collective.hpp"
#include "symq/reduction.hpp"

namespace symq {

/// Input text could not be parsed (syntax, token counts, malformed numbers).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input parsed but describes a non-physical state; the message names the
/// violated invariant.
struct InvalidStateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class StateKind { pure, pair };

/// Textual state container. Format:
///   line 1: `N <integer>`
///   line 2: `kind pure|pair`
///   pure:  N+1 lines `re im`, amplitudes from M = +N/2 down to -N/2
///   pair:  `s <s1> <s2> <s3>` then `t <t11> <t12> <t13> <t22> <t23> <t33>`
/// Numbers carry 17 significant digits, so write(read(text)) == text on
/// canonical output.
struct StateFile {
  int n_qubits = 0;
  StateKind kind = StateKind::pure;
  PureSymmetricState pure;  // engaged when kind == pure
  PairState pair;           // engaged when kind == pair
};

/// Shortest-unambiguous decimal: 17 significant digits, locale-free.
std::string format_double(double value);

std::string write_state_file(const StateFile& file);

/// Parses and validates. Throws ParseError on malformed text and
/// InvalidStateError when the parsed state breaks a physical invariant
/// (pure-state norm, T symmetry/trace/bounds, pair-density positivity).
StateFile parse_state_file(const std::string& text, double tol = kDefaultTol);

/// File-system wrappers; unreadable paths raise ParseError, unwritable
/// paths raise std::ios_base::failure.
StateFile load_state_file(const std::string& path, double tol = kDefaultTol);
void save_state_file(const StateFile& file, const std::string& path);

}  // namespace symq
