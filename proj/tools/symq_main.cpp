#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "symq/audit.hpp"
#include "symq/classify.hpp"
#include "symq/collective.hpp"
#include "symq/invariants.hpp"
#include "symq/reduction.hpp"
#include "symq/squeezing.hpp"
#include "symq/state_io.hpp"
#include "symq/sweep.hpp"

namespace {

// Exit codes: 0 success, 1 audit property violation, 2 argument/parse error,
// 3 invalid physical state, 4 unwritable output.
constexpr int kExitOk = 0;
constexpr int kExitAuditViolation = 1;
constexpr int kExitParseError = 2;
constexpr int kExitInvalidState = 3;
constexpr int kExitUnwritable = 4;

constexpr int kScanDirections = 200;

double tolerance_from_env() {
  const char* env = std::getenv("SYMQ_TOL");
  if (env == nullptr) return symq::kDefaultTol;
  const std::string text(env);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !(value > 0.0)) {
    throw symq::ParseError("SYMQ_TOL must be a positive number, got '" + text + "'");
  }
  return value;
}

void print_line(const std::string& key, double value) {
  std::cout << key << " " << symq::format_double(value) << "\n";
}

void print_flag(const std::string& key, bool value) {
  std::cout << key << " " << (value ? 1 : 0) << "\n";
}

void print_report(const symq::PairState& pair, int n_qubits,
                  const std::optional<symq::PureSymmetricState>& state, double tol) {
  const symq::InvariantSet inv = symq::compute_invariants(pair);
  const symq::ClassFlags flags = symq::classify(inv, tol);

  std::cout << "N " << n_qubits << "\n";
  print_line("I1", inv.i1);
  print_line("I2", inv.i2);
  print_line("I3", inv.i3);
  print_line("I4", inv.i4);
  print_line("I5", inv.i5);
  print_line("I6", inv.i6);
  print_line("I4mI3sq", inv.comb);
  print_flag("flag_i3_nonzero", flags.i3_nonzero);
  print_flag("flag_ss", flags.spin_squeezed);
  print_flag("flag_long", flags.longitudinal);
  print_flag("flag_window", flags.window);
  print_flag("flag_zero_i1", flags.zero_spin_i1);
  print_flag("flag_any", flags.any_entanglement_flag);

  if (pair.s.norm() > 1e-12) {
    const symq::AlignedPair aligned = symq::align_mean_spin(pair);
    print_line("xi2", symq::xi_squared(aligned, n_qubits));
    print_line("maxfluct", symq::max_fluctuation(aligned, n_qubits));
  }

  const symq::KorbiczWitness witness =
      state.has_value() ? symq::korbicz_scan(*state, kScanDirections, tol)
                        : symq::korbicz_scan(pair, n_qubits, kScanDirections, tol);
  print_flag("korbicz_witness", witness.found);
  std::cout << "korbicz_direction " << symq::format_double(witness.direction[0]) << " "
            << symq::format_double(witness.direction[1]) << " "
            << symq::format_double(witness.direction[2]) << "\n";
  print_line("korbicz_lhs", witness.variance_lhs);
  print_line("korbicz_rhs_mean_sq", witness.rhs_mean_squared);
  print_line("korbicz_rhs_second_moment", witness.rhs_second_moment);
  print_line("korbicz_margin", witness.margin);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local invariants, spin squeezing and pairwise-entanglement classification "
               "for symmetric N-qubit states (angles in radians, bath parameter x in (0,1); "
               "the SYMQ_TOL environment variable overrides the 1e-10 zero tolerance)"};
  app.require_subcommand(1);

  // invariants: report for one state (family parameters or StateFile).
  CLI::App* inv_cmd = app.add_subcommand("invariants", "Invariants and classification report");
  inv_cmd->require_subcommand(1);
  int inv_n = 0;
  double inv_m = 0.0, inv_chit = 0.0, inv_x = 0.0;
  std::string inv_path;
  CLI::App* inv_dicke = inv_cmd->add_subcommand("dicke", "Dicke state |N/2, M>");
  inv_dicke->add_option("--n", inv_n, "number of qubits")->required();
  inv_dicke->add_option("--m", inv_m, "magnetic quantum number M")->required();
  CLI::App* inv_ku = inv_cmd->add_subcommand("ku", "one-axis twisted state");
  inv_ku->add_option("--n", inv_n, "number of qubits")->required();
  inv_ku->add_option("--chit", inv_chit, "twisting angle chi*t in radians")->required();
  CLI::App* inv_bath = inv_cmd->add_subcommand("bath", "squeezed-bath steady state");
  inv_bath->add_option("--n", inv_n, "number of qubits (even)")->required();
  inv_bath->add_option("--x", inv_x, "bath parameter x in (0,1)")->required();
  CLI::App* inv_file = inv_cmd->add_subcommand("file", "state from a StateFile");
  inv_file->add_option("path", inv_path, "StateFile path")->required();

  // sweep: CSV over a uniform parameter grid.
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Family sweep to CSV");
  sweep_cmd->require_subcommand(1);
  symq::SweepOptions sweep_options;
  std::string sweep_out;
  CLI::App* sweep_ku = sweep_cmd->add_subcommand("ku", "sweep chi*t for the twisted family");
  CLI::App* sweep_bath = sweep_cmd->add_subcommand("bath", "sweep x for the bath family");
  for (CLI::App* sub : {sweep_ku, sweep_bath}) {
    sub->add_option("--n", sweep_options.n_qubits, "number of qubits")->required();
    sub->add_option("--from", sweep_options.from, "first parameter value")->required();
    sub->add_option("--to", sweep_options.to, "last parameter value")->required();
    sub->add_option("--points", sweep_options.points, "grid size (>= 2)")->required();
    sub->add_option("--out", sweep_out, "output CSV path (default: stdout)");
  }

  // audit: seeded property suite.
  CLI::App* audit_cmd = app.add_subcommand("audit", "Seeded property audit");
  symq::AuditOptions audit_options;
  audit_cmd->add_option("--seed", audit_options.seed, "RNG seed");
  audit_cmd->add_option("--samples", audit_options.samples, "samples per property");
  audit_cmd->add_flag("--inject-bad", audit_options.inject_bad,
                      "plant a synthetic violation (failure-path self-test)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return kExitParseError;
  }

  try {
    const double tol = tolerance_from_env();

    if (inv_cmd->parsed()) {
      std::optional<symq::PureSymmetricState> state;
      symq::PairState pair;
      int n_qubits = inv_n;
      if (inv_dicke->parsed()) {
        state = symq::dicke_state(inv_n, inv_m);
      } else if (inv_ku->parsed()) {
        state = symq::kitagawa_ueda_state(inv_n, inv_chit);
      } else if (inv_bath->parsed()) {
        state = symq::squeezed_bath_state(inv_n, inv_x);
      } else {
        const symq::StateFile file = symq::load_state_file(inv_path, tol);
        n_qubits = file.n_qubits;
        if (file.kind == symq::StateKind::pure) {
          state = file.pure;
        } else {
          pair = file.pair;
        }
      }
      if (state.has_value()) pair = symq::reduce_pure(*state);
      print_report(pair, n_qubits, state, tol);
      return kExitOk;
    }

    if (sweep_cmd->parsed()) {
      sweep_options.family = sweep_ku->parsed() ? symq::SweepFamily::ku : symq::SweepFamily::bath;
      sweep_options.tol = tol;
      const symq::SweepResult result = symq::run_sweep(sweep_options);
      for (const std::string& warning : result.warnings) {
        std::cerr << "warning: " << warning << "\n";
      }
      const std::string csv = symq::sweep_csv(result);
      if (sweep_out.empty()) {
        std::cout << csv;
      } else {
        std::ofstream out(sweep_out);
        if (!out) {
          std::cerr << "error: cannot open '" << sweep_out << "' for writing\n";
          return kExitUnwritable;
        }
        out << csv;
        out.flush();
        if (!out) {
          std::cerr << "error: write to '" << sweep_out << "' failed\n";
          return kExitUnwritable;
        }
      }
      return kExitOk;
    }

    // audit
    audit_options.tol = tol;
    const symq::AuditResult result = symq::run_audit(audit_options);
    std::cout << symq::audit_report(result);
    if (result.all_passed) return kExitOk;
    if (result.has_counterexample) {
      const std::string path = "audit_counterexample.state";
      try {
        symq::save_state_file(result.counterexample, path);
        std::cerr << "counterexample written to " << path << "\n";
      } catch (const std::ios_base::failure& error) {
        std::cerr << "could not write counterexample: " << error.what() << "\n";
      }
    }
    return kExitAuditViolation;
  } catch (const symq::ParseError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitParseError;
  } catch (const symq::InvalidStateError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitInvalidState;
  } catch (const std::invalid_argument& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitParseError;
  } catch (const std::domain_error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitParseError;
  } catch (const std::ios_base::failure& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitUnwritable;
  }
}
