#include "symq/state_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>
#include <system_error>
#include <vector>

namespace symq {
namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    if (end > pos) tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

double parse_double(std::string_view token) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("not a number: '" + std::string(token) + "'");
  }
  return value;
}

int parse_int(std::string_view token) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("not an integer: '" + std::string(token) + "'");
  }
  return value;
}

/// Non-empty lines of the input, in order.
std::vector<std::vector<std::string_view>> token_lines(std::string_view text) {
  std::vector<std::vector<std::string_view>> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    const std::size_t end = (nl == std::string_view::npos) ? text.size() : nl;
    auto tokens = tokenize(text.substr(start, end - start));
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return lines;
}

void validate(const StateFile& file, double tol) {
  if (file.kind == StateKind::pure) {
    const double norm = file.pure.amplitudes.norm();
    if (std::abs(norm - 1.0) > 1e-8) {
      throw InvalidStateError("pure-state amplitude norm is " + format_double(norm) +
                              ", must be 1");
    }
    return;
  }
  const PairValidity validity = check_pair(file.pair, tol);
  if (!validity.ok) {
    std::string message = "pair state violates:";
    for (const std::string& violation : validity.violations) message += " " + violation + ";";
    throw InvalidStateError(message);
  }
}

}  // namespace

std::string format_double(double value) {
  std::array<char, 64> buffer{};
  const auto [ptr, ec] =
      std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                    std::chars_format::general, 17);
  if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return std::string(buffer.data(), ptr);
}

std::string write_state_file(const StateFile& file) {
  std::string out = "N " + std::to_string(file.n_qubits) + "\n";
  if (file.kind == StateKind::pure) {
    out += "kind pure\n";
    for (Eigen::Index m = 0; m < file.pure.amplitudes.size(); ++m) {
      out += format_double(file.pure.amplitudes[m].real()) + " " +
             format_double(file.pure.amplitudes[m].imag()) + "\n";
    }
    return out;
  }
  out += "kind pair\n";
  out += "s";
  for (int i = 0; i < 3; ++i) out += " " + format_double(file.pair.s[i]);
  out += "\nt";
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) out += " " + format_double(file.pair.t(i, j));
  }
  out += "\n";
  return out;
}

StateFile parse_state_file(const std::string& text, double tol) {
  const auto lines = token_lines(text);
  if (lines.size() < 2) throw ParseError("expected at least an N line and a kind line");
  if (lines[0].size() != 2 || lines[0][0] != "N") throw ParseError("line 1 must be `N <integer>`");
  if (lines[1].size() != 2 || lines[1][0] != "kind") {
    throw ParseError("line 2 must be `kind pure|pair`");
  }

  StateFile file;
  file.n_qubits = parse_int(lines[0][1]);
  if (file.n_qubits < 2) throw ParseError("N must be at least 2");

  if (lines[1][1] == "pure") {
    file.kind = StateKind::pure;
    const std::size_t expected = static_cast<std::size_t>(file.n_qubits) + 1;
    if (lines.size() != 2 + expected) {
      throw ParseError("pure state needs exactly N+1 amplitude lines");
    }
    file.pure.n_qubits = file.n_qubits;
    file.pure.amplitudes.resize(file.n_qubits + 1);
    for (std::size_t m = 0; m < expected; ++m) {
      if (lines[2 + m].size() != 2) throw ParseError("amplitude lines must be `re im`");
      file.pure.amplitudes[static_cast<Eigen::Index>(m)] =
          Complex(parse_double(lines[2 + m][0]), parse_double(lines[2 + m][1]));
    }
  } else if (lines[1][1] == "pair") {
    file.kind = StateKind::pair;
    if (lines.size() != 4) throw ParseError("pair state needs exactly an s line and a t line");
    if (lines[2].size() != 4 || lines[2][0] != "s") {
      throw ParseError("pair line 3 must be `s <s1> <s2> <s3>`");
    }
    if (lines[3].size() != 7 || lines[3][0] != "t") {
      throw ParseError("pair line 4 must be `t` plus the 6 upper-triangle entries");
    }
    for (int i = 0; i < 3; ++i) file.pair.s[i] = parse_double(lines[2][static_cast<std::size_t>(i) + 1]);
    std::size_t next = 1;
    for (int i = 0; i < 3; ++i) {
      for (int j = i; j < 3; ++j) {
        file.pair.t(i, j) = parse_double(lines[3][next++]);
        file.pair.t(j, i) = file.pair.t(i, j);
      }
    }
  } else {
    throw ParseError("kind must be `pure` or `pair`");
  }

  validate(file, tol);
  return file;
}

StateFile load_state_file(const std::string& path, double tol) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_state_file(buffer.str(), tol);
}

void save_state_file(const StateFile& file, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::ios_base::failure("cannot open '" + path + "' for writing");
  out << write_state_file(file);
  out.flush();
  if (!out) throw std::ios_base::failure("write to '" + path + "' failed");
}

}  // namespace symq
