#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "skeinpos/report.hpp"

namespace skeinpos::cli {

enum class Command { VerifyEq1, VerifyZkn, VerifyD1, Audit, Minimality, ArcConstraints, Resolve };

// Exit status contract.
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;

struct RunConfig {
  Command command = Command::VerifyEq1;
  int n = 1;
  int k = 1;
  int max_n = 10;
  /// "chebyshev", "power", or a JSON sequence file.
  std::string sequence = "chebyshev";
  Format format = Format::Text;
  std::size_t crossing_cap = 24;
  unsigned jobs = 1;
  bool q1 = false;
  /// resolve: core-stack, theta-over-cores, xk-yn, zkn, d1-xy, kink+, kink-
  std::string diagram = "theta-over-cores";
  /// resolve: none, gammas, boundary
  std::string ideal = "none";
  /// arc-constraints: skip the state-sum cross-check
  bool no_verify = false;
};

Command parse_command(const std::string& name);
std::string command_name(Command c);

/// Runs one command. Reports go to out, diagnostics to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace skeinpos::cli
