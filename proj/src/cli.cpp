#include "skeinpos/cli.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "skeinpos/errors.hpp"

namespace skeinpos::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Names {
  Command command;
  const char* name;
};

constexpr Names kCommands[] = {
    {Command::VerifyEq1, "verify-eq1"}, {Command::VerifyZkn, "verify-zkn"},
    {Command::VerifyD1, "verify-d1"},   {Command::Audit, "audit"},
    {Command::Minimality, "minimality"}, {Command::ArcConstraints, "arc-constraints"},
    {Command::Resolve, "resolve"},
};

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

ResolveOptions options_of(const RunConfig& c) { return {c.crossing_cap, c.jobs}; }

SequenceSpec sequence_of(const RunConfig& c) {
  try {
    return parse_sequence(c.sequence);
  } catch (const std::exception& e) {
    throw UsageError(std::string("invalid sequence: ") + e.what());
  }
}

SkeinVector maybe_q1(const RunConfig& c, const SkeinVector& v) { return c.q1 ? specialize_q1(v) : v; }

struct Case {
  std::string label;
  SkeinVector lhs;
  SkeinVector rhs;
  bool pass = false;
};

int emit_cases(const RunConfig& c, const std::string& identity, const std::vector<Case>& cases, std::ostream& out) {
  bool all = true;
  for (const auto& x : cases) all = all && x.pass;
  if (c.format == Format::Json) {
    nlohmann::ordered_json j;
    j["command"] = command_name(c.command);
    j["identity"] = identity;
    j["q1"] = c.q1;
    j["cases"] = nlohmann::ordered_json::array();
    for (const auto& x : cases)
      j["cases"].push_back({{"case", x.label}, {"lhs", to_json(x.lhs)}, {"rhs", to_json(x.rhs)}, {"pass", x.pass}});
    j["pass"] = all;
    out << j.dump(2) << '\n';
  } else if (c.format == Format::Tsv) {
    out << "case\tpass\tlhs\trhs\n";
    for (const auto& x : cases)
      out << x.label << '\t' << (x.pass ? "PASS" : "FAIL") << '\t' << to_string(x.lhs) << '\t' << to_string(x.rhs)
          << '\n';
  } else {
    out << "identity: " << identity << (c.q1 ? "  (at q = 1)" : "") << '\n';
    for (const auto& x : cases) {
      out << x.label << "  " << (x.pass ? "PASS" : "FAIL") << '\n';
      out << "  lhs: " << to_string(x.lhs) << '\n';
      out << "  rhs: " << to_string(x.rhs) << '\n';
    }
    out << "result: " << (all ? "PASS" : "FAIL") << '\n';
  }
  return all ? kPass : kFail;
}

int verify_eq1(const RunConfig& c, std::ostream& out) {
  require(c.n >= 1, "--n must be at least 1");
  require(static_cast<std::size_t>(c.n) <= c.crossing_cap,
          "--n " + std::to_string(c.n) + " needs " + std::to_string(c.n) + " crossings, above the crossing cap " +
              std::to_string(c.crossing_cap));
  std::vector<Case> cases;
  for (int m = 1; m <= c.n; ++m) {
    Case x;
    x.label = "n=" + std::to_string(m);
    x.lhs = maybe_q1(c, theta_bullet(chebyshev(m), options_of(c)));
    SkeinVector rhs(AioArc{m}, LaurentPoly::q(m));
    rhs.add(AioArc{-m}, LaurentPoly::q(-m));
    x.rhs = maybe_q1(c, rhs);
    x.pass = x.lhs == x.rhs;
    cases.push_back(std::move(x));
  }
  return emit_cases(c, "theta_0 . T_n(z) = q^n theta_n + q^-n theta_-n  (marked annulus)", cases, out);
}

int verify_zkn(const RunConfig& c, std::ostream& out) {
  require(c.k >= 1 && c.n >= 1 && c.k <= c.n, "verify-zkn needs 1 <= k <= n");
  require(static_cast<std::size_t>(c.k) * static_cast<std::size_t>(c.n) <= c.crossing_cap,
          "x^" + std::to_string(c.k) + " y_" + std::to_string(c.n) + " has " + std::to_string(c.k * c.n) +
              " crossings, above the crossing cap " + std::to_string(c.crossing_cap));
  Case x;
  x.label = "k=" + std::to_string(c.k) + " n=" + std::to_string(c.n);
  x.lhs = maybe_q1(c, resolve_all_mod(build_xk_yn(c.k, c.n), IdealSpec::gammas(c.n), options_of(c)));
  auto target = normal_form(build_zkn(c.k, c.n));
  SkeinVector rhs;
  if (target) rhs = SkeinVector(target->basis, target->coeff.shifted(-c.k * c.n));
  x.rhs = maybe_q1(c, rhs);
  x.pass = x.lhs == x.rhs;
  return emit_cases(c, "x^k y_n = q^-kn z_{k,n}  mod (gamma_0, ..., gamma_{n-1})  (disk D_n)", {x}, out);
}

int emit_constraints(const RunConfig& c, const ConstraintReport& report, std::ostream& out) {
  const ConstraintReport shown = c.q1 ? specialize_q1(report) : report;
  out << emit_report(shown, c.format);
  return shown.passed() ? kPass : kFail;
}

Diagram diagram_of(const RunConfig& c) {
  const std::string& d = c.diagram;
  if (d == "core-stack") return build_core_stack(c.k);
  if (d == "theta-over-cores") return build_theta_over_cores(c.k);
  if (d == "d1-xy") return build_d1_xy();
  if (d == "kink+") return build_kink(Sign::Positive);
  if (d == "kink-") return build_kink(Sign::Negative);
  if (d == "xk-yn") {
    require(c.k >= 1 && c.n >= 1, "xk-yn needs k, n >= 1");
    return build_xk_yn(c.k, c.n);
  }
  if (d == "zkn") {
    require(c.k >= 1 && c.k <= c.n, "zkn needs 1 <= k <= n");
    return build_zkn(c.k, c.n);
  }
  throw UsageError("unknown diagram '" + d + "'");
}

int resolve(const RunConfig& c, std::ostream& out, std::ostream& err) {
  require(c.k >= 0, "--k must be nonnegative");
  const Diagram d = diagram_of(c);
  ResolveStats stats;
  SkeinVector v;
  if (c.ideal == "none") {
    v = resolve_all(d, options_of(c), &stats);
  } else {
    require(d.surface.kind == SurfaceModel::Kind::Disk, "ideals apply to disk diagrams only");
    IdealSpec ideal;
    if (c.ideal == "gammas") ideal = IdealSpec::gammas(d.surface.point_count() / 2 - 1);
    else if (c.ideal == "boundary") ideal = IdealSpec::boundary(d.surface);
    else throw UsageError("unknown ideal '" + c.ideal + "' (expected none, gammas or boundary)");
    v = resolve_all_mod(d, ideal, options_of(c), &stats);
  }
  err << "resolved " << stats.states << " states (" << stats.zero_states << " zero, " << stats.discarded_states
      << " in the ideal)\n";
  out << emit_report(maybe_q1(c, v), c.format);
  return kPass;
}

int dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
  require(c.jobs >= 1, "--jobs must be at least 1");
  switch (c.command) {
    case Command::VerifyEq1: return verify_eq1(c, out);
    case Command::VerifyZkn: return verify_zkn(c, out);
    case Command::VerifyD1: return emit_constraints(c, d1_constraints(sequence_of(c), options_of(c)), out);
    case Command::Audit: {
      require(c.max_n >= 1, "--max-n must be at least 1");
      const SequenceSpec seq = sequence_of(c);
      const auto rows = structure_constant_audit(seq, c.max_n, c.q1);
      if (c.format == Format::Text)
        out << "structure constants of sequence " << seq.name() << " on the annulus, 0 <= m, n <= " << c.max_n
            << (c.q1 ? " (at q = 1)" : "") << '\n';
      out << emit_report(rows, c.format);
      for (const auto& row : rows)
        if (!row.all_positive) return kFail;
      return kPass;
    }
    case Command::Minimality: {
      require(c.n >= 1, "--n must be at least 1");
      return emit_constraints(c, minimality_constraints(sequence_of(c), c.n), out);
    }
    case Command::ArcConstraints: {
      require(c.n >= 1, "--n must be at least 1");
      const int k_max = c.k;
      require(k_max >= 1 && k_max <= c.n, "arc-constraints needs 1 <= k <= n");
      if (!c.no_verify)
        require(static_cast<std::size_t>(k_max) * static_cast<std::size_t>(c.n) <= c.crossing_cap,
                "diagram cross-check needs " + std::to_string(k_max * c.n) + " crossings, above the crossing cap " +
                    std::to_string(c.crossing_cap) + "; pass --no-verify or raise --cap");
      return emit_constraints(c, q_constraints(sequence_of(c), c.n, k_max, !c.no_verify, options_of(c)), out);
    }
    case Command::Resolve: return resolve(c, out, err);
  }
  throw std::logic_error("unknown command");
}

}  // namespace

Command parse_command(const std::string& name) {
  for (const auto& [command, n] : kCommands)
    if (name == n) return command;
  throw std::invalid_argument("unknown command '" + name + "'");
}

std::string command_name(Command c) {
  for (const auto& [command, n] : kCommands)
    if (command == c) return n;
  return "?";
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(config, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const CrossingCapExceeded& e) {
    err << "refusing to expand: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace skeinpos::cli
