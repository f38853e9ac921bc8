#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "skeinpos/cli.hpp"

namespace sc = skeinpos::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact Kauffman bracket skein computations and positivity checks"};
  app.require_subcommand(1);

  sc::RunConfig config;
  std::string format = "text";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format: text, json or tsv")
        ->check(CLI::IsMember({"text", "json", "tsv"}));
    sub->add_option("--cap", config.crossing_cap, "Refuse diagrams with more crossings than this");
    sub->add_option("--jobs", config.jobs, "Worker threads for state sums");
    sub->add_flag("--q1", config.q1, "Specialize results at q = 1");
  };

  struct Entry {
    sc::Command command;
    const char* help;
  };
  const Entry entries[] = {
      {sc::Command::VerifyEq1, "Check theta_0 . T_n(z) = q^n theta_n + q^-n theta_-n for every n up to --n"},
      {sc::Command::VerifyZkn, "Check x^k y_n = q^-kn z_{k,n} modulo the gamma ideal on D_n"},
      {sc::Command::VerifyD1, "Constraints on Q_1 from xy = 0 modulo the boundary arcs of D_1"},
      {sc::Command::Audit, "Positivity of structure constants of a sequence on the annulus"},
      {sc::Command::Minimality, "Loop-sequence constraints from P_1(z') P_n(z)"},
      {sc::Command::ArcConstraints, "Arc-sequence constraints from Q_n(x) y_n on D_n"},
      {sc::Command::Resolve, "Resolve a built-in diagram to normal form"},
  };

  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(sc::command_name(e.command), e.help);
    common(sub);
    sub->callback([&config, cmd = e.command] { config.command = cmd; });
    switch (e.command) {
      case sc::Command::VerifyEq1:
        sub->add_option("--n", config.n, "Largest n to check")->capture_default_str();
        break;
      case sc::Command::VerifyZkn:
        sub->add_option("--k", config.k)->capture_default_str();
        sub->add_option("--n", config.n)->capture_default_str();
        break;
      case sc::Command::VerifyD1:
        sub->add_option("--seq", config.sequence, "chebyshev, power or a JSON file")->capture_default_str();
        break;
      case sc::Command::Audit:
        sub->add_option("--seq", config.sequence, "chebyshev, power or a JSON file")->capture_default_str();
        sub->add_option("--max-n", config.max_n)->capture_default_str();
        break;
      case sc::Command::Minimality:
        sub->add_option("--seq", config.sequence, "chebyshev, power or a JSON file")->capture_default_str();
        sub->add_option("--n", config.n)->capture_default_str();
        break;
      case sc::Command::ArcConstraints:
        sub->add_option("--seq", config.sequence, "chebyshev, power or a JSON file")->capture_default_str();
        sub->add_option("--n", config.n)->capture_default_str();
        sub->add_option("--k", config.k, "Cross-check z_{k,n} for 1 <= k <= this")->capture_default_str();
        sub->add_flag("--no-verify", config.no_verify, "Skip the state-sum cross-check");
        break;
      case sc::Command::Resolve:
        sub->add_option("--diagram", config.diagram,
                        "core-stack, theta-over-cores, xk-yn, zkn, d1-xy, kink+ or kink-")
            ->capture_default_str();
        sub->add_option("--ideal", config.ideal, "none, gammas or boundary")->capture_default_str();
        sub->add_option("--k", config.k)->capture_default_str();
        sub->add_option("--n", config.n)->capture_default_str();
        break;
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? sc::kPass : sc::kUsage;
  }
  config.format = skeinpos::parse_format(format);
  return sc::run(config, std::cout, std::cerr);
}
