// oomcalc: evaluate order-of-magnitude formulas, compare decision options,
// and run the soundness/completeness harness from the command line.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "oomcalc/commands.hpp"
#include "oomcalc/problem.hpp"

namespace {

oomcalc::Environment load_env(const std::string& path) {
  if (path.empty()) return {};
  return oomcalc::parse_environment(oomcalc::read_file(path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Order-of-magnitude calculus toolkit"};
  app.require_subcommand(1);

  oomcalc::RunConfig cfg;
  std::string env_path, problem_path;
  // Shared flags are accepted before or after the subcommand.
  auto common = [&](CLI::App* a) {
    a->add_option("--env", env_path, "Symbol bindings (JSON object or `name = value` lines)");
    a->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    a->add_option("--samples", cfg.samples, "Soundness samples per check")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    a->add_option("--budget", cfg.budget, "Witness search attempts per check")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    a->add_flag("--machine", cfg.machine, "Emit a JSON report");
  };
  common(&app);

  std::string expr, expr2, claim, file;
  auto* eval = app.add_subcommand("eval", "Evaluate a formula under --env");
  eval->add_option("expr", expr)->required();

  auto* compare = app.add_subcommand("compare", "Relate two formulas under --env");
  compare->add_option("lhs", expr)->required();
  compare->add_option("rhs", expr2)->required();

  auto* expect = app.add_subcommand("expect", "Expectations and preferences for a problem file");
  expect->add_option("file", file)->required();

  auto* pearl = app.add_subcommand("pearl", "Pearl's qualitative expectations next to the calculus");
  pearl->add_option("file", file)->required();

  auto* verify = app.add_subcommand("verify", "Check a claim `E1 > E2` or a two-option problem");
  verify->add_option("claim", claim);
  verify->add_option("--problem", problem_path, "Two-option problem file");

  for (auto* sub : {eval, compare, expect, pearl, verify}) common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : oomcalc::kUsage;
  }

  try {
    if (*eval) return oomcalc::cmd_eval(expr, load_env(env_path), cfg, std::cout);
    if (*compare) return oomcalc::cmd_compare(expr, expr2, load_env(env_path), cfg, std::cout);
    if (*expect) return oomcalc::cmd_expect(oomcalc::load_problem(file), cfg, std::cout);
    if (*pearl) return oomcalc::cmd_pearl(oomcalc::load_problem(file), cfg, std::cout);
    if (*verify) {
      if (claim.empty() == problem_path.empty()) {
        std::cerr << "verify: give either a claim or --problem FILE\n";
        return oomcalc::kUsage;
      }
      if (!problem_path.empty())
        return oomcalc::cmd_verify_problem(oomcalc::load_problem(problem_path), cfg, std::cout);
      return oomcalc::cmd_verify_claim(claim, load_env(env_path), cfg, std::cout);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return oomcalc::kUsage;
  }
  return oomcalc::kUsage;
}
