#include "goalcheck/cli.hpp"

#include <fstream>
#include <iostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "goalcheck/gdvl.hpp"
#include "goalcheck/report.hpp"
#include "goalcheck/verify_mc.hpp"
#include "goalcheck/verify_plan.hpp"

namespace goalcheck {

namespace {

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) return false;
  f << content;
  return static_cast<bool>(f);
}

int exit_code_for(VerdictKind k) {
  switch (k) {
    case VerdictKind::Safe:
      return kExitSafe;
    case VerdictKind::Unsafe:
      return kExitUnsafe;
    case VerdictKind::GoalUnreachable:
      return kExitGoalUnreachable;
    case VerdictKind::BudgetExceeded:
      return kExitBudgetExceeded;
  }
  return kExitInputError;
}

// Attaches a redundancy status when the counterexample is an actual plan.
void annotate_redundancy(const VerificationTask& task, Verdict& v, RedundancyStrategy strategy) {
  if (!v.counterexample || strategy == RedundancyStrategy::Off) return;
  auto& cex = *v.counterexample;
  if (!eval_condition(cex.trace.back(), task.goal)) {
    v.notes.push_back("redundancy not checked: the counterexample does not end in a goal state");
    return;
  }
  if (strategy == RedundancyStrategy::Exhaustive && cex.length() > kExhaustiveRedundancyLimit) {
    v.notes.push_back("plan too long for exhaustive redundancy check; used greedy");
    strategy = RedundancyStrategy::Greedy;
  }
  cex.redundancy = check_redundancy(task, cex.actions, strategy);
}

}  // namespace

void CliConfig::validate() const {
  if (command == Command::Check && mode == Mode::Ungated && backend == Backend::Planner)
    throw std::invalid_argument("--mode ungated cannot be combined with --backend planner");
  if (command == Command::Bench && backend == Backend::Planner)
    for (auto m : modes)
      if (m == Mode::Ungated)
        throw std::invalid_argument("--modes ungated cannot be combined with --backend planner");
  if (budget == 0) throw std::invalid_argument("--budget must be positive");
}

int cmd_check(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  VerificationTask task;
  try {
    cfg.validate();
    task = ground(load_gdvl_file(cfg.model_path));
  } catch (const std::exception& e) {
    err << cfg.model_path << ":" << e.what() << "\n";
    return kExitInputError;
  }
  const SearchOptions opts{cfg.budget};
  Verdict v = cfg.backend == Backend::ModelChecker ? verify(task, cfg.mode, opts)
                                                   : verify_via_planning(task, cfg.mode, opts);
  annotate_redundancy(task, v, cfg.redundancy);
  out << verdict_text(v);
  if (!cfg.json_path.empty() && !write_file(cfg.json_path, verdict_json(task.model, v))) {
    err << "cannot write '" << cfg.json_path << "'\n";
    return kExitInputError;
  }
  return exit_code_for(v.kind);
}

int cmd_bench(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  ExpConfig exp = cfg.experiment == Experiment::Exp1 ? ExpConfig::exp1() : ExpConfig::exp2();
  exp.backends = {cfg.backend};
  exp.modes = cfg.modes;
  exp.state_budget = cfg.budget;
  try {
    cfg.validate();
    exp.validate();
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitInputError;
  }
  const auto records = run_sweep(exp);
  const auto csv = emit_csv(records);
  if (cfg.out_path.empty()) {
    out << csv;
  } else if (!write_file(cfg.out_path, csv)) {
    err << "cannot write '" << cfg.out_path << "'\n";
    return kExitInputError;
  }
  if (!cfg.gnuplot_prefix.empty()) {
    for (auto m : exp.modes) {
      auto path = cfg.gnuplot_prefix + "-" + to_string(m) + "-" + to_string(cfg.backend) + ".dat";
      if (!write_file(path, emit_gnuplot(records, m, cfg.backend))) {
        err << "cannot write '" << path << "'\n";
        return kExitInputError;
      }
    }
  }
  for (const auto& r : records)
    if (r.verdict == VerdictKind::BudgetExceeded) return kExitBudgetExceeded;
  return 0;
}

int cmd_ground(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    auto task = ground(load_gdvl_file(cfg.model_path));
    out << dump_grounded(task);
    if (cfg.compiled) out << "\n" << describe_compiled(compile(task));
  } catch (const std::exception& e) {
    err << cfg.model_path << ":" << e.what() << "\n";
    return kExitInputError;
  }
  return 0;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Goal-constrained safety verification of grounded planning models"};
  app.require_subcommand(1);
  CliConfig cfg;
  std::string mode = "constrained", backend = "mc", redundancy = "greedy", experiment;
  std::vector<std::string> modes{"constrained", "unconstrained"};
  const std::vector<std::string> mode_names{"constrained", "unconstrained", "ungated"};
  const std::vector<std::string> backend_names{"mc", "planner"};

  auto* check = app.add_subcommand("check", "Verify a model against its safety property");
  check->add_option("model", cfg.model_path, "GDVL model file")->required();
  check->add_option("--mode", mode, "constrained|unconstrained|ungated")
      ->check(CLI::IsMember(mode_names));
  check->add_option("--backend", backend, "mc|planner")->check(CLI::IsMember(backend_names));
  check->add_option("--redundancy", redundancy, "off|greedy|exhaustive")
      ->check(CLI::IsMember({"off", "greedy", "exhaustive"}));
  check->add_option("--budget", cfg.budget, "closed-set entry limit");
  check->add_option("--json", cfg.json_path, "write the JSON verdict here");

  auto* bench = app.add_subcommand("bench", "Run a synthetic counter-model sweep");
  bench->add_option("experiment", experiment, "exp1|exp2")
      ->required()
      ->check(CLI::IsMember({"exp1", "exp2"}));
  bench->add_option("--backend", backend, "mc|planner")->check(CLI::IsMember(backend_names));
  bench->add_option("--modes", modes, "comma-separated modes")
      ->delimiter(',')
      ->check(CLI::IsMember(mode_names));
  bench->add_option("--budget", cfg.budget, "closed-set entry limit per run");
  bench->add_option("--out", cfg.out_path, "CSV output path (stdout if omitted)");
  bench->add_option("--gnuplot", cfg.gnuplot_prefix, "also write PREFIX-<mode>-<backend>.dat");

  auto* groundcmd = app.add_subcommand("ground", "Print the fully ground model");
  groundcmd->add_option("model", cfg.model_path, "GDVL model file")->required();
  groundcmd->add_flag("--compiled", cfg.compiled, "also print the planner's compiled domain");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : kExitInputError;
  }

  cfg.mode = parse_mode(mode);
  cfg.backend = parse_backend(backend);
  cfg.redundancy = parse_redundancy_strategy(redundancy);
  cfg.modes.clear();
  for (const auto& m : modes) cfg.modes.push_back(parse_mode(m));

  if (check->parsed()) {
    cfg.command = CliConfig::Command::Check;
    return cmd_check(cfg, out, err);
  }
  if (bench->parsed()) {
    cfg.command = CliConfig::Command::Bench;
    cfg.experiment = parse_experiment(experiment);
    return cmd_bench(cfg, out, err);
  }
  cfg.command = CliConfig::Command::Ground;
  return cmd_ground(cfg, out, err);
}

}  // namespace goalcheck
