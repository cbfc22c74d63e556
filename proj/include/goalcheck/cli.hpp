#ifndef GOALCHECK_CLI_HPP
#define GOALCHECK_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "goalcheck/bench.hpp"
#include "goalcheck/property.hpp"
#include "goalcheck/redundancy.hpp"
#include "goalcheck/verdict.hpp"

namespace goalcheck {

// Process exit codes.
inline constexpr int kExitSafe = 0;
inline constexpr int kExitUnsafe = 1;
inline constexpr int kExitGoalUnreachable = 2;
inline constexpr int kExitInputError = 3;
inline constexpr int kExitBudgetExceeded = 4;

struct CliConfig {
  enum class Command { Check, Bench, Ground };
  Command command = Command::Check;
  std::string model_path;
  Mode mode = Mode::Constrained;
  Backend backend = Backend::ModelChecker;
  RedundancyStrategy redundancy = RedundancyStrategy::Greedy;
  std::string json_path;
  std::string out_path;
  std::string gnuplot_prefix;
  std::uint64_t budget = kDefaultStateBudget;
  Experiment experiment = Experiment::Exp1;
  std::vector<Mode> modes{Mode::Constrained, Mode::Unconstrained};
  bool compiled = false;  // ground: also list the planner's compiled domain

  /// Throws std::invalid_argument for inconsistent flag combinations.
  void validate() const;
};

int cmd_check(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bench(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_ground(const CliConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to the matching command.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace goalcheck

#endif  // GOALCHECK_CLI_HPP
