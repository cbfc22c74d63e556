// Synthetic counter-model experiments.
//
// EXP1: one critical and three independent counters in 0..31, goal
// critical = 14, error value swept over 1..31.
// EXP2: one critical and four independent counters in 0..15, no error,
// goal value swept over 1..14.

#ifndef GOALCHECK_BENCH_HPP
#define GOALCHECK_BENCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "goalcheck/gdvl.hpp"
#include "goalcheck/property.hpp"
#include "goalcheck/verdict.hpp"

namespace goalcheck {

enum class Experiment { Exp1, Exp2 };
const char* to_string(Experiment e);
/// Accepts "exp1", "exp2". Throws std::invalid_argument.
Experiment parse_experiment(const std::string& s);

struct ExpConfig {
  Experiment experiment = Experiment::Exp1;
  int n_independent = 3;
  int range_hi = 31;
  int goal_value = 14;     // EXP1 only
  std::vector<int> sweep;  // error values (EXP1) or goal values (EXP2)
  std::vector<Backend> backends{Backend::ModelChecker};
  std::vector<Mode> modes{Mode::Constrained, Mode::Unconstrained};
  std::uint64_t state_budget = kDefaultStateBudget;

  static ExpConfig exp1();
  static ExpConfig exp2();
  /// Throws std::invalid_argument if the configuration is inconsistent.
  void validate() const;
};

struct Record {
  std::string experiment;
  Backend backend = Backend::ModelChecker;
  Mode mode = Mode::Constrained;
  int sweep_value = 0;
  VerdictKind verdict = VerdictKind::Safe;
  long long cex_length = -1;
  std::uint64_t evaluated_states = 0;
  std::uint64_t generated = 0;
  long long wall_ms = 0;
};

/// GDVL text of the counter model: `critical` plus `n_vars` independent
/// counters `v1..vn`, all in 0..range_hi starting at 0, with inc/dec actions
/// per counter, goal critical = goal_value and property
/// always(critical != error_value) (always(true) when absent).
std::string counter_model_text(int n_vars, int range_hi, int goal_value,
                               std::optional<int> error_value);

ModelSpec gen_counter_model(int n_vars, int range_hi, int goal_value,
                            std::optional<int> error_value);

/// One fresh verification per (sweep point, mode, backend), ordered by sweep
/// value, then mode, then backend. Budget overruns are recorded, not thrown.
std::vector<Record> run_sweep(const ExpConfig& cfg);

/// CSV with header
/// experiment,backend,mode,sweep_value,verdict,cex_length,evaluated_states,generated,wall_ms
std::string emit_csv(const std::vector<Record>& records);

/// Whitespace-separated `sweep_value evaluated_states` rows for one series.
std::string emit_gnuplot(const std::vector<Record>& records, Mode mode, Backend backend);

}  // namespace goalcheck

#endif  // GOALCHECK_BENCH_HPP
