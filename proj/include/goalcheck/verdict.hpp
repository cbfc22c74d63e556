#ifndef GOALCHECK_VERDICT_HPP
#define GOALCHECK_VERDICT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "goalcheck/model.hpp"
#include "goalcheck/property.hpp"

namespace goalcheck {

enum class Backend : std::uint8_t { ModelChecker, Planner };
const char* to_string(Backend b);
/// Accepts "mc" and "planner". Throws std::invalid_argument.
Backend parse_backend(const std::string& s);

struct SearchStats {
  std::uint64_t evaluated_states = 0;  // unique closed-set insertions
  std::uint64_t generated = 0;         // successor evaluations
  std::uint64_t max_depth = 0;         // deepest BFS layer reached

  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

struct RedundancyStatus {
  enum class Kind : std::uint8_t { NotChecked, NonRedundant, Redundant, Unknown };
  Kind kind = Kind::NotChecked;
  std::vector<std::size_t> witness;  // kept plan indices of a goal-achieving strict subsequence
  std::string reason;

  static RedundancyStatus non_redundant() { return {Kind::NonRedundant, {}, {}}; }
  static RedundancyStatus redundant(std::vector<std::size_t> keep) {
    return {Kind::Redundant, std::move(keep), {}};
  }
  static RedundancyStatus unknown(std::string why) { return {Kind::Unknown, {}, std::move(why)}; }
};

const char* to_string(RedundancyStatus::Kind k);

struct Counterexample {
  std::vector<std::size_t> actions;        // indices into the model's actions
  std::vector<std::string> plan;           // action names
  std::vector<State> trace;                // plan.size() + 1 states, starting at s0
  std::optional<std::size_t> error_index;  // first i with s_i |= !phi
  std::optional<std::size_t> goal_index;   // first j with s_j |= g
  RedundancyStatus redundancy;

  std::size_t length() const { return plan.size(); }
};

/// Replays `actions` from the task's initial state and fills in trace and
/// indices. Throws std::logic_error if some step is inapplicable.
Counterexample make_counterexample(const VerificationTask& task,
                                   const std::vector<std::size_t>& actions);

enum class VerdictKind : std::uint8_t { Safe, Unsafe, GoalUnreachable, BudgetExceeded };
const char* to_string(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::Safe;
  Mode mode = Mode::Constrained;
  Backend backend = Backend::ModelChecker;
  std::optional<Counterexample> counterexample;
  SearchStats stats;               // main search
  SearchStats reachability_stats;  // goal-reachability pre-check, when run
  std::vector<std::string> notes;
};

/// Closed-set budget used when none is given (entries, not bytes).
inline constexpr std::uint64_t kDefaultStateBudget = 10'000'000;

}  // namespace goalcheck

#endif  // GOALCHECK_VERDICT_HPP
