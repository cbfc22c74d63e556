// Redundant-plan test: a plan is redundant when some strict subsequence of
// it, replayed from s0, also reaches the goal.

#ifndef GOALCHECK_REDUNDANCY_HPP
#define GOALCHECK_REDUNDANCY_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "goalcheck/model.hpp"
#include "goalcheck/verdict.hpp"

namespace goalcheck {

enum class RedundancyStrategy { Off, Greedy, Exhaustive };
const char* to_string(RedundancyStrategy s);
/// Accepts "off", "greedy", "exhaustive". Throws std::invalid_argument.
RedundancyStrategy parse_redundancy_strategy(const std::string& s);

/// Exhaustive checking is refused above this plan length.
inline constexpr std::size_t kExhaustiveRedundancyLimit = 20;

class RedundancyLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// True iff the kept actions, in order, are applicable in sequence from s0
/// and the final state satisfies the goal. `keep` holds ascending plan indices.
bool subsequence_achieves(const GroundedModel& model, const State& s0, const Condition& goal,
                          const std::vector<std::size_t>& plan,
                          const std::vector<std::size_t>& keep);

/// Greedy tries every single-action deletion and can only prove redundancy.
/// Exhaustive tries all 2^n - 1 strict subsequences (smallest bitmask first)
/// and throws RedundancyLimitError when the plan is longer than the limit.
/// Requires `plan` to be executable from the task's s0 and to end in a goal
/// state (std::invalid_argument otherwise). Off returns NotChecked.
RedundancyStatus check_redundancy(const VerificationTask& task,
                                  const std::vector<std::size_t>& plan,
                                  RedundancyStrategy strategy);

}  // namespace goalcheck

#endif  // GOALCHECK_REDUNDANCY_HPP
