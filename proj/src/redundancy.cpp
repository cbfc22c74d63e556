#include "goalcheck/redundancy.hpp"

#include <cstdint>

namespace goalcheck {

const char* to_string(RedundancyStrategy s) {
  switch (s) {
    case RedundancyStrategy::Off:
      return "off";
    case RedundancyStrategy::Greedy:
      return "greedy";
    case RedundancyStrategy::Exhaustive:
      return "exhaustive";
  }
  return "?";
}

RedundancyStrategy parse_redundancy_strategy(const std::string& s) {
  if (s == "off") return RedundancyStrategy::Off;
  if (s == "greedy") return RedundancyStrategy::Greedy;
  if (s == "exhaustive") return RedundancyStrategy::Exhaustive;
  throw std::invalid_argument("unknown redundancy strategy '" + s + "'");
}

bool subsequence_achieves(const GroundedModel& model, const State& s0, const Condition& goal,
                          const std::vector<std::size_t>& plan,
                          const std::vector<std::size_t>& keep) {
  State s = s0, next;
  for (std::size_t i : keep) {
    if (!try_apply(model, s, model.actions().at(plan.at(i)), next)) return false;
    std::swap(s, next);
  }
  return eval_condition(s, goal);
}

RedundancyStatus check_redundancy(const VerificationTask& task,
                                  const std::vector<std::size_t>& plan,
                                  RedundancyStrategy strategy) {
  if (strategy == RedundancyStrategy::Off) return {};
  const std::size_t n = plan.size();
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  if (!subsequence_achieves(task.model, task.initial, task.goal, plan, all))
    throw std::invalid_argument("redundancy check needs an executable plan that reaches the goal");

  std::vector<std::size_t> keep;
  if (strategy == RedundancyStrategy::Greedy) {
    for (std::size_t drop = 0; drop < n; ++drop) {
      keep.clear();
      for (std::size_t i = 0; i < n; ++i)
        if (i != drop) keep.push_back(i);
      if (subsequence_achieves(task.model, task.initial, task.goal, plan, keep))
        return RedundancyStatus::redundant(keep);
    }
    if (n == 0) return RedundancyStatus::non_redundant();
    return RedundancyStatus::unknown("greedy single-deletion check found no witness");
  }

  if (n > kExhaustiveRedundancyLimit)
    throw RedundancyLimitError("plan of length " + std::to_string(n) +
                               " exceeds the exhaustive redundancy limit of " +
                               std::to_string(kExhaustiveRedundancyLimit));
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 0; mask < full; ++mask) {
    keep.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) keep.push_back(i);
    if (subsequence_achieves(task.model, task.initial, task.goal, plan, keep))
      return RedundancyStatus::redundant(keep);
  }
  return RedundancyStatus::non_redundant();
}

}  // namespace goalcheck
