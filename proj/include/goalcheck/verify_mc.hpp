// Model-checking backend: goal-reachability pre-check followed by a
// breadth-first search of the product of the (optionally gated) model with
// the violation/goal monitor.

#ifndef GOALCHECK_VERIFY_MC_HPP
#define GOALCHECK_VERIFY_MC_HPP

#include <cstdint>

#include "goalcheck/model.hpp"
#include "goalcheck/property.hpp"
#include "goalcheck/verdict.hpp"

namespace goalcheck {

struct SearchOptions {
  std::uint64_t state_budget = kDefaultStateBudget;
};

struct ReachabilityResult {
  bool reachable = false;
  bool budget_exceeded = false;
  SearchStats stats;
};

/// Plain BFS over the base model; true iff some reachable state satisfies `goal`.
ReachabilityResult check_goal_reachable(const GroundedModel& model, const State& s0,
                                        const Condition& goal, const SearchOptions& opts = {});

/// Runs the verification for one mode. Constrained and ungated modes first
/// check that the goal is reachable at all. Counterexamples are shortest and
/// ties are broken by action declaration order.
Verdict verify(const VerificationTask& task, Mode mode, const SearchOptions& opts = {});

}  // namespace goalcheck

#endif  // GOALCHECK_VERIFY_MC_HPP
