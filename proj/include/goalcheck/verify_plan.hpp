// Planning backend. The negated safety property is compiled into the domain
// as a sticky `violated` variable, and a complete breadth-first planner looks
// for a plan reaching g' = g && violated.

#ifndef GOALCHECK_VERIFY_PLAN_HPP
#define GOALCHECK_VERIFY_PLAN_HPP

#include <string>
#include <vector>

#include "goalcheck/model.hpp"
#include "goalcheck/property.hpp"
#include "goalcheck/verdict.hpp"
#include "goalcheck/verify_mc.hpp"

namespace goalcheck {

/// D', s0', g'. Base actions are copied unchanged; after every transition
/// the successor's `violated` bit is set if the successor violates phi.
struct CompiledDomain {
  GroundedModel model;  // base variables followed by `violated`
  std::size_t violated_var = 0;
  State initial;
  ViolationTest violation;  // over base variables
  bool gated = true;        // no successors from states satisfying `gate_goal`
  Condition gate_goal;
  Condition goal;

  /// Synchronized successor: base transition plus monitor update.
  bool try_step(const State& s, const GroundAction& a, State& out) const;
};

/// Goal-constrained compilation: g' = g && violated, gated on g.
CompiledDomain compile(const VerificationTask& task);
/// Goal-free compilation used for the unconstrained baseline: g' = violated, no gate.
CompiledDomain compile_unconstrained(const VerificationTask& task);

struct PlanResult {
  enum class Status { Found, NoPlan, BudgetExceeded };
  Status status = Status::NoPlan;
  std::vector<std::size_t> plan;
  SearchStats stats;
};

/// Shortest plan for g' by breadth-first search, ties broken by action order.
PlanResult bfs_plan(const CompiledDomain& cd, const SearchOptions& opts = {});

/// Constrained or unconstrained verification through the planner. Ungated
/// mode is not available on this backend (std::invalid_argument).
Verdict verify_via_planning(const VerificationTask& task, Mode mode = Mode::Constrained,
                            const SearchOptions& opts = {});

/// GDVL-style listing of D' plus a note on the monitor update rule.
std::string describe_compiled(const CompiledDomain& cd);

}  // namespace goalcheck

#endif  // GOALCHECK_VERIFY_PLAN_HPP
