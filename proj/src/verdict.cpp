#include "goalcheck/verdict.hpp"

#include <stdexcept>

namespace goalcheck {

const char* to_string(Backend b) { return b == Backend::Planner ? "planner" : "mc"; }

Backend parse_backend(const std::string& s) {
  if (s == "mc") return Backend::ModelChecker;
  if (s == "planner") return Backend::Planner;
  throw std::invalid_argument("unknown backend '" + s + "'");
}

const char* to_string(RedundancyStatus::Kind k) {
  switch (k) {
    case RedundancyStatus::Kind::NotChecked:
      return "not_checked";
    case RedundancyStatus::Kind::NonRedundant:
      return "non_redundant";
    case RedundancyStatus::Kind::Redundant:
      return "redundant";
    case RedundancyStatus::Kind::Unknown:
      return "unknown";
  }
  return "?";
}

const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Safe:
      return "SAFE";
    case VerdictKind::Unsafe:
      return "UNSAFE";
    case VerdictKind::GoalUnreachable:
      return "GOAL_UNREACHABLE";
    case VerdictKind::BudgetExceeded:
      return "BUDGET_EXCEEDED";
  }
  return "?";
}

Counterexample make_counterexample(const VerificationTask& task,
                                   const std::vector<std::size_t>& actions) {
  const auto& model = task.model;
  const auto violation = negate_safety(task.property);
  Counterexample cex;
  cex.actions = actions;
  cex.trace.push_back(task.initial);
  for (std::size_t idx : actions) {
    const auto& a = model.actions().at(idx);
    auto next = apply(model, cex.trace.back(), a);
    if (!next) throw std::logic_error("counterexample step '" + a.name + "' is not applicable");
    cex.plan.push_back(a.name);
    cex.trace.push_back(std::move(*next));
  }
  for (std::size_t i = 0; i < cex.trace.size(); ++i) {
    if (!cex.error_index && violation.holds(cex.trace[i])) cex.error_index = i;
    if (!cex.goal_index && eval_condition(cex.trace[i], task.goal)) cex.goal_index = i;
  }
  return cex;
}

}  // namespace goalcheck
