#include "goalcheck/verify_plan.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "goalcheck/gdvl.hpp"
#include "goalcheck/state_store.hpp"

namespace goalcheck {

namespace {

CompiledDomain compile_with(const VerificationTask& task, bool constrained) {
  task.validate();
  CompiledDomain cd;
  auto vars = task.model.vars();
  std::string name = "violated";
  for (int n = 1; task.model.find_var(name); ++n) name = "violated_" + std::to_string(n);
  vars.push_back(VarDef::boolean(name));
  cd.violated_var = vars.size() - 1;
  cd.model = GroundedModel(task.model.name(), std::move(vars), task.model.actions());
  cd.violation = negate_safety(task.property);

  cd.initial = task.initial;
  cd.initial.values.push_back(cd.violation.holds(task.initial) ? 1 : 0);

  const Atom violated{cd.violated_var, Cmp::Eq, Value::boolean(true)};
  cd.gated = constrained;
  if (constrained) {
    cd.gate_goal = task.goal;
    cd.goal = task.goal;
  }
  cd.goal.atoms.push_back(violated);
  return cd;
}

}  // namespace

bool CompiledDomain::try_step(const State& s, const GroundAction& a, State& out) const {
  if (gated && eval_condition(s, gate_goal)) return false;
  if (!try_apply(model, s, a, out)) return false;
  if (violation.holds(out)) out[violated_var] = 1;
  return true;
}

CompiledDomain compile(const VerificationTask& task) { return compile_with(task, true); }

CompiledDomain compile_unconstrained(const VerificationTask& task) {
  return compile_with(task, false);
}

PlanResult bfs_plan(const CompiledDomain& cd, const SearchOptions& opts) {
  constexpr auto kRoot = std::numeric_limits<std::uint32_t>::max();
  PlanResult r;
  StateStore open(cd.model.encoded_size());
  std::vector<std::uint8_t> key(open.width());
  std::vector<std::uint32_t> parent, via, depth;

  auto plan_to = [&](std::uint32_t node) {
    std::vector<std::size_t> plan;
    for (; parent[node] != kRoot; node = parent[node]) plan.push_back(via[node]);
    std::reverse(plan.begin(), plan.end());
    return plan;
  };

  cd.model.encode(cd.initial, key);
  open.insert(key);
  parent.push_back(kRoot);
  via.push_back(0);
  depth.push_back(0);
  r.stats.evaluated_states = 1;
  if (eval_condition(cd.initial, cd.goal)) {
    r.status = PlanResult::Status::Found;
    return r;
  }

  State s, t;
  for (std::uint32_t i = 0; i < open.size(); ++i) {
    cd.model.decode_into(open.key(i), s);
    for (std::uint32_t a = 0; a < cd.model.actions().size(); ++a) {
      if (!cd.try_step(s, cd.model.actions()[a], t)) continue;
      ++r.stats.generated;
      cd.model.encode(t, key);
      auto [node, fresh] = open.insert(key);
      if (!fresh) continue;
      if (open.size() > opts.state_budget) {
        r.status = PlanResult::Status::BudgetExceeded;
        r.stats.evaluated_states = opts.state_budget;
        return r;
      }
      parent.push_back(i);
      via.push_back(a);
      depth.push_back(depth[i] + 1);
      r.stats.evaluated_states = open.size();
      r.stats.max_depth = std::max<std::uint64_t>(r.stats.max_depth, depth[node]);
      if (eval_condition(t, cd.goal)) {
        r.status = PlanResult::Status::Found;
        r.plan = plan_to(node);
        return r;
      }
    }
  }
  r.status = PlanResult::Status::NoPlan;
  return r;
}

Verdict verify_via_planning(const VerificationTask& task, Mode mode, const SearchOptions& opts) {
  if (mode == Mode::Ungated)
    throw std::invalid_argument("ungated mode is not available on the planner backend");
  Verdict v;
  v.mode = mode;
  v.backend = Backend::Planner;

  if (mode == Mode::Constrained) {
    auto reach = check_goal_reachable(task.model, task.initial, task.goal, opts);
    v.reachability_stats = reach.stats;
    if (reach.budget_exceeded || !reach.reachable) {
      v.kind = reach.budget_exceeded ? VerdictKind::BudgetExceeded : VerdictKind::GoalUnreachable;
      v.stats = reach.stats;
      return v;
    }
    v.notes.push_back(
        "planner backend disables all transitions out of goal states so that plans end at their "
        "first goal state");
  }

  const auto cd = mode == Mode::Constrained ? compile(task) : compile_unconstrained(task);
  auto r = bfs_plan(cd, opts);
  v.stats = r.stats;
  switch (r.status) {
    case PlanResult::Status::NoPlan:
      v.kind = VerdictKind::Safe;
      break;
    case PlanResult::Status::BudgetExceeded:
      v.kind = VerdictKind::BudgetExceeded;
      break;
    case PlanResult::Status::Found:
      v.kind = VerdictKind::Unsafe;
      v.counterexample = make_counterexample(task, r.plan);
      break;
  }
  return v;
}

std::string describe_compiled(const CompiledDomain& cd) {
  VerificationTask t;
  t.model = cd.model;
  t.initial = cd.initial;
  t.goal = cd.goal;
  std::string out = dump_grounded(t);
  out += "; monitor: after every transition, " + cd.model.vars()[cd.violated_var].name +
         " := true if the successor violates the safety property (sticky)\n";
  if (cd.gated) out += "; gate: no transitions leave states that satisfy the original goal\n";
  return out;
}

}  // namespace goalcheck
