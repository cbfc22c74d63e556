#include "goalcheck/property.hpp"

#include <algorithm>
#include <stdexcept>

namespace goalcheck {

const char* to_string(Mode m) {
  switch (m) {
    case Mode::Constrained:
      return "constrained";
    case Mode::Unconstrained:
      return "unconstrained";
    case Mode::Ungated:
      return "ungated";
  }
  return "?";
}

Mode parse_mode(const std::string& s) {
  if (s == "constrained") return Mode::Constrained;
  if (s == "unconstrained") return Mode::Unconstrained;
  if (s == "ungated") return Mode::Ungated;
  throw std::invalid_argument("unknown mode '" + s + "'");
}

bool ViolationTest::holds(const State& s) const {
  return std::any_of(any_of.begin(), any_of.end(), [&](const Atom& a) { return eval_atom(s, a); });
}

ViolationTest negate_safety(const SafetyProperty& p) {
  ViolationTest t;
  for (auto a : p.body.atoms) {
    a.cmp = negated(a.cmp);
    t.any_of.push_back(a);
  }
  return t;
}

std::vector<Successor> GatedModel::successors(const State& s) const {
  if (is_gated(s)) return {};
  return goalcheck::successors(*base_, s);
}

GatedModel gate(const GroundedModel& model, const Condition& goal) { return {model, goal}; }

SearchSpec::SearchSpec(const VerificationTask& task, Mode mode)
    : mode_(mode), model_(&task.model), monitor_(negate_safety(task.property), task.goal) {}

int SearchSpec::key_flags() const {
  switch (mode_) {
    case Mode::Constrained:
      return 1;
    case Mode::Unconstrained:
      return 0;
    case Mode::Ungated:
      return 2;
  }
  return 0;
}

bool SearchSpec::accepting(const MonitorFlags& f, const State& current) const {
  switch (mode_) {
    case Mode::Constrained:
      return f.seen_error && eval_condition(current, goal());
    case Mode::Unconstrained:
      return violation().holds(current);
    case Mode::Ungated:
      return f.seen_error && f.seen_goal;
  }
  return false;
}

bool SearchSpec::try_step(const State& s, const GroundAction& a, State& out) const {
  if (gated() && eval_condition(s, goal())) return false;
  return goalcheck::try_apply(*model_, s, a, out);
}

std::string SearchSpec::describe() const {
  switch (mode_) {
    case Mode::Constrained:
      return "gated model, accept seen_error && goal";
    case Mode::Unconstrained:
      return "base model, accept violation";
    case Mode::Ungated:
      return "base model, accept seen_error && seen_goal";
  }
  return {};
}

SearchSpec build_search_spec(const VerificationTask& task, Mode mode) { return {task, mode}; }

}  // namespace goalcheck
