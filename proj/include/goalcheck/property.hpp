// Safety properties, their violation tests, the sticky two-flag monitor, and
// the goal-gated transition system.
//
// For p = always(phi) and goal g, a counterexample search looks for a trace
// satisfying F(!phi) && F(g). The monitor observes each visited state and
// latches seen_error / seen_goal. The gated model removes every transition
// leaving a goal state, so the first goal state of a trace is its last.

#ifndef GOALCHECK_PROPERTY_HPP
#define GOALCHECK_PROPERTY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "goalcheck/model.hpp"

namespace goalcheck {

enum class Mode : std::uint8_t { Constrained, Unconstrained, Ungated };

const char* to_string(Mode m);
/// Accepts "constrained", "unconstrained", "ungated". Throws std::invalid_argument.
Mode parse_mode(const std::string& s);

/// The test !phi as a disjunction of negated atoms. Empty means unsatisfiable.
struct ViolationTest {
  std::vector<Atom> any_of;

  bool unsatisfiable() const { return any_of.empty(); }
  bool holds(const State& s) const;
};

ViolationTest negate_safety(const SafetyProperty& p);

struct MonitorFlags {
  bool seen_error = false;
  bool seen_goal = false;

  friend bool operator==(const MonitorFlags&, const MonitorFlags&) = default;
};

/// Sticky observer of violation and goal along a trace.
class Monitor {
 public:
  Monitor(ViolationTest violation, Condition goal)
      : violation_(std::move(violation)), goal_(std::move(goal)) {}

  MonitorFlags start(const State& s0) const { return step({}, s0); }
  MonitorFlags step(MonitorFlags f, const State& s) const {
    f.seen_error = f.seen_error || violation_.holds(s);
    f.seen_goal = f.seen_goal || eval_condition(s, goal_);
    return f;
  }

  const ViolationTest& violation() const { return violation_; }
  const Condition& goal() const { return goal_; }

 private:
  ViolationTest violation_;
  Condition goal_;
};

/// M': the base model with every transition out of a goal state removed.
/// Holds a reference to the base model, which must outlive it.
class GatedModel {
 public:
  GatedModel(const GroundedModel& base, Condition goal) : base_(&base), goal_(std::move(goal)) {}

  const GroundedModel& base() const { return *base_; }
  const Condition& goal() const { return goal_; }

  bool is_gated(const State& s) const { return eval_condition(s, goal_); }
  bool try_apply(const State& s, const GroundAction& a, State& out) const {
    return !is_gated(s) && goalcheck::try_apply(*base_, s, a, out);
  }
  std::vector<Successor> successors(const State& s) const;

 private:
  const GroundedModel* base_;
  Condition goal_;
};

GatedModel gate(const GroundedModel& model, const Condition& goal);

/// The counterexample search specification for one verification mode.
///   Constrained:   gated model, accept seen_error && current |= g
///   Unconstrained: base model, accept current |= !phi (goal ignored)
///   Ungated:       base model, accept seen_error && seen_goal
/// References the task's model, which must outlive the spec.
class SearchSpec {
 public:
  SearchSpec(const VerificationTask& task, Mode mode);

  Mode mode() const { return mode_; }
  const GroundedModel& model() const { return *model_; }
  bool gated() const { return mode_ == Mode::Constrained; }
  const Condition& goal() const { return monitor_.goal(); }
  const ViolationTest& violation() const { return monitor_.violation(); }
  const Monitor& monitor() const { return monitor_; }

  /// Number of monitor flags that take part in closed-set keys (0, 1 or 2).
  int key_flags() const;
  bool accepting(const MonitorFlags& f, const State& current) const;
  /// Successor under this spec's transition relation (gated or not).
  bool try_step(const State& s, const GroundAction& a, State& out) const;
  std::string describe() const;

 private:
  Mode mode_;
  const GroundedModel* model_;
  Monitor monitor_;
};

SearchSpec build_search_spec(const VerificationTask& task, Mode mode);

}  // namespace goalcheck

#endif  // GOALCHECK_PROPERTY_HPP
