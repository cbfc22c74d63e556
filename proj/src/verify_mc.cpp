#include "goalcheck/verify_mc.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "goalcheck/state_store.hpp"

namespace goalcheck {

namespace {

constexpr std::uint32_t kNoParent = std::numeric_limits<std::uint32_t>::max();

struct SearchTree {
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> action;
  std::vector<std::uint32_t> depth;

  void add(std::uint32_t p, std::uint32_t a, std::uint32_t d) {
    parent.push_back(p);
    action.push_back(a);
    depth.push_back(d);
  }

  std::vector<std::size_t> path_to(std::uint32_t node) const {
    std::vector<std::size_t> actions;
    for (; parent[node] != kNoParent; node = parent[node]) actions.push_back(action[node]);
    std::reverse(actions.begin(), actions.end());
    return actions;
  }
};

std::uint8_t flag_byte(const MonitorFlags& f, int key_flags) {
  std::uint8_t b = 0;
  if (key_flags >= 1 && f.seen_error) b |= 1;
  if (key_flags >= 2 && f.seen_goal) b |= 2;
  return b;
}

MonitorFlags flags_from_byte(std::uint8_t b) { return {(b & 1) != 0, (b & 2) != 0}; }

enum class Outcome { Found, Exhausted, BudgetExceeded };

struct ProductResult {
  Outcome outcome = Outcome::Exhausted;
  std::vector<std::size_t> actions;
  SearchStats stats;
};

ProductResult product_bfs(const SearchSpec& spec, const State& s0, std::uint64_t budget) {
  const auto& model = spec.model();
  const int key_flags = spec.key_flags();
  const std::size_t state_width = model.encoded_size();
  StateStore store(state_width + (key_flags > 0 ? 1 : 0));
  std::vector<std::uint8_t> key(store.width());
  SearchTree tree;
  ProductResult result;

  auto make_key = [&](const State& s, const MonitorFlags& f) {
    model.encode(s, std::span(key).first(state_width));
    if (key_flags > 0) key[state_width] = flag_byte(f, key_flags);
  };

  MonitorFlags f0 = spec.monitor().start(s0);
  make_key(s0, f0);
  store.insert(key);
  tree.add(kNoParent, 0, 0);
  result.stats.evaluated_states = 1;
  if (spec.accepting(f0, s0)) {
    result.outcome = Outcome::Found;
    return result;
  }

  State current, next;
  for (std::uint32_t i = 0; i < store.size(); ++i) {
    auto k = store.key(i);
    model.decode_into(k.first(state_width), current);
    const MonitorFlags flags = key_flags > 0 ? flags_from_byte(k[state_width]) : MonitorFlags{};
    const auto& actions = model.actions();
    for (std::uint32_t a = 0; a < actions.size(); ++a) {
      if (!spec.try_step(current, actions[a], next)) continue;
      ++result.stats.generated;
      const MonitorFlags nf = spec.monitor().step(flags, next);
      make_key(next, nf);
      auto [idx, inserted] = store.insert(key);
      if (!inserted) continue;
      if (store.size() > budget) {
        result.outcome = Outcome::BudgetExceeded;
        result.stats.evaluated_states = budget;
        return result;
      }
      tree.add(i, a, tree.depth[i] + 1);
      result.stats.evaluated_states = store.size();
      result.stats.max_depth = std::max<std::uint64_t>(result.stats.max_depth, tree.depth[idx]);
      if (spec.accepting(nf, next)) {
        result.outcome = Outcome::Found;
        result.actions = tree.path_to(idx);
        return result;
      }
    }
  }
  result.outcome = Outcome::Exhausted;
  return result;
}

}  // namespace

ReachabilityResult check_goal_reachable(const GroundedModel& model, const State& s0,
                                        const Condition& goal, const SearchOptions& opts) {
  ReachabilityResult r;
  StateStore store(model.encoded_size());
  std::vector<std::uint8_t> key(store.width());
  std::vector<std::uint32_t> depth;

  model.encode(s0, key);
  store.insert(key);
  depth.push_back(0);
  r.stats.evaluated_states = 1;
  if (eval_condition(s0, goal)) {
    r.reachable = true;
    return r;
  }
  State current, next;
  for (std::uint32_t i = 0; i < store.size(); ++i) {
    model.decode_into(store.key(i), current);
    for (const auto& a : model.actions()) {
      if (!try_apply(model, current, a, next)) continue;
      ++r.stats.generated;
      model.encode(next, key);
      auto [idx, inserted] = store.insert(key);
      if (!inserted) continue;
      if (store.size() > opts.state_budget) {
        r.budget_exceeded = true;
        r.stats.evaluated_states = opts.state_budget;
        return r;
      }
      depth.push_back(depth[i] + 1);
      r.stats.evaluated_states = store.size();
      r.stats.max_depth = std::max<std::uint64_t>(r.stats.max_depth, depth[idx]);
      if (eval_condition(next, goal)) {
        r.reachable = true;
        return r;
      }
    }
  }
  return r;
}

Verdict verify(const VerificationTask& task, Mode mode, const SearchOptions& opts) {
  task.validate();
  Verdict v;
  v.mode = mode;
  v.backend = Backend::ModelChecker;

  if (mode != Mode::Unconstrained) {
    auto reach = check_goal_reachable(task.model, task.initial, task.goal, opts);
    v.reachability_stats = reach.stats;
    if (reach.budget_exceeded || !reach.reachable) {
      v.kind = reach.budget_exceeded ? VerdictKind::BudgetExceeded : VerdictKind::GoalUnreachable;
      v.stats = reach.stats;
      return v;
    }
  }

  const SearchSpec spec = build_search_spec(task, mode);
  auto r = product_bfs(spec, task.initial, opts.state_budget);
  v.stats = r.stats;
  switch (r.outcome) {
    case Outcome::Exhausted:
      v.kind = VerdictKind::Safe;
      break;
    case Outcome::BudgetExceeded:
      v.kind = VerdictKind::BudgetExceeded;
      break;
    case Outcome::Found:
      v.kind = VerdictKind::Unsafe;
      v.counterexample = make_counterexample(task, r.actions);
      break;
  }
  return v;
}

}  // namespace goalcheck
