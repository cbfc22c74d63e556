#ifndef GOALCHECK_TESTS_NAIVE_ORACLE_HPP
#define GOALCHECK_TESTS_NAIVE_ORACLE_HPP

// Reference semantics written independently of the library's search code.
// Only the model data structures are shared; stepping, condition evaluation,
// reachability and counterexample search are reimplemented here in the most
// direct way (fixpoints over std::set, exact-length layers, sequence
// enumeration), trading speed for obviousness.

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "goalcheck/model.hpp"

namespace goalcheck::testing {

using Vals = std::vector<std::int64_t>;

inline bool naive_holds(const Vals& s, const Atom& a) {
  const auto x = s[a.var];
  const auto y = a.value.raw;
  switch (a.cmp) {
    case Cmp::Eq:
      return x == y;
    case Cmp::Ne:
      return x != y;
    case Cmp::Lt:
      return x < y;
    case Cmp::Le:
      return x <= y;
    case Cmp::Gt:
      return x > y;
    case Cmp::Ge:
      return x >= y;
  }
  return false;
}

inline bool naive_all(const Vals& s, const Condition& c) {
  for (const auto& a : c.atoms)
    if (!naive_holds(s, a)) return false;
  return true;
}

inline bool naive_violates(const Vals& s, const SafetyProperty& p) { return !naive_all(s, p.body); }

inline std::optional<Vals> naive_step(const GroundedModel& m, const Vals& s,
                                      const GroundAction& a) {
  if (!naive_all(s, a.pre)) return std::nullopt;
  Vals out = s;
  auto put = [&](const Assignment& as) {
    out[as.var] = as.kind == EffectKind::Add ? s[as.var] + as.value.raw : as.value.raw;
  };
  for (const auto& as : a.eff.assignments) put(as);
  for (const auto& ce : a.eff.conditional)
    if (naive_all(s, ce.when))
      for (const auto& as : ce.then) put(as);
  for (std::size_t v = 0; v < out.size(); ++v)
    if (!m.vars()[v].contains(out[v])) return std::nullopt;
  return out;
}

/// Every state reachable from s0 in the base model, by fixpoint iteration.
inline std::set<Vals> naive_reachable(const GroundedModel& m, const Vals& s0) {
  std::set<Vals> seen{s0};
  bool grew = true;
  while (grew) {
    grew = false;
    const auto snapshot = seen;
    for (const auto& s : snapshot)
      for (const auto& a : m.actions())
        if (auto t = naive_step(m, s, a)) grew |= seen.insert(*t).second;
  }
  return seen;
}

enum class NaiveVerdict { Safe, Unsafe, GoalUnreachable };

struct NaiveResult {
  NaiveVerdict verdict = NaiveVerdict::Safe;
  // Shortest counterexample length when it is at most the horizon.
  std::optional<std::size_t> shortest;
};

/// Goal-constrained verdict: UNSAFE iff some sequence visits a violating
/// state and ends in its first goal state. The verdict is exact (fixpoint over
/// (state, seen_error) pairs with goal states as sinks); the length is found
/// by exact-length layers up to `horizon`.
inline NaiveResult naive_constrained(const VerificationTask& t, std::size_t horizon) {
  const auto& m = t.model;
  const Vals& s0 = t.initial.values;
  NaiveResult r;

  bool goal_seen = false;
  for (const auto& s : naive_reachable(m, s0)) goal_seen |= naive_all(s, t.goal);
  if (!goal_seen) {
    r.verdict = NaiveVerdict::GoalUnreachable;
    return r;
  }

  using Config = std::pair<Vals, bool>;
  auto successors = [&](const Config& c) {
    std::vector<Config> out;
    if (naive_all(c.first, t.goal)) return out;
    for (const auto& a : m.actions())
      if (auto n = naive_step(m, c.first, a))
        out.emplace_back(*n, c.second || naive_violates(*n, t.property));
    return out;
  };
  auto accepting = [&](const Config& c) { return c.second && naive_all(c.first, t.goal); };

  const Config start{s0, naive_violates(s0, t.property)};
  std::set<Config> all{start};
  bool grew = true;
  while (grew) {
    grew = false;
    const auto snapshot = all;
    for (const auto& c : snapshot)
      for (const auto& n : successors(c)) grew |= all.insert(n).second;
  }
  bool unsafe = false;
  for (const auto& c : all) unsafe |= accepting(c);
  r.verdict = unsafe ? NaiveVerdict::Unsafe : NaiveVerdict::Safe;

  std::set<Config> layer{start};
  for (std::size_t depth = 0; depth <= horizon && !layer.empty(); ++depth) {
    for (const auto& c : layer)
      if (accepting(c)) {
        r.shortest = depth;
        return r;
      }
    std::set<Config> next;
    for (const auto& c : layer)
      for (const auto& n : successors(c)) next.insert(n);
    layer = std::move(next);
  }
  return r;
}

/// Calls fn(sequence, states) for every applicable action sequence of length
/// 0..depth under `step`. `states` has one more entry than `sequence`.
inline void enumerate_sequences(
    const GroundedModel& m, const Vals& s0, std::size_t depth,
    const std::function<std::optional<Vals>(const Vals&, const GroundAction&)>& step,
    const std::function<void(const std::vector<std::size_t>&, const std::vector<Vals>&)>& fn) {
  std::vector<std::size_t> seq;
  std::vector<Vals> states{s0};
  std::function<void()> rec = [&] {
    fn(seq, states);
    if (seq.size() == depth) return;
    for (std::size_t i = 0; i < m.actions().size(); ++i) {
      auto n = step(states.back(), m.actions()[i]);
      if (!n) continue;
      seq.push_back(i);
      states.push_back(std::move(*n));
      rec();
      seq.pop_back();
      states.pop_back();
    }
  };
  rec();
}

}  // namespace goalcheck::testing

#endif  // GOALCHECK_TESTS_NAIVE_ORACLE_HPP
