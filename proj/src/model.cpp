#include "goalcheck/model.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace goalcheck {

namespace {

std::uint8_t width_for_span(std::uint64_t span) {
  std::uint8_t w = 1;
  while (w < 8 && (span >> (8 * w)) != 0) ++w;
  return w;
}

const char* kind_name(VarKind k) {
  switch (k) {
    case VarKind::Bool:
      return "bool";
    case VarKind::Enum:
      return "enum";
    case VarKind::Int:
      return "int";
  }
  return "?";
}

}  // namespace

VarDef VarDef::boolean(std::string name) {
  VarDef v;
  v.name = name;
  v.functor = std::move(name);
  v.kind = VarKind::Bool;
  return v;
}

VarDef VarDef::enumeration(std::string name, std::vector<std::string> literals) {
  VarDef v;
  v.name = name;
  v.functor = std::move(name);
  v.kind = VarKind::Enum;
  v.literals = std::move(literals);
  return v;
}

VarDef VarDef::integer(std::string name, std::int64_t lo, std::int64_t hi) {
  VarDef v;
  v.name = name;
  v.functor = std::move(name);
  v.kind = VarKind::Int;
  v.lo = lo;
  v.hi = hi;
  return v;
}

std::int64_t VarDef::max_raw() const {
  switch (kind) {
    case VarKind::Bool:
      return 1;
    case VarKind::Enum:
      return static_cast<std::int64_t>(literals.size()) - 1;
    case VarKind::Int:
      return hi;
  }
  return 0;
}

const char* to_string(Cmp c) {
  switch (c) {
    case Cmp::Eq:
      return "=";
    case Cmp::Ne:
      return "!=";
    case Cmp::Lt:
      return "<";
    case Cmp::Le:
      return "<=";
    case Cmp::Gt:
      return ">";
    case Cmp::Ge:
      return ">=";
  }
  return "?";
}

Cmp negated(Cmp c) {
  switch (c) {
    case Cmp::Eq:
      return Cmp::Ne;
    case Cmp::Ne:
      return Cmp::Eq;
    case Cmp::Lt:
      return Cmp::Ge;
    case Cmp::Le:
      return Cmp::Gt;
    case Cmp::Gt:
      return Cmp::Le;
    case Cmp::Ge:
      return Cmp::Lt;
  }
  return c;
}

bool is_order(Cmp c) { return c != Cmp::Eq && c != Cmp::Ne; }

std::string ground_name(const std::string& functor, const std::vector<std::string>& args) {
  if (args.empty()) return functor;
  std::string out = functor + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ',';
    out += args[i];
  }
  out += ')';
  return out;
}

GroundedModel::GroundedModel(std::string name, std::vector<VarDef> vars,
                             std::vector<GroundAction> actions)
    : name_(std::move(name)), vars_(std::move(vars)), actions_(std::move(actions)) {
  std::unordered_set<std::string> seen;
  for (const auto& v : vars_) {
    if (!seen.insert(v.name).second) throw ModelError("duplicate variable '" + v.name + "'");
    switch (v.kind) {
      case VarKind::Int:
        if (v.lo > v.hi) throw ModelError("variable '" + v.name + "' has empty range");
        break;
      case VarKind::Enum: {
        if (v.literals.empty()) throw ModelError("enum variable '" + v.name + "' has no literals");
        std::unordered_set<std::string> lits(v.literals.begin(), v.literals.end());
        if (lits.size() != v.literals.size())
          throw ModelError("enum variable '" + v.name + "' repeats a literal");
        break;
      }
      case VarKind::Bool:
        break;
    }
    auto span = static_cast<std::uint64_t>(v.max_raw() - v.min_raw());
    widths_.push_back(width_for_span(span));
    encoded_size_ += widths_.back();
  }
  seen.clear();
  for (const auto& a : actions_) {
    if (!seen.insert(a.name).second) throw ModelError("duplicate action '" + a.name + "'");
    check_condition(a.pre, "precondition of " + a.name);
    for (const auto& ce : a.eff.conditional)
      check_condition(ce.when, "effect condition of " + a.name);
    validate_effect(a);
  }
}

void GroundedModel::validate_effect(const GroundAction& a) const {
  auto check_assignment = [&](const Assignment& as) {
    if (as.var >= vars_.size())
      throw ModelError("effect of " + a.name + " names an unknown variable");
    const auto& v = vars_[as.var];
    if (as.kind == EffectKind::Add) {
      if (v.kind != VarKind::Int)
        throw ModelError("add effect on non-int variable '" + v.name + "' in " + a.name);
      return;
    }
    if (as.value.kind != v.kind || !v.contains(as.value.raw))
      throw ModelError("effect of " + a.name + " assigns an invalid value to '" + v.name + "'");
  };
  std::unordered_set<std::size_t> unconditional;
  for (const auto& as : a.eff.assignments) {
    check_assignment(as);
    if (!unconditional.insert(as.var).second)
      throw ModelError("conflicting effects on '" + vars_[as.var].name + "' in " + a.name);
  }
  std::unordered_set<std::size_t> branch_vars;
  for (const auto& ce : a.eff.conditional) {
    std::unordered_set<std::size_t> local;
    for (const auto& as : ce.then) {
      check_assignment(as);
      if (unconditional.count(as.var) || !local.insert(as.var).second || branch_vars.count(as.var))
        throw ModelError("conflicting effects on '" + vars_[as.var].name + "' in " + a.name);
    }
    branch_vars.insert(local.begin(), local.end());
  }
}

void GroundedModel::check_condition(const Condition& c, std::string_view where) const {
  for (const auto& at : c.atoms) {
    if (at.var >= vars_.size()) throw ModelError(std::string(where) + ": unknown variable index");
    const auto& v = vars_[at.var];
    if (is_order(at.cmp) && v.kind != VarKind::Int)
      throw ModelError(std::string(where) + ": order comparator on non-int variable '" + v.name +
                       "'");
    if (at.value.kind != v.kind)
      throw ModelError(std::string(where) + ": " + kind_name(at.value.kind) +
                       " value compared with " + kind_name(v.kind) + " variable '" + v.name + "'");
    if (v.kind != VarKind::Int && !v.contains(at.value.raw))
      throw ModelError(std::string(where) + ": value out of range for '" + v.name + "'");
  }
}

std::optional<std::size_t> GroundedModel::find_var(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> GroundedModel::find_action(std::string_view name) const {
  for (std::size_t i = 0; i < actions_.size(); ++i)
    if (actions_[i].name == name) return i;
  return std::nullopt;
}

State GroundedModel::default_state() const {
  State s;
  s.values.reserve(vars_.size());
  for (const auto& v : vars_) s.values.push_back(v.min_raw());
  return s;
}

void GroundedModel::check_state(const State& s) const {
  if (s.size() != vars_.size())
    throw ModelError("state has " + std::to_string(s.size()) + " values, model has " +
                     std::to_string(vars_.size()) + " variables");
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (!vars_[i].contains(s[i]))
      throw ModelError("value " + std::to_string(s[i]) + " out of range for '" + vars_[i].name +
                       "'");
}

void GroundedModel::encode(const State& s, std::span<std::uint8_t> out) const {
  std::size_t pos = 0;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto off = static_cast<std::uint64_t>(s[i] - vars_[i].min_raw());
    for (std::uint8_t b = 0; b < widths_[i]; ++b)
      out[pos++] = static_cast<std::uint8_t>(off >> (8 * b));
  }
}

std::vector<std::uint8_t> GroundedModel::encode(const State& s) const {
  std::vector<std::uint8_t> out(encoded_size_);
  encode(s, out);
  return out;
}

void GroundedModel::decode_into(std::span<const std::uint8_t> bytes, State& out) const {
  out.values.resize(vars_.size());
  std::size_t pos = 0;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    std::uint64_t off = 0;
    for (std::uint8_t b = 0; b < widths_[i]; ++b)
      off |= static_cast<std::uint64_t>(bytes[pos++]) << (8 * b);
    out.values[i] = vars_[i].min_raw() + static_cast<std::int64_t>(off);
  }
}

State GroundedModel::decode(std::span<const std::uint8_t> bytes) const {
  if (bytes.size() != encoded_size_) throw ModelError("encoded state has the wrong length");
  State s;
  decode_into(bytes, s);
  return s;
}

std::string GroundedModel::render_value(std::size_t var, std::int64_t raw) const {
  const auto& v = vars_[var];
  switch (v.kind) {
    case VarKind::Bool:
      return raw ? "true" : "false";
    case VarKind::Enum:
      return v.literals.at(static_cast<std::size_t>(raw));
    case VarKind::Int:
      return std::to_string(raw);
  }
  return {};
}

void VerificationTask::validate() const {
  model.check_state(initial);
  model.check_condition(goal, "goal");
  model.check_condition(property.body, "safety property");
}

bool eval_atom(const State& state, const Atom& atom) {
  const std::int64_t lhs = state[atom.var];
  const std::int64_t rhs = atom.value.raw;
  switch (atom.cmp) {
    case Cmp::Eq:
      return lhs == rhs;
    case Cmp::Ne:
      return lhs != rhs;
    case Cmp::Lt:
      return lhs < rhs;
    case Cmp::Le:
      return lhs <= rhs;
    case Cmp::Gt:
      return lhs > rhs;
    case Cmp::Ge:
      return lhs >= rhs;
  }
  return false;
}

bool eval_condition(const State& state, const Condition& cond) {
  return std::all_of(cond.atoms.begin(), cond.atoms.end(),
                     [&](const Atom& a) { return eval_atom(state, a); });
}

namespace {

bool write_assignment(const GroundedModel& model, const State& pre, const Assignment& as,
                      State& out) {
  if (as.kind == EffectKind::Assign) {
    out[as.var] = as.value.raw;
    return true;
  }
  const std::int64_t next = pre[as.var] + as.value.raw;
  if (!model.vars()[as.var].contains(next)) return false;
  out[as.var] = next;
  return true;
}

}  // namespace

bool try_apply(const GroundedModel& model, const State& state, const GroundAction& action,
               State& out) {
  if (!eval_condition(state, action.pre)) return false;
  out.values.assign(state.values.begin(), state.values.end());
  for (const auto& as : action.eff.assignments)
    if (!write_assignment(model, state, as, out)) return false;
  for (const auto& ce : action.eff.conditional) {
    if (!eval_condition(state, ce.when)) continue;
    for (const auto& as : ce.then)
      if (!write_assignment(model, state, as, out)) return false;
  }
  return true;
}

std::optional<State> apply(const GroundedModel& model, const State& state,
                           const GroundAction& action) {
  State out;
  if (!try_apply(model, state, action, out)) return std::nullopt;
  return out;
}

std::vector<Successor> successors(const GroundedModel& model, const State& state) {
  std::vector<Successor> result;
  State next;
  for (std::size_t i = 0; i < model.actions().size(); ++i) {
    if (try_apply(model, state, model.actions()[i], next)) result.push_back({i, next});
  }
  return result;
}

}  // namespace goalcheck
