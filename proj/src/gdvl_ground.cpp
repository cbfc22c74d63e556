#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

#include "goalcheck/gdvl.hpp"

namespace goalcheck {

namespace {

using namespace gdvl;

using Binding = std::unordered_map<std::string, std::string>;

// Candidate objects per head position, in declaration order.
std::vector<std::vector<std::string>> candidates(const ModelSpec& spec, const Head& head) {
  std::vector<std::vector<std::string>> out;
  for (const auto& a : head.args) {
    if (a.is_param)
      out.push_back(*spec.objects_of(a.type));
    else
      out.push_back({a.name});
  }
  return out;
}

// Calls fn(args) for every tuple of the cartesian product, first position outermost.
template <typename Fn>
void for_each_tuple(const std::vector<std::vector<std::string>>& choices, Fn&& fn) {
  for (const auto& c : choices)
    if (c.empty()) return;
  std::vector<std::size_t> idx(choices.size(), 0);
  std::vector<std::string> tuple(choices.size());
  for (;;) {
    for (std::size_t i = 0; i < choices.size(); ++i) tuple[i] = choices[i][idx[i]];
    fn(tuple);
    std::size_t k = choices.size();
    while (k > 0) {
      --k;
      if (++idx[k] < choices[k].size()) break;
      idx[k] = 0;
      if (k == 0) return;
    }
    if (choices.empty()) return;
  }
}

class Grounder {
 public:
  explicit Grounder(const ModelSpec& spec) : spec_(spec) {
    for (const auto& f : spec.statics) facts_.insert(f);
  }

  VerificationTask run() {
    std::vector<VarDef> vars;
    for (const auto& t : spec_.vars) {
      for_each_tuple(candidates(spec_, t.head), [&](const std::vector<std::string>& args) {
        VarDef v;
        v.functor = t.head.name;
        v.args = args;
        v.name = ground_name(v.functor, v.args);
        v.kind = t.range.kind;
        v.lo = t.range.lo;
        v.hi = t.range.hi;
        v.literals = t.range.literals;
        if (!var_index_.emplace(v.name, vars.size()).second)
          throw ParseError("variable '" + v.name + "' is declared twice", t.head.loc);
        vars.push_back(std::move(v));
      });
    }
    vars_ = &vars;

    std::vector<GroundAction> actions;
    std::set<std::string> action_names;
    for (const auto& t : spec_.actions) {
      for_each_tuple(candidates(spec_, t.head), [&](const std::vector<std::string>& args) {
        Binding b;
        for (std::size_t i = 0; i < args.size(); ++i)
          if (t.head.args[i].is_param) b["?" + t.head.args[i].name] = args[i];
        if (!statics_hold(t.statics, b)) return;
        GroundAction a;
        a.functor = t.head.name;
        a.args = args;
        a.name = ground_name(a.functor, a.args);
        if (!action_names.insert(a.name).second)
          throw ParseError("action '" + a.name + "' is declared twice", t.head.loc);
        a.pre = condition(t.pre, b);
        a.eff.assignments = assignments(t.effects, b);
        for (const auto& w : t.whens) {
          if (!statics_hold(w.statics, b)) continue;
          a.eff.conditional.push_back({condition(w.atoms, b), assignments(w.effects, b)});
        }
        actions.push_back(std::move(a));
      });
    }

    VerificationTask task;
    task.model = GroundedModel(spec_.domain, std::move(vars), std::move(actions));
    const auto& model = task.model;
    vars_ = &model.vars();
    task.initial = model.default_state();
    for (const auto& in : spec_.init) {
      auto idx = resolve(in.term, {});
      auto v = value_for(model.vars()[idx], in.value);
      if (!model.vars()[idx].contains(v.raw))
        throw ParseError("init assigns out-of-range value to '" + model.vars()[idx].name + "'",
                         in.term.loc);
      task.initial[idx] = v.raw;
    }
    task.goal = condition(spec_.goal, {});
    if (spec_.property) task.property.body = condition(*spec_.property, {});
    task.validate();
    return task;
  }

 private:
  static std::string substitute(const std::string& arg, const Binding& b) {
    if (arg.size() > 1 && arg[0] == '?') return b.at(arg);
    return arg;
  }

  bool statics_hold(const std::vector<StaticAtomSpec>& statics, const Binding& b) const {
    for (const auto& s : statics) {
      StaticFact f{s.name, {}};
      for (const auto& a : s.args) f.args.push_back(substitute(a, b));
      if (facts_.count(f) == static_cast<std::size_t>(s.negated)) return false;
    }
    return true;
  }

  std::size_t resolve(const TermRef& t, const Binding& b) const {
    std::vector<std::string> args;
    for (const auto& a : t.args) args.push_back(substitute(a, b));
    auto name = ground_name(t.name, args);
    auto it = var_index_.find(name);
    if (it == var_index_.end()) throw ParseError("unknown ground variable '" + name + "'", t.loc);
    return it->second;
  }

  static Value value_for(const VarDef& v, const ValueLit& lit) {
    switch (v.kind) {
      case VarKind::Bool:
        return Value::boolean(lit.kind == ValueLit::Kind::True);
      case VarKind::Int:
        return Value::integer(lit.number);
      case VarKind::Enum: {
        auto it = std::find(v.literals.begin(), v.literals.end(), lit.name);
        return Value::literal(it - v.literals.begin());
      }
    }
    return {};
  }

  Condition condition(const std::vector<AtomSpec>& atoms, const Binding& b) const {
    Condition c;
    for (const auto& at : atoms) {
      auto idx = resolve(at.term, b);
      c.atoms.push_back({idx, at.cmp, value_for((*vars_)[idx], at.value)});
    }
    return c;
  }

  std::vector<Assignment> assignments(const std::vector<EffectSpec>& effs, const Binding& b) const {
    std::vector<Assignment> out;
    for (const auto& e : effs) {
      auto idx = resolve(e.term, b);
      Value v = e.kind == EffectKind::Add ? Value::integer(e.value.number)
                                          : value_for((*vars_)[idx], e.value);
      out.push_back({idx, e.kind, v});
    }
    return out;
  }

  const ModelSpec& spec_;
  std::set<StaticFact> facts_;
  std::unordered_map<std::string, std::size_t> var_index_;
  const std::vector<VarDef>* vars_ = nullptr;
};

// ---------------------------------------------------------------------------
// Dump

std::string term_text(const VarDef& v) {
  if (v.args.empty()) return v.functor;
  std::string out = "(" + v.functor;
  for (const auto& a : v.args) out += " " + a;
  return out + ")";
}

std::string head_text(const std::string& functor, const std::vector<std::string>& args) {
  if (args.empty()) return functor;
  std::string out = "(" + functor;
  for (const auto& a : args) out += " " + a;
  return out + ")";
}

std::string range_text(const VarDef& v) {
  switch (v.kind) {
    case VarKind::Bool:
      return "bool";
    case VarKind::Int:
      return "(int " + std::to_string(v.lo) + " " + std::to_string(v.hi) + ")";
    case VarKind::Enum: {
      std::string out = "(enum";
      for (const auto& l : v.literals) out += " " + l;
      return out + ")";
    }
  }
  return {};
}

std::string atom_text(const GroundedModel& m, const Atom& a) {
  return std::string("(") + to_string(a.cmp) + " " + term_text(m.vars()[a.var]) + " " +
         m.render_value(a.var, a.value.raw) + ")";
}

std::string assignment_text(const GroundedModel& m, const Assignment& as) {
  if (as.kind == EffectKind::Add)
    return "(add " + term_text(m.vars()[as.var]) + " " + std::to_string(as.value.raw) + ")";
  return "(assign " + term_text(m.vars()[as.var]) + " " + m.render_value(as.var, as.value.raw) +
         ")";
}

}  // namespace

VerificationTask ground(const ModelSpec& spec) { return Grounder(spec).run(); }

std::string dump_grounded(const VerificationTask& task) {
  const auto& m = task.model;
  std::ostringstream out;
  out << "; ground listing: " << m.vars().size() << " variables, " << m.actions().size()
      << " actions\n";
  out << "(domain " << m.name() << "\n";

  std::vector<std::string> objects;
  auto note = [&](const std::vector<std::string>& args) {
    for (const auto& a : args)
      if (std::find(objects.begin(), objects.end(), a) == objects.end()) objects.push_back(a);
  };
  for (const auto& v : m.vars()) note(v.args);
  for (const auto& a : m.actions()) note(a.args);
  if (!objects.empty()) {
    out << "  (objects (object";
    for (const auto& o : objects) out << " " << o;
    out << "))\n";
  }
  for (const auto& v : m.vars()) out << "  (var " << term_text(v) << " " << range_text(v) << ")\n";
  for (const auto& a : m.actions()) {
    out << "  (action " << head_text(a.functor, a.args) << "\n    (pre";
    for (const auto& at : a.pre.atoms) out << " " << atom_text(m, at);
    out << ")\n    (eff";
    for (const auto& as : a.eff.assignments) out << " " << assignment_text(m, as);
    for (const auto& ce : a.eff.conditional) {
      out << " (when (";
      for (std::size_t i = 0; i < ce.when.atoms.size(); ++i)
        out << (i ? " " : "") << atom_text(m, ce.when.atoms[i]);
      out << ")";
      for (const auto& as : ce.then) out << " " << assignment_text(m, as);
      out << ")";
    }
    out << "))\n";
  }
  out << ")\n(init";
  for (std::size_t i = 0; i < m.vars().size(); ++i)
    out << "\n  (" << term_text(m.vars()[i]) << " " << m.render_value(i, task.initial[i]) << ")";
  out << ")\n(goal";
  for (const auto& at : task.goal.atoms) out << " " << atom_text(m, at);
  out << ")\n(safety (always";
  for (const auto& at : task.property.body.atoms) out << " " << atom_text(m, at);
  out << "))\n";
  return out.str();
}

}  // namespace goalcheck
