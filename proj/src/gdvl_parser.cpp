#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "goalcheck/gdvl.hpp"

namespace goalcheck {

ParseError::ParseError(const std::string& msg, SourceLoc loc)
    : ModelError(std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": " + msg),
      loc_(loc) {}

const std::vector<std::string>* ModelSpec::objects_of(std::string_view type) const {
  for (const auto& [t, objs] : objects)
    if (t == type) return &objs;
  return nullptr;
}

const gdvl::VarTemplate* ModelSpec::find_var(std::string_view name) const {
  for (const auto& v : vars)
    if (v.head.name == name) return &v;
  return nullptr;
}

namespace {

using namespace gdvl;

// ---------------------------------------------------------------------------
// S-expression reader

struct SExpr {
  bool is_list = false;
  std::string atom;
  std::vector<SExpr> items;
  SourceLoc loc;

  bool is_atom(std::string_view s) const { return !is_list && atom == s; }
  // Keyword of a list form, or empty.
  std::string_view keyword() const {
    if (!is_list || items.empty() || items[0].is_list) return {};
    return items[0].atom;
  }
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<SExpr> read_all() {
    std::vector<SExpr> forms;
    skip_space();
    while (pos_ < text_.size()) {
      forms.push_back(read());
      skip_space();
    }
    return forms;
  }

 private:
  SExpr read() {
    skip_space();
    SExpr e;
    e.loc = loc_;
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", loc_);
    char c = text_[pos_];
    if (c == ')') throw ParseError("unexpected ')'", loc_);
    if (c == '(') {
      advance();
      e.is_list = true;
      for (;;) {
        skip_space();
        if (pos_ >= text_.size()) throw ParseError("unterminated list", e.loc);
        if (text_[pos_] == ')') {
          advance();
          break;
        }
        e.items.push_back(read());
      }
      return e;
    }
    while (pos_ < text_.size()) {
      c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ';') break;
      if (!std::isprint(static_cast<unsigned char>(c)))
        throw ParseError("invalid character in name", loc_);
      e.atom += c;
      advance();
    }
    return e;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++loc_.line;
      loc_.column = 1;
    } else {
      ++loc_.column;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  SourceLoc loc_;
};

// ---------------------------------------------------------------------------
// Form interpretation

bool parse_int(const std::string& s, std::int64_t& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool is_variable(const std::string& s) { return s.size() > 1 && s[0] == '?'; }

void expect_list(const SExpr& e, std::string_view what) {
  if (!e.is_list) throw ParseError("expected " + std::string(what), e.loc);
}

const std::string& expect_name(const SExpr& e, std::string_view what) {
  if (e.is_list || e.atom.empty()) throw ParseError("expected " + std::string(what), e.loc);
  return e.atom;
}

std::optional<Cmp> comparator(std::string_view s) {
  if (s == "=") return Cmp::Eq;
  if (s == "!=") return Cmp::Ne;
  if (s == "<") return Cmp::Lt;
  if (s == "<=") return Cmp::Le;
  if (s == ">") return Cmp::Gt;
  if (s == ">=") return Cmp::Ge;
  return std::nullopt;
}

ValueLit parse_value(const SExpr& e) {
  const auto& s = expect_name(e, "value");
  ValueLit v;
  if (s == "true") {
    v.kind = ValueLit::Kind::True;
  } else if (s == "false") {
    v.kind = ValueLit::Kind::False;
  } else if (parse_int(s, v.number)) {
    v.kind = ValueLit::Kind::Int;
  } else {
    v.kind = ValueLit::Kind::Name;
    v.name = s;
  }
  return v;
}

TermRef parse_term(const SExpr& e) {
  TermRef t;
  t.loc = e.loc;
  if (!e.is_list) {
    t.name = expect_name(e, "variable name");
    return t;
  }
  if (e.items.empty()) throw ParseError("empty term", e.loc);
  t.name = expect_name(e.items[0], "variable name");
  for (std::size_t i = 1; i < e.items.size(); ++i)
    t.args.push_back(expect_name(e.items[i], "argument"));
  return t;
}

Head parse_head(const SExpr& e) {
  Head h;
  h.loc = e.loc;
  if (!e.is_list) {
    h.name = expect_name(e, "name");
    return h;
  }
  if (e.items.empty()) throw ParseError("empty head", e.loc);
  h.name = expect_name(e.items[0], "name");
  for (std::size_t i = 1; i < e.items.size(); ++i) {
    const auto& s = expect_name(e.items[i], "parameter or object");
    HeadArg arg;
    if (is_variable(s)) {
      if (i + 1 >= e.items.size())
        throw ParseError("parameter " + s + " is missing its type", e.items[i].loc);
      arg.is_param = true;
      arg.name = s.substr(1);
      arg.type = expect_name(e.items[++i], "type");
    } else {
      arg.name = s;
    }
    h.args.push_back(std::move(arg));
  }
  return h;
}

AtomSpec parse_atom(const SExpr& e) {
  expect_list(e, "atom (CMP term value)");
  if (e.items.size() != 3) throw ParseError("atom must have the form (CMP term value)", e.loc);
  auto cmp = comparator(expect_name(e.items[0], "comparator"));
  if (!cmp) throw ParseError("unknown comparator '" + e.items[0].atom + "'", e.items[0].loc);
  AtomSpec a;
  a.cmp = *cmp;
  a.term = parse_term(e.items[1]);
  a.value = parse_value(e.items[2]);
  a.loc = e.loc;
  return a;
}

StaticAtomSpec parse_static_atom(const SExpr& e, bool negated) {
  // e is "(static (NAME arg*))"
  if (e.items.size() != 2 || !e.items[1].is_list || e.items[1].items.empty())
    throw ParseError("static atom must have the form (static (NAME arg*))", e.loc);
  StaticAtomSpec s;
  s.negated = negated;
  s.loc = e.loc;
  s.name = expect_name(e.items[1].items[0], "static predicate");
  for (std::size_t i = 1; i < e.items[1].items.size(); ++i)
    s.args.push_back(expect_name(e.items[1].items[i], "argument"));
  return s;
}

// Reads a precondition-like item into atoms / statics.
void parse_pcond(const SExpr& e, std::vector<AtomSpec>& atoms,
                 std::vector<StaticAtomSpec>& statics) {
  expect_list(e, "condition");
  auto kw = e.keyword();
  if (kw == "static") {
    statics.push_back(parse_static_atom(e, false));
  } else if (kw == "not") {
    if (e.items.size() != 2 || e.items[1].keyword() != "static")
      throw ParseError("'not' may only wrap a static atom", e.loc);
    statics.push_back(parse_static_atom(e.items[1], true));
  } else {
    atoms.push_back(parse_atom(e));
  }
}

EffectSpec parse_simple_effect(const SExpr& e) {
  EffectSpec eff;
  eff.loc = e.loc;
  auto kw = e.keyword();
  if (e.items.size() != 3)
    throw ParseError("effect must have the form (assign|add term value)", e.loc);
  eff.term = parse_term(e.items[1]);
  eff.value = parse_value(e.items[2]);
  if (kw == "assign") {
    eff.kind = EffectKind::Assign;
  } else if (kw == "add") {
    eff.kind = EffectKind::Add;
    if (eff.value.kind != ValueLit::Kind::Int)
      throw ParseError("add effect needs an integer delta", e.items[2].loc);
  } else {
    throw ParseError("unknown effect '" + std::string(kw) + "'", e.loc);
  }
  return eff;
}

RangeSpec parse_range(const SExpr& e) {
  RangeSpec r;
  if (e.is_atom("bool")) {
    r.kind = VarKind::Bool;
    return r;
  }
  expect_list(e, "range");
  auto kw = e.keyword();
  if (kw == "int") {
    if (e.items.size() != 3) throw ParseError("int range must have the form (int LO HI)", e.loc);
    r.kind = VarKind::Int;
    if (!parse_int(expect_name(e.items[1], "integer"), r.lo) ||
        !parse_int(expect_name(e.items[2], "integer"), r.hi))
      throw ParseError("int range bounds must be integers", e.loc);
    if (r.lo > r.hi) throw ParseError("int range is empty", e.loc);
  } else if (kw == "enum") {
    r.kind = VarKind::Enum;
    std::set<std::string> seen;
    for (std::size_t i = 1; i < e.items.size(); ++i) {
      const auto& lit = expect_name(e.items[i], "enum literal");
      if (!seen.insert(lit).second)
        throw ParseError("duplicate enum literal '" + lit + "'", e.items[i].loc);
      r.literals.push_back(lit);
    }
    if (r.literals.empty()) throw ParseError("enum range needs at least one literal", e.loc);
  } else {
    throw ParseError("expected range: bool, (int LO HI) or (enum NAME+)", e.loc);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Resolution

class Resolver {
 public:
  explicit Resolver(ModelSpec& spec) : spec_(spec) {}

  void run() {
    for (const auto& [type, objs] : spec_.objects)
      for (const auto& o : objs) object_type_[o] = type;
    for (const auto& f : spec_.statics) {
      auto [it, fresh] = static_arity_.emplace(f.name, f.args.size());
      if (!fresh && it->second != f.args.size())
        throw ParseError("static predicate '" + f.name + "' used with different arities", {});
    }
    std::set<std::string> heads;
    for (const auto& v : spec_.vars) {
      check_head(v.head);
      if (!heads.insert(head_key(v.head)).second)
        throw ParseError("duplicate variable declaration '" + v.head.name + "'", v.head.loc);
      auto [it, fresh] = var_by_functor_.emplace(v.head.name, &v);
      if (!fresh && it->second->head.args.size() != v.head.args.size())
        throw ParseError("variable '" + v.head.name + "' declared with different arities",
                         v.head.loc);
      if (!fresh && !same_range(it->second->range, v.range))
        throw ParseError("variable '" + v.head.name + "' declared with different ranges",
                         v.head.loc);
    }
    heads.clear();
    for (const auto& a : spec_.actions) {
      check_head(a.head);
      if (!heads.insert(head_key(a.head)).second)
        throw ParseError("duplicate action declaration '" + a.head.name + "'", a.head.loc);
      std::set<std::string> params;
      for (const auto& arg : a.head.args)
        if (arg.is_param && !params.insert(arg.name).second)
          throw ParseError("duplicate parameter ?" + arg.name, a.head.loc);
      for (const auto& at : a.pre) check_atom(at, &params);
      for (const auto& s : a.statics) check_static(s, params);
      check_effects(a.effects, params);
      for (const auto& w : a.whens) {
        for (const auto& at : w.atoms) check_atom(at, &params);
        for (const auto& s : w.statics) check_static(s, params);
        check_effects(w.effects, params);
      }
    }
    for (const auto& in : spec_.init) {
      const auto& tmpl = check_term(in.term, nullptr);
      check_value(tmpl, in.value, in.term.loc, false);
    }
    for (const auto& at : spec_.goal) check_atom(at, nullptr);
    if (spec_.property)
      for (const auto& at : *spec_.property) check_atom(at, nullptr);
  }

 private:
  static bool same_range(const RangeSpec& a, const RangeSpec& b) {
    return a.kind == b.kind && a.lo == b.lo && a.hi == b.hi && a.literals == b.literals;
  }

  static std::string head_key(const Head& h) {
    std::string key = h.name;
    for (const auto& a : h.args) key += (a.is_param ? " ?" + a.type : " " + a.name);
    return key;
  }

  void check_head(const Head& h) {
    for (const auto& a : h.args) {
      if (a.is_param) {
        if (!spec_.objects_of(a.type)) throw ParseError("unknown type '" + a.type + "'", h.loc);
      } else if (!object_type_.count(a.name)) {
        throw ParseError("unknown object '" + a.name + "'", h.loc);
      }
    }
  }

  void check_arg(const std::string& arg, const std::set<std::string>* params, SourceLoc loc) {
    if (is_variable(arg)) {
      if (!params || !params->count(arg.substr(1)))
        throw ParseError("unbound parameter " + arg, loc);
    } else if (!object_type_.count(arg)) {
      throw ParseError("unknown object '" + arg + "'", loc);
    }
  }

  const VarTemplate& check_term(const TermRef& t, const std::set<std::string>* params) {
    auto it = var_by_functor_.find(t.name);
    if (it == var_by_functor_.end()) throw ParseError("unknown variable '" + t.name + "'", t.loc);
    if (it->second->head.args.size() != t.args.size())
      throw ParseError("arity mismatch for '" + t.name + "': expected " +
                           std::to_string(it->second->head.args.size()) + " arguments, got " +
                           std::to_string(t.args.size()),
                       t.loc);
    for (const auto& a : t.args) check_arg(a, params, t.loc);
    return *it->second;
  }

  void check_value(const VarTemplate& v, const ValueLit& val, SourceLoc loc, bool allow_outside) {
    switch (v.range.kind) {
      case VarKind::Bool:
        if (val.kind != ValueLit::Kind::True && val.kind != ValueLit::Kind::False)
          throw ParseError("bool variable '" + v.head.name + "' needs true or false", loc);
        break;
      case VarKind::Int:
        if (val.kind != ValueLit::Kind::Int)
          throw ParseError("int variable '" + v.head.name + "' needs an integer value", loc);
        if (!allow_outside && (val.number < v.range.lo || val.number > v.range.hi))
          throw ParseError(
              "value " + std::to_string(val.number) + " out of range for '" + v.head.name + "'",
              loc);
        break;
      case VarKind::Enum: {
        bool found = val.kind == ValueLit::Kind::Name &&
                     std::find(v.range.literals.begin(), v.range.literals.end(), val.name) !=
                         v.range.literals.end();
        if (!found) throw ParseError("not a literal of enum variable '" + v.head.name + "'", loc);
        break;
      }
    }
  }

  void check_atom(const AtomSpec& at, const std::set<std::string>* params) {
    const auto& v = check_term(at.term, params);
    if (is_order(at.cmp) && v.range.kind != VarKind::Int)
      throw ParseError("order comparator on non-int variable '" + v.head.name + "'", at.loc);
    check_value(v, at.value, at.loc, true);
  }

  void check_static(const StaticAtomSpec& s, const std::set<std::string>& params) {
    auto it = static_arity_.find(s.name);
    if (it == static_arity_.end())
      throw ParseError("unknown static predicate '" + s.name + "'", s.loc);
    if (it->second != s.args.size())
      throw ParseError("arity mismatch for static predicate '" + s.name + "'", s.loc);
    for (const auto& a : s.args) check_arg(a, &params, s.loc);
  }

  void check_effects(const std::vector<EffectSpec>& effs, const std::set<std::string>& params) {
    for (const auto& e : effs) {
      const auto& v = check_term(e.term, &params);
      if (e.kind == EffectKind::Add) {
        if (v.range.kind != VarKind::Int)
          throw ParseError("add effect on non-int variable '" + v.head.name + "'", e.loc);
      } else {
        check_value(v, e.value, e.loc, false);
      }
    }
  }

  ModelSpec& spec_;
  std::unordered_map<std::string, std::string> object_type_;
  std::unordered_map<std::string, std::size_t> static_arity_;
  std::unordered_map<std::string, const VarTemplate*> var_by_functor_;
};

class FormParser {
 public:
  ModelSpec parse(std::string_view text) {
    auto forms = Reader(text).read_all();
    if (forms.empty()) throw ParseError("empty model file", {});
    std::size_t i = 0;
    if (forms[0].keyword() != "domain") throw ParseError("expected (domain ...)", forms[0].loc);
    parse_domain(forms[i++]);
    bool have_init = false, have_goal = false;
    for (; i < forms.size(); ++i) {
      const auto& f = forms[i];
      auto kw = f.keyword();
      if (kw == "init" && !have_init) {
        have_init = true;
        for (std::size_t k = 1; k < f.items.size(); ++k) {
          const auto& entry = f.items[k];
          expect_list(entry, "init entry (term value)");
          if (entry.items.size() != 2)
            throw ParseError("init entry must be (term value)", entry.loc);
          spec_.init.push_back({parse_term(entry.items[0]), parse_value(entry.items[1])});
        }
      } else if (kw == "goal" && !have_goal) {
        have_goal = true;
        for (std::size_t k = 1; k < f.items.size(); ++k)
          spec_.goal.push_back(parse_atom(f.items[k]));
      } else if (kw == "safety" && !spec_.property) {
        if (f.items.size() != 2 || f.items[1].keyword() != "always")
          throw ParseError("safety property must have the form (safety (always atom*))", f.loc);
        std::vector<AtomSpec> atoms;
        for (std::size_t k = 1; k < f.items[1].items.size(); ++k)
          atoms.push_back(parse_atom(f.items[1].items[k]));
        spec_.property = std::move(atoms);
      } else if (kw == "init" || kw == "goal" || kw == "safety") {
        throw ParseError("duplicate (" + std::string(kw) + " ...) section", f.loc);
      } else {
        throw ParseError("expected (init ...), (goal ...) or (safety ...)", f.loc);
      }
    }
    if (!have_init) throw ParseError("missing (init ...) section", forms.back().loc);
    if (!have_goal) throw ParseError("missing (goal ...) section", forms.back().loc);
    Resolver(spec_).run();
    return std::move(spec_);
  }

 private:
  void parse_domain(const SExpr& d) {
    if (d.items.size() < 2) throw ParseError("domain needs a name", d.loc);
    spec_.domain = expect_name(d.items[1], "domain name");
    std::set<std::string> types, objects;
    for (std::size_t i = 2; i < d.items.size(); ++i) {
      const auto& item = d.items[i];
      expect_list(item, "domain item");
      auto kw = item.keyword();
      if (kw == "objects") {
        for (std::size_t k = 1; k < item.items.size(); ++k) {
          const auto& group = item.items[k];
          expect_list(group, "(TYPE NAME+)");
          if (group.items.size() < 2)
            throw ParseError("object group needs a type and objects", group.loc);
          const auto& type = expect_name(group.items[0], "type");
          if (!types.insert(type).second)
            throw ParseError("duplicate type '" + type + "'", group.loc);
          std::vector<std::string> objs;
          for (std::size_t m = 1; m < group.items.size(); ++m) {
            const auto& o = expect_name(group.items[m], "object");
            if (is_variable(o))
              throw ParseError("object names may not start with '?'", group.items[m].loc);
            if (!objects.insert(o).second)
              throw ParseError("duplicate object '" + o + "'", group.items[m].loc);
            objs.push_back(o);
          }
          spec_.objects.emplace_back(type, std::move(objs));
        }
      } else if (kw == "static") {
        for (std::size_t k = 1; k < item.items.size(); ++k) {
          const auto& fact = item.items[k];
          expect_list(fact, "static fact");
          if (fact.items.empty()) throw ParseError("empty static fact", fact.loc);
          StaticFact f;
          f.name = expect_name(fact.items[0], "static predicate");
          for (std::size_t m = 1; m < fact.items.size(); ++m) {
            const auto& o = expect_name(fact.items[m], "object");
            if (!objects.count(o))
              throw ParseError("unknown object '" + o + "'", fact.items[m].loc);
            f.args.push_back(o);
          }
          spec_.statics.push_back(std::move(f));
        }
      } else if (kw == "var") {
        if (item.items.size() != 3)
          throw ParseError("var must have the form (var head range)", item.loc);
        spec_.vars.push_back({parse_head(item.items[1]), parse_range(item.items[2])});
      } else if (kw == "action") {
        spec_.actions.push_back(parse_action(item));
      } else {
        throw ParseError("unknown domain item '" + std::string(kw) + "'", item.loc);
      }
    }
    if (spec_.vars.empty()) throw ParseError("domain declares no variables", d.loc);
    if (spec_.actions.empty()) throw ParseError("domain declares no actions", d.loc);
  }

  ActionTemplate parse_action(const SExpr& e) {
    if (e.items.size() != 4 || e.items[2].keyword() != "pre" || e.items[3].keyword() != "eff")
      throw ParseError("action must have the form (action head (pre ...) (eff ...))", e.loc);
    ActionTemplate a;
    a.head = parse_head(e.items[1]);
    for (std::size_t i = 1; i < e.items[2].items.size(); ++i)
      parse_pcond(e.items[2].items[i], a.pre, a.statics);
    for (std::size_t i = 1; i < e.items[3].items.size(); ++i) {
      const auto& eff = e.items[3].items[i];
      expect_list(eff, "effect");
      if (eff.keyword() == "when") {
        if (eff.items.size() < 3 || !eff.items[1].is_list)
          throw ParseError("conditional effect must have the form (when (cond*) eff+)", eff.loc);
        WhenSpec w;
        for (const auto& c : eff.items[1].items) parse_pcond(c, w.atoms, w.statics);
        for (std::size_t k = 2; k < eff.items.size(); ++k) {
          expect_list(eff.items[k], "effect");
          w.effects.push_back(parse_simple_effect(eff.items[k]));
        }
        a.whens.push_back(std::move(w));
      } else {
        a.effects.push_back(parse_simple_effect(eff));
      }
    }
    return a;
  }

  ModelSpec spec_;
};

}  // namespace

ModelSpec parse_gdvl(std::string_view text) { return FormParser().parse(text); }

ModelSpec load_gdvl_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ModelError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_gdvl(ss.str());
}

}  // namespace goalcheck
