// GDVL: the S-expression text format for domain, problem and safety property.
//
//   (domain NAME (objects (TYPE NAME+)+)? (static (PRED OBJ*)+)? var+ action+)
//   (init ((TERM) VALUE)*)
//   (goal ATOM*)
//   (safety (always ATOM*))?
//
// Templates are parameterized by typed `?x TYPE` pairs (or bound to plain
// object names) and grounded over the declared objects. Static facts are
// resolved at grounding time and never enter the state.

#ifndef GOALCHECK_GDVL_HPP
#define GOALCHECK_GDVL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "goalcheck/model.hpp"

namespace goalcheck {

struct SourceLoc {
  int line = 1;
  int column = 1;
};

/// Syntax or resolution error in a GDVL file, carrying its source position.
class ParseError : public ModelError {
 public:
  ParseError(const std::string& msg, SourceLoc loc);
  SourceLoc loc() const { return loc_; }

 private:
  SourceLoc loc_;
};

namespace gdvl {

/// One element of a template head: either a `?name TYPE` parameter or a bound object.
struct HeadArg {
  bool is_param = false;
  std::string name;  // parameter name without '?', or object name
  std::string type;  // parameters only
};

struct Head {
  std::string name;
  std::vector<HeadArg> args;
  SourceLoc loc;
};

/// Reference to a (possibly parameterized) variable: `held`, `(at ?l)`, `(at L0)`.
struct TermRef {
  std::string name;
  std::vector<std::string> args;  // '?x' for parameters
  SourceLoc loc;
};

struct ValueLit {
  enum class Kind { Int, Name, True, False } kind = Kind::Int;
  std::int64_t number = 0;
  std::string name;
};

struct AtomSpec {
  Cmp cmp = Cmp::Eq;
  TermRef term;
  ValueLit value;
  SourceLoc loc;
};

struct StaticAtomSpec {
  bool negated = false;
  std::string name;
  std::vector<std::string> args;
  SourceLoc loc;
};

struct EffectSpec {
  EffectKind kind = EffectKind::Assign;
  TermRef term;
  ValueLit value;  // Add: integer delta
  SourceLoc loc;
};

struct WhenSpec {
  std::vector<AtomSpec> atoms;
  std::vector<StaticAtomSpec> statics;
  std::vector<EffectSpec> effects;
};

struct RangeSpec {
  VarKind kind = VarKind::Bool;
  std::int64_t lo = 0;
  std::int64_t hi = 1;
  std::vector<std::string> literals;
};

struct VarTemplate {
  Head head;
  RangeSpec range;
};

struct ActionTemplate {
  Head head;
  std::vector<AtomSpec> pre;
  std::vector<StaticAtomSpec> statics;
  std::vector<EffectSpec> effects;
  std::vector<WhenSpec> whens;
};

struct StaticFact {
  std::string name;
  std::vector<std::string> args;
  friend auto operator<=>(const StaticFact&, const StaticFact&) = default;
};

struct InitEntry {
  TermRef term;
  ValueLit value;
};

}  // namespace gdvl

/// Parsed, resolved, pre-grounding model file.
struct ModelSpec {
  std::string domain;
  std::vector<std::pair<std::string, std::vector<std::string>>> objects;  // type -> objects
  std::vector<gdvl::StaticFact> statics;
  std::vector<gdvl::VarTemplate> vars;
  std::vector<gdvl::ActionTemplate> actions;
  std::vector<gdvl::InitEntry> init;
  std::vector<gdvl::AtomSpec> goal;
  std::optional<std::vector<gdvl::AtomSpec>> property;

  const std::vector<std::string>* objects_of(std::string_view type) const;
  const gdvl::VarTemplate* find_var(std::string_view name) const;
};

/// Parses and resolves GDVL text. Throws ParseError with line/column.
ModelSpec parse_gdvl(std::string_view text);

/// Instantiates every template over its object tuples and builds the task.
/// Action instances whose static preconditions are false are dropped.
VerificationTask ground(const ModelSpec& spec);

/// Deterministic, parameter-free GDVL listing of a grounded task.
std::string dump_grounded(const VerificationTask& task);

/// Reads a file and parses it. Throws ModelError when unreadable.
ModelSpec load_gdvl_file(const std::string& path);

}  // namespace goalcheck

#endif  // GOALCHECK_GDVL_HPP
