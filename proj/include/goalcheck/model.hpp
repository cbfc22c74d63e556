// Finite-domain transition-system semantics for grounded planning models.
//
// A GroundedModel is a list of bounded state variables (bool, enum or
// integer interval) plus ground actions with conjunctive preconditions and
// simultaneous effects. States are plain vectors of raw values; the model
// owns the canonical byte codec used for hashing and trace dumps.

#ifndef GOALCHECK_MODEL_HPP
#define GOALCHECK_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace goalcheck {

/// Raised when a model, task or state is ill-formed. Thrown at load time only.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class VarKind : std::uint8_t { Bool, Enum, Int };

/// A typed variable value. `raw` is 0/1 for bools, the literal index for
/// enums and the integer itself for ints.
struct Value {
  VarKind kind = VarKind::Bool;
  std::int64_t raw = 0;

  static Value boolean(bool b) { return {VarKind::Bool, b ? 1 : 0}; }
  static Value literal(std::int64_t index) { return {VarKind::Enum, index}; }
  static Value integer(std::int64_t v) { return {VarKind::Int, v}; }

  friend bool operator==(const Value&, const Value&) = default;
};

struct VarDef {
  std::string name;
  VarKind kind = VarKind::Bool;
  std::int64_t lo = 0;                // ints only
  std::int64_t hi = 1;                // ints only
  std::vector<std::string> literals;  // enums only
  // Template functor and bound objects the variable was grounded from.
  std::string functor;
  std::vector<std::string> args;

  static VarDef boolean(std::string name);
  static VarDef enumeration(std::string name, std::vector<std::string> literals);
  static VarDef integer(std::string name, std::int64_t lo, std::int64_t hi);

  std::int64_t min_raw() const { return kind == VarKind::Int ? lo : 0; }
  std::int64_t max_raw() const;
  bool contains(std::int64_t raw) const { return raw >= min_raw() && raw <= max_raw(); }

  friend bool operator==(const VarDef&, const VarDef&) = default;
};

enum class Cmp : std::uint8_t { Eq, Ne, Lt, Le, Gt, Ge };

const char* to_string(Cmp c);
/// The comparator c' with (a c' b) == !(a c b).
Cmp negated(Cmp c);
bool is_order(Cmp c);

struct Atom {
  std::size_t var = 0;
  Cmp cmp = Cmp::Eq;
  Value value;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Conjunction of atoms; empty means true.
struct Condition {
  std::vector<Atom> atoms;

  bool empty() const { return atoms.empty(); }
  friend bool operator==(const Condition&, const Condition&) = default;
};

enum class EffectKind : std::uint8_t { Assign, Add };

struct Assignment {
  std::size_t var = 0;
  EffectKind kind = EffectKind::Assign;
  Value value;  // Assign: the new value. Add: integer delta.

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct ConditionalEffect {
  Condition when;
  std::vector<Assignment> then;

  friend bool operator==(const ConditionalEffect&, const ConditionalEffect&) = default;
};

/// Effects are evaluated against the pre-state and applied simultaneously.
struct Effect {
  std::vector<Assignment> assignments;
  std::vector<ConditionalEffect> conditional;

  friend bool operator==(const Effect&, const Effect&) = default;
};

struct GroundAction {
  std::string name;
  Condition pre;
  Effect eff;
  std::string functor;
  std::vector<std::string> args;

  friend bool operator==(const GroundAction&, const GroundAction&) = default;
};

struct State {
  std::vector<std::int64_t> values;

  std::size_t size() const { return values.size(); }
  std::int64_t operator[](std::size_t i) const { return values[i]; }
  std::int64_t& operator[](std::size_t i) { return values[i]; }

  friend bool operator==(const State&, const State&) = default;
};

/// Renders `functor(a,b)`, or just `functor` when there are no arguments.
std::string ground_name(const std::string& functor, const std::vector<std::string>& args);

/// Immutable grounded domain. Validates on construction.
class GroundedModel {
 public:
  GroundedModel() = default;
  GroundedModel(std::string name, std::vector<VarDef> vars, std::vector<GroundAction> actions);

  const std::string& name() const { return name_; }
  const std::vector<VarDef>& vars() const { return vars_; }
  const std::vector<GroundAction>& actions() const { return actions_; }
  std::size_t var_count() const { return vars_.size(); }

  std::optional<std::size_t> find_var(std::string_view name) const;
  std::optional<std::size_t> find_action(std::string_view name) const;

  /// State where every variable holds its default (int lo, first literal, false).
  State default_state() const;

  /// Throws ModelError unless the state has the right length and every value is in range.
  void check_state(const State& s) const;
  /// Throws ModelError unless every atom is type-compatible with its variable.
  void check_condition(const Condition& c, std::string_view where) const;

  // Canonical encoding: per variable, in declaration order, the value minus
  // its range minimum as a little-endian unsigned integer of fixed width
  // (bool 1 byte, enum/int the fewest bytes that hold the range).
  std::size_t encoded_size() const { return encoded_size_; }
  void encode(const State& s, std::span<std::uint8_t> out) const;
  std::vector<std::uint8_t> encode(const State& s) const;
  State decode(std::span<const std::uint8_t> bytes) const;
  void decode_into(std::span<const std::uint8_t> bytes, State& out) const;

  /// Human/JSON rendering of a raw value: `true`, `open`, `12`.
  std::string render_value(std::size_t var, std::int64_t raw) const;

  friend bool operator==(const GroundedModel& a, const GroundedModel& b) {
    return a.name_ == b.name_ && a.vars_ == b.vars_ && a.actions_ == b.actions_;
  }

 private:
  void validate_effect(const GroundAction& a) const;

  std::string name_;
  std::vector<VarDef> vars_;
  std::vector<GroundAction> actions_;
  std::vector<std::uint8_t> widths_;
  std::size_t encoded_size_ = 0;
};

/// A safety property always(body). An empty body is `always(true)`.
struct SafetyProperty {
  Condition body;

  friend bool operator==(const SafetyProperty&, const SafetyProperty&) = default;
};

/// V = (D, (s0, g), p).
struct VerificationTask {
  GroundedModel model;
  State initial;
  Condition goal;
  SafetyProperty property;

  /// Throws ModelError if the initial state, goal or property are not well-typed.
  void validate() const;
};

bool eval_atom(const State& state, const Atom& atom);
bool eval_condition(const State& state, const Condition& cond);

/// Applies `action` to `state` into `out` (which may not alias `state`).
/// Returns false when the action is inapplicable: a failed precondition or
/// an `add` that would leave the variable's range.
bool try_apply(const GroundedModel& model, const State& state, const GroundAction& action,
               State& out);

std::optional<State> apply(const GroundedModel& model, const State& state,
                           const GroundAction& action);

struct Successor {
  std::size_t action = 0;  // index into model.actions()
  State state;
};

/// Applicable actions in declaration order, paired with their results.
std::vector<Successor> successors(const GroundedModel& model, const State& state);

}  // namespace goalcheck

#endif  // GOALCHECK_MODEL_HPP
