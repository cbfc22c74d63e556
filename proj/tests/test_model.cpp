#include <random>
#include <set>

#include "doctest.h"
#include "goalcheck/bench.hpp"
#include "goalcheck/model.hpp"
#include "support/fixtures.hpp"
#include "support/naive_oracle.hpp"
#include "support/random_models.hpp"

using namespace goalcheck;
using goalcheck::testing::load_task;
using goalcheck::testing::with;

namespace {

GroundedModel two_var_model() {
  GroundAction inc{"inc", {}, {{{1, EffectKind::Add, Value::integer(1)}}, {}}, "inc", {}};
  return GroundedModel("m", {VarDef::boolean("b"), VarDef::integer("n", -3, 300)}, {inc});
}

}  // namespace

TEST_CASE("condition evaluation") {
  const auto t = load_task("microwave.gdvl");
  const auto& m = t.model;
  const auto heat = *m.find_var("Heat");

  CHECK_FALSE(eval_condition(t.initial, Condition{{{heat, Cmp::Eq, Value::boolean(true)}}}));
  CHECK(eval_condition(t.initial, Condition{}));

  const auto counters = ground(gen_counter_model(3, 31, 14, 7));
  auto s = counters.model.default_state();
  s[*counters.model.find_var("critical")] = 14;
  CHECK(eval_condition(s, counters.goal));
}

TEST_CASE("order comparators and their negations") {
  const State s{{5}};
  for (auto c : {Cmp::Eq, Cmp::Ne, Cmp::Lt, Cmp::Le, Cmp::Gt, Cmp::Ge})
    for (std::int64_t v = 3; v <= 7; ++v) {
      const Atom a{0, c, Value::integer(v)};
      const Atom n{0, negated(c), Value::integer(v)};
      CHECK(eval_atom(s, a) != eval_atom(s, n));
    }
  CHECK(eval_atom(s, {0, Cmp::Lt, Value::integer(6)}));
  CHECK_FALSE(eval_atom(s, {0, Cmp::Gt, Value::integer(5)}));
  CHECK(eval_atom(s, {0, Cmp::Ge, Value::integer(5)}));
}

TEST_CASE("microwave transitions") {
  const auto t = load_task("microwave.gdvl");
  const auto& m = t.model;
  const auto close_door = m.actions()[*m.find_action("close_door")];
  const auto start_oven = m.actions()[*m.find_action("start_oven")];

  const auto s0 = t.initial;
  const auto s1 = with(m, s0, {{"Close", 1}});
  const auto s2 = with(m, s0, {{"Start", 1}, {"Error", 1}});
  const auto s3 = with(m, s1, {{"Start", 1}, {"Heat", 1}});

  CHECK(apply(m, s0, close_door) == s1);
  CHECK(apply(m, s1, start_oven) == s3);

  const auto from_s0 = successors(m, s0);
  REQUIRE(from_s0.size() == 2);
  CHECK(from_s0[0].action == *m.find_action("close_door"));
  CHECK(from_s0[0].state == s1);
  CHECK(from_s0[1].action == *m.find_action("start_oven"));
  CHECK(from_s0[1].state == s2);

  CHECK(successors(m, s3).empty());
}

TEST_CASE("failed precondition and range overflow are inapplicable") {
  const auto cave = load_task("cave.gdvl");
  const auto& m = cave.model;
  auto s = with(m, cave.initial, {{"in-water", 1}, {"held", 0}});
  CHECK_FALSE(apply(m, s, m.actions()[*m.find_action("swim(L0,L1)")]).has_value());

  const auto counters = ground(gen_counter_model(3, 31, 14, 7));
  auto top = counters.model.default_state();
  top[*counters.model.find_var("critical")] = 31;
  CHECK_FALSE(apply(counters.model, top,
                    counters.model.actions()[*counters.model.find_action("inc-critical")])
                  .has_value());
}

TEST_CASE("all-zero counter state has one successor per increment") {
  const auto counters = ground(gen_counter_model(3, 31, 14, 7));
  const auto succ = successors(counters.model, counters.initial);
  REQUIRE(succ.size() == 4);
  for (const auto& s : succ) CHECK(counters.model.actions()[s.action].name.rfind("inc-", 0) == 0);
}

TEST_CASE("conditional effects test the pre-state") {
  GroundAction a{"a",
                 {},
                 {{{0, EffectKind::Add, Value::integer(1)}},
                  {{Condition{{{0, Cmp::Eq, Value::integer(0)}}},
                    {{1, EffectKind::Assign, Value::integer(5)}}}}},
                 "a",
                 {}};
  GroundedModel m("m", {VarDef::integer("x", 0, 3), VarDef::integer("y", 0, 5)}, {a});
  const auto next = apply(m, State{{0, 0}}, a);
  REQUIRE(next);
  CHECK(*next == State{{1, 5}});
  CHECK(*apply(m, State{{1, 0}}, a) == State{{2, 0}});
}

TEST_CASE("model validation rejects ill-formed inputs") {
  CHECK_THROWS_AS(GroundedModel("m", {VarDef::boolean("x"), VarDef::boolean("x")}, {}), ModelError);
  CHECK_THROWS_AS(GroundedModel("m", {VarDef::integer("x", 3, 2)}, {}), ModelError);
  GroundAction bad{"bad", {}, {{{0, EffectKind::Assign, Value::integer(9)}}, {}}, "bad", {}};
  CHECK_THROWS_AS(GroundedModel("m", {VarDef::integer("x", 0, 3)}, {bad}), ModelError);
  GroundAction twice{
      "twice",
      {},
      {{{0, EffectKind::Assign, Value::integer(1)}, {0, EffectKind::Assign, Value::integer(2)}},
       {}},
      "twice",
      {}};
  CHECK_THROWS_AS(GroundedModel("m", {VarDef::integer("x", 0, 3)}, {twice}), ModelError);

  const auto m = two_var_model();
  CHECK_THROWS_AS(m.check_state(State{{0}}), ModelError);
  CHECK_THROWS_AS(m.check_state(State{{2, 0}}), ModelError);
  CHECK_NOTHROW(m.check_state(State{{1, -3}}));
}

TEST_CASE("canonical encoding widths") {
  const auto m = two_var_model();
  // bool: 1 byte; -3..300 spans 304 values: 2 bytes.
  CHECK(m.encoded_size() == 3);
  const auto bytes = m.encode(State{{1, 300}});
  CHECK(bytes == std::vector<std::uint8_t>{1, 0x2F, 0x01});  // 303 = 0x012F
}

TEST_CASE("encoding is injective and decodes back (property)") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto t = goalcheck::testing::random_task(seed);
    const auto& m = t.model;
    const auto reach = goalcheck::testing::naive_reachable(m, t.initial.values);
    std::set<std::vector<std::uint8_t>> codes;
    for (const auto& vals : reach) {
      const State s{vals};
      const auto code = m.encode(s);
      CHECK(code.size() == m.encoded_size());
      CHECK(m.decode(code) == s);
      codes.insert(code);
    }
    CHECK(codes.size() == reach.size());
  }
}

TEST_CASE("successors never leave declared ranges (property)") {
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    const auto t = goalcheck::testing::random_task(seed);
    for (const auto& vals : goalcheck::testing::naive_reachable(t.model, t.initial.values))
      for (const auto& succ : successors(t.model, State{vals}))
        CHECK_NOTHROW(t.model.check_state(succ.state));
  }
}

TEST_CASE("library step agrees with the reference step (property)") {
  for (std::uint64_t seed = 200; seed < 260; ++seed) {
    const auto t = goalcheck::testing::random_task(seed);
    for (const auto& vals : goalcheck::testing::naive_reachable(t.model, t.initial.values))
      for (const auto& a : t.model.actions()) {
        const auto lib = apply(t.model, State{vals}, a);
        const auto ref = goalcheck::testing::naive_step(t.model, vals, a);
        REQUIRE(lib.has_value() == ref.has_value());
        if (lib) CHECK(lib->values == *ref);
      }
  }
}

TEST_CASE("ground names") {
  CHECK(ground_name("swim", {"L0", "L1"}) == "swim(L0,L1)");
  CHECK(ground_name("enter-water", {}) == "enter-water");
}
