#include "doctest.h"
#include "goalcheck/redundancy.hpp"
#include "goalcheck/verify_mc.hpp"
#include "support/fixtures.hpp"
#include "support/naive_oracle.hpp"

using namespace goalcheck;
using goalcheck::testing::action_index;
using goalcheck::testing::load_task;
using goalcheck::testing::task_from_text;

namespace {

const char* kCounter = R"(
(domain pad
  (var x (int 0 5))
  (var y bool)
  (action inc (pre) (eff (add x 1)))
  (action dec (pre) (eff (add x -1)))
  (action touch (pre) (eff (assign y true))))
(init)
(goal (= x 2))
)";

std::vector<std::size_t> task2_plan(const VerificationTask& t) {
  const auto v = verify(t, Mode::Constrained);
  REQUIRE(v.counterexample);
  return v.counterexample->actions;
}

// Independent oracle: replays every strict subsequence with the reference step.
std::size_t goal_reaching_strict_subsequences(const VerificationTask& t,
                                              const std::vector<std::size_t>& plan) {
  std::size_t count = 0;
  const std::size_t n = plan.size();
  for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << n); ++mask) {
    auto s = t.initial.values;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      auto next = goalcheck::testing::naive_step(t.model, s, t.model.actions()[plan[i]]);
      if (next) s = *next;
      ok = next.has_value();
    }
    if (ok && goalcheck::testing::naive_all(s, t.goal)) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("subsequence replay") {
  const auto t = load_task("cave-mission-only.gdvl");
  const auto plan = task2_plan(t);
  REQUIRE(plan.size() == 5);
  CHECK(subsequence_achieves(t.model, t.initial, t.goal, plan, {0, 1, 2, 3, 4}));
  CHECK_FALSE(subsequence_achieves(t.model, t.initial, t.goal, plan, {}));
  // Without the second prepare-tank the diver runs out of oxygen before the photo.
  CHECK_FALSE(subsequence_achieves(t.model, t.initial, t.goal, plan, {0, 2, 3, 4}));
}

TEST_CASE("cave task-2 counterexample is non-redundant") {
  const auto t = load_task("cave-mission-only.gdvl");
  const auto plan = task2_plan(t);
  CHECK(goal_reaching_strict_subsequences(t, plan) == 0);
  CHECK(check_redundancy(t, plan, RedundancyStrategy::Exhaustive).kind ==
        RedundancyStatus::Kind::NonRedundant);
  CHECK(check_redundancy(t, plan, RedundancyStrategy::Greedy).kind ==
        RedundancyStatus::Kind::Unknown);
  CHECK(check_redundancy(t, plan, RedundancyStrategy::Off).kind ==
        RedundancyStatus::Kind::NotChecked);
}

TEST_CASE("padded counter plan is redundant") {
  const auto t = task_from_text(kCounter);
  const auto inc = action_index(t.model, "inc");
  const auto dec = action_index(t.model, "dec");
  const std::vector<std::size_t> plan{inc, dec, inc, inc};
  CHECK(goal_reaching_strict_subsequences(t, plan) > 0);

  const auto ex = check_redundancy(t, plan, RedundancyStrategy::Exhaustive);
  REQUIRE(ex.kind == RedundancyStatus::Kind::Redundant);
  // Smallest mask first: keeping plan[0] and plan[2] (inc, inc) is mask 0b0101.
  CHECK(ex.witness == std::vector<std::size_t>{0, 2});
  CHECK(subsequence_achieves(t.model, t.initial, t.goal, plan, ex.witness));

  // Every single deletion changes the count by one, so greedy cannot decide.
  CHECK(check_redundancy(t, plan, RedundancyStrategy::Greedy).kind ==
        RedundancyStatus::Kind::Unknown);
}

TEST_CASE("greedy drops an irrelevant action") {
  const auto t = task_from_text(kCounter);
  const auto inc = action_index(t.model, "inc");
  const auto touch = action_index(t.model, "touch");
  const std::vector<std::size_t> plan{inc, touch, inc};
  const auto greedy = check_redundancy(t, plan, RedundancyStrategy::Greedy);
  REQUIRE(greedy.kind == RedundancyStatus::Kind::Redundant);
  CHECK(greedy.witness == std::vector<std::size_t>{0, 2});
}

TEST_CASE("exhaustive redundancy refuses long plans") {
  const auto t = task_from_text(R"(
(domain long
  (var x (int 0 30))
  (action inc (pre) (eff (add x 1))))
(init)
(goal (= x 21))
)");
  const std::vector<std::size_t> plan(21, 0);
  CHECK_THROWS_AS(check_redundancy(t, plan, RedundancyStrategy::Exhaustive), RedundancyLimitError);
  CHECK(check_redundancy(t, plan, RedundancyStrategy::Greedy).kind ==
        RedundancyStatus::Kind::Unknown);
}

TEST_CASE("plans that miss the goal are rejected") {
  const auto t = task_from_text(kCounter);
  const auto inc = action_index(t.model, "inc");
  CHECK_THROWS_AS(check_redundancy(t, {inc}, RedundancyStrategy::Greedy), std::invalid_argument);
}

TEST_CASE("strategy names") {
  for (auto s :
       {RedundancyStrategy::Off, RedundancyStrategy::Greedy, RedundancyStrategy::Exhaustive})
    CHECK(parse_redundancy_strategy(to_string(s)) == s);
  CHECK_THROWS_AS(parse_redundancy_strategy("full"), std::invalid_argument);
}
