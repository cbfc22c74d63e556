#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "goalcheck/bench.hpp"

using namespace goalcheck;

namespace {

std::size_t line_count(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("generated counter models") {
  const auto e1 = ground(gen_counter_model(3, 31, 14, 5));
  CHECK(e1.model.vars().size() == 4);
  CHECK(e1.model.actions().size() == 8);
  CHECK(e1.model.actions()[0].name == "inc-critical");
  CHECK(e1.model.actions()[1].name == "dec-critical");
  CHECK(e1.property.body.atoms.size() == 1);

  const auto e2 = ground(gen_counter_model(4, 15, 6, std::nullopt));
  CHECK(e2.model.vars().size() == 5);
  CHECK(e2.model.actions().size() == 10);
  CHECK(e2.property.body.empty());

  const auto toy = ground(gen_counter_model(1, 7, 4, 2));
  CHECK(toy.model.vars().size() == 2);
  CHECK(toy.model.actions().size() == 4);

  CHECK_THROWS_AS(gen_counter_model(1, 7, 9, 2), std::invalid_argument);
  CHECK_THROWS_AS(gen_counter_model(1, 7, 4, 0), std::invalid_argument);
}

TEST_CASE("small sweep records and their order") {
  ExpConfig cfg = ExpConfig::exp1();
  cfg.n_independent = 1;
  cfg.range_hi = 7;
  cfg.goal_value = 4;
  cfg.sweep = {2, 4, 6};
  const auto records = run_sweep(cfg);
  REQUIRE(records.size() == 6);
  CHECK(records[0].sweep_value == 2);
  CHECK(records[0].mode == Mode::Constrained);
  CHECK(records[1].mode == Mode::Unconstrained);
  // Error at or below the goal value lies on every monotone path to the goal.
  CHECK(records[0].verdict == VerdictKind::Unsafe);
  CHECK(records[0].cex_length == 4);
  CHECK(records[2].verdict == VerdictKind::Unsafe);
  CHECK(records[4].verdict == VerdictKind::Safe);
  CHECK(records[4].cex_length == -1);
  // Plateau: gated lattice is (goal + 1) * (range + 1) states.
  CHECK(records[4].evaluated_states == 5 * 8);
  // Unconstrained search stops at the first violation, at depth E.
  CHECK(records[5].verdict == VerdictKind::Unsafe);
  CHECK(records[5].cex_length == 6);
}

TEST_CASE("exp2 constrained count grows with goal depth, unconstrained stays flat") {
  ExpConfig cfg = ExpConfig::exp2();
  cfg.n_independent = 2;
  cfg.range_hi = 5;
  cfg.sweep = {1, 2, 3, 4};
  const auto records = run_sweep(cfg);
  REQUIRE(records.size() == 8);
  for (std::size_t i = 0; i < records.size(); i += 2) {
    const auto& c = records[i];
    const auto& u = records[i + 1];
    CHECK(c.verdict == VerdictKind::Safe);
    CHECK(u.verdict == VerdictKind::Safe);
    // Oracle: gated lattice has (d + 1) * 6^2 states; the full lattice 6^3.
    CHECK(c.evaluated_states == static_cast<std::uint64_t>((c.sweep_value + 1) * 36));
    CHECK(u.evaluated_states == 216);
  }
}

TEST_CASE("csv output") {
  CHECK(line_count(emit_csv({})) == 1);
  Record r;
  r.experiment = "exp1";
  r.sweep_value = 3;
  r.verdict = VerdictKind::Unsafe;
  r.cex_length = 14;
  r.evaluated_states = 10;
  r.generated = 20;
  const auto csv = emit_csv({r});
  CHECK(line_count(csv) == 2);
  CHECK(csv.find("exp1,mc,constrained,3,UNSAFE,14,10,20,0\n") != std::string::npos);

  const auto dat = emit_gnuplot({r}, Mode::Constrained, Backend::ModelChecker);
  CHECK(dat.find("3 10\n") != std::string::npos);
  CHECK(emit_gnuplot({r}, Mode::Unconstrained, Backend::ModelChecker).find("3 10") ==
        std::string::npos);
}

TEST_CASE("experiment configurations") {
  const auto e1 = ExpConfig::exp1();
  CHECK(e1.sweep.size() == 31);
  CHECK(e1.modes.size() * e1.sweep.size() + 1 == 63);
  const auto e2 = ExpConfig::exp2();
  CHECK(e2.sweep.size() == 14);
  CHECK_NOTHROW(e1.validate());

  auto bad = e1;
  bad.backends = {Backend::Planner};
  bad.modes = {Mode::Ungated};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = e1;
  bad.sweep = {40};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CHECK(parse_experiment("exp2") == Experiment::Exp2);
  CHECK_THROWS_AS(parse_experiment("exp3"), std::invalid_argument);
}
