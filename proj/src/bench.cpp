#include "goalcheck/bench.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "goalcheck/verify_mc.hpp"
#include "goalcheck/verify_plan.hpp"

namespace goalcheck {

const char* to_string(Experiment e) { return e == Experiment::Exp1 ? "exp1" : "exp2"; }

Experiment parse_experiment(const std::string& s) {
  if (s == "exp1") return Experiment::Exp1;
  if (s == "exp2") return Experiment::Exp2;
  throw std::invalid_argument("unknown experiment '" + s + "'");
}

ExpConfig ExpConfig::exp1() {
  ExpConfig c;
  c.experiment = Experiment::Exp1;
  c.n_independent = 3;
  c.range_hi = 31;
  c.goal_value = 14;
  for (int e = 1; e <= 31; ++e) c.sweep.push_back(e);
  return c;
}

ExpConfig ExpConfig::exp2() {
  ExpConfig c;
  c.experiment = Experiment::Exp2;
  c.n_independent = 4;
  c.range_hi = 15;
  c.goal_value = 0;
  for (int g = 1; g <= 14; ++g) c.sweep.push_back(g);
  return c;
}

void ExpConfig::validate() const {
  if (n_independent < 0) throw std::invalid_argument("negative variable count");
  if (range_hi < 1) throw std::invalid_argument("range must be at least 0..1");
  if (sweep.empty()) throw std::invalid_argument("empty sweep");
  if (modes.empty() || backends.empty()) throw std::invalid_argument("no modes or backends");
  if (experiment == Experiment::Exp1 && (goal_value < 1 || goal_value > range_hi))
    throw std::invalid_argument("goal value outside the variable range");
  for (int v : sweep)
    if (v < 1 || v > range_hi) throw std::invalid_argument("sweep value outside 1..range_hi");
  for (auto b : backends)
    for (auto m : modes)
      if (b == Backend::Planner && m == Mode::Ungated)
        throw std::invalid_argument("ungated mode is not available on the planner backend");
}

std::string counter_model_text(int n_vars, int range_hi, int goal_value,
                               std::optional<int> error_value) {
  if (n_vars < 0) throw std::invalid_argument("negative variable count");
  if (goal_value < 1 || goal_value > range_hi)
    throw std::invalid_argument("goal value must lie in 1..range_hi");
  if (error_value && (*error_value < 1 || *error_value > range_hi))
    throw std::invalid_argument("error value must lie in 1..range_hi");

  std::vector<std::string> names{"critical"};
  for (int i = 1; i <= n_vars; ++i) names.push_back("v" + std::to_string(i));

  std::ostringstream out;
  out << "; counter model: " << names.size() << " variables in 0.." << range_hi << "\n";
  out << "(domain counters\n";
  for (const auto& n : names) out << "  (var " << n << " (int 0 " << range_hi << "))\n";
  for (const auto& n : names) {
    out << "  (action inc-" << n << " (pre) (eff (add " << n << " 1)))\n";
    out << "  (action dec-" << n << " (pre) (eff (add " << n << " -1)))\n";
  }
  out << ")\n(init)\n";
  out << "(goal (= critical " << goal_value << "))\n";
  out << "(safety (always";
  if (error_value) out << " (!= critical " << *error_value << ")";
  out << "))\n";
  return out.str();
}

ModelSpec gen_counter_model(int n_vars, int range_hi, int goal_value,
                            std::optional<int> error_value) {
  return parse_gdvl(counter_model_text(n_vars, range_hi, goal_value, error_value));
}

std::vector<Record> run_sweep(const ExpConfig& cfg) {
  cfg.validate();
  std::vector<Record> records;
  const SearchOptions opts{cfg.state_budget};
  for (int point : cfg.sweep) {
    const auto spec =
        cfg.experiment == Experiment::Exp1
            ? gen_counter_model(cfg.n_independent, cfg.range_hi, cfg.goal_value, point)
            : gen_counter_model(cfg.n_independent, cfg.range_hi, point, std::nullopt);
    const auto task = ground(spec);
    for (auto mode : cfg.modes) {
      for (auto backend : cfg.backends) {
        const auto start = std::chrono::steady_clock::now();
        const auto v = backend == Backend::ModelChecker ? verify(task, mode, opts)
                                                        : verify_via_planning(task, mode, opts);
        const auto stop = std::chrono::steady_clock::now();
        Record r;
        r.experiment = to_string(cfg.experiment);
        r.backend = backend;
        r.mode = mode;
        r.sweep_value = point;
        r.verdict = v.kind;
        r.cex_length = v.counterexample ? static_cast<long long>(v.counterexample->length()) : -1;
        r.evaluated_states = v.stats.evaluated_states;
        r.generated = v.stats.generated;
        r.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
        records.push_back(std::move(r));
      }
    }
  }
  return records;
}

std::string emit_csv(const std::vector<Record>& records) {
  std::ostringstream out;
  out << "experiment,backend,mode,sweep_value,verdict,cex_length,evaluated_states,generated,wall_"
         "ms\n";
  for (const auto& r : records) {
    out << r.experiment << ',' << to_string(r.backend) << ',' << to_string(r.mode) << ','
        << r.sweep_value << ',' << to_string(r.verdict) << ',' << r.cex_length << ','
        << r.evaluated_states << ',' << r.generated << ',' << r.wall_ms << '\n';
  }
  return out.str();
}

std::string emit_gnuplot(const std::vector<Record>& records, Mode mode, Backend backend) {
  std::ostringstream out;
  out << "# " << to_string(mode) << " " << to_string(backend) << ": sweep_value evaluated_states\n";
  for (const auto& r : records)
    if (r.mode == mode && r.backend == backend)
      out << r.sweep_value << ' ' << r.evaluated_states << '\n';
  return out.str();
}

}  // namespace goalcheck
