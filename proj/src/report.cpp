#include "goalcheck/report.hpp"

#include <sstream>

#include "json.hpp"

namespace goalcheck {

namespace {

using json = nlohmann::ordered_json;

json value_json(const GroundedModel& m, std::size_t var, std::int64_t raw) {
  switch (m.vars()[var].kind) {
    case VarKind::Bool:
      return raw != 0;
    case VarKind::Int:
      return raw;
    case VarKind::Enum:
      return m.render_value(var, raw);
  }
  return nullptr;
}

json stats_json(const SearchStats& s) {
  return json{{"evaluated_states", s.evaluated_states},
              {"generated", s.generated},
              {"max_depth", s.max_depth}};
}

json index_json(const std::optional<std::size_t>& i) { return i ? json(*i) : json(nullptr); }

}  // namespace

std::string verdict_json(const GroundedModel& model, const Verdict& v) {
  json doc;
  doc["verdict"] = to_string(v.kind);
  doc["mode"] = to_string(v.mode);
  doc["backend"] = to_string(v.backend);
  json plan = json::array();
  json trace = json::array();
  json error_index = nullptr, goal_index = nullptr;
  std::string redundancy = to_string(RedundancyStatus::Kind::NotChecked);
  json witness = nullptr;
  if (v.counterexample) {
    const auto& cex = *v.counterexample;
    for (const auto& name : cex.plan) plan.push_back(name);
    for (const auto& s : cex.trace) {
      json row = json::object();
      for (std::size_t i = 0; i < model.var_count(); ++i)
        row[model.vars()[i].name] = value_json(model, i, s[i]);
      trace.push_back(std::move(row));
    }
    error_index = index_json(cex.error_index);
    goal_index = index_json(cex.goal_index);
    redundancy = to_string(cex.redundancy.kind);
    if (cex.redundancy.kind == RedundancyStatus::Kind::Redundant) witness = cex.redundancy.witness;
  }
  doc["plan"] = std::move(plan);
  doc["trace"] = std::move(trace);
  doc["error_index"] = std::move(error_index);
  doc["goal_index"] = std::move(goal_index);
  doc["stats"] = stats_json(v.stats);
  doc["reachability_stats"] = stats_json(v.reachability_stats);
  doc["redundancy"] = redundancy;
  if (!witness.is_null()) doc["redundancy_witness"] = std::move(witness);
  doc["notes"] = v.notes;
  return doc.dump(2) + "\n";
}

std::string verdict_text(const Verdict& v) {
  std::ostringstream out;
  out << "verdict: " << to_string(v.kind) << "\n";
  out << "mode: " << to_string(v.mode) << "  backend: " << to_string(v.backend) << "\n";
  if (v.counterexample) {
    const auto& cex = *v.counterexample;
    out << "plan (" << cex.length() << " actions):\n";
    for (std::size_t i = 0; i < cex.plan.size(); ++i) out << i + 1 << ". " << cex.plan[i] << "\n";
    out << "error_index: " << (cex.error_index ? std::to_string(*cex.error_index) : "none") << "\n";
    out << "goal_index: " << (cex.goal_index ? std::to_string(*cex.goal_index) : "none") << "\n";
    out << "redundancy: " << to_string(cex.redundancy.kind);
    if (cex.redundancy.kind == RedundancyStatus::Kind::Redundant) {
      out << " (keeps";
      for (auto i : cex.redundancy.witness) out << " " << i + 1;
      out << ")";
    } else if (!cex.redundancy.reason.empty()) {
      out << " (" << cex.redundancy.reason << ")";
    }
    out << "\n";
  }
  out << "evaluated_states: " << v.stats.evaluated_states << "  generated: " << v.stats.generated
      << "  max_depth: " << v.stats.max_depth << "\n";
  for (const auto& n : v.notes) out << "note: " << n << "\n";
  return out.str();
}

}  // namespace goalcheck
