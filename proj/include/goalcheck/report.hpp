#ifndef GOALCHECK_REPORT_HPP
#define GOALCHECK_REPORT_HPP

#include <string>

#include "goalcheck/model.hpp"
#include "goalcheck/verdict.hpp"

namespace goalcheck {

/// Machine-readable verdict document (pretty-printed JSON, fixed key order).
std::string verdict_json(const GroundedModel& model, const Verdict& v);

/// Human-readable verdict: kind, numbered plan, indices, redundancy, stats.
std::string verdict_text(const Verdict& v);

}  // namespace goalcheck

#endif  // GOALCHECK_REPORT_HPP
