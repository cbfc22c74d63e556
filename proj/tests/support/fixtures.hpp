#ifndef GOALCHECK_TESTS_FIXTURES_HPP
#define GOALCHECK_TESTS_FIXTURES_HPP

#include <string>

#include "goalcheck/gdvl.hpp"

namespace goalcheck::testing {

inline std::string model_path(const std::string& file) {
  return std::string(GOALCHECK_MODELS_DIR) + "/" + file;
}

inline VerificationTask load_task(const std::string& file) {
  return ground(load_gdvl_file(model_path(file)));
}

inline VerificationTask task_from_text(const std::string& text) { return ground(parse_gdvl(text)); }

/// Sets the named variables of a copy of `s`.
inline State with(const GroundedModel& m, State s,
                  std::initializer_list<std::pair<const char*, std::int64_t>> values) {
  for (const auto& [name, v] : values) s[*m.find_var(name)] = v;
  return s;
}

inline std::size_t action_index(const GroundedModel& m, const std::string& name) {
  return *m.find_action(name);
}

}  // namespace goalcheck::testing

#endif  // GOALCHECK_TESTS_FIXTURES_HPP
