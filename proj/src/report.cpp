#include "tuttelab/report.hpp"

#include <algorithm>

namespace tuttelab {

bool CheckReport::pass() const {
  return !cases.empty() && std::all_of(cases.begin(), cases.end(), [](const CheckCase& c) { return c.pass; });
}

const CheckCase* CheckReport::first_failure() const {
  for (const auto& c : cases)
    if (!c.pass) return &c;
  return nullptr;
}

void CheckReport::add(std::string name, std::string expected, std::string got) {
  const bool ok = expected == got;
  cases.push_back({std::move(name), std::move(expected), std::move(got), ok});
}

void CheckReport::add(std::string name, const Rational& expected, const Rational& got) {
  add(std::move(name), to_string(expected), to_string(got));
}

void CheckReport::add_error(std::string name, const std::string& what) {
  cases.push_back({std::move(name), "no error", "error: " + what, false});
}

void CheckReport::append(const CheckReport& other) {
  cases.insert(cases.end(), other.cases.begin(), other.cases.end());
}

}  // namespace tuttelab
