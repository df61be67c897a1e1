#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tuttelab/report.hpp"

namespace tuttelab {

struct SuiteInfo {
  const char* name;
  const char* description;
};

// Suites in the order `verify all` runs them.
const std::vector<SuiteInfo>& verify_suites();

// Runs one named suite at desk scale. Throws DomainError on an unknown name.
// A computation that throws inside a suite becomes a failing case.
CheckReport run_suite(const std::string& name);

// Round trips of one bijection (psi, cvs, mullin or ising) on all objects
// up to max_size; psi also covers the closure of every tree.
CheckReport bijection_roundtrip(const std::string& which, int max_size);

// Flat array of {suite, case, expected, got, pass} records.
nlohmann::json reports_to_json(const std::vector<CheckReport>& reports);
// Header row suite,case,expected,got,pass; fields quoted when needed.
std::string reports_to_csv(const std::vector<CheckReport>& reports);
// One line per suite: name, passed/total and PASS or FAIL, then every
// failing case.
std::string reports_to_text(const std::vector<CheckReport>& reports);

}  // namespace tuttelab
