#pragma once

#include <string>
#include <vector>

#include "tuttelab/rational.hpp"

namespace tuttelab {

struct CheckCase {
  std::string name;
  std::string expected;
  std::string got;
  bool pass = false;
};

// Outcome of one verification suite, in a fixed case order.
struct CheckReport {
  std::string suite;
  std::vector<CheckCase> cases;

  bool pass() const;
  // First failing case, or nullptr.
  const CheckCase* first_failure() const;

  void add(std::string name, std::string expected, std::string got);
  void add(std::string name, const Rational& expected, const Rational& got);
  // Failure of a computation that threw.
  void add_error(std::string name, const std::string& what);
  void append(const CheckReport& other);
};

}  // namespace tuttelab
