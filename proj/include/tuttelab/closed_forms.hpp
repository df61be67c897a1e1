#pragma once

#include <string>
#include <vector>

#include "tuttelab/rational.hpp"

namespace tuttelab {

struct FormulaInfo {
  const char* name;
  const char* args;  // argument names; "..." marks a variadic tail
  const char* description;
};

const std::vector<FormulaInfo>& formulas();

// Exact value of a named counting formula. Throws DomainError for unknown
// names, a wrong number of arguments or arguments outside the formula's range.
Rational closed_form(const std::string& name, const std::vector<long>& args);

}  // namespace tuttelab
