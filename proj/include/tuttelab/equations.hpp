#pragma once

#include <map>
#include <string>
#include <vector>

#include "tuttelab/multipoly.hpp"
#include "tuttelab/tseries.hpp"

namespace tuttelab {

enum class EquationId {
  MAPS_1CAT,
  NT,
  NQ,
  BIP,
  EULER_NT,
  POTTS_MAPS,
  TUTTE_MAPS,
  TUTTE_NONSEP_TRI,
  POTTS_QUASI_TRI,
  TUTTE_QUASI_TRI,
  BIPOLAR_MAPS,
  BIPOLAR_TRI,
};

// Values for parameters or catalytic variables; anything absent stays symbolic.
using Params = std::map<Var, MultiPoly>;

struct EquationInfo {
  EquationId id;
  const char* name;
  Var main;                   // t or z
  std::vector<Var> catalytic;
  std::vector<Var> params;
  const char* description;
};

const std::vector<EquationInfo>& equations();
const EquationInfo& equation_info(EquationId id);
// Throws DomainError for unknown names.
EquationId equation_from_name(const std::string& s);

// "q=3,nu=1/2" -> {q: 3, nu: 1/2}. Throws DomainError on malformed input.
Params parse_params(const std::string& s);

// Fixed point of the equation to order N, computed order by order and then
// confirmed by one more full iteration (SolveError if it moves). Parameters
// are substituted before iterating; values for catalytic variables are
// substituted in the result. Divided differences divide exactly or throw
// DivisionError.
TSeries expand(EquationId eq, const Params& params, int N);

// Ground truth by summation over generated maps of the family each equation
// counts. For the two quasi-triangulation equations this is the x = 0 slice.
// Throws CapExceeded past the generation caps.
TSeries brute_force_gf(EquationId eq, const Params& params, int N);

// Coefficientwise substitution of parameter or catalytic values.
TSeries specialize(const TSeries& s, const Params& params);
// Catalytic variable set to a rational value.
TSeries at(const TSeries& s, Var v, const Rational& a);
// [v^k] coefficientwise.
TSeries coeff(const TSeries& s, Var v, int k);
// (F(v) - F(a)) / (v - a) coefficientwise.
TSeries divided_difference(const TSeries& s, Var v, const Rational& a);
TSeries positive_part(const TSeries& s, Var v);
TSeries nonneg_part(const TSeries& s, Var v);
// 1 / (1 - c * main) to the order of the template series.
TSeries geometric(const MultiPoly& c, int order, Var main);
// Main variable replaced by main^k.
TSeries stretch(const TSeries& s, int k);

}  // namespace tuttelab
