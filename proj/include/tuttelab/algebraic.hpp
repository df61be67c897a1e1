#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tuttelab/report.hpp"
#include "tuttelab/tseries.hpp"

namespace tuttelab {

// Names accepted by check_algebraic.
const std::vector<std::string>& algebraic_identities();

// Checks a named algebraic identity to order N (N >= 3), with one side
// produced by equation iteration:
//   maps_quadratic       M = 1 - 16t + 18tM - 27t^2 M^2
//   four_valent_system   T = 1 + 3tT^2 and M = T - tT^3
//   nt1_cubic            the cubic equation for NT_1 = [y] NT
//   nt1_parametrisation  t^3 = X(1-2X)(1-4X), t NT_1 = X(1-6X)/(1-4X)
//   potts_q2             rational parametrisation of M(2, nu, t, 1; 1, 1)
//   potts_q3             rational parametrisation of M(3, 0, t, 1; 1, 1)
CheckReport check_algebraic(const std::string& name, int N);

// (1/n) [x^(n-1)] H'(x) phi(x)^n, the coefficient of main^n in H(F) where
// F = main * phi(F). phi and H are series in x of order >= n, phi(0) != 0.
MultiPoly lagrange_coeff(const TSeries& phi, int n, const TSeries& H);
// Same with H(x) = x.
MultiPoly lagrange_coeff(const TSeries& phi, int n);

// M(q, nu, t, w; x, y) = Mt(1 + q/(nu-1), nu, (nu-1) w, 1; x, y) to order N
// at each sample (q, nu); the Tutte side is graded by edges. nu = 1 throws
// DomainError.
CheckReport check_tutte_potts_change_of_variables(int N, const std::vector<std::pair<Rational, Rational>>& samples);

// At nu = 1 and x = 1 the Potts series of maps only depends on q w, and at
// q w = 1 it is the one-catalytic-variable series of maps.
CheckReport check_potts_specialization(int N);

// M(2, tv, t/(1 - t^2 v^2), w; x, 1) = B(t, v + w, w; x), both sides summed
// over generated maps with at most N edges.
CheckReport check_ising_identity(int N);

}  // namespace tuttelab
