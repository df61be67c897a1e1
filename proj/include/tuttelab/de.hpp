#pragma once

#include <vector>

#include "tuttelab/report.hpp"
#include "tuttelab/tseries.hpp"

namespace tuttelab {

// Coefficients of v^j as series in the main variable.
struct DeMapsSolution {
  std::vector<TSeries> A, B, C;  // degrees 4, 2, 2 in v
  TSeries M11;                   // M(q, nu, t, w; 1, 1) to order N
};

struct DeTriSolution {
  std::vector<TSeries> A, B;  // degrees 3, 1 in v
  TSeries T2;                 // T_2(q, z; 1) to order N
};

// The differential system for Potts maps at rational (q, nu, w), solved
// order by order in t: the identity is cleared of denominators into a
// polynomial in v, and at each order the new coefficients of A, B (through
// their t-derivatives) and C enter linearly. A and B are computed to order
// N+2 so that M11 reaches order N through the linear relation. SolveError
// reports a singular or inconsistent system with its order; DomainError if
// w (q nu + (nu-1)^2) = 0.
DeMapsSolution solve_de_maps(const Rational& q, const Rational& nu, const Rational& w, int N);

// The triangulation system at rational q; A and B to order N+4, T2 to
// order N. DomainError at q = 4.
DeTriSolution solve_de_tri(const Rational& q, int N);

// M11 from the system against equation iteration, plus the boundary
// conditions.
CheckReport check_de_maps(const Rational& q, const Rational& nu, const Rational& w, int N);
// T2 from the system against [y^2] of the iterated triangulation equation at
// x = 1.
CheckReport check_de_tri(const Rational& q, int N);
// With t = z^2 and H = t^2 T_2(1): T_2 has only even powers of z, and
// 2q^2(1-q)t + (qt + 10H - 6tH')H'' + q(4-q)(20H - 18tH' + 9t^2H'') = 0
// holds as far as T_2 to z^N determines it.
CheckReport check_tutte_ode(const Rational& q, int N);

}  // namespace tuttelab
