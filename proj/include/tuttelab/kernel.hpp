#pragma once

#include "tuttelab/report.hpp"
#include "tuttelab/tseries.hpp"

namespace tuttelab {

// V = t (z + (u + w/u) V + V^2): series in t, Laurent in u, symbolic w, z.
TSeries V_series(int N);
// U = t (y + U/y) / (1 - U y): series in t, Laurent in y.
TSeries U_series(int N);
// X(u) = (1 - sqrt(1 - 4ut)) / (2t) = sum_n C_n u^(n+1) t^n.
TSeries X_of_u(int N);

// Laurent-polynomial check that each kernel takes one value on the orbit of
// its group of order 6 (bipolar triangulations and bipolar maps).
CheckReport check_kernel_orbits();

// Bipolar orientations: the closed-form coefficients of the triangulation
// series and its positive-part construction against equation iteration to
// z^N, the trinomial expansion of 1/K, the non-negative-part construction for
// general maps to t^N, and both propositions against brute-force enumeration
// (near-triangulations with at most 4 vertices, maps with at most 4 edges).
CheckReport check_kernel_solutions(int N);

// Tree-rooted maps and near-triangulations: closed forms, Lagrange
// coefficients, positive-part extractions and equation iteration agree with
// each other and with brute-force spanning-tree sums. The extractions are
// compared to order N in t.
CheckReport check_tree_rooted(int N);

}  // namespace tuttelab
