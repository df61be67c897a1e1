#pragma once

#include <vector>

#include "tuttelab/map_ops.hpp"
#include "tuttelab/multipoly.hpp"
#include "tuttelab/rooted_map.hpp"

namespace tuttelab {

// P_G(q, nu): sum over q-colourings of nu^(monochromatic edges), as a
// polynomial in Var::q and Var::nu. Deletion-contraction on edge 0 (the root
// edge for a map) with a memo keyed on the unrooted multigraph.
MultiPoly potts(const Graph& g);
MultiPoly potts(const RootedMap& m);

// Fortuin-Kasteleyn subset expansion sum_S q^c(S) (nu-1)^e(S).
MultiPoly potts_subset_oracle(const RootedMap& m);

// Lagrange interpolation in q of colouring counts at q = 1..V+1.
MultiPoly potts_colouring_interpolation(const RootedMap& m);

// T_G(mu, nu) in Var::mu and Var::nu, by deletion-contraction.
MultiPoly tutte(const Graph& g);
MultiPoly tutte(const RootedMap& m);
// Subset definition of the Tutte polynomial.
MultiPoly tutte_subset_oracle(const RootedMap& m);

// Checks T_{m*}(mu,nu) = T_m(nu,mu), the Fortuin-Kasteleyn relation, and the
// cleared Potts duality q^(V-1) P_{m*}(q,nu) = (nu-1)^E P_m(q, 1+q/(nu-1)).
bool duality_check(const RootedMap& m);

struct Specializations {
  Integer spanning_tree_count;  // T(1,1)
  MultiPoly chromatic_poly;     // P(q,0)
  Integer bipolar_count;        // (-1)^V dP/dq at (1,0); 0 on the atomic map
};
Specializations specializations(const RootedMap& m);

// Substitution q -> (mu-1)(nu-1) applied to P, compared with
// (mu-1)^c (nu-1)^V T for connected graphs.
bool fortuin_kasteleyn_check(const RootedMap& m);

void clear_potts_memo();

}  // namespace tuttelab
