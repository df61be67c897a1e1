#include <doctest.h>

#include "tuttelab/map_ops.hpp"
#include "tuttelab/mapgen.hpp"
#include "tuttelab/oracles.hpp"
#include "tuttelab/potts.hpp"

using namespace tuttelab;

namespace {
MultiPoly V(Var v, int e = 1) { return MultiPoly::var(v, e); }
}  // namespace

TEST_CASE("Potts polynomial of the small maps") {
  CHECK(potts(RootedMap::atomic()) == V(Var::q));
  CHECK(potts(RootedMap::single_loop()) == V(Var::q) * V(Var::nu));
  CHECK(potts(RootedMap::single_link()) == V(Var::q) * (V(Var::q) - 1) + V(Var::q) * V(Var::nu));
  CHECK(potts_subset_oracle(RootedMap::single_link()) == potts(RootedMap::single_link()));
}

TEST_CASE("Potts: deletion-contraction, subsets and colourings agree") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& m : all_maps(n)) {
      MultiPoly p = potts(m);
      CHECK(p == potts_subset_oracle(m));
      CHECK(p == potts_colouring_interpolation(m));
      CHECK(p.divide_exact(V(Var::q)) * V(Var::q) == p);
      CHECK(p.max_degree(Var::nu) <= m.num_edges());
    }
}

TEST_CASE("Tutte polynomial") {
  CHECK(tutte(RootedMap::atomic()) == MultiPoly(1));
  CHECK(tutte(RootedMap::single_link()) == V(Var::mu));
  CHECK(tutte(RootedMap::single_loop()) == V(Var::nu));
  for (int n = 0; n <= 4; ++n)
    for (const auto& m : all_maps(n)) CHECK(tutte(m) == tutte_subset_oracle(m));
}

TEST_CASE("duality identities") {
  CHECK(duality_check(RootedMap::atomic()));
  CHECK(duality_check(RootedMap::single_loop()));
  for (int n = 0; n <= 4; ++n)
    for (const auto& m : all_maps(n)) CHECK(duality_check(m));
}

TEST_CASE("specializations") {
  for (const auto& m : all_maps(2)) {
    if (m.num_vertices() == 2 && !is_separable(m)) {
      auto s = specializations(m);
      CHECK(s.spanning_tree_count == 2);
      CHECK(s.bipolar_count == 1);
    }
  }
  auto link = specializations(RootedMap::single_link());
  CHECK(link.chromatic_poly == V(Var::q) * (V(Var::q) - 1));
  for (int n = 0; n <= 4; ++n)
    for (const auto& m : all_maps(n)) {
      auto s = specializations(m);
      CHECK(s.spanning_tree_count == Integer(all_spanning_trees(m).size()));
      CHECK(s.bipolar_count == Integer(all_bipolar_orientations(m).size()));
      for (int q = 1; q <= 3; ++q)
        CHECK(s.chromatic_poly.subs(Var::q, Rational(q)).constant_term() == colouring_sum(m, q, 0));
    }
}
