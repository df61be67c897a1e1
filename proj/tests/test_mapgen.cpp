#include <doctest.h>

#include <set>

#include "tuttelab/errors.hpp"
#include "tuttelab/map_ops.hpp"
#include "tuttelab/mapgen.hpp"
#include "tuttelab/oracles.hpp"

using namespace tuttelab;

namespace {

std::set<CanonicalCode> codes(const std::vector<RootedMap>& maps) {
  std::set<CanonicalCode> out;
  for (const auto& m : maps) out.insert(m.canonical_code());
  return out;
}

Integer maps_formula(int n) {
  return 2 * ipow(3, n) * binomial(2 * n, n) / ((n + 1) * (n + 2));
}

}  // namespace

TEST_CASE("all maps: generator, formula and oracle") {
  const long expected[] = {1, 2, 9, 54, 378, 2916, 24057};
  for (int n = 0; n <= 6; ++n) {
    auto maps = all_maps(n);
    CHECK(maps.size() == static_cast<size_t>(expected[n]));
    CHECK(codes(maps).size() == maps.size());
    CHECK(Integer(expected[n]) == maps_formula(n));
    for (const auto& m : maps) CHECK(m.num_vertices() - m.num_edges() + m.num_faces() == 2);
  }
  for (int n = 0; n <= 4; ++n) CHECK(codes(all_maps_oracle(n)) == codes(all_maps(n)));
  for (int n = 0; n <= 8; ++n) CHECK(count_maps(n) == maps_formula(n));
  CHECK_THROWS_AS(all_maps_oracle(5), CapExceeded);
  CHECK_THROWS_AS(all_maps(7), CapExceeded);
}

TEST_CASE("family generators") {
  CHECK(quadrangulations(1).size() == 2);
  CHECK(four_valent(1).size() == 2);
  int nt1 = 0;
  for (const auto& m : near_triangulations(2))
    if (m.root_face_degree() == 1) ++nt1;
  CHECK(nt1 == 1);
  const long nt[] = {1, 1, 3, 9, 33, 126, 494};
  for (int n = 0; n <= 6; ++n) {
    auto ms = near_triangulations(n);
    CHECK(ms.size() == static_cast<size_t>(nt[n]));
    for (const auto& m : ms) CHECK(is_near_triangulation(m));
  }
  const long bip[] = {1, 1, 3, 12, 56, 288};
  for (int n = 0; n <= 5; ++n) {
    auto ms = bipartite_maps(n);
    CHECK(ms.size() == static_cast<size_t>(bip[n]));
    for (const auto& m : ms) CHECK(is_bipartite(m));
  }
  for (int n = 0; n <= 4; ++n) {
    int count = 0;
    for (const auto& m : all_maps(n)) count += is_bipartite(m);
    CHECK(count == bip[n]);
  }
  for (int k = 1; k <= 3; ++k)
    for (const auto& q : quadrangulations(k)) {
      CHECK(is_quadrangulation(q));
      CHECK(q.num_faces() == k);
    }
  for (const auto& m : eulerian_near_triangulations(2)) {
    CHECK(is_eulerian(m));
    CHECK(m.root_face_degree() % 3 == 0);
  }
}

TEST_CASE("triangulations: 3-colourable iff Eulerian") {
  for (int f = 2; f <= 8; f += 2) {
    auto ts = triangulations(f);
    CHECK(!ts.empty());
    for (const auto& t : ts) {
      CHECK(is_triangulation(t));
      CHECK(is_properly_colourable(underlying_graph(t), 3) == is_eulerian(t));
    }
  }
}

TEST_CASE("spanning trees") {
  CHECK(all_spanning_trees(RootedMap::single_loop()).size() == 1);
  size_t double_edge = 0, total = 0;
  for (const auto& m : all_maps(2)) {
    auto trees = all_spanning_trees(m);
    total += trees.size();
    if (m.num_vertices() == 2 && !is_separable(m)) double_edge = trees.size();
  }
  CHECK(double_edge == 2);
  CHECK(total == 10);
}

TEST_CASE("bipolar orientations") {
  CHECK(all_bipolar_orientations(RootedMap::single_link()).size() == 1);
  size_t two_vertex = 0;
  for (const auto& m : all_maps(2))
    if (m.num_vertices() == 2) two_vertex += all_bipolar_orientations(m).size();
  CHECK(two_vertex == 1);
  for (int n = 0; n <= 4; ++n)
    for (const auto& m : all_maps(n)) {
      // The single loop is non-separable but its root edge has equal ends.
      if (m.num_edges() == 1 && root_is_loop(m)) {
        CHECK(all_bipolar_orientations(m).empty());
        continue;
      }
      CHECK(all_bipolar_orientations(m).empty() == is_separable(m));
    }
}

TEST_CASE("colouring sums") {
  CHECK(colouring_sum(RootedMap::atomic(), 3, 5) == 3);
  CHECK(colouring_sum(RootedMap::single_loop(), 2, Rational(1, 3)) == Rational(2, 3));
  CHECK(colouring_sum(RootedMap::single_link(), 2, 7) == 16);
  Graph edgeless;
  edgeless.num_vertices = 4;
  CHECK(colouring_distribution(edgeless, 3)[0] == 81);
}
