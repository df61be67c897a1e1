#pragma once

#include <utility>
#include <vector>

#include "tuttelab/rooted_map.hpp"

namespace tuttelab {

// Same darts and edges, rotation phi: the root vertex of the dual is the root
// face of the primal and dual(dual(m)) == m.
RootedMap dual(const RootedMap& m);

// Medial 4-valent map: one vertex per edge of m, one edge per corner. Dart d of
// m gives radial darts 2d (towards the corner before d) and 2d+1 (towards the
// corner after d); the root is 2*root+1. The atomic map maps to itself.
RootedMap radial(const RootedMap& m);

// Adds a new root edge inside the root face. The new root leaves the old root
// vertex just before the old root; its other end is placed at the corner
// before the k-th dart of the old root face (k = 0..df). The new root face has
// degree df - k + 1 (for k = 0 the new edge comes first at the corner).
RootedMap insert_root_edge(const RootedMap& m, int k);

// Joins two maps by a new root edge from the root vertex of m1 to the root
// vertex of m2; the new root face has degree df(m1) + df(m2) + 2.
RootedMap glue(const RootedMap& m1, const RootedMap& m2);

struct RootDeletion {
  bool isthmus = false;
  RootedMap first;   // component of the root vertex, or the single remainder
  RootedMap second;  // component of the other end (isthmus case only)
  int index = 0;     // insertion index reproducing the input (non-isthmus)
};

// Inverse of glue (isthmus root edge) and of insert_root_edge (otherwise).
RootDeletion delete_root_edge(const RootedMap& m);

// Contracts a non-loop root edge (deletes a loop). The new root is the dart
// following the old root's partner at the merged vertex.
RootedMap contract_root_edge(const RootedMap& m);

bool root_is_loop(const RootedMap& m);
bool root_is_isthmus(const RootedMap& m);

bool is_bipartite(const RootedMap& m);
bool is_eulerian(const RootedMap& m);
bool is_separable(const RootedMap& m);
bool is_near_triangulation(const RootedMap& m);
bool is_near_quadrangulation(const RootedMap& m);
bool is_triangulation(const RootedMap& m);
bool is_quadrangulation(const RootedMap& m);
bool is_4valent(const RootedMap& m);

// Underlying multigraph; edge 0 is the root edge oriented from the root vertex.
struct Graph {
  int num_vertices = 1;
  std::vector<std::pair<int, int>> edges;
};

// One representative dart per edge, root dart first, then increasing.
std::vector<int32_t> edge_darts(const RootedMap& m);
Graph underlying_graph(const RootedMap& m);

}  // namespace tuttelab
