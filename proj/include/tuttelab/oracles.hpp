#pragma once

#include <vector>

#include "tuttelab/map_ops.hpp"
#include "tuttelab/rational.hpp"
#include "tuttelab/rooted_map.hpp"

namespace tuttelab {

// Edge ids index edge_darts(m).
using EdgeSubset = std::vector<int>;

// Orientation of every edge of a host map: forward[e] is the dart of edge e
// pointing from its tail to its head.
struct Orientation {
  std::vector<int32_t> forward;
  friend bool operator==(const Orientation&, const Orientation&) = default;
};

// Every acyclic connected spanning edge subset, each once, in lexicographic order.
std::vector<EdgeSubset> all_spanning_trees(const RootedMap& m);

// Acyclic orientations whose unique source is the root vertex and unique sink
// the other end of the root edge.
std::vector<Orientation> all_bipolar_orientations(const RootedMap& m);

// result[k] = number of q-colourings with exactly k monochromatic edges.
// Throws CapExceeded when q^V exceeds the enumeration budget.
std::vector<Integer> colouring_distribution(const Graph& g, int q);
// Sum over all q^V colourings of nu^(monochromatic edges).
Rational colouring_sum(const RootedMap& m, int q, const Rational& nu);

bool is_properly_colourable(const Graph& g, int q);

}  // namespace tuttelab
