#pragma once

#include <vector>

#include "tuttelab/rooted_map.hpp"

namespace tuttelab {

// Map with a colour (0 black, 1 white) for the origin of every dart.
struct ColouredMap {
  RootedMap map;
  std::vector<int> colour;
};

// Subdivided map; square[d] marks darts whose origin is an added vertex.
struct SubdividedMap {
  ColouredMap coloured;
  std::vector<bool> square;
};

// Colouring given per vertex (index into m.vertices()) spread to darts.
std::vector<int> colour_darts(const RootedMap& m, const std::vector<int>& vertex_colour);

bool is_properly_bicoloured(const ColouredMap& c);

// Puts counts[e] degree-2 square vertices on edge e (edge ids index
// edge_darts(m)) and colours them alternately. Monochromatic edges need odd
// counts and bichromatic edges even ones, otherwise DomainError. Original
// darts keep their ids; the root is unchanged.
SubdividedMap ising_subdivide(const ColouredMap& c, const std::vector<int>& counts);
// Erases the square vertices again.
ColouredMap ising_erase(const SubdividedMap& s);

}  // namespace tuttelab
