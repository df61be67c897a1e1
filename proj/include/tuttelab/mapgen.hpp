#pragma once

#include <string>
#include <vector>

#include "tuttelab/rational.hpp"
#include "tuttelab/rooted_map.hpp"

namespace tuttelab {

struct GenConfig {
  int listing_cap = 6;              // all_maps lists up to this many edges
  int oracle_cap = 4;               // rotation-system oracle limit
  long max_materialized = 3000000;  // maps held by any one family recursion
  std::string cache_dir;            // empty: no disk cache
};

// Process-wide configuration; cache_dir starts from $TUTTELAB_CACHE.
GenConfig& gen_config();

enum class Family {
  maps,
  bipartite,
  near_triangulations,
  near_quadrangulations,
  triangulations,
  eulerian_near_triangulations,
  nonseparable_near_triangulations,
  quadrangulations,
  four_valent,
};

const char* family_name(Family f);
// Throws DomainError for unknown names.
Family family_from_name(const std::string& s);

// Every rooted planar map with n edges, once each, sorted by canonical code.
std::vector<RootedMap> all_maps(int n);
// Rotation systems on 2n darts with alpha = (0 1)(2 3)..., filtered to
// connected genus-0 maps and deduplicated by canonical code.
std::vector<RootedMap> all_maps_oracle(int n);
// Count-only mode (no cap): recursion on counts indexed by outer degree.
Integer count_maps(int n);

// Maps with exactly n edges.
std::vector<RootedMap> bipartite_maps(int n);
std::vector<RootedMap> near_triangulations(int n);
std::vector<RootedMap> near_quadrangulations(int n);
// Triangulations of the sphere with 2k faces.
std::vector<RootedMap> triangulations(int faces);
// Eulerian near-triangulations with k black faces (3k edges, outer degree 3d).
std::vector<RootedMap> eulerian_near_triangulations(int black_faces);
// Non-separable near-triangulations with k finite faces.
std::vector<RootedMap> nonseparable_near_triangulations(int finite_faces);
// Duals of radials of the maps with n edges.
std::vector<RootedMap> quadrangulations(int faces);
// Radials of the maps with n edges.
std::vector<RootedMap> four_valent(int vertices);

// Family member of the given size (edges, or the family's own size unit for
// triangulations/Eulerian/non-separable/quadrangulations/4-valent).
std::vector<RootedMap> generate(Family f, int size);

void sort_by_code(std::vector<RootedMap>& maps);

}  // namespace tuttelab
