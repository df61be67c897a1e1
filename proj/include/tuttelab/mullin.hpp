#pragma once

#include <string>
#include <vector>

#include "tuttelab/oracles.hpp"
#include "tuttelab/rooted_map.hpp"

namespace tuttelab {

// Map with a distinguished spanning tree (edge ids index edge_darts(map)).
struct TreeRootedMap {
  RootedMap map;
  EdgeSubset tree;
};

bool is_spanning_tree(const RootedMap& m, const EdgeSubset& tree);

// Shuffle of a Dyck word over a/A and a Dyck word over b/B.
bool is_dyck_shuffle(const std::string& word);
// All shuffles with i letters a and j letters b, sorted.
std::vector<std::string> all_dyck_shuffles(int i, int j);

// Tour of the tree counterclockwise from the root dart: a tree edge is walked
// along and written a the first time, A the second; any other edge is crossed
// and written b, then B. Throws DomainError if tree is not a spanning tree.
std::string mullin_encode(const RootedMap& m, const EdgeSubset& tree);
// Inverse of mullin_encode; throws DomainError if word is not a shuffle.
TreeRootedMap mullin_decode(const std::string& word);

// The b/B subword (the plane tree dual to the spanning tree) and the word
// with every b/B replaced by c (the spanning tree carrying one half-edge per
// side of each other edge).
struct MullinDecomposition {
  std::string dual_tree;
  std::string half_edge_tree;
};

MullinDecomposition mullin_decompose(const RootedMap& m, const EdgeSubset& tree);
std::string mullin_recompose(const MullinDecomposition& parts);

// Vertex degrees of a tree with half-edges given by its a/A/c word: the root
// first, then the other vertices in order of discovery.
std::vector<int> half_edge_tree_degrees(const std::string& word);

}  // namespace tuttelab
