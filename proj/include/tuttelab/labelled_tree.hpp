#pragma once

#include <compare>
#include <string>
#include <vector>

#include "tuttelab/rooted_map.hpp"

namespace tuttelab {

// Rooted plane tree with a positive label per vertex, stored in preorder as
// (label, number of children) pairs. Children are listed counterclockwise
// after the edge to the parent (from the root edge at the root vertex).
struct LabelledTree {
  std::vector<int> labels;
  std::vector<int> child_counts;

  int num_edges() const { return static_cast<int>(labels.size()) - 1; }
  // "label:children" tokens separated by spaces.
  std::string to_string() const;
  friend auto operator<=>(const LabelledTree&, const LabelledTree&) = default;
};

// Minimum label 1 and labels of neighbours differ by at most 1.
bool is_labelled_tree(const LabelledTree& t);
// Labelled with root label 1.
bool is_well_labelled(const LabelledTree& t);
LabelledTree parse_labelled_tree(const std::string& s);

// All 3^n C_n labelled trees with n edges, sorted.
std::vector<LabelledTree> all_labelled_trees(int edges);

// Tree as a rooted map. The edge above preorder vertex k >= 1 has darts
// 2k - 2 (at the parent) and 2k - 1 (at vertex k); the root dart is 0.
RootedMap tree_map(const LabelledTree& t);

// Rooted map with a pointed vertex, given by one of its darts. normalized()
// relabels the map canonically and keeps the smallest dart of the vertex.
struct PointedMap {
  RootedMap map;
  int32_t vertex_dart = -1;
  PointedMap normalized() const;
  friend bool operator==(const PointedMap& a, const PointedMap& b) {
    PointedMap x = a.normalized(), y = b.normalized();
    return x.map == y.map && x.vertex_dart == y.vertex_dart;
  }
};

// Graph distance from the pointed vertex, per dart origin.
std::vector<int> distances_from(const RootedMap& m, int32_t vertex_dart);

// True when the root edge of a quadrangulation points away from the vertex.
bool root_points_away(const RootedMap& q, int32_t vertex_dart);

// Labels vertices by distance to the pointed vertex, adds one tree edge per
// face (between the two corners of the larger label in a face l,l+1,l,l+1;
// from the first l+1 to l+2 in a face l,l+1,l+2,l+1) and roots the tree at
// the end of the root edge, inside the root face. Throws DomainError if q is
// not a quadrangulation or its root edge does not point away.
LabelledTree cvs_forward(const PointedMap& q);

// Joins every corner labelled l to the next corner labelled l-1 in
// counterclockwise contour order (to a new vertex for l = 1) and erases the
// tree. The root edge ends at the root vertex of the tree and lies in the
// face holding the tree's root edge. Throws DomainError on invalid labels or
// the single-vertex tree.
PointedMap cvs_backward(const LabelledTree& t);

}  // namespace tuttelab
