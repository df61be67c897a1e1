#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "tuttelab/rooted_map.hpp"

namespace tuttelab {

// Binary tree rooted at a leaf whose inner nodes each carry a flower. The code
// is the preorder below the root leaf: 'L' for a leaf, 'N' followed by the
// flower position for an inner node, then its two subtrees. The position (0, 1
// or 2) says which of the three slots met counterclockwise after the parent
// edge holds the flower; the children fill the other two slots in order.
struct BlossomingTree {
  std::string code = "L";

  int inner_nodes() const;
  friend auto operator<=>(const BlossomingTree&, const BlossomingTree&) = default;
};

// Throws DomainError on a malformed code.
BlossomingTree parse_blossoming(const std::string& code);

// All 3^n C_n trees with n inner nodes, in lexicographic order of codes.
std::vector<BlossomingTree> all_blossoming_trees(int n);

// Closing matches every flower with the leaf that follows it in the contour
// once enclosed pairs are removed; two leaves stay unmatched.
bool is_balanced(const BlossomingTree& t);

// Opening of a 4-valent map: cuts the root edge, then every non-separating
// edge met while turning counterclockwise around the outer face. The atomic
// map gives the tree "L". Throws DomainError if m is not 4-valent.
BlossomingTree psi_open(const RootedMap& m);

// Closure of a balanced tree; the root edge joins the root leaf to the other
// unmatched leaf. Throws DomainError on an unbalanced tree.
RootedMap phi_close(const BlossomingTree& t);

// 4-valent map with a distinguished face, given by the smallest dart of the
// face in the canonical labelling of the (canonical) map.
struct MarkedMap {
  RootedMap map;
  int32_t face_dart = -1;
  friend auto operator<=>(const MarkedMap& a, const MarkedMap& b) {
    if (auto c = a.map.canonical_code() <=> b.map.canonical_code(); c != 0) return c;
    return a.face_dart <=> b.face_dart;
  }
  friend bool operator==(const MarkedMap& a, const MarkedMap& b) { return (a <=> b) == 0; }
};

// Closure of any tree. The two unmatched leaves form the root edge, which
// starts at the first of them met from the root leaf when positive and at the
// second otherwise; the marked face lies to the right of the root leaf.
MarkedMap phi_bar(const BlossomingTree& t, bool positive);

// Removes the inner node whose flower is matched with the root leaf. The three
// pieces are listed counterclockwise from the flower, each rooted at the leaf
// left by the cut. Throws DomainError on a balanced tree.
std::array<BlossomingTree, 3> unbalanced_split(const BlossomingTree& t);
// Inverse of unbalanced_split.
BlossomingTree unbalanced_join(const std::array<BlossomingTree, 3>& parts);

}  // namespace tuttelab
