#include "tuttelab/mullin.hpp"

#include <functional>
#include <numeric>

#include "tuttelab/contour.hpp"
#include "tuttelab/errors.hpp"
#include "tuttelab/map_ops.hpp"

namespace tuttelab {

namespace {

bool is_tree_letter(char c) { return c == 'a' || c == 'A'; }

// Partner position of every letter under the two bracket matchings; empty if
// the word is not a shuffle of Dyck words.
std::vector<int32_t> bracket_partners(const std::string& word) {
  std::vector<int32_t> partner(word.size(), -1), open_a, open_b;
  for (size_t k = 0; k < word.size(); ++k) {
    char c = word[k];
    auto& stack = is_tree_letter(c) ? open_a : open_b;
    if (c == 'a' || c == 'b') {
      stack.push_back(static_cast<int32_t>(k));
    } else if (c == 'A' || c == 'B') {
      if (stack.empty()) return {};
      partner[k] = stack.back();
      partner[stack.back()] = static_cast<int32_t>(k);
      stack.pop_back();
    } else {
      return {};
    }
  }
  if (!open_a.empty() || !open_b.empty()) return {};
  return partner;
}

std::vector<int32_t> tree_partner(const RootedMap& m, const EdgeSubset& tree) {
  if (!is_spanning_tree(m, tree)) throw DomainError("edge set is not a spanning tree");
  auto reps = edge_darts(m);
  std::vector<int32_t> partner(m.n_darts(), -1);
  for (int e : tree) {
    partner[reps[e]] = m.alpha(reps[e]);
    partner[m.alpha(reps[e])] = reps[e];
  }
  return partner;
}

}  // namespace

bool is_spanning_tree(const RootedMap& m, const EdgeSubset& tree) {
  const int nv = m.num_vertices();
  if (static_cast<int>(tree.size()) != nv - 1) return false;
  auto reps = edge_darts(m);
  auto vof = m.vertex_of();
  std::vector<int> root(nv);
  std::iota(root.begin(), root.end(), 0);
  std::function<int(int)> find = [&](int x) { return root[x] == x ? x : root[x] = find(root[x]); };
  std::vector<bool> used(reps.size(), false);
  for (int e : tree) {
    if (e < 0 || e >= static_cast<int>(reps.size()) || used[e]) return false;
    used[e] = true;
    int a = find(vof[reps[e]]), b = find(vof[m.alpha(reps[e])]);
    if (a == b) return false;
    root[a] = b;
  }
  return true;
}

bool is_dyck_shuffle(const std::string& word) { return word.empty() || !bracket_partners(word).empty(); }

std::vector<std::string> all_dyck_shuffles(int i, int j) {
  if (i < 0 || j < 0) throw DomainError("negative shuffle size");
  std::vector<std::string> out;
  std::string cur;
  std::function<void(int, int, int, int)> rec = [&](int ao, int ac, int bo, int bc) {
    if (ac == i && bc == j) {
      out.push_back(cur);
      return;
    }
    auto push = [&](char c, int a0, int a1, int b0, int b1) {
      cur.push_back(c);
      rec(a0, a1, b0, b1);
      cur.pop_back();
    };
    if (ac < ao) push('A', ao, ac + 1, bo, bc);
    if (bc < bo) push('B', ao, ac, bo, bc + 1);
    if (ao < i) push('a', ao + 1, ac, bo, bc);
    if (bo < j) push('b', ao, ac, bo + 1, bc);
  };
  rec(0, 0, 0, 0);
  return out;
}

std::string mullin_encode(const RootedMap& m, const EdgeSubset& tree) {
  auto partner = tree_partner(m, tree);
  if (m.is_atomic()) return "";
  auto tour = contour(m.sigma(), partner, m.root());
  if (static_cast<int>(tour.size()) != m.n_darts()) throw Error("tree tour missed some darts");
  std::vector<bool> seen(m.n_darts(), false);
  std::string word;
  for (int32_t d : tour) {
    const bool first = !seen[m.alpha(d)];
    seen[d] = true;
    if (partner[d] >= 0)
      word += first ? 'a' : 'A';
    else
      word += first ? 'b' : 'B';
  }
  return word;
}

TreeRootedMap mullin_decode(const std::string& word) {
  if (word.empty()) return {RootedMap::atomic(), {}};
  auto partner = bracket_partners(word);
  if (partner.empty()) throw DomainError("not a shuffle of two Dyck words: " + word);
  const int n = static_cast<int>(word.size());
  std::vector<int32_t> sigma(n);
  for (int k = 0; k < n; ++k) {
    const int32_t src = is_tree_letter(word[k]) ? partner[k] : k;
    sigma[src] = (k + 1) % n;
  }
  RootedMap m(partner, std::move(sigma), 0);
  TreeRootedMap out{m, {}};
  auto reps = edge_darts(m);
  for (size_t e = 0; e < reps.size(); ++e)
    if (is_tree_letter(word[reps[e]])) out.tree.push_back(static_cast<int>(e));
  return out;
}

MullinDecomposition mullin_decompose(const RootedMap& m, const EdgeSubset& tree) {
  MullinDecomposition out;
  for (char c : mullin_encode(m, tree)) {
    if (is_tree_letter(c)) {
      out.half_edge_tree += c;
    } else {
      out.half_edge_tree += 'c';
      out.dual_tree += c;
    }
  }
  return out;
}

std::string mullin_recompose(const MullinDecomposition& parts) {
  std::string word;
  size_t next = 0;
  for (char c : parts.half_edge_tree) {
    if (c != 'c') {
      word += c;
      continue;
    }
    if (next >= parts.dual_tree.size()) throw DomainError("too few dual tree letters");
    word += parts.dual_tree[next++];
  }
  if (next != parts.dual_tree.size()) throw DomainError("too many dual tree letters");
  return word;
}

std::vector<int> half_edge_tree_degrees(const std::string& word) {
  std::vector<int> deg{0}, stack{0};
  for (char c : word) {
    if (c == 'a') {
      deg[stack.back()]++;
      deg.push_back(1);
      stack.push_back(static_cast<int>(deg.size()) - 1);
    } else if (c == 'A') {
      if (stack.size() < 2) throw DomainError("unbalanced tree word");
      stack.pop_back();
    } else if (c == 'c') {
      deg[stack.back()]++;
    } else {
      throw DomainError("unexpected letter in tree word");
    }
  }
  if (stack.size() != 1) throw DomainError("unbalanced tree word");
  return deg;
}

}  // namespace tuttelab
