#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "tuttelab/contour.hpp"
#include "tuttelab/errors.hpp"
#include "tuttelab/labelled_tree.hpp"
#include "tuttelab/map_ops.hpp"

namespace tuttelab {

namespace {

// Parent of each preorder vertex (-1 for the root); throws on a malformed
// child-count sequence.
std::vector<int> parents(const LabelledTree& t) {
  const int n = static_cast<int>(t.labels.size());
  if (n == 0 || static_cast<int>(t.child_counts.size()) != n) throw DomainError("malformed labelled tree");
  std::vector<int> parent(n, -1);
  std::vector<std::pair<int, int>> stack;  // (vertex, children still to come)
  for (int k = 0; k < n; ++k) {
    if (k > 0) {
      if (stack.empty()) throw DomainError("malformed labelled tree");
      parent[k] = stack.back().first;
      if (--stack.back().second == 0) stack.pop_back();
    }
    if (t.child_counts[k] < 0) throw DomainError("malformed labelled tree");
    if (t.child_counts[k] > 0) stack.push_back({k, t.child_counts[k]});
  }
  if (!stack.empty()) throw DomainError("malformed labelled tree");
  return parent;
}

// Reads a plane tree given as a rooted map, with a label per dart origin.
LabelledTree read_tree(const RootedMap& m, const std::vector<int>& label) {
  LabelledTree t;
  if (m.is_atomic()) throw DomainError("empty tree");
  std::function<void(int32_t, bool)> visit = [&](int32_t first, bool is_root) {
    t.labels.push_back(label[first]);
    std::vector<int32_t> kids;
    if (is_root) kids.push_back(first);
    for (int32_t d = m.sigma(first); d != first; d = m.sigma(d)) kids.push_back(d);
    t.child_counts.push_back(static_cast<int>(kids.size()));
    for (int32_t d : kids) visit(m.alpha(d), false);
  };
  visit(m.root(), true);
  return t;
}

void gen_shapes(int edges, std::vector<int>& cur, int pending, std::vector<std::vector<int>>& out) {
  const int placed = static_cast<int>(cur.size());
  if (placed == edges + 1) {
    out.push_back(cur);
    return;
  }
  int used = 0;
  for (int c : cur) used += c;
  for (int c = 0; used + c <= edges; ++c) {
    const int next = pending - 1 + c;
    if (next == 0 && placed + 1 != edges + 1) continue;
    if (next > 0 && placed + 1 == edges + 1) continue;
    cur.push_back(c);
    gen_shapes(edges, cur, next, out);
    cur.pop_back();
  }
}

}  // namespace

std::string LabelledTree::to_string() const {
  std::ostringstream os;
  for (size_t k = 0; k < labels.size(); ++k) os << (k ? " " : "") << labels[k] << ':' << child_counts[k];
  return os.str();
}

bool is_labelled_tree(const LabelledTree& t) {
  std::vector<int> parent;
  try {
    parent = parents(t);
  } catch (const DomainError&) {
    return false;
  }
  int lo = t.labels[0];
  for (size_t k = 0; k < t.labels.size(); ++k) {
    lo = std::min(lo, t.labels[k]);
    if (k > 0 && std::abs(t.labels[k] - t.labels[parent[k]]) > 1) return false;
  }
  return lo == 1;
}

bool is_well_labelled(const LabelledTree& t) { return is_labelled_tree(t) && t.labels[0] == 1; }

LabelledTree parse_labelled_tree(const std::string& s) {
  LabelledTree t;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    auto colon = tok.find(':');
    if (colon == std::string::npos) throw DomainError("malformed labelled tree token: " + tok);
    try {
      t.labels.push_back(std::stoi(tok.substr(0, colon)));
      t.child_counts.push_back(std::stoi(tok.substr(colon + 1)));
    } catch (const std::exception&) {
      throw DomainError("malformed labelled tree token: " + tok);
    }
  }
  if (!is_labelled_tree(t)) throw DomainError("invalid labelled tree: " + s);
  return t;
}

std::vector<LabelledTree> all_labelled_trees(int edges) {
  if (edges < 0) throw DomainError("negative tree size");
  std::vector<std::vector<int>> shapes;
  std::vector<int> cur;
  gen_shapes(edges, cur, 1, shapes);
  std::vector<LabelledTree> out;
  for (const auto& shape : shapes) {
    LabelledTree t{std::vector<int>(edges + 1, 0), shape};
    auto parent = parents(t);
    long combos = 1;
    for (int k = 0; k < edges; ++k) combos *= 3;
    for (long code = 0; code < combos; ++code) {
      long c = code;
      int lo = 0;
      for (int k = 1; k <= edges; ++k) {
        t.labels[k] = t.labels[parent[k]] + static_cast<int>(c % 3) - 1;
        c /= 3;
        lo = std::min(lo, t.labels[k]);
      }
      LabelledTree shifted = t;
      for (int& l : shifted.labels) l += 1 - lo;
      out.push_back(std::move(shifted));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

RootedMap tree_map(const LabelledTree& t) {
  auto parent = parents(t);
  const int n = t.num_edges();
  if (n == 0) return RootedMap::atomic();
  std::vector<std::vector<int32_t>> around(n + 1);
  for (int k = 1; k <= n; ++k) around[k].push_back(2 * k - 1);
  for (int k = 1; k <= n; ++k) around[parent[k]].push_back(2 * k - 2);
  std::vector<int32_t> alpha(2 * n), sigma(2 * n);
  for (int32_t d = 0; d < 2 * n; ++d) alpha[d] = d ^ 1;
  for (const auto& cyc : around)
    for (size_t i = 0; i < cyc.size(); ++i) sigma[cyc[i]] = cyc[(i + 1) % cyc.size()];
  return RootedMap(std::move(alpha), std::move(sigma), 0);
}

PointedMap PointedMap::normalized() const {
  if (map.is_atomic()) return *this;
  auto lab = map.canonical_labelling();
  int32_t best = lab[vertex_dart];
  for (int32_t d = map.sigma(vertex_dart); d != vertex_dart; d = map.sigma(d)) best = std::min(best, lab[d]);
  return PointedMap{map.canonical(), best};
}

std::vector<int> distances_from(const RootedMap& m, int32_t vertex_dart) {
  const int nd = m.n_darts();
  if (vertex_dart < 0 || vertex_dart >= nd) throw DomainError("pointed dart out of range");
  auto vof = m.vertex_of();
  std::vector<std::vector<int32_t>> darts_at(m.num_vertices());
  for (int32_t d = 0; d < nd; ++d) darts_at[vof[d]].push_back(d);
  std::vector<int> dist(m.num_vertices(), -1), queue{vof[vertex_dart]};
  dist[vof[vertex_dart]] = 0;
  for (size_t i = 0; i < queue.size(); ++i) {
    int v = queue[i];
    for (int32_t d : darts_at[v]) {
      int w = vof[m.alpha(d)];
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<int> out(nd);
  for (int32_t d = 0; d < nd; ++d) out[d] = dist[vof[d]];
  return out;
}

bool root_points_away(const RootedMap& q, int32_t vertex_dart) {
  auto dist = distances_from(q, vertex_dart);
  return dist[q.root()] < dist[q.alpha(q.root())];
}

LabelledTree cvs_forward(const PointedMap& pm) {
  const RootedMap& q = pm.map;
  if (!is_quadrangulation(q)) throw DomainError("labelling needs a quadrangulation");
  auto dist = distances_from(q, pm.vertex_dart);
  const int32_t r = q.root();
  if (dist[r] >= dist[q.alpha(r)]) throw DomainError("root edge does not point away from the pointed vertex");
  const int nd = q.n_darts();
  auto faces = q.faces();
  std::vector<int32_t> tree_at(nd, -1);  // tree dart in the corner before a dart
  for (size_t j = 0; j < faces.size(); ++j) {
    const auto& f = faces[j];
    int lab[4];
    for (int i = 0; i < 4; ++i) lab[i] = dist[f[i]];
    int i0 = static_cast<int>(std::min_element(lab, lab + 4) - lab);
    int a = (i0 + 1) % 4;
    int b = lab[(i0 + 2) % 4] == lab[i0] ? (i0 + 3) % 4 : (i0 + 2) % 4;
    tree_at[f[a]] = static_cast<int32_t>(2 * j);
    tree_at[f[b]] = static_cast<int32_t>(2 * j + 1);
  }
  const int n = static_cast<int>(faces.size());
  std::vector<int32_t> alpha(2 * n), sigma(2 * n, -1);
  std::vector<int> label(2 * n);
  for (int32_t d = 0; d < 2 * n; ++d) alpha[d] = d ^ 1;
  for (const auto& vert : q.vertices()) {
    std::vector<int32_t> cyc;
    for (int32_t d : vert) {
      if (tree_at[d] >= 0) {
        cyc.push_back(tree_at[d]);
        label[tree_at[d]] = dist[d];
      }
    }
    for (size_t i = 0; i < cyc.size(); ++i) sigma[cyc[i]] = cyc[(i + 1) % cyc.size()];
  }
  RootedMap tree(std::move(alpha), std::move(sigma), tree_at[q.phi(r)]);
  if (tree.num_vertices() != q.num_vertices() - 1) throw Error("labelled edges do not form a spanning tree");
  return read_tree(tree, label);
}

PointedMap cvs_backward(const LabelledTree& t) {
  if (!is_labelled_tree(t)) throw DomainError("invalid labelled tree");
  const int n = t.num_edges();
  if (n == 0) throw DomainError("the single-vertex tree has no quadrangulation");
  auto parent = parents(t);
  RootedMap tm = tree_map(t);
  std::vector<int> label(2 * n);
  for (int k = 1; k <= n; ++k) {
    label[2 * k - 2] = t.labels[parent[k]];
    label[2 * k - 1] = t.labels[k];
  }
  auto seq = contour(tm.sigma(), tm.alpha(), 0);
  const int len = static_cast<int>(seq.size());
  std::vector<int> pos(2 * n);
  for (int i = 0; i < len; ++i) pos[seq[i]] = i;

  std::vector<std::vector<int32_t>> incoming(2 * n);
  std::vector<int32_t> target(2 * n, -1);
  for (int i = 0; i < len; ++i) {
    const int32_t c = seq[i];
    if (label[c] == 1) continue;
    for (int k = 1; k < len; ++k) {
      const int32_t s = seq[(i + k) % len];
      if (label[s] == label[c] - 1) {
        target[c] = s;
        incoming[s].push_back(c);
        break;
      }
    }
  }
  for (int32_t s = 0; s < 2 * n; ++s) {
    std::sort(incoming[s].begin(), incoming[s].end(), [&](int32_t x, int32_t y) {
      return (pos[s] - pos[x] + len) % len < (pos[s] - pos[y] + len) % len;
    });
  }

  // Corner c (before tree dart c) sends dart 2c; its partner 2c + 1 arrives
  // at the target corner or at the new vertex.
  std::vector<int32_t> alpha(4 * n), sigma(4 * n);
  for (int32_t d = 0; d < 4 * n; ++d) alpha[d] = d ^ 1;
  auto close_cycle = [&](const std::vector<int32_t>& cyc) {
    for (size_t i = 0; i < cyc.size(); ++i) sigma[cyc[i]] = cyc[(i + 1) % cyc.size()];
  };
  for (const auto& vert : tm.vertices()) {
    std::vector<int32_t> cyc;
    for (int32_t d : vert) {
      for (int32_t x : incoming[d]) cyc.push_back(2 * x + 1);
      cyc.push_back(2 * d);
    }
    close_cycle(cyc);
  }
  std::vector<int32_t> apex;
  for (int i = len - 1; i >= 0; --i)
    if (label[seq[i]] == 1) apex.push_back(2 * seq[i] + 1);
  close_cycle(apex);
  return PointedMap{RootedMap(std::move(alpha), std::move(sigma), 1), apex.front()};
}

}  // namespace tuttelab
