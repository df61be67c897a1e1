#include "tuttelab/oracles.hpp"

#include <functional>

#include "tuttelab/errors.hpp"

namespace tuttelab {

namespace {

constexpr long kColouringBudget = 50'000'000;

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

std::vector<EdgeSubset> all_spanning_trees(const RootedMap& m) {
  Graph g = underlying_graph(m);
  const int E = static_cast<int>(g.edges.size());
  const int need = g.num_vertices - 1;
  std::vector<EdgeSubset> out;
  EdgeSubset current;
  std::function<void(int)> rec = [&](int e) {
    if (static_cast<int>(current.size()) == need) {
      UnionFind uf(g.num_vertices);
      for (int id : current)
        if (!uf.unite(g.edges[id].first, g.edges[id].second)) return;
      out.push_back(current);
      return;
    }
    if (E - e < need - static_cast<int>(current.size())) return;
    current.push_back(e);
    rec(e + 1);
    current.pop_back();
    rec(e + 1);
  };
  rec(0);
  return out;
}

std::vector<Orientation> all_bipolar_orientations(const RootedMap& m) {
  std::vector<Orientation> out;
  if (m.is_atomic()) return out;
  Graph g = underlying_graph(m);
  auto darts = edge_darts(m);
  const int E = static_cast<int>(g.edges.size());
  const int V = g.num_vertices;
  const int s = g.edges[0].first, t = g.edges[0].second;
  if (s == t) return out;
  for (auto [u, v] : g.edges)
    if (u == v) return out;
  // Edge 0 is forced s -> t; enumerate the rest.
  for (unsigned long mask = 0; mask < (1ul << (E - 1)); ++mask) {
    std::vector<int> indeg(V, 0), outdeg(V, 0);
    std::vector<std::vector<int>> succ(V);
    for (int e = 0; e < E; ++e) {
      bool flip = e > 0 && ((mask >> (e - 1)) & 1ul);
      int a = flip ? g.edges[e].second : g.edges[e].first;
      int b = flip ? g.edges[e].first : g.edges[e].second;
      succ[a].push_back(b);
      ++outdeg[a];
      ++indeg[b];
    }
    bool ok = true;
    for (int v = 0; v < V && ok; ++v) {
      if (indeg[v] == 0 && v != s) ok = false;
      if (outdeg[v] == 0 && v != t) ok = false;
    }
    if (!ok || indeg[s] != 0 || outdeg[t] != 0) continue;
    // Kahn's algorithm for acyclicity.
    std::vector<int> deg = indeg, queue;
    for (int v = 0; v < V; ++v)
      if (deg[v] == 0) queue.push_back(v);
    for (size_t i = 0; i < queue.size(); ++i)
      for (int w : succ[queue[i]])
        if (--deg[w] == 0) queue.push_back(w);
    if (static_cast<int>(queue.size()) != V) continue;
    Orientation o;
    for (int e = 0; e < E; ++e) {
      bool flip = e > 0 && ((mask >> (e - 1)) & 1ul);
      o.forward.push_back(flip ? m.alpha(darts[e]) : darts[e]);
    }
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<Integer> colouring_distribution(const Graph& g, int q) {
  if (q < 1) throw DomainError("colouring needs q >= 1");
  const int V = g.num_vertices, E = static_cast<int>(g.edges.size());
  long total = 1;
  for (int i = 0; i < V; ++i) {
    total *= q;
    if (total > kColouringBudget) throw CapExceeded("too many colourings to enumerate");
  }
  std::vector<long> counts(E + 1, 0);
  std::vector<int> c(V, 0);
  for (long it = 0; it < total; ++it) {
    int mono = 0;
    for (auto [u, v] : g.edges) mono += c[u] == c[v];
    ++counts[mono];
    for (int i = 0; i < V; ++i) {
      if (++c[i] < q) break;
      c[i] = 0;
    }
  }
  std::vector<Integer> out(E + 1);
  for (int k = 0; k <= E; ++k) out[k] = counts[k];
  return out;
}

Rational colouring_sum(const RootedMap& m, int q, const Rational& nu) {
  auto dist = colouring_distribution(underlying_graph(m), q);
  Rational sum = 0, p = 1;
  for (const auto& c : dist) {
    sum += Rational(c) * p;
    p *= nu;
  }
  return sum;
}

bool is_properly_colourable(const Graph& g, int q) {
  const int V = g.num_vertices;
  std::vector<std::vector<int>> adj(V);
  for (auto [u, v] : g.edges) {
    if (u == v) return false;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> c(V, -1);
  std::function<bool(int)> rec = [&](int v) {
    if (v == V) return true;
    for (int col = 0; col < q; ++col) {
      bool ok = true;
      for (int w : adj[v])
        if (c[w] == col) ok = false;
      if (!ok) continue;
      c[v] = col;
      if (rec(v + 1)) return true;
      c[v] = -1;
    }
    return false;
  };
  return rec(0);
}

}  // namespace tuttelab
