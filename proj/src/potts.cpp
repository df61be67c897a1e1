#include "tuttelab/potts.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_map>

#include "tuttelab/errors.hpp"
#include "tuttelab/oracles.hpp"

namespace tuttelab {

namespace {

constexpr long kMaxKeyPermutations = 5040;
constexpr int kMaxSubsetEdges = 20;

// Canonical key of an unrooted multigraph with loops: the smallest adjacency
// matrix over vertex orderings that respect (degree, loops) classes. Empty
// when too many orderings would have to be tried.
std::string graph_key(const Graph& g) {
  const int V = g.num_vertices;
  std::vector<std::vector<int>> mult(V, std::vector<int>(V, 0));
  std::vector<int> deg(V, 0), loops(V, 0);
  for (auto [u, v] : g.edges) {
    ++mult[u][v];
    if (u != v) ++mult[v][u];
    ++deg[u];
    ++deg[v];
    if (u == v) ++loops[u];
  }
  std::vector<int> order(V);
  std::iota(order.begin(), order.end(), 0);
  auto cls = [&](int v) { return std::make_pair(deg[v], loops[v]); };
  std::sort(order.begin(), order.end(), [&](int a, int b) { return cls(a) < cls(b); });
  std::vector<std::pair<int, int>> blocks;  // [begin, end) of equal classes
  long perms = 1;
  for (int i = 0; i < V;) {
    int j = i;
    while (j < V && cls(order[j]) == cls(order[i])) ++j;
    for (int k = 2; k <= j - i; ++k) {
      perms *= k;
      if (perms > kMaxKeyPermutations) return {};
    }
    blocks.emplace_back(i, j);
    i = j;
  }
  std::string best;
  auto encode = [&]() {
    std::string s;
    s.reserve(V * (V + 1) / 2 + 1);
    s.push_back(static_cast<char>(V));
    for (int a = 0; a < V; ++a)
      for (int b = a; b < V; ++b) s.push_back(static_cast<char>(mult[order[a]][order[b]]));
    return s;
  };
  std::function<void(size_t)> rec = [&](size_t bi) {
    if (bi == blocks.size()) {
      std::string s = encode();
      if (best.empty() || s < best) best = std::move(s);
      return;
    }
    auto [b, e] = blocks[bi];
    std::sort(order.begin() + b, order.begin() + e);
    do {
      rec(bi + 1);
    } while (std::next_permutation(order.begin() + b, order.begin() + e));
  };
  rec(0);
  return best;
}

Graph delete_edge0(const Graph& g) {
  Graph h;
  h.num_vertices = g.num_vertices;
  h.edges.assign(g.edges.begin() + 1, g.edges.end());
  return h;
}

Graph contract_edge0(const Graph& g) {
  auto [a, b] = g.edges[0];
  Graph h;
  h.num_vertices = g.num_vertices - 1;
  auto relabel = [&](int v) {
    if (v == b) v = a;
    return v > b ? v - 1 : v;
  };
  for (size_t i = 1; i < g.edges.size(); ++i) h.edges.emplace_back(relabel(g.edges[i].first), relabel(g.edges[i].second));
  return h;
}

bool edge0_is_bridge(const Graph& g) {
  auto [a, b] = g.edges[0];
  if (a == b) return false;
  std::vector<std::vector<int>> adj(g.num_vertices);
  for (size_t i = 1; i < g.edges.size(); ++i) {
    adj[g.edges[i].first].push_back(g.edges[i].second);
    adj[g.edges[i].second].push_back(g.edges[i].first);
  }
  std::vector<char> seen(g.num_vertices, 0);
  std::vector<int> stack{a};
  seen[a] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
  }
  return !seen[b];
}

struct Memo {
  std::mutex mu;
  std::unordered_map<std::string, MultiPoly> table;
  std::optional<MultiPoly> find(const std::string& key) {
    if (key.empty()) return std::nullopt;
    std::lock_guard<std::mutex> lock(mu);
    auto it = table.find(key);
    if (it == table.end()) return std::nullopt;
    return it->second;
  }
  void insert(const std::string& key, const MultiPoly& p) {
    if (key.empty()) return;
    std::lock_guard<std::mutex> lock(mu);
    table.emplace(key, p);
  }
};

Memo& potts_memo() {
  static Memo m;
  return m;
}

Memo& tutte_memo() {
  static Memo m;
  return m;
}

int components(int V, const std::vector<std::pair<int, int>>& edges, unsigned long mask) {
  std::vector<int> parent(V);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  int c = V;
  for (size_t e = 0; e < edges.size(); ++e) {
    if (!((mask >> e) & 1ul)) continue;
    int a = find(edges[e].first), b = find(edges[e].second);
    if (a != b) {
      parent[a] = b;
      --c;
    }
  }
  return c;
}

MultiPoly powers(const MultiPoly& base, int e, std::vector<MultiPoly>& cache) {
  while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.empty() ? MultiPoly(1) : cache.back() * base);
  return cache[e];
}

}  // namespace

void clear_potts_memo() {
  for (Memo* m : {&potts_memo(), &tutte_memo()}) {
    std::lock_guard<std::mutex> lock(m->mu);
    m->table.clear();
  }
}

MultiPoly potts(const Graph& g) {
  const MultiPoly q = MultiPoly::var(Var::q), nu = MultiPoly::var(Var::nu);
  if (g.edges.empty()) return q.pow(static_cast<unsigned>(g.num_vertices));
  std::string key = graph_key(g);
  if (auto hit = potts_memo().find(key)) return *hit;
  MultiPoly result;
  if (g.edges[0].first == g.edges[0].second)
    result = nu * potts(delete_edge0(g));
  else
    result = potts(delete_edge0(g)) + (nu - MultiPoly(1)) * potts(contract_edge0(g));
  potts_memo().insert(key, result);
  return result;
}

MultiPoly potts(const RootedMap& m) { return potts(underlying_graph(m)); }

MultiPoly potts_subset_oracle(const RootedMap& m) {
  Graph g = underlying_graph(m);
  const int E = static_cast<int>(g.edges.size());
  if (E > kMaxSubsetEdges) throw CapExceeded("subset expansion over too many edges");
  const MultiPoly q = MultiPoly::var(Var::q), nu1 = MultiPoly::var(Var::nu) - MultiPoly(1);
  std::vector<MultiPoly> qp, np;
  MultiPoly sum;
  for (unsigned long mask = 0; mask < (1ul << E); ++mask) {
    int c = components(g.num_vertices, g.edges, mask);
    int k = __builtin_popcountl(mask);
    sum += powers(q, c, qp) * powers(nu1, k, np);
  }
  return sum;
}

MultiPoly potts_colouring_interpolation(const RootedMap& m) {
  Graph g = underlying_graph(m);
  const int V = g.num_vertices, E = static_cast<int>(g.edges.size());
  const int pts = V + 1;
  std::vector<std::vector<Integer>> values;  // values[i][k] at q = i+1
  for (int qv = 1; qv <= pts; ++qv) values.push_back(colouring_distribution(g, qv));
  const MultiPoly q = MultiPoly::var(Var::q);
  MultiPoly result;
  for (int k = 0; k <= E; ++k) {
    MultiPoly pk;
    for (int i = 0; i < pts; ++i) {
      if (values[i][k] == 0) continue;
      MultiPoly basis(1);
      Rational denom = 1;
      for (int j = 0; j < pts; ++j) {
        if (j == i) continue;
        basis *= q - MultiPoly(j + 1);
        denom *= Rational(i - j);
      }
      pk += basis * (Rational(values[i][k]) / denom);
    }
    result += pk * MultiPoly::var(Var::nu, k);
  }
  return result;
}

MultiPoly tutte(const Graph& g) {
  const MultiPoly mu = MultiPoly::var(Var::mu), nu = MultiPoly::var(Var::nu);
  if (g.edges.empty()) return MultiPoly(1);
  std::string key = graph_key(g);
  if (auto hit = tutte_memo().find(key)) return *hit;
  MultiPoly result;
  if (g.edges[0].first == g.edges[0].second)
    result = nu * tutte(delete_edge0(g));
  else if (edge0_is_bridge(g))
    result = mu * tutte(contract_edge0(g));
  else
    result = tutte(delete_edge0(g)) + tutte(contract_edge0(g));
  tutte_memo().insert(key, result);
  return result;
}

MultiPoly tutte(const RootedMap& m) { return tutte(underlying_graph(m)); }

MultiPoly tutte_subset_oracle(const RootedMap& m) {
  Graph g = underlying_graph(m);
  const int E = static_cast<int>(g.edges.size());
  if (E > kMaxSubsetEdges) throw CapExceeded("subset expansion over too many edges");
  const int V = g.num_vertices;
  const int cG = components(V, g.edges, (1ul << E) - 1);
  const MultiPoly mu1 = MultiPoly::var(Var::mu) - MultiPoly(1), nu1 = MultiPoly::var(Var::nu) - MultiPoly(1);
  std::vector<MultiPoly> mp, np;
  MultiPoly sum;
  for (unsigned long mask = 0; mask < (1ul << E); ++mask) {
    int c = components(V, g.edges, mask);
    int k = __builtin_popcountl(mask);
    sum += powers(mu1, c - cG, mp) * powers(nu1, k + c - V, np);
  }
  return sum;
}

bool fortuin_kasteleyn_check(const RootedMap& m) {
  const MultiPoly mu1 = MultiPoly::var(Var::mu) - MultiPoly(1), nu1 = MultiPoly::var(Var::nu) - MultiPoly(1);
  MultiPoly lhs = potts(m).subs(Var::q, mu1 * nu1);
  MultiPoly rhs = mu1 * nu1.pow(static_cast<unsigned>(m.num_vertices())) * tutte(m);
  return lhs == rhs;
}

bool duality_check(const RootedMap& m) {
  RootedMap d = dual(m);
  const MultiPoly mu = MultiPoly::var(Var::mu), nu = MultiPoly::var(Var::nu), q = MultiPoly::var(Var::q);
  MultiPoly t = tutte(m);
  MultiPoly swapped = t.subs(Var::mu, MultiPoly::var(Var::v)).subs(Var::nu, mu).subs(Var::v, nu);
  if (tutte(d) != swapped) return false;
  const int E = m.num_edges(), V = m.num_vertices();
  MultiPoly lhs = q.pow(static_cast<unsigned>(V - 1)) * potts(d);
  MultiPoly nu1 = nu - MultiPoly(1);
  MultiPoly rhs;
  const MultiPoly pm = potts(m);
  for (const auto& [mono, c] : pm.terms()) {
    int a = exponent(mono, Var::q), k = exponent(mono, Var::nu);
    rhs += q.pow(a) * (nu1 + q).pow(k) * nu1.pow(E - k) * c;
  }
  return lhs == rhs && fortuin_kasteleyn_check(m) && fortuin_kasteleyn_check(d);
}

Specializations specializations(const RootedMap& m) {
  Specializations s;
  MultiPoly t = tutte(m).subs(Var::mu, Rational(1)).subs(Var::nu, Rational(1));
  s.spanning_tree_count = t.constant_term().get_num();
  MultiPoly p = potts(m);
  s.chromatic_poly = p.subs(Var::nu, Rational(0));
  Rational d = s.chromatic_poly.derivative(Var::q).subs(Var::q, Rational(1)).constant_term();
  if (m.num_vertices() % 2 == 1) d = -d;
  // No root edge, hence no bipolar orientation, on the atomic map.
  s.bipolar_count = m.is_atomic() ? Integer(0) : d.get_num();
  return s;
}

}  // namespace tuttelab
