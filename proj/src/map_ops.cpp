#include "tuttelab/map_ops.hpp"

#include <algorithm>
#include <numeric>

#include "tuttelab/errors.hpp"

namespace tuttelab {

RootedMap dual(const RootedMap& m) {
  if (m.is_atomic()) return m;
  std::vector<int32_t> s(m.n_darts());
  for (int32_t d = 0; d < m.n_darts(); ++d) s[d] = m.phi(d);
  return make_unchecked(m.alpha(), std::move(s), m.root());
}

RootedMap radial(const RootedMap& m) {
  if (m.is_atomic()) return m;
  const int n = m.n_darts();
  auto before = [](int32_t d) { return 2 * d; };
  auto after = [](int32_t d) { return 2 * d + 1; };
  std::vector<int32_t> a(2 * n), s(2 * n);
  for (int32_t d = 0; d < n; ++d) {
    int32_t e = m.alpha(d);
    a[after(d)] = before(m.sigma(d));
    a[before(m.sigma(d))] = after(d);
    s[before(e)] = after(d);
    s[after(d)] = before(d);
  }
  return make_unchecked(std::move(a), std::move(s), after(m.root()));
}

namespace {

// Mutable copy with two extra darts n, n+1 forming the new edge.
struct Builder {
  std::vector<int32_t> a, s;
  explicit Builder(const RootedMap& m, int extra = 2) : a(m.alpha()), s(m.sigma()) {
    a.resize(m.n_darts() + extra);
    s.resize(m.n_darts() + extra);
  }
  // Place x just before d in the rotation of d's vertex.
  void insert_before(int32_t x, int32_t d, int32_t pred) {
    s[pred] = x;
    s[x] = d;
  }
};

}  // namespace

RootedMap insert_root_edge(const RootedMap& m, int k) {
  const int df = m.root_face_degree();
  if (k < 0 || k > df) throw DomainError("insertion index out of range");
  const int32_t n = m.n_darts();
  const int32_t a = n, b = n + 1;
  Builder bl(m);
  bl.a[a] = b;
  bl.a[b] = a;
  if (m.is_atomic()) {
    bl.s[a] = b;
    bl.s[b] = a;
    return make_unchecked(std::move(bl.a), std::move(bl.s), a).canonical();
  }
  const int32_t r = m.root();
  const int32_t pred = m.sigma_inv(r);
  if (k == 0 || k == df) {
    int32_t first = k == 0 ? a : b, second = k == 0 ? b : a;
    bl.s[pred] = first;
    bl.s[first] = second;
    bl.s[second] = r;
  } else {
    int32_t dk = r;
    for (int i = 0; i < k; ++i) dk = m.phi(dk);
    bl.insert_before(a, r, pred);
    bl.insert_before(b, dk, m.sigma_inv(dk));
  }
  return make_unchecked(std::move(bl.a), std::move(bl.s), a).canonical();
}

RootedMap glue(const RootedMap& m1, const RootedMap& m2) {
  const int32_t n1 = m1.n_darts(), n2 = m2.n_darts();
  const int32_t a = n1 + n2, b = a + 1;
  std::vector<int32_t> al(a + 2), s(a + 2);
  for (int32_t d = 0; d < n1; ++d) {
    al[d] = m1.alpha(d);
    s[d] = m1.sigma(d);
  }
  for (int32_t d = 0; d < n2; ++d) {
    al[n1 + d] = n1 + m2.alpha(d);
    s[n1 + d] = n1 + m2.sigma(d);
  }
  al[a] = b;
  al[b] = a;
  if (m1.is_atomic()) {
    s[a] = a;
  } else {
    int32_t r1 = m1.root(), p1 = m1.sigma_inv(r1);
    s[p1] = a;
    s[a] = r1;
  }
  if (m2.is_atomic()) {
    s[b] = b;
  } else {
    int32_t r2 = n1 + m2.root(), p2 = n1 + m2.sigma_inv(m2.root());
    s[p2] = b;
    s[b] = r2;
  }
  return make_unchecked(std::move(al), std::move(s), a).canonical();
}

namespace {

// Removes darts a and b, splicing the rotation; returns the relabelled
// arrays and the new label of each surviving dart.
struct Removal {
  std::vector<int32_t> alpha, sigma, relabel;
};

Removal remove_edge(const std::vector<int32_t>& al, const std::vector<int32_t>& s, int32_t a, int32_t b) {
  const int32_t n = static_cast<int32_t>(al.size());
  Removal r;
  r.relabel.assign(n, -1);
  int32_t next = 0;
  for (int32_t d = 0; d < n; ++d)
    if (d != a && d != b) r.relabel[d] = next++;
  r.alpha.resize(next);
  r.sigma.resize(next);
  for (int32_t d = 0; d < n; ++d) {
    if (d == a || d == b) continue;
    int32_t e = s[d];
    while (e == a || e == b) e = s[e];
    r.alpha[r.relabel[d]] = r.relabel[al[d]];
    r.sigma[r.relabel[d]] = r.relabel[e];
  }
  return r;
}

// Component of the rotation system reachable from start, re-rooted at start.
RootedMap component(const std::vector<int32_t>& al, const std::vector<int32_t>& s, int32_t start) {
  if (start < 0) return {};
  const int32_t n = static_cast<int32_t>(al.size());
  std::vector<int32_t> label(n, -1), order{start};
  label[start] = 0;
  for (size_t i = 0; i < order.size(); ++i) {
    for (int32_t e : {s[order[i]], al[order[i]]}) {
      if (label[e] < 0) {
        label[e] = static_cast<int32_t>(order.size());
        order.push_back(e);
      }
    }
  }
  std::vector<int32_t> a2(order.size()), s2(order.size());
  for (int32_t d : order) {
    a2[label[d]] = label[al[d]];
    s2[label[d]] = label[s[d]];
  }
  return make_unchecked(std::move(a2), std::move(s2), 0);
}

}  // namespace

bool root_is_loop(const RootedMap& m) {
  if (m.is_atomic()) return false;
  int32_t b = m.alpha(m.root());
  for (int32_t d = m.sigma(m.root()); d != m.root(); d = m.sigma(d))
    if (d == b) return true;
  return false;
}

bool root_is_isthmus(const RootedMap& m) {
  if (m.is_atomic()) return false;
  int32_t b = m.alpha(m.root());
  for (int32_t d = m.phi(m.root()); d != m.root(); d = m.phi(d))
    if (d == b) return true;
  return false;
}

RootDeletion delete_root_edge(const RootedMap& m) {
  if (m.is_atomic()) throw DomainError("cannot delete the root edge of the atomic map");
  const int32_t a = m.root(), b = m.alpha(a);
  RootDeletion out;
  auto rem = remove_edge(m.alpha(), m.sigma(), a, b);
  if (root_is_isthmus(m)) {
    out.isthmus = true;
    int32_t r1 = m.sigma(a) == a ? -1 : rem.relabel[m.sigma(a)];
    int32_t r2 = m.sigma(b) == b ? -1 : rem.relabel[m.sigma(b)];
    out.first = component(rem.alpha, rem.sigma, r1).canonical();
    out.second = component(rem.alpha, rem.sigma, r2).canonical();
    return out;
  }
  int32_t r = m.sigma(a);
  if (r == b) r = m.sigma(b);
  if (r == a) {
    out.first = RootedMap::atomic();
  } else {
    out.first = make_unchecked(std::move(rem.alpha), std::move(rem.sigma), rem.relabel[r]).canonical();
  }
  out.index = out.first.root_face_degree() + 1 - m.root_face_degree();
  return out;
}

RootedMap contract_root_edge(const RootedMap& m) {
  if (m.is_atomic()) throw DomainError("cannot contract the root edge of the atomic map");
  if (root_is_loop(m)) return delete_root_edge(m).first;
  const int32_t a = m.root(), b = m.alpha(a);
  const int32_t n = m.n_darts();
  auto jump = [&](int32_t e) {
    while (e == a || e == b) e = e == a ? m.sigma(b) : m.sigma(a);
    return e;
  };
  if (n == 2) return RootedMap::atomic();
  std::vector<int32_t> s(m.sigma());
  for (int32_t d = 0; d < n; ++d)
    if (d != a && d != b) s[d] = jump(m.sigma(d));
  int32_t root = jump(m.sigma(b));
  auto rem = remove_edge(m.alpha(), s, a, b);
  return make_unchecked(std::move(rem.alpha), std::move(rem.sigma), rem.relabel[root]).canonical();
}

std::vector<int32_t> edge_darts(const RootedMap& m) {
  std::vector<int32_t> out;
  if (m.is_atomic()) return out;
  out.push_back(m.root());
  for (int32_t d = 0; d < m.n_darts(); ++d)
    if (d < m.alpha(d) && d != m.root() && m.alpha(d) != m.root()) out.push_back(d);
  return out;
}

Graph underlying_graph(const RootedMap& m) {
  Graph g;
  g.num_vertices = m.num_vertices();
  if (m.is_atomic()) return g;
  auto vof = m.vertex_of();
  for (int32_t d : edge_darts(m)) g.edges.emplace_back(vof[d], vof[m.alpha(d)]);
  return g;
}

bool is_bipartite(const RootedMap& m) {
  Graph g = underlying_graph(m);
  std::vector<std::vector<int>> adj(g.num_vertices);
  for (auto [u, v] : g.edges) {
    if (u == v) return false;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> colour(g.num_vertices, -1);
  colour[0] = 0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u]) {
      if (colour[v] < 0) {
        colour[v] = 1 - colour[u];
        stack.push_back(v);
      } else if (colour[v] == colour[u]) {
        return false;
      }
    }
  }
  return true;
}

bool is_eulerian(const RootedMap& m) {
  auto deg = m.vertex_degrees();
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d % 2 == 0; });
}

bool is_separable(const RootedMap& m) {
  if (m.is_atomic()) return true;
  if (m.num_edges() == 1) return false;
  Graph g = underlying_graph(m);
  for (auto [u, v] : g.edges)
    if (u == v) return true;
  const int V = g.num_vertices;
  if (V <= 2) return false;
  std::vector<std::vector<int>> adj(V);
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (int cut = 0; cut < V; ++cut) {
    int start = cut == 0 ? 1 : 0;
    std::vector<char> seen(V, 0);
    seen[cut] = 1;
    seen[start] = 1;
    std::vector<int> stack{start};
    int reached = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[u])
        if (!seen[v]) {
          seen[v] = 1;
          ++reached;
          stack.push_back(v);
        }
    }
    if (reached != V - 1) return true;
  }
  return false;
}

namespace {

bool finite_faces_have_degree(const RootedMap& m, size_t deg) {
  auto fs = m.faces();
  for (size_t i = 1; i < fs.size(); ++i)
    if (fs[i].size() != deg) return false;
  return true;
}

}  // namespace

bool is_near_triangulation(const RootedMap& m) { return m.is_atomic() || finite_faces_have_degree(m, 3); }
bool is_near_quadrangulation(const RootedMap& m) { return m.is_atomic() || finite_faces_have_degree(m, 4); }

bool is_triangulation(const RootedMap& m) {
  return !m.is_atomic() && m.root_face_degree() == 3 && finite_faces_have_degree(m, 3);
}

bool is_quadrangulation(const RootedMap& m) {
  return !m.is_atomic() && m.root_face_degree() == 4 && finite_faces_have_degree(m, 4);
}

bool is_4valent(const RootedMap& m) {
  if (m.is_atomic()) return false;
  auto deg = m.vertex_degrees();
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 4; });
}

}  // namespace tuttelab
