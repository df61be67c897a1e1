#include "tuttelab/rooted_map.hpp"

#include <algorithm>
#include <string>

#include "tuttelab/errors.hpp"

namespace tuttelab {

size_t CanonicalCodeHash::operator()(const CanonicalCode& c) const noexcept {
  uint64_t h = 1469598103934665603ull;
  for (int32_t x : c.code) {
    h ^= static_cast<uint32_t>(x);
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

namespace {

template <class Next>
std::vector<std::vector<int32_t>> orbits(int n, int32_t root, Next next) {
  std::vector<std::vector<int32_t>> out;
  std::vector<char> seen(n, 0);
  auto take = [&](int32_t start) {
    std::vector<int32_t> orbit;
    int32_t d = start;
    do {
      seen[d] = 1;
      orbit.push_back(d);
      d = next(d);
    } while (d != start);
    out.push_back(std::move(orbit));
  };
  if (root >= 0) take(root);
  for (int32_t d = 0; d < n; ++d)
    if (!seen[d]) take(d);
  return out;
}

template <class Next>
int count_orbits(int n, Next next) {
  std::vector<char> seen(n, 0);
  int count = 0;
  for (int32_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++count;
    for (int32_t d = s; !seen[d]; d = next(d)) seen[d] = 1;
  }
  return count;
}

}  // namespace

void validate_rotation_system(const std::vector<int32_t>& alpha, const std::vector<int32_t>& sigma,
                              int32_t root) {
  const int n = static_cast<int>(alpha.size());
  if (static_cast<int>(sigma.size()) != n) throw InvalidMap("alpha and sigma have different lengths");
  if (n % 2 != 0) throw InvalidMap("odd number of darts");
  if (n == 0) {
    if (root != -1) throw InvalidMap("atomic map must have a null root");
    return;
  }
  if (root < 0 || root >= n) throw InvalidMap("root out of range");
  std::vector<char> hit(n, 0);
  for (int d = 0; d < n; ++d) {
    if (alpha[d] < 0 || alpha[d] >= n) throw InvalidMap("alpha entry out of range");
    if (alpha[d] == d) throw InvalidMap("alpha has a fixed point");
    if (alpha[alpha[d]] != d) throw InvalidMap("alpha is not an involution");
    if (sigma[d] < 0 || sigma[d] >= n) throw InvalidMap("sigma entry out of range");
    if (hit[sigma[d]]) throw InvalidMap("sigma is not a permutation");
    hit[sigma[d]] = 1;
  }
  std::vector<char> seen(n, 0);
  std::vector<int32_t> stack{root};
  seen[root] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int32_t d = stack.back();
    stack.pop_back();
    for (int32_t e : {alpha[d], sigma[d]}) {
      if (!seen[e]) {
        seen[e] = 1;
        ++reached;
        stack.push_back(e);
      }
    }
  }
  if (reached != n) throw InvalidMap("map is not connected");
  int V = count_orbits(n, [&](int32_t d) { return sigma[d]; });
  int F = count_orbits(n, [&](int32_t d) { return sigma[alpha[d]]; });
  if (V - n / 2 + F != 2) throw InvalidMap("map is not planar (Euler characteristic " + std::to_string(V - n / 2 + F) + ")");
}

RootedMap::RootedMap(std::vector<int32_t> alpha, std::vector<int32_t> sigma, int32_t root)
    : alpha_(std::move(alpha)), sigma_(std::move(sigma)), root_(root) {
  validate_rotation_system(alpha_, sigma_, root_);
}

RootedMap::RootedMap(std::vector<int32_t> alpha, std::vector<int32_t> sigma, int32_t root, Unchecked)
    : alpha_(std::move(alpha)), sigma_(std::move(sigma)), root_(root) {
#ifndef NDEBUG
  validate_rotation_system(alpha_, sigma_, root_);
#endif
}

RootedMap make_unchecked(std::vector<int32_t> alpha, std::vector<int32_t> sigma, int32_t root) {
  return RootedMap(std::move(alpha), std::move(sigma), root, RootedMap::Unchecked{});
}

RootedMap RootedMap::single_loop() { return RootedMap({1, 0}, {1, 0}, 0); }
RootedMap RootedMap::single_link() { return RootedMap({1, 0}, {0, 1}, 0); }

int RootedMap::num_vertices() const {
  if (is_atomic()) return 1;
  return count_orbits(n_darts(), [&](int32_t d) { return sigma_[d]; });
}

int RootedMap::num_faces() const {
  if (is_atomic()) return 1;
  return count_orbits(n_darts(), [&](int32_t d) { return phi(d); });
}

int32_t RootedMap::sigma_inv(int32_t d) const {
  int32_t e = d;
  while (sigma_[e] != d) e = sigma_[e];
  return e;
}

std::vector<std::vector<int32_t>> RootedMap::vertices() const {
  if (is_atomic()) return {{}};
  return orbits(n_darts(), root_, [&](int32_t d) { return sigma_[d]; });
}

std::vector<std::vector<int32_t>> RootedMap::faces() const {
  if (is_atomic()) return {{}};
  return orbits(n_darts(), root_, [&](int32_t d) { return phi(d); });
}

std::vector<int32_t> RootedMap::vertex_of() const {
  std::vector<int32_t> out(n_darts());
  auto vs = vertices();
  for (size_t i = 0; i < vs.size(); ++i)
    for (int32_t d : vs[i]) out[d] = static_cast<int32_t>(i);
  return out;
}

std::vector<int32_t> RootedMap::face_of() const {
  std::vector<int32_t> out(n_darts());
  auto fs = faces();
  for (size_t i = 0; i < fs.size(); ++i)
    for (int32_t d : fs[i]) out[d] = static_cast<int32_t>(i);
  return out;
}

int RootedMap::root_vertex_degree() const {
  if (is_atomic()) return 0;
  int k = 0;
  int32_t d = root_;
  do {
    ++k;
    d = sigma_[d];
  } while (d != root_);
  return k;
}

int RootedMap::root_face_degree() const {
  if (is_atomic()) return 0;
  int k = 0;
  int32_t d = root_;
  do {
    ++k;
    d = phi(d);
  } while (d != root_);
  return k;
}

std::vector<int> RootedMap::vertex_degrees() const {
  std::vector<int> out;
  for (const auto& v : vertices()) out.push_back(static_cast<int>(v.size()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> RootedMap::face_degrees() const {
  std::vector<int> out;
  for (const auto& f : faces()) out.push_back(static_cast<int>(f.size()));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<int32_t> bfs_labels(const RootedMap& m) {
  const int n = m.n_darts();
  std::vector<int32_t> label(n, -1), order;
  order.reserve(n);
  label[m.root()] = 0;
  order.push_back(m.root());
  for (size_t i = 0; i < order.size(); ++i) {
    int32_t d = order[i];
    for (int32_t e : {m.sigma(d), m.alpha(d)}) {
      if (label[e] < 0) {
        label[e] = static_cast<int32_t>(order.size());
        order.push_back(e);
      }
    }
  }
  return label;
}

}  // namespace

CanonicalCode RootedMap::canonical_code() const {
  CanonicalCode c;
  if (is_atomic()) return c;
  const int n = n_darts();
  auto label = bfs_labels(*this);
  c.code.assign(2 * n, 0);
  for (int32_t d = 0; d < n; ++d) {
    c.code[2 * label[d]] = label[sigma_[d]];
    c.code[2 * label[d] + 1] = label[alpha_[d]];
  }
  return c;
}

RootedMap RootedMap::canonical() const {
  if (is_atomic()) return {};
  const int n = n_darts();
  auto label = bfs_labels(*this);
  std::vector<int32_t> a(n), s(n);
  for (int32_t d = 0; d < n; ++d) {
    s[label[d]] = label[sigma_[d]];
    a[label[d]] = label[alpha_[d]];
  }
  return make_unchecked(std::move(a), std::move(s), 0);
}

std::vector<int32_t> RootedMap::canonical_labelling() const {
  if (is_atomic()) return {};
  return bfs_labels(*this);
}

RootedMap RootedMap::with_root(int32_t d) const {
  if (d < 0 || d >= n_darts()) throw InvalidMap("root out of range");
  return make_unchecked(alpha_, sigma_, d);
}

}  // namespace tuttelab
