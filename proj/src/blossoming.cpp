#include "tuttelab/blossoming.hpp"

#include <algorithm>
#include <functional>

#include "tuttelab/contour.hpp"
#include "tuttelab/errors.hpp"
#include "tuttelab/map_ops.hpp"

namespace tuttelab {

namespace {

enum Kind : int8_t { kEdge, kLeaf, kFlower };

// Inner nodes with four darts each (sigma cycles), tree edges paired, leaves
// and flowers dangling.
struct HalfEdgeTree {
  std::vector<int32_t> sigma, partner;
  std::vector<int8_t> kind;
  int32_t root = -1;
};

HalfEdgeTree build(const BlossomingTree& t) {
  HalfEdgeTree b;
  const int n = t.inner_nodes();
  b.sigma.resize(4 * n);
  b.partner.assign(4 * n, -1);
  b.kind.assign(4 * n, kLeaf);
  for (int32_t d = 0; d < 4 * n; ++d) b.sigma[d] = (d & ~3) | ((d + 1) & 3);
  size_t pos = 0;
  int next_node = 0;
  std::function<int32_t()> rec = [&]() -> int32_t {
    if (t.code[pos++] == 'L') return -1;
    const int p = t.code[pos++] - '0';
    const int32_t base = 4 * next_node++;
    b.kind[base + 1 + p] = kFlower;
    for (int s = 1; s <= 3; ++s) {
      if (s == 1 + p) continue;
      int32_t child = rec();
      if (child >= 0) {
        b.partner[base + s] = child;
        b.partner[child] = base + s;
        b.kind[base + s] = b.kind[child] = kEdge;
      }
    }
    return base;
  };
  rec();
  b.root = n > 0 ? 0 : -1;
  return b;
}

// Tree hanging below dart p, read as the root leaf of its component.
std::string extract(const HalfEdgeTree& b, int32_t p) {
  std::string out;
  std::function<void(int32_t)> rec = [&](int32_t parent) {
    int32_t slot[3];
    slot[0] = b.sigma[parent];
    slot[1] = b.sigma[slot[0]];
    slot[2] = b.sigma[slot[1]];
    int flower = -1;
    for (int k = 0; k < 3; ++k) {
      if (b.kind[slot[k]] == kFlower) {
        if (flower >= 0) throw Error("inner node with two flowers");
        flower = k;
      }
    }
    if (flower < 0) throw Error("inner node without flower");
    out += 'N';
    out += static_cast<char>('0' + flower);
    for (int k = 0; k < 3; ++k) {
      if (k == flower) continue;
      if (b.partner[slot[k]] < 0)
        out += 'L';
      else
        rec(b.partner[slot[k]]);
    }
  };
  rec(p);
  return out;
}

struct Matching {
  std::vector<int32_t> mate;       // matched half-edge, -1 otherwise
  std::vector<int32_t> unmatched;  // leaves in contour order from the start
};

Matching match(const HalfEdgeTree& b, int32_t start) {
  Matching m;
  m.mate.assign(b.sigma.size(), -1);
  std::vector<int32_t> seq;
  for (int32_t d : contour(b.sigma, b.partner, start))
    if (b.partner[d] < 0) seq.push_back(d);
  std::vector<int32_t> stack;
  for (int32_t d : seq) {
    if (b.kind[d] == kFlower) {
      stack.push_back(d);
    } else if (!stack.empty()) {
      m.mate[d] = stack.back();
      m.mate[stack.back()] = d;
      stack.pop_back();
    }
  }
  for (int32_t d : seq) {
    if (stack.empty()) break;
    if (b.kind[d] == kLeaf && m.mate[d] < 0) {
      m.mate[d] = stack.back();
      m.mate[stack.back()] = d;
      stack.pop_back();
    }
  }
  for (int32_t d : seq)
    if (m.mate[d] < 0) m.unmatched.push_back(d);
  if (!stack.empty() || m.unmatched.size() != 2) throw Error("closure left unmatched flowers");
  return m;
}

RootedMap close_with_root(const HalfEdgeTree& b, const Matching& mt, int32_t root) {
  std::vector<int32_t> alpha = b.partner;
  for (size_t d = 0; d < alpha.size(); ++d)
    if (mt.mate[d] >= 0) alpha[d] = mt.mate[d];
  alpha[mt.unmatched[0]] = mt.unmatched[1];
  alpha[mt.unmatched[1]] = mt.unmatched[0];
  return RootedMap(std::move(alpha), b.sigma, root);
}

bool is_bridge(const HalfEdgeTree& b, int32_t d) {
  const int32_t other = b.partner[d];
  int32_t x = d;
  do {
    if (x == other) return true;
    x = contour_next(b.sigma, b.partner, x);
  } while (x != d);
  return false;
}

void gen_codes(int n, std::vector<std::vector<std::string>>& memo) {
  if (static_cast<int>(memo.size()) > n) return;
  for (int k = static_cast<int>(memo.size()); k <= n; ++k) {
    std::vector<std::string> level;
    if (k == 0) {
      level.push_back("L");
    } else {
      for (char p = '0'; p <= '2'; ++p)
        for (int a = 0; a < k; ++a)
          for (const auto& left : memo[a])
            for (const auto& right : memo[k - 1 - a]) level.push_back(std::string("N") + p + left + right);
    }
    std::sort(level.begin(), level.end());
    memo.push_back(std::move(level));
  }
}

}  // namespace

int BlossomingTree::inner_nodes() const {
  return static_cast<int>(std::count(code.begin(), code.end(), 'N'));
}

BlossomingTree parse_blossoming(const std::string& code) {
  size_t pos = 0;
  std::function<void()> rec = [&]() {
    if (pos >= code.size()) throw DomainError("truncated blossoming tree code");
    char c = code[pos++];
    if (c == 'L') return;
    if (c != 'N' || pos >= code.size() || code[pos] < '0' || code[pos] > '2')
      throw DomainError("malformed blossoming tree code: " + code);
    ++pos;
    rec();
    rec();
  };
  rec();
  if (pos != code.size()) throw DomainError("trailing characters in blossoming tree code: " + code);
  return BlossomingTree{code};
}

std::vector<BlossomingTree> all_blossoming_trees(int n) {
  if (n < 0) throw DomainError("negative tree size");
  std::vector<std::vector<std::string>> memo;
  gen_codes(n, memo);
  std::vector<BlossomingTree> out;
  out.reserve(memo[n].size());
  for (auto& c : memo[n]) out.push_back(BlossomingTree{std::move(c)});
  return out;
}

bool is_balanced(const BlossomingTree& t) {
  if (t.inner_nodes() == 0) return true;
  HalfEdgeTree b = build(t);
  return match(b, b.root).mate[b.root] < 0;
}

BlossomingTree psi_open(const RootedMap& m) {
  if (m.is_atomic()) return BlossomingTree{};
  if (!is_4valent(m)) throw DomainError("opening needs a 4-valent map");
  const int n = m.num_vertices();
  HalfEdgeTree b;
  b.sigma = m.sigma();
  b.partner = m.alpha();
  b.kind.assign(m.n_darts(), kEdge);
  const int32_t r = m.root();
  b.partner[r] = b.partner[m.alpha(r)] = -1;
  b.kind[r] = b.kind[m.alpha(r)] = kLeaf;
  b.root = r;
  int cuts = 1;
  const long limit = 16L * m.n_darts() * (n + 2);
  int32_t d = b.sigma[r];
  for (long step = 0; cuts < n + 1; ++step) {
    if (step > limit) throw Error("opening did not terminate");
    const int32_t e = b.partner[d];
    if (e < 0) {
      d = b.sigma[d];
    } else if (!is_bridge(b, d)) {
      b.partner[d] = b.partner[e] = -1;
      b.kind[d] = kFlower;
      b.kind[e] = kLeaf;
      ++cuts;
      d = b.sigma[e];
    } else {
      d = b.sigma[e];
    }
  }
  return BlossomingTree{extract(b, r)};
}

RootedMap phi_close(const BlossomingTree& t) {
  if (t.inner_nodes() == 0) return RootedMap::atomic();
  HalfEdgeTree b = build(t);
  Matching mt = match(b, b.root);
  if (mt.mate[b.root] >= 0) throw DomainError("closure needs a balanced tree");
  return close_with_root(b, mt, b.root);
}

MarkedMap phi_bar(const BlossomingTree& t, bool positive) {
  if (t.inner_nodes() == 0) return MarkedMap{RootedMap::atomic(), -1};
  HalfEdgeTree b = build(t);
  Matching mt = match(b, b.root);
  RootedMap m = close_with_root(b, mt, mt.unmatched[positive ? 0 : 1]);
  auto label = m.canonical_labelling();
  int32_t best = label[b.root];
  for (int32_t d = m.phi(b.root); d != b.root; d = m.phi(d)) best = std::min(best, label[d]);
  return MarkedMap{m.canonical(), best};
}

std::array<BlossomingTree, 3> unbalanced_split(const BlossomingTree& t) {
  if (t.inner_nodes() == 0) throw DomainError("split needs an unbalanced tree");
  HalfEdgeTree b = build(t);
  Matching mt = match(b, b.root);
  const int32_t f = mt.mate[b.root];
  if (f < 0) throw DomainError("split needs an unbalanced tree");
  std::array<BlossomingTree, 3> out;
  int32_t x = f;
  for (int k = 0; k < 3; ++k) {
    x = b.sigma[x];
    out[k].code = b.partner[x] < 0 ? "L" : extract(b, b.partner[x]);
  }
  return out;
}

BlossomingTree unbalanced_join(const std::array<BlossomingTree, 3>& parts) {
  HalfEdgeTree b;
  b.sigma = {1, 2, 3, 0};
  b.partner.assign(4, -1);
  b.kind = {kFlower, kLeaf, kLeaf, kLeaf};
  for (int k = 0; k < 3; ++k) {
    if (parts[k].inner_nodes() == 0) continue;
    HalfEdgeTree p = build(parts[k]);
    const int32_t off = static_cast<int32_t>(b.sigma.size());
    for (size_t d = 0; d < p.sigma.size(); ++d) {
      b.sigma.push_back(p.sigma[d] + off);
      b.partner.push_back(p.partner[d] < 0 ? -1 : p.partner[d] + off);
      b.kind.push_back(p.kind[d]);
    }
    b.partner[k + 1] = off;
    b.partner[off] = k + 1;
    b.kind[k + 1] = b.kind[off] = kEdge;
  }
  Matching mt = match(b, 0);
  return BlossomingTree{extract(b, mt.mate[0])};
}

}  // namespace tuttelab
