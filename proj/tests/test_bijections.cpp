#include <doctest.h>

#include <map>
#include <set>

#include "tuttelab/blossoming.hpp"
#include "tuttelab/errors.hpp"
#include "tuttelab/ising.hpp"
#include "tuttelab/labelled_tree.hpp"
#include "tuttelab/mullin.hpp"
#include "tuttelab/oracles.hpp"
#include "tuttelab/map_ops.hpp"
#include "tuttelab/mapgen.hpp"
#include "tuttelab/rational.hpp"

using namespace tuttelab;

namespace {

long blossoming_count(int n) { return ipow(Integer(3), n).get_si() * catalan(n).get_si(); }

}  // namespace

TEST_CASE("blossoming trees are counted by 3^n C_n") {
  for (int n = 0; n <= 4; ++n) {
    auto trees = all_blossoming_trees(n);
    CHECK(static_cast<long>(trees.size()) == blossoming_count(n));
    for (const auto& t : trees) {
      CHECK(t.inner_nodes() == n);
      CHECK(parse_blossoming(t.code) == t);
    }
  }
  CHECK_THROWS_AS(parse_blossoming("N3LL"), DomainError);
  CHECK_THROWS_AS(parse_blossoming("N0L"), DomainError);
  CHECK_THROWS_AS(parse_blossoming("LL"), DomainError);
}

TEST_CASE("opening and closing 4-valent maps are inverse") {
  for (int n = 0; n <= 4; ++n) {
    auto maps = four_valent(n);
    std::set<BlossomingTree> images;
    for (const auto& m : maps) {
      BlossomingTree t = psi_open(m);
      CHECK(t.inner_nodes() == n);
      CHECK(is_balanced(t));
      CHECK(phi_close(t).canonical_code() == m.canonical_code());
      images.insert(t);
    }
    CHECK(images.size() == maps.size());
    long balanced = 0;
    for (const auto& t : all_blossoming_trees(n)) {
      if (!is_balanced(t)) continue;
      ++balanced;
      CHECK(psi_open(phi_close(t)) == t);
    }
    CHECK(balanced == static_cast<long>(maps.size()));
    CHECK((n + 2) * balanced == 2 * blossoming_count(n));
  }
  CHECK(four_valent(1).size() == 2);
  CHECK_THROWS_AS(psi_open(RootedMap::single_link()), DomainError);
}

TEST_CASE("closure of every tree marks a face bijectively") {
  for (int n = 1; n <= 4; ++n) {
    std::set<MarkedMap> seen;
    long total = 0;
    for (const auto& t : all_blossoming_trees(n)) {
      for (bool sign : {true, false}) {
        MarkedMap mm = phi_bar(t, sign);
        CHECK(is_4valent(mm.map));
        seen.insert(mm);
        ++total;
      }
      if (is_balanced(t)) {
        MarkedMap mm = phi_bar(t, true);
        RootedMap m = phi_close(t);
        CHECK(mm.map.canonical_code() == m.canonical_code());
        auto lab = m.canonical_labelling();
        int32_t best = lab[m.root()];
        for (int32_t d = m.phi(m.root()); d != m.root(); d = m.phi(d)) best = std::min(best, lab[d]);
        CHECK(mm.face_dart == best);
      }
    }
    CHECK(static_cast<long>(seen.size()) == total);
    const long maps = static_cast<long>(four_valent(n).size());
    CHECK((n + 2) * maps == 2 * blossoming_count(n));
    CHECK(static_cast<long>(seen.size()) == (n + 2) * maps);
  }
}

TEST_CASE("unbalanced trees split into triples") {
  for (int n = 1; n <= 4; ++n) {
    std::set<std::array<BlossomingTree, 3>> triples;
    long unbalanced = 0;
    for (const auto& t : all_blossoming_trees(n)) {
      if (is_balanced(t)) {
        CHECK_THROWS_AS(unbalanced_split(t), DomainError);
        continue;
      }
      ++unbalanced;
      auto parts = unbalanced_split(t);
      CHECK(parts[0].inner_nodes() + parts[1].inner_nodes() + parts[2].inner_nodes() == n - 1);
      CHECK(unbalanced_join(parts) == t);
      triples.insert(parts);
    }
    long expected = 0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; a + b < n; ++b) expected += blossoming_count(a) * blossoming_count(b) * blossoming_count(n - 1 - a - b);
    CHECK(unbalanced == expected);
    CHECK(static_cast<long>(triples.size()) == expected);
  }
}

TEST_CASE("labelled trees are counted by 3^n C_n") {
  for (int n = 0; n <= 4; ++n) {
    auto trees = all_labelled_trees(n);
    CHECK(static_cast<long>(trees.size()) == blossoming_count(n));
    for (const auto& t : trees) {
      CHECK(is_labelled_tree(t));
      CHECK(parse_labelled_tree(t.to_string()) == t);
    }
  }
  auto one = all_labelled_trees(1);
  REQUIRE(one.size() == 3);
  CHECK(one[0].to_string() == "1:1 1:0");
  CHECK(one[1].to_string() == "1:1 2:0");
  CHECK(one[2].to_string() == "2:1 1:0");
  CHECK_FALSE(is_labelled_tree(LabelledTree{{2, 2}, {1, 0}}));
  CHECK_FALSE(is_labelled_tree(LabelledTree{{1, 3}, {1, 0}}));
  CHECK_THROWS_AS(parse_labelled_tree("1:2 1:0"), DomainError);
}

TEST_CASE("quadrangulations with a pointed vertex and labelled trees") {
  for (int n = 1; n <= 4; ++n) {
    auto quads = quadrangulations(n);
    std::set<LabelledTree> images;
    long pointings = 0;
    for (const auto& q : quads) {
      for (const auto& vert : q.vertices()) {
        PointedMap pm{q, vert.front()};
        if (!root_points_away(q, vert.front())) {
          CHECK_THROWS_AS(cvs_forward(pm), DomainError);
          continue;
        }
        ++pointings;
        LabelledTree t = cvs_forward(pm);
        CHECK(t.num_edges() == n);
        CHECK(is_labelled_tree(t));
        if (vert.front() == q.vertices().front().front()) CHECK(is_well_labelled(t));
        CHECK(cvs_backward(t) == pm);
        images.insert(t);
      }
    }
    CHECK(static_cast<long>(images.size()) == pointings);
    CHECK(2 * pointings == (n + 2) * static_cast<long>(quads.size()));
    CHECK(pointings == blossoming_count(n));
    for (const auto& t : all_labelled_trees(n)) {
      PointedMap pm = cvs_backward(t);
      CHECK(is_quadrangulation(pm.map));
      CHECK(pm.map.num_faces() == n);
      CHECK(cvs_forward(pm) == t);
      auto dist = distances_from(pm.map, pm.vertex_dart);
      CHECK(dist[0] == t.labels[0]);
      for (int k = 1; k <= n; ++k) CHECK(dist[2 * (2 * k - 1)] == t.labels[k]);
    }
  }
}

TEST_CASE("tree tours encode tree-rooted maps") {
  TreeRootedMap fig = mullin_decode("bbaaBBAbBA");
  CHECK(fig.tree.size() == 2);
  CHECK(fig.map.num_edges() - static_cast<int>(fig.tree.size()) == 3);
  CHECK(fig.map.num_vertices() == 3);
  CHECK(mullin_encode(fig.map, fig.tree) == "bbaaBBAbBA");
  CHECK_THROWS_AS(mullin_decode("aAB"), DomainError);
  CHECK_THROWS_AS(mullin_encode(RootedMap::single_link(), {}), DomainError);

  std::map<std::pair<int, int>, long> by_size;
  for (int n = 0; n <= 4; ++n) {
    std::set<std::string> words;
    long pairs = 0;
    for (const auto& m : all_maps(n)) {
      for (const auto& tree : all_spanning_trees(m)) {
        ++pairs;
        std::string w = mullin_encode(m, tree);
        CHECK(is_dyck_shuffle(w));
        TreeRootedMap back = mullin_decode(w);
        CHECK(back.map.canonical_code() == m.canonical_code());
        CHECK(mullin_encode(back.map, back.tree) == w);
        words.insert(w);
        const int i = static_cast<int>(tree.size());
        by_size[{i, n - i}]++;
        MullinDecomposition parts = mullin_decompose(m, tree);
        CHECK(mullin_recompose(parts) == w);
        CHECK(static_cast<int>(parts.dual_tree.size()) == 2 * (n - i));
        auto deg = half_edge_tree_degrees(parts.half_edge_tree);
        CHECK(deg[0] == m.root_vertex_degree());
        std::sort(deg.begin(), deg.end());
        CHECK(deg == m.vertex_degrees());
      }
    }
    CHECK(static_cast<long>(words.size()) == pairs);
  }
  for (const auto& [ij, count] : by_size) {
    auto [i, j] = ij;
    CHECK(static_cast<long>(all_dyck_shuffles(i, j).size()) == count);
    CHECK(Integer(count) == binomial(2 * i + 2 * j, 2 * i) * catalan(i) * catalan(j));
  }
  CHECK(by_size[{1, 1}] == 6);
  CHECK(by_size[{0, 2}] + by_size[{1, 1}] + by_size[{2, 0}] == 10);
  for (const auto& w : all_dyck_shuffles(2, 2)) CHECK(mullin_encode(mullin_decode(w).map, mullin_decode(w).tree) == w);

  MullinDecomposition link = mullin_decompose(RootedMap::single_link(), {0});
  CHECK(link.dual_tree.empty());
  CHECK(link.half_edge_tree == "aA");
}

TEST_CASE("subdividing 2-coloured maps gives bicoloured bipartite maps") {
  RootedMap link = RootedMap::single_link();
  ColouredMap mono{link, colour_darts(link, {0, 0})};
  SubdividedMap path = ising_subdivide(mono, {1});
  CHECK(path.coloured.map.num_edges() == 2);
  CHECK(path.coloured.map.num_vertices() == 3);
  CHECK(is_properly_bicoloured(path.coloured));
  CHECK(is_bipartite(path.coloured.map));
  CHECK_THROWS_AS(ising_subdivide(mono, {0}), DomainError);
  ColouredMap proper{link, colour_darts(link, {0, 1})};
  CHECK(ising_subdivide(proper, {0}).coloured.map == link);

  for (int n = 1; n <= 3; ++n) {
    std::set<std::pair<CanonicalCode, std::vector<bool>>> seen;
    long total = 0;
    for (const auto& m : all_maps(n)) {
      const int nv = m.num_vertices();
      for (int mask = 0; mask < (1 << nv); mask += 2) {
        std::vector<int> vc(nv);
        for (int v = 0; v < nv; ++v) vc[v] = (mask >> v) & 1;
        ColouredMap cm{m, colour_darts(m, vc)};
        auto reps = edge_darts(m);
        std::vector<int> base(reps.size());
        for (size_t e = 0; e < reps.size(); ++e) base[e] = cm.colour[reps[e]] == cm.colour[m.alpha(reps[e])] ? 1 : 0;
        for (int extra = 0; extra < (1 << reps.size()); ++extra) {
          std::vector<int> counts = base;
          for (size_t e = 0; e < reps.size(); ++e) counts[e] += 2 * ((extra >> e) & 1);
          SubdividedMap s = ising_subdivide(cm, counts);
          CHECK(is_properly_bicoloured(s.coloured));
          CHECK(s.coloured.colour[s.coloured.map.root()] == 0);
          ColouredMap back = ising_erase(s);
          CHECK(back.map == m);
          CHECK(back.colour == cm.colour);
          auto lab = s.coloured.map.canonical_labelling();
          std::vector<bool> marks(lab.size());
          for (size_t d = 0; d < lab.size(); ++d) marks[lab[d]] = s.square[d];
          seen.insert({s.coloured.map.canonical_code(), marks});
          ++total;
        }
      }
    }
    CHECK(static_cast<long>(seen.size()) == total);
  }
}
