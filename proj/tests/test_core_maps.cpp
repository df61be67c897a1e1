#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "tuttelab/errors.hpp"
#include "tuttelab/map_json.hpp"
#include "tuttelab/map_ops.hpp"
#include "tuttelab/mapgen.hpp"

using namespace tuttelab;

namespace {

RootedMap relabel(const RootedMap& m, const std::vector<int32_t>& p) {
  std::vector<int32_t> a(m.n_darts()), s(m.n_darts());
  for (int32_t d = 0; d < m.n_darts(); ++d) {
    a[p[d]] = p[m.alpha(d)];
    s[p[d]] = p[m.sigma(d)];
  }
  return RootedMap(a, s, p[m.root()]);
}

std::vector<RootedMap> maps_upto(int n) {
  std::vector<RootedMap> out;
  for (int k = 0; k <= n; ++k)
    for (auto& m : all_maps(k)) out.push_back(m);
  return out;
}

}  // namespace

TEST_CASE("face structure of the small maps") {
  CHECK(RootedMap::atomic().faces().size() == 1);
  CHECK(RootedMap::atomic().root_face_degree() == 0);
  auto loop = RootedMap::single_loop();
  CHECK(loop.num_faces() == 2);
  CHECK(loop.face_degrees() == std::vector<int>{1, 1});
  auto link = RootedMap::single_link();
  CHECK(link.num_faces() == 1);
  CHECK(link.num_vertices() == 2);
  CHECK(link.root_face_degree() == 2);
}

TEST_CASE("construction rejects invalid rotation systems") {
  CHECK_THROWS_AS(RootedMap({1, 0}, {0, 0}, 0), InvalidMap);
  CHECK_THROWS_AS(RootedMap({0, 1}, {0, 1}, 0), InvalidMap);
  CHECK_THROWS_AS(RootedMap({1, 0, 3, 2}, {0, 1, 2, 3}, 0), InvalidMap);  // disconnected
  // Torus: one vertex, two loops interleaved.
  CHECK_THROWS_AS(RootedMap({1, 0, 3, 2}, {2, 3, 1, 0}, 0), InvalidMap);
  CHECK_THROWS_AS(RootedMap({1, 0}, {1, 0}, 5), InvalidMap);
}

TEST_CASE("dual is an involution swapping degrees") {
  CHECK(dual(RootedMap::single_loop()).canonical_code() == RootedMap::single_link().canonical_code());
  CHECK(dual(RootedMap::atomic()).is_atomic());
  for (const auto& m : maps_upto(3)) {
    RootedMap d = dual(m);
    CHECK(dual(d) == m);
    CHECK(d.face_degrees() == m.vertex_degrees());
    CHECK(d.vertex_degrees() == m.face_degrees());
    CHECK(d.root_vertex_degree() == m.root_face_degree());
    CHECK(d.root_face_degree() == m.root_vertex_degree());
  }
}

TEST_CASE("root degree distributions agree") {
  for (int n = 0; n <= 5; ++n) {
    std::vector<int> dv, df;
    for (const auto& m : all_maps(n)) {
      dv.push_back(m.root_vertex_degree());
      df.push_back(m.root_face_degree());
    }
    std::sort(dv.begin(), dv.end());
    std::sort(df.begin(), df.end());
    CHECK(dv == df);
  }
}

TEST_CASE("radial maps") {
  RootedMap r = radial(RootedMap::single_loop());
  CHECK(r.num_vertices() == 1);
  CHECK(is_4valent(r));
  CHECK(radial(RootedMap::atomic()).is_atomic());
  std::set<CanonicalCode> two;
  for (const auto& m : all_maps(2)) two.insert(radial(m).canonical_code());
  CHECK(two.size() == 9);
  for (int n = 1; n <= 4; ++n) {
    std::set<CanonicalCode> codes;
    auto maps = all_maps(n);
    for (const auto& m : maps) {
      RootedMap rm = radial(m);
      CHECK(is_4valent(rm));
      CHECK(rm.num_vertices() == m.num_edges());
      codes.insert(rm.canonical_code());
    }
    CHECK(codes.size() == maps.size());
  }
}

TEST_CASE("root edge deletion inverts glue and insertion") {
  auto link = delete_root_edge(RootedMap::single_link());
  CHECK(link.isthmus);
  CHECK(link.first.is_atomic());
  CHECK(link.second.is_atomic());
  auto loop = delete_root_edge(RootedMap::single_loop());
  CHECK_FALSE(loop.isthmus);
  CHECK(loop.first.is_atomic());
  CHECK(loop.index == 0);
  CHECK_THROWS_AS(delete_root_edge(RootedMap::atomic()), DomainError);
  for (const auto& m : maps_upto(4)) {
    if (m.is_atomic()) continue;
    auto del = delete_root_edge(m);
    RootedMap back = del.isthmus ? glue(del.first, del.second) : insert_root_edge(del.first, del.index);
    CHECK(back.canonical_code() == m.canonical_code());
  }
}

TEST_CASE("contraction") {
  CHECK(contract_root_edge(RootedMap::single_link()).is_atomic());
  CHECK(contract_root_edge(RootedMap::single_loop()).is_atomic());
  for (const auto& m : maps_upto(3)) {
    if (m.is_atomic()) continue;
    RootedMap c = contract_root_edge(m);
    CHECK(c.num_edges() == m.num_edges() - 1);
    if (!root_is_loop(m)) {
      CHECK(c.num_vertices() == m.num_vertices() - 1);
      if (!root_is_isthmus(m)) {
        auto del = delete_root_edge(dual(m));
        CHECK(dual(c).canonical_code() == del.first.canonical_code());
      }
    }
  }
}

TEST_CASE("predicates") {
  CHECK_FALSE(is_separable(RootedMap::single_loop()));
  CHECK_FALSE(is_separable(RootedMap::single_link()));
  CHECK(is_separable(RootedMap::atomic()));
  CHECK(is_bipartite(RootedMap::single_link()));
  CHECK_FALSE(is_eulerian(RootedMap::single_link()));
  CHECK(is_eulerian(RootedMap::single_loop()));
  for (const auto& m : maps_upto(4)) {
    auto fd = m.face_degrees();
    bool even_faces = std::all_of(fd.begin(), fd.end(), [](int d) { return d % 2 == 0; });
    CHECK(is_bipartite(m) == even_faces);
    CHECK(is_eulerian(m) == is_bipartite(dual(m)));
  }
}

TEST_CASE("canonical codes") {
  std::mt19937 rng(7);
  for (const auto& m : maps_upto(3)) {
    if (m.is_atomic()) continue;
    std::vector<int32_t> p(m.n_darts());
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    CHECK(relabel(m, p).canonical_code() == m.canonical_code());
  }
  CHECK(RootedMap::single_loop().canonical_code() != RootedMap::single_link().canonical_code());
  std::set<CanonicalCode> two;
  for (const auto& m : all_maps(2)) two.insert(m.canonical_code());
  CHECK(two.size() == 9);
}

TEST_CASE("map JSON round trip") {
  for (const auto& m : maps_upto(3)) CHECK(map_from_json(map_to_json(m)) == m);
  CHECK(map_to_json_line(RootedMap::atomic()) == R"({"alpha":[],"n_darts":0,"root":null,"sigma":[]})");
  CHECK_THROWS_AS(map_from_json_text("{\"n_darts\": 2}"), InvalidMap);
  CHECK_THROWS_AS(map_from_json_text("not json"), InvalidMap);
  CHECK_THROWS_AS(map_from_json_text(R"({"n_darts":2,"alpha":[0,1],"sigma":[0,1],"root":0})"), InvalidMap);
}
