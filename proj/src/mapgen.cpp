#include "tuttelab/mapgen.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "tuttelab/errors.hpp"
#include "tuttelab/map_ops.hpp"

namespace tuttelab {

GenConfig& gen_config() {
  static GenConfig cfg = [] {
    GenConfig c;
    if (const char* dir = std::getenv("TUTTELAB_CACHE")) c.cache_dir = dir;
    return c;
  }();
  return cfg;
}

namespace {

constexpr const char* kFamilyNames[] = {
    "maps",       "bipartite",  "near_triangulations", "near_quadrangulations", "triangulations",
    "eulerian_near_triangulations", "nonseparable_near_triangulations", "quadrangulations", "four_valent"};

constexpr const char* kCacheHeader = "tuttelab-maps v1";

using Level = std::vector<RootedMap>;

// Families closed under root-edge deletion: members are rebuilt by gluing two
// members or inserting a root edge whose new finite face has degree k + 1.
struct ClosedFamily {
  std::string name;
  std::function<bool(int k)> allow_insert;
};

const ClosedFamily kAllMaps{"maps", [](int) { return true; }};
const ClosedFamily kBipartite{"bipartite", [](int k) { return k % 2 == 1; }};
const ClosedFamily kNearTriangulations{"near_triangulations", [](int k) { return k == 2; }};
const ClosedFamily kNearQuadrangulations{"near_quadrangulations", [](int k) { return k == 3; }};

std::string cache_path(const std::string& family, int n) {
  const auto& dir = gen_config().cache_dir;
  if (dir.empty()) return {};
  return (std::filesystem::path(dir) / (family + "-" + std::to_string(n) + ".v1.txt")).string();
}

bool load_level(const std::string& path, Level& out) {
  if (path.empty()) return false;
  std::ifstream in(path);
  if (!in) return false;
  std::string header;
  std::getline(in, header);
  if (header != kCacheHeader) return false;
  size_t count = 0;
  if (!(in >> count)) return false;
  Level level;
  level.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    int n = 0, root = 0;
    if (!(in >> n >> root)) return false;
    std::vector<int32_t> a(n), s(n);
    for (auto& x : a) in >> x;
    for (auto& x : s) in >> x;
    if (!in) return false;
    try {
      level.push_back(n == 0 ? RootedMap::atomic() : RootedMap(std::move(a), std::move(s), root));
    } catch (const InvalidMap&) {
      return false;
    }
  }
  out = std::move(level);
  return true;
}

void save_level(const std::string& path, const Level& level) {
  if (path.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(std::filesystem::path(path).parent_path(), ec);
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << kCacheHeader << "\n" << level.size() << "\n";
    for (const auto& m : level) {
      out << m.n_darts() << " " << m.root();
      for (int32_t x : m.alpha()) out << " " << x;
      for (int32_t x : m.sigma()) out << " " << x;
      out << "\n";
    }
  }
  std::filesystem::rename(tmp, path, ec);
}

void check_budget(size_t total) {
  if (static_cast<long>(total) > gen_config().max_materialized)
    throw CapExceeded("map generation exceeds the materialization budget (" +
                      std::to_string(gen_config().max_materialized) + " maps)");
}

// Builds level n from levels 0..n-1, keeping only outer degrees <= bound.
Level next_level(const ClosedFamily& fam, const std::vector<Level>& levels, int n, int bound, size_t& total) {
  Level out;
  for (const auto& m : levels[n - 1]) {
    int df = m.root_face_degree();
    for (int k = 0; k <= df; ++k) {
      if (!fam.allow_insert(k) || df - k + 1 > bound) continue;
      out.push_back(insert_root_edge(m, k));
    }
    check_budget(total + out.size());
  }
  for (int a = 0; a < n; ++a) {
    const Level& left = levels[a];
    const Level& right = levels[n - 1 - a];
    std::vector<int> dr(right.size());
    for (size_t j = 0; j < right.size(); ++j) dr[j] = right[j].root_face_degree();
    for (const auto& m1 : left) {
      int d1 = m1.root_face_degree();
      for (size_t j = 0; j < right.size(); ++j)
        if (d1 + dr[j] + 2 <= bound) out.push_back(glue(m1, right[j]));
      check_budget(total + out.size());
    }
  }
  total += out.size();
  return out;
}

// Unbounded levels, memoized in memory and optionally on disk.
const Level& closed_family_level(const ClosedFamily& fam, int n) {
  static std::mutex mu;
  static std::map<std::string, std::vector<Level>> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto& levels = memo[fam.name];
  if (levels.empty()) levels.push_back({RootedMap::atomic()});
  size_t total = 0;
  for (const auto& l : levels) total += l.size();
  while (static_cast<int>(levels.size()) <= n) {
    int k = static_cast<int>(levels.size());
    Level level;
    std::string path = cache_path(fam.name, k);
    if (!load_level(path, level)) {
      level = next_level(fam, levels, k, 1 << 30, total);
      save_level(path, level);
    } else {
      total += level.size();
    }
    levels.push_back(std::move(level));
  }
  return levels[n];
}

// Levels with outer degree pruned so that `target` is reachable at size N.
std::vector<Level> bounded_levels(const ClosedFamily& fam, int N, const std::function<int(int)>& bound) {
  std::vector<Level> levels{{RootedMap::atomic()}};
  size_t total = 1;
  for (int n = 1; n <= N; ++n) levels.push_back(next_level(fam, levels, n, bound(n), total));
  return levels;
}

Level filtered(const Level& in, const std::function<bool(const RootedMap&)>& keep) {
  Level out;
  std::copy_if(in.begin(), in.end(), std::back_inserter(out), keep);
  return out;
}

void require_nonnegative(int n) {
  if (n < 0) throw DomainError("size must be nonnegative");
}

}  // namespace

const char* family_name(Family f) { return kFamilyNames[static_cast<int>(f)]; }

Family family_from_name(const std::string& s) {
  for (int i = 0; i < static_cast<int>(std::size(kFamilyNames)); ++i)
    if (s == kFamilyNames[i]) return static_cast<Family>(i);
  throw DomainError("unknown family: " + s);
}

void sort_by_code(std::vector<RootedMap>& maps) {
  std::vector<std::pair<CanonicalCode, size_t>> keys;
  keys.reserve(maps.size());
  for (size_t i = 0; i < maps.size(); ++i) keys.emplace_back(maps[i].canonical_code(), i);
  std::sort(keys.begin(), keys.end());
  std::vector<RootedMap> out;
  out.reserve(maps.size());
  for (auto& k : keys) out.push_back(std::move(maps[k.second]));
  maps = std::move(out);
}

std::vector<RootedMap> all_maps(int n) {
  require_nonnegative(n);
  if (n > gen_config().listing_cap)
    throw CapExceeded("all_maps(" + std::to_string(n) + ") exceeds the listing cap " +
                      std::to_string(gen_config().listing_cap));
  auto out = closed_family_level(kAllMaps, n);
  sort_by_code(out);
  return out;
}

std::vector<RootedMap> all_maps_oracle(int n) {
  require_nonnegative(n);
  if (n > gen_config().oracle_cap)
    throw CapExceeded("oracle size " + std::to_string(n) + " exceeds the oracle cap " +
                      std::to_string(gen_config().oracle_cap));
  if (n == 0) return {RootedMap::atomic()};
  const int D = 2 * n;
  std::vector<int32_t> alpha(D), sigma(D);
  for (int d = 0; d < D; ++d) alpha[d] = d ^ 1;
  std::iota(sigma.begin(), sigma.end(), 0);
  std::set<CanonicalCode> seen;
  std::vector<RootedMap> out;
  do {
    try {
      validate_rotation_system(alpha, sigma, 0);
    } catch (const InvalidMap&) {
      continue;
    }
    for (int r = 0; r < D; ++r) {
      RootedMap m(alpha, sigma, r);
      if (seen.insert(m.canonical_code()).second) out.push_back(m.canonical());
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  sort_by_code(out);
  return out;
}

Integer count_maps(int n) {
  require_nonnegative(n);
  // c[m][d]: maps with m edges and outer degree d.
  std::vector<std::vector<Integer>> c(n + 1);
  c[0] = {1};
  for (int m = 1; m <= n; ++m) {
    c[m].assign(2 * m + 1, 0);
    for (int d = 0; d < static_cast<int>(c[m - 1].size()); ++d)
      for (int k = 0; k <= d; ++k) c[m][d - k + 1] += c[m - 1][d];
    for (int a = 0; a < m; ++a)
      for (int d1 = 0; d1 < static_cast<int>(c[a].size()); ++d1)
        for (int d2 = 0; d2 < static_cast<int>(c[m - 1 - a].size()); ++d2)
          c[m][d1 + d2 + 2] += c[a][d1] * c[m - 1 - a][d2];
  }
  return std::accumulate(c[n].begin(), c[n].end(), Integer(0));
}

std::vector<RootedMap> bipartite_maps(int n) {
  require_nonnegative(n);
  auto out = closed_family_level(kBipartite, n);
  sort_by_code(out);
  return out;
}

std::vector<RootedMap> near_triangulations(int n) {
  require_nonnegative(n);
  auto out = closed_family_level(kNearTriangulations, n);
  sort_by_code(out);
  return out;
}

std::vector<RootedMap> near_quadrangulations(int n) {
  require_nonnegative(n);
  auto out = closed_family_level(kNearQuadrangulations, n);
  sort_by_code(out);
  return out;
}

std::vector<RootedMap> triangulations(int faces) {
  require_nonnegative(faces);
  if (faces % 2 != 0 || faces < 2) return {};
  const int N = 3 * faces / 2;
  auto levels = bounded_levels(kNearTriangulations, N, [N](int n) { return 3 + (N - n); });
  auto out = filtered(levels[N], [](const RootedMap& m) { return m.root_face_degree() == 3; });
  sort_by_code(out);
  return out;
}

std::vector<RootedMap> eulerian_near_triangulations(int black_faces) {
  require_nonnegative(black_faces);
  auto out = filtered(closed_family_level(kNearTriangulations, 3 * black_faces),
                      [](const RootedMap& m) { return is_eulerian(m); });
  sort_by_code(out);
  return out;
}

std::vector<RootedMap> nonseparable_near_triangulations(int finite_faces) {
  require_nonnegative(finite_faces);
  const int k = finite_faces;
  std::vector<RootedMap> out;
  for (int e = 1; e <= 2 * k + 1; ++e) {
    if ((3 * k) > 2 * e) continue;
    for (const auto& m : closed_family_level(kNearTriangulations, e))
      if (m.num_faces() - 1 == k && !is_separable(m)) out.push_back(m);
  }
  sort_by_code(out);
  return out;
}

std::vector<RootedMap> quadrangulations(int faces) {
  require_nonnegative(faces);
  std::vector<RootedMap> out;
  for (const auto& m : all_maps(faces)) out.push_back(dual(radial(m)).canonical());
  sort_by_code(out);
  return out;
}

std::vector<RootedMap> four_valent(int vertices) {
  require_nonnegative(vertices);
  std::vector<RootedMap> out;
  for (const auto& m : all_maps(vertices)) out.push_back(radial(m).canonical());
  sort_by_code(out);
  return out;
}

std::vector<RootedMap> generate(Family f, int size) {
  switch (f) {
    case Family::maps: return all_maps(size);
    case Family::bipartite: return bipartite_maps(size);
    case Family::near_triangulations: return near_triangulations(size);
    case Family::near_quadrangulations: return near_quadrangulations(size);
    case Family::triangulations: return triangulations(size);
    case Family::eulerian_near_triangulations: return eulerian_near_triangulations(size);
    case Family::nonseparable_near_triangulations: return nonseparable_near_triangulations(size);
    case Family::quadrangulations: return quadrangulations(size);
    case Family::four_valent: return four_valent(size);
  }
  throw DomainError("unknown family");
}

}  // namespace tuttelab
