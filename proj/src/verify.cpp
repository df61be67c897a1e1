#include "tuttelab/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "tuttelab/algebraic.hpp"
#include "tuttelab/blossoming.hpp"
#include "tuttelab/closed_forms.hpp"
#include "tuttelab/de.hpp"
#include "tuttelab/equations.hpp"
#include "tuttelab/errors.hpp"
#include "tuttelab/ising.hpp"
#include "tuttelab/kernel.hpp"
#include "tuttelab/labelled_tree.hpp"
#include "tuttelab/map_ops.hpp"
#include "tuttelab/mapgen.hpp"
#include "tuttelab/mullin.hpp"
#include "tuttelab/oracles.hpp"
#include "tuttelab/potts.hpp"

namespace tuttelab {

namespace {

std::string str(long n) { return std::to_string(n); }
std::string str(bool b) { return b ? "true" : "false"; }

// Records that all `total` items passed a property; got is the passing count.
void tally(CheckReport& r, const std::string& name, long total, long good) { r.add(name, str(total), str(good)); }

// Runs f, turning an exception into a failing case of r.
void guarded(CheckReport& r, const std::string& name, const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    r.add_error(name, e.what());
  }
}

// Map counts: generator, formula, paper values and the rotation-system oracle.
CheckReport suite_map_counts() {
  CheckReport r{"map-counts", {}};
  const std::array<long, 7> listed = {1, 2, 9, 54, 378, 2916, 24057};
  for (int n = 0; n <= 6; ++n) {
    const std::string sn = str(static_cast<long>(n));
    guarded(r, "maps n=" + sn, [&] {
      const auto maps = all_maps(n);
      r.add("|all_maps(" + sn + ")|", str(listed[n]), str(static_cast<long>(maps.size())));
      r.add("maps formula n=" + sn, Rational(listed[n]), closed_form("maps", {n}));
      r.add("count_maps(" + sn + ")", Rational(listed[n]), Rational(count_maps(n)));
      std::set<CanonicalCode> codes;
      for (const auto& m : maps) codes.insert(m.canonical_code());
      r.add("distinct canonical codes n=" + sn, str(static_cast<long>(maps.size())), str(static_cast<long>(codes.size())));
      if (n > gen_config().oracle_cap) return;
      const auto oracle = all_maps_oracle(n);
      std::set<CanonicalCode> ocodes;
      for (const auto& m : oracle) ocodes.insert(m.canonical_code());
      r.add("oracle count n=" + sn, str(listed[n]), str(static_cast<long>(ocodes.size())));
      r.add("oracle and generator agree n=" + sn, "true", str(ocodes == codes));
    });
  }
  return r;
}

// Deletion-contraction, subset expansion and colouring interpolation.
CheckReport suite_potts() {
  CheckReport r{"potts", {}};
  for (int n = 0; n <= 4; ++n) {
    const std::string sn = str(static_cast<long>(n));
    guarded(r, "potts n=" + sn, [&] {
      long total = 0, subset = 0, colour = 0, tutte_ok = 0, fk = 0;
      for (const auto& m : all_maps(n)) {
        ++total;
        const MultiPoly p = potts(m);
        subset += p == potts_subset_oracle(m);
        colour += p == potts_colouring_interpolation(m);
        tutte_ok += tutte(m) == tutte_subset_oracle(m);
        fk += fortuin_kasteleyn_check(m);
      }
      tally(r, "deletion-contraction = subset expansion, n=" + sn, total, subset);
      tally(r, "deletion-contraction = colouring interpolation, n=" + sn, total, colour);
      tally(r, "Tutte deletion-contraction = subset expansion, n=" + sn, total, tutte_ok);
      tally(r, "Fortuin-Kasteleyn relation, n=" + sn, total, fk);
    });
  }
  return r;
}

// Equation iteration against generated maps with full symbolic weights.
CheckReport suite_series() {
  CheckReport r{"series", {}};
  const std::vector<std::pair<EquationId, int>> caps = {
      {EquationId::MAPS_1CAT, 6},        {EquationId::NT, 6},          {EquationId::NQ, 6},
      {EquationId::BIP, 6},              {EquationId::EULER_NT, 3},    {EquationId::POTTS_MAPS, 5},
      {EquationId::TUTTE_MAPS, 6},       {EquationId::TUTTE_NONSEP_TRI, 5}, {EquationId::POTTS_QUASI_TRI, 6},
      {EquationId::TUTTE_QUASI_TRI, 6},  {EquationId::BIPOLAR_MAPS, 6}, {EquationId::BIPOLAR_TRI, 5},
  };
  for (const auto& [eq, N] : caps) {
    const EquationInfo& info = equation_info(eq);
    const std::string name = info.name;
    const std::string mv = var_name(info.main);
    guarded(r, name, [&] {
      TSeries a = expand(eq, {}, N);
      const TSeries b = brute_force_gf(eq, {}, N);
      std::string label = name;
      if (eq == EquationId::POTTS_QUASI_TRI || eq == EquationId::TUTTE_QUASI_TRI) {
        a = at(a, Var::x, 0);
        label += " at x=0";
      }
      for (int n = 0; n <= N; ++n) r.add(label + " [" + mv + "^" + str(static_cast<long>(n)) + "]", b[n].to_string(), a[n].to_string());
    });
    guarded(r, name + " prefix stability", [&] {
      const int lo = std::min(N, 4);
      const TSeries a = expand(eq, {}, lo);
      const TSeries b = expand(eq, {}, lo + 2).truncated(lo);
      auto d = a.first_difference(b);
      r.add(name + " prefix stability " + str(static_cast<long>(lo)) + " vs " + str(static_cast<long>(lo + 2)), "agree",
            d ? "differ at " + str(static_cast<long>(*d)) : "agree");
    });
  }
  return r;
}

long blossoming_count(int n) { return ipow(Integer(3), n).get_si() * catalan(n).get_si(); }

void bijection_psi(CheckReport& r, int max) {
  for (int n = 0; n <= max; ++n) {
    const std::string sn = str(static_cast<long>(n));
    const auto maps = four_valent(n);
    std::set<BlossomingTree> images;
    long closes = 0, balanced_img = 0;
    for (const auto& m : maps) {
      BlossomingTree t = psi_open(m);
      balanced_img += is_balanced(t) && t.inner_nodes() == n;
      closes += phi_close(t).canonical_code() == m.canonical_code();
      images.insert(t);
    }
    const long total = static_cast<long>(maps.size());
    tally(r, "psi_open gives balanced trees, n=" + sn, total, balanced_img);
    tally(r, "phi_close(psi_open(m)) = m, n=" + sn, total, closes);
    r.add("psi_open injective, n=" + sn, str(total), str(static_cast<long>(images.size())));
    long balanced = 0, opens = 0;
    for (const auto& t : all_blossoming_trees(n)) {
      if (!is_balanced(t)) continue;
      ++balanced;
      opens += psi_open(phi_close(t)) == t;
    }
    tally(r, "psi_open(phi_close(t)) = t, n=" + sn, balanced, opens);
    r.add("balanced trees = 4-valent maps, n=" + sn, str(total), str(balanced));
    r.add("four_valent formula, n=" + sn, closed_form("four_valent", {n}), Rational(total));
  }
}

void bijection_phi_bar(CheckReport& r, int max) {
  for (int n = 1; n <= max; ++n) {
    const std::string sn = str(static_cast<long>(n));
    std::set<MarkedMap> seen;
    long total = 0, valent = 0;
    for (const auto& t : all_blossoming_trees(n))
      for (bool sign : {true, false}) {
        MarkedMap mm = phi_bar(t, sign);
        valent += is_4valent(mm.map);
        seen.insert(mm);
        ++total;
      }
    const long maps = static_cast<long>(four_valent(n).size());
    tally(r, "phi_bar gives 4-valent maps, n=" + sn, total, valent);
    r.add("phi_bar injective, n=" + sn, str(total), str(static_cast<long>(seen.size())));
    r.add("(n+2) m_n = 2 t_n, n=" + sn, str(2 * blossoming_count(n)), str((n + 2) * maps));
    r.add("phi_bar images = (n+2) m_n, n=" + sn, str((n + 2) * maps), str(static_cast<long>(seen.size())));
  }
}

void bijection_cvs(CheckReport& r, int max) {
  for (int n = 1; n <= max; ++n) {
    const std::string sn = str(static_cast<long>(n));
    const auto quads = quadrangulations(n);
    std::set<LabelledTree> images;
    long pointings = 0, back = 0, valid = 0;
    for (const auto& q : quads)
      for (const auto& vert : q.vertices()) {
        if (!root_points_away(q, vert.front())) continue;
        ++pointings;
        PointedMap pm{q, vert.front()};
        LabelledTree t = cvs_forward(pm);
        valid += is_labelled_tree(t) && t.num_edges() == n;
        back += cvs_backward(t) == pm;
        images.insert(t);
      }
    tally(r, "cvs_forward gives labelled trees, n=" + sn, pointings, valid);
    tally(r, "cvs_backward(cvs_forward(q)) = q, n=" + sn, pointings, back);
    r.add("cvs_forward injective, n=" + sn, str(pointings), str(static_cast<long>(images.size())));
    r.add("3^n C_n = (n+2) q_n / 2, n=" + sn, str(blossoming_count(n)), str((n + 2) * static_cast<long>(quads.size()) / 2));
    r.add("valid pointings = 3^n C_n, n=" + sn, str(blossoming_count(n)), str(pointings));
    long trees = 0, forward = 0, dist_ok = 0;
    for (const auto& t : all_labelled_trees(n)) {
      ++trees;
      PointedMap pm = cvs_backward(t);
      forward += is_quadrangulation(pm.map) && pm.map.num_faces() == n && cvs_forward(pm) == t;
      auto dist = distances_from(pm.map, pm.vertex_dart);
      bool ok = dist[0] == t.labels[0];
      for (int k = 1; k <= n; ++k) ok = ok && dist[2 * (2 * k - 1)] == t.labels[k];
      dist_ok += ok;
    }
    tally(r, "cvs_forward(cvs_backward(t)) = t, n=" + sn, trees, forward);
    tally(r, "labels are distances to the pointed vertex, n=" + sn, trees, dist_ok);
  }
}

void bijection_mullin(CheckReport& r, int max) {
  const std::string fig = "bbaaBBAbBA";
  TreeRootedMap m0 = mullin_decode(fig);
  r.add("decode " + fig + ": tree edges", "2", str(static_cast<long>(m0.tree.size())));
  r.add("decode " + fig + ": vertices", "3", str(static_cast<long>(m0.map.num_vertices())));
  r.add("encode(decode(" + fig + "))", fig, mullin_encode(m0.map, m0.tree));
  std::map<std::pair<int, int>, long> by_size;
  for (int n = 0; n <= max; ++n) {
    const std::string sn = str(static_cast<long>(n));
    std::set<std::string> words;
    long pairs = 0, ok = 0;
    for (const auto& m : all_maps(n))
      for (const auto& tree : all_spanning_trees(m)) {
        ++pairs;
        const std::string w = mullin_encode(m, tree);
        TreeRootedMap back = mullin_decode(w);
        ok += is_dyck_shuffle(w) && back.map.canonical_code() == m.canonical_code() &&
              mullin_encode(back.map, back.tree) == w;
        words.insert(w);
        const int i = static_cast<int>(tree.size());
        by_size[{i, n - i}]++;
      }
    tally(r, "mullin decode(encode(m, T)) = (m, T), n=" + sn, pairs, ok);
    r.add("mullin_encode injective, n=" + sn, str(pairs), str(static_cast<long>(words.size())));
  }
  for (const auto& [ij, count] : by_size) {
    auto [i, j] = ij;
    const std::string key = "(" + str(static_cast<long>(i)) + "," + str(static_cast<long>(j)) + ")";
    r.add("tree-rooted maps = shuffles" + key, Rational(binomial(2 * i + 2 * j, 2 * i) * catalan(i) * catalan(j)),
          Rational(count));
    long decoded = 0;
    const auto words = all_dyck_shuffles(i, j);
    for (const auto& w : words) {
      TreeRootedMap d = mullin_decode(w);
      decoded += mullin_encode(d.map, d.tree) == w;
    }
    tally(r, "encode(decode(w)) = w for shuffles" + key, static_cast<long>(words.size()), decoded);
  }
}

void bijection_ising(CheckReport& r, int max) {
  for (int n = 1; n <= max; ++n) {
    const std::string sn = str(static_cast<long>(n));
    std::set<std::pair<CanonicalCode, std::vector<bool>>> seen;
    long total = 0, ok = 0;
    for (const auto& m : all_maps(n)) {
      const int nv = m.num_vertices();
      const auto reps = edge_darts(m);
      for (int mask = 0; mask < (1 << nv); mask += 2) {
        std::vector<int> vc(nv);
        for (int v = 0; v < nv; ++v) vc[v] = (mask >> v) & 1;
        ColouredMap cm{m, colour_darts(m, vc)};
        std::vector<int> base(reps.size());
        for (size_t e = 0; e < reps.size(); ++e) base[e] = cm.colour[reps[e]] == cm.colour[m.alpha(reps[e])] ? 1 : 0;
        for (int extra = 0; extra < (1 << reps.size()); ++extra) {
          std::vector<int> counts = base;
          for (size_t e = 0; e < reps.size(); ++e) counts[e] += 2 * ((extra >> e) & 1);
          SubdividedMap s = ising_subdivide(cm, counts);
          ColouredMap back = ising_erase(s);
          ok += is_properly_bicoloured(s.coloured) && back.map == m && back.colour == cm.colour;
          auto lab = s.coloured.map.canonical_labelling();
          std::vector<bool> marks(lab.size());
          for (size_t d = 0; d < lab.size(); ++d) marks[lab[d]] = s.square[d];
          seen.insert({s.coloured.map.canonical_code(), marks});
          ++total;
        }
      }
    }
    tally(r, "ising erase(subdivide(c)) = c, n=" + sn, total, ok);
    r.add("ising_subdivide injective, n=" + sn, str(total), str(static_cast<long>(seen.size())));
  }
}

CheckReport suite_bijections() {
  CheckReport r{"bijections", {}};
  for (const char* which : {"psi", "cvs", "mullin", "ising"})
    r.append(bijection_roundtrip(which, std::string(which) == "ising" ? 3 : 4));
  return r;
}

bool is_formula_case(const std::string& name) {
  auto open = name.find('(');
  if (open == std::string::npos) return false;
  const std::string head = name.substr(0, open);
  for (const auto& f : formulas())
    if (head == f.name) return true;
  return false;
}

// Formula cases of the kernel and tree-rooted reports (which compare against
// brute force), plus counting formulas checked here directly.
CheckReport suite_closed_forms() {
  CheckReport r{"closed-forms", {}};
  guarded(r, "kernel formulas", [&] {
    CheckReport all = check_kernel_solutions(4);
    all.append(check_tree_rooted(4));
    for (const auto& c : all.cases)
      if (is_formula_case(c.name)) r.cases.push_back(c);
  });
  guarded(r, "nt1", [&] {
    // [t^(3n+2) y] NT by generation.
    for (long n = 0; n <= 1; ++n) {
      long count = 0;
      for (const auto& m : near_triangulations(static_cast<int>(3 * n + 2)))
        count += !m.is_atomic() && m.root_face_degree() == 1;
      r.add("nt1(" + str(n) + ")", closed_form("nt1", {n}), Rational(count));
    }
  });
  guarded(r, "spanning trees", [&] {
    for (long n = 0; n <= 3; ++n) {
      long total = 0;
      for (const auto& m : all_maps(static_cast<int>(n))) total += static_cast<long>(all_spanning_trees(m).size());
      r.add("spanning_tree_series(" + str(n) + ") by enumeration", closed_form("spanning_tree_series", {n}),
            Rational(total));
    }
  });
  guarded(r, "counts", [&] {
    for (long n = 0; n <= 4; ++n) {
      r.add("blossoming(" + str(n) + ")", closed_form("blossoming", {n}),
            Rational(static_cast<long>(all_blossoming_trees(static_cast<int>(n)).size())));
      r.add("labelled_trees(" + str(n) + ")", closed_form("labelled_trees", {n}),
            Rational(static_cast<long>(all_labelled_trees(static_cast<int>(n)).size())));
      r.add("quadrangulations(" + str(n) + ")", closed_form("quadrangulations", {n}),
            Rational(static_cast<long>(quadrangulations(static_cast<int>(n)).size())));
      long balanced = 0;
      for (const auto& t : all_blossoming_trees(static_cast<int>(n))) balanced += is_balanced(t);
      r.add("balanced_blossoming(" + str(n) + ")", closed_form("balanced_blossoming", {n}), Rational(balanced));
    }
  });
  return r;
}

CheckReport suite_kernel() {
  CheckReport r{"kernel", {}};
  guarded(r, "orbits", [&] { r.append(check_kernel_orbits()); });
  guarded(r, "solutions", [&] { r.append(check_kernel_solutions(6)); });
  guarded(r, "tree-rooted", [&] { r.append(check_tree_rooted(6)); });
  return r;
}

CheckReport suite_algebraic() {
  CheckReport r{"algebraic", {}};
  for (const auto& name : algebraic_identities()) {
    const int N = name.rfind("potts", 0) == 0 ? 6 : 10;
    guarded(r, name, [&] { r.append(check_algebraic(name, N)); });
  }
  guarded(r, "change of variables", [&] {
    r.append(check_tutte_potts_change_of_variables(3, {{Rational(2), Rational(3)}, {Rational(3), Rational(2)}}));
  });
  guarded(r, "nu = 1 rejected", [&] {
    bool threw = false;
    try {
      check_tutte_potts_change_of_variables(3, {{Rational(2), Rational(1)}});
    } catch (const DomainError&) {
      threw = true;
    }
    r.add("change of variables rejects nu = 1", "true", str(threw));
  });
  guarded(r, "specialization", [&] { r.append(check_potts_specialization(5)); });
  return r;
}

CheckReport suite_de() {
  CheckReport r{"de", {}};
  const std::vector<std::array<Rational, 3>> points = {
      {Rational(2), Rational(2), Rational(1)}, {Rational(3), Rational(2), Rational(1)},
      {Rational(5, 2), Rational(3), Rational(1)}};
  for (const auto& [q, nu, w] : points)
    guarded(r, "maps at q=" + to_string(q) + " nu=" + to_string(nu) + " w=" + to_string(w),
            [&] { r.append(check_de_maps(q, nu, w, 6)); });
  for (long q : {2L, 3L}) {
    guarded(r, "triangulations at q=" + str(q), [&] { r.append(check_de_tri(Rational(q), 12)); });
    guarded(r, "ode at q=" + str(q), [&] { r.append(check_tutte_ode(Rational(q), 12)); });
  }
  return r;
}

CheckReport suite_ising() {
  CheckReport r{"ising", {}};
  guarded(r, "identity", [&] { r.append(check_ising_identity(4)); });
  return r;
}

struct Suite {
  SuiteInfo info;
  CheckReport (*run)();
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> s = {
      {{"map-counts", "rooted planar maps with n <= 6 edges: generator, formula, oracle"}, suite_map_counts},
      {{"potts", "three Potts computations agree on maps with <= 4 edges"}, suite_potts},
      {{"series", "equation iteration = brute-force generating functions"}, suite_series},
      {{"bijections", "blossoming, labelled-tree, tree-tour and Ising round trips"}, suite_bijections},
      {{"closed-forms", "closed formulas = brute-force counts"}, suite_closed_forms},
      {{"kernel", "kernel orbits and positive-part extractions to order 6"}, suite_kernel},
      {{"algebraic", "algebraic identities and parameter changes"}, suite_algebraic},
      {{"de", "differential systems and the triangulation ODE"}, suite_de},
      {{"ising", "Ising maps = weighted bipartite maps to t^4"}, suite_ising},
  };
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

const std::vector<SuiteInfo>& verify_suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> v;
    for (const auto& s : suites()) v.push_back(s.info);
    return v;
  }();
  return infos;
}

CheckReport bijection_roundtrip(const std::string& which, int max_size) {
  if (max_size < 0) throw DomainError("negative size");
  CheckReport r{"bijections", {}};
  if (which == "psi") {
    guarded(r, "psi/phi", [&] { bijection_psi(r, max_size); });
    guarded(r, "phi_bar", [&] { bijection_phi_bar(r, max_size); });
  } else if (which == "cvs") {
    guarded(r, "cvs", [&] { bijection_cvs(r, max_size); });
  } else if (which == "mullin") {
    guarded(r, "mullin", [&] { bijection_mullin(r, max_size); });
  } else if (which == "ising") {
    guarded(r, "ising", [&] { bijection_ising(r, max_size); });
  } else {
    throw DomainError("unknown bijection: " + which);
  }
  return r;
}

CheckReport run_suite(const std::string& name) {
  for (const auto& s : suites())
    if (name == s.info.name) return s.run();
  throw DomainError("unknown suite: " + name);
}

nlohmann::json reports_to_json(const std::vector<CheckReport>& reports) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports)
    for (const auto& c : r.cases)
      out.push_back({{"suite", r.suite}, {"case", c.name}, {"expected", c.expected}, {"got", c.got}, {"pass", c.pass}});
  return out;
}

std::string reports_to_csv(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  os << "suite,case,expected,got,pass\n";
  for (const auto& r : reports)
    for (const auto& c : r.cases)
      os << csv_field(r.suite) << ',' << csv_field(c.name) << ',' << csv_field(c.expected) << ',' << csv_field(c.got)
         << ',' << (c.pass ? "true" : "false") << '\n';
  return os.str();
}

std::string reports_to_text(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    long passed = 0;
    for (const auto& c : r.cases) passed += c.pass;
    os << r.suite << ' ' << passed << '/' << r.cases.size() << ' ' << (r.pass() ? "PASS" : "FAIL") << '\n';
    for (const auto& c : r.cases)
      if (!c.pass) os << "  " << c.name << ": expected " << c.expected << ", got " << c.got << '\n';
  }
  return os.str();
}

}  // namespace tuttelab
