#include <doctest.h>

#include "tuttelab/algebraic.hpp"
#include "tuttelab/closed_forms.hpp"
#include "tuttelab/de.hpp"
#include "tuttelab/equations.hpp"
#include "tuttelab/errors.hpp"
#include "tuttelab/kernel.hpp"
#include "tuttelab/mapgen.hpp"
#include "tuttelab/oracles.hpp"
#include "tuttelab/potts.hpp"
#include "tuttelab/verify.hpp"

using namespace tuttelab;

namespace {

MultiPoly V(Var v, int e = 1) { return MultiPoly::var(v, e); }

// Rooted planar maps with n edges by the recursive decomposition on the root
// edge, with the root-face degree kept as a catalytic index:
// M_n(k) = [root-face degree k]; a new root edge is a loop or an isthmus.
std::vector<Rational> maps_by_recursion(int N) {
  // f[n][k]: maps with n edges and root-face degree k.
  std::vector<std::vector<Rational>> f(N + 1, std::vector<Rational>(2 * N + 3, 0));
  f[0][0] = 1;
  for (int n = 1; n <= N; ++n) {
    // Isthmus: two maps glued, degrees add plus 2.
    for (int a = 0; a < n; ++a)
      for (int i = 0; i <= 2 * a; ++i)
        for (int j = 0; j <= 2 * (n - 1 - a); ++j) f[n][i + j + 2] += f[a][i] * f[n - 1 - a][j];
    // Loop: splits the root face of a map with n-1 edges and degree d into
    // degrees j + 1 for j = 0..d.
    for (int d = 0; d <= 2 * (n - 1); ++d)
      for (int j = 0; j <= d; ++j) f[n][j + 1] += f[n - 1][d];
  }
  std::vector<Rational> total(N + 1, 0);
  for (int n = 0; n <= N; ++n)
    for (const auto& c : f[n]) total[n] += c;
  return total;
}
}  // namespace

TEST_CASE("positive and non-negative parts") {
  const MultiPoly x = V(Var::x);
  TSeries s = TSeries::constant(V(Var::x, -1) + 1 + x, 0);
  CHECK(positive_part(s, Var::x)[0] == x);
  CHECK(nonneg_part(s, Var::x)[0] == 1 + x);
}

TEST_CASE("divided differences are exact") {
  const MultiPoly y = V(Var::y);
  TSeries s = TSeries::constant(y * y * y, 0);
  CHECK(divided_difference(s, Var::y, 1)[0] == y * y + y + 1);
}

TEST_CASE("one-variable map series against a root-edge recursion") {
  const auto counts = maps_by_recursion(6);
  CHECK(counts[2] == 9);
  const TSeries M = expand(EquationId::MAPS_1CAT, {{Var::y, MultiPoly(1)}}, 6);
  for (int n = 0; n <= 6; ++n) CHECK(M[n].constant_term() == counts[n]);
  for (int n = 0; n <= 6; ++n) CHECK(closed_form("maps", {n}) == counts[n]);
}

TEST_CASE("equation iteration against brute force") {
  CHECK(expand(EquationId::NT, {}, 6) == brute_force_gf(EquationId::NT, {}, 6));
  CHECK(expand(EquationId::BIP, {}, 4) == brute_force_gf(EquationId::BIP, {}, 4));
  CHECK(expand(EquationId::POTTS_MAPS, {}, 3) == brute_force_gf(EquationId::POTTS_MAPS, {}, 3));
  const TSeries quasi = at(expand(EquationId::POTTS_QUASI_TRI, {}, 4), Var::x, 0);
  CHECK(quasi == brute_force_gf(EquationId::POTTS_QUASI_TRI, {}, 4));
}

TEST_CASE("prefix stability") {
  for (EquationId eq : {EquationId::NT, EquationId::TUTTE_MAPS, EquationId::BIPOLAR_TRI}) {
    const TSeries a = expand(eq, {}, 4);
    CHECK(expand(eq, {}, 6).truncated(4) == a);
  }
}

TEST_CASE("parameters") {
  const Params p = parse_params("q=3,nu=0");
  CHECK(p.at(Var::q) == MultiPoly(3));
  CHECK(p.at(Var::nu) == MultiPoly(0));
  CHECK_THROWS_AS(parse_params("k=1"), DomainError);
  CHECK_THROWS_AS(expand(EquationId::NT, {{Var::q, MultiPoly(3)}}, 3), DomainError);
  CHECK_THROWS_AS(equation_from_name("NOPE"), DomainError);
  // Potts maps at q = 2, w = x = y = 1: [t] = 2 nu + 1.
  const TSeries m = expand(EquationId::POTTS_MAPS, parse_params("q=2,w=1,x=1,y=1"), 2);
  CHECK(m[1] == MultiPoly(2) * V(Var::nu) + 1);
}

TEST_CASE("closed forms against enumeration") {
  // Tree-rooted maps with two vertices and two faces: spanning trees of maps
  // with two edges.
  Integer tr = 0;
  for (const auto& m : all_maps(2))
    if (m.num_vertices() == 2 && m.num_faces() == 2) tr += static_cast<long>(all_spanning_trees(m).size());
  CHECK(closed_form("tree_rooted", {1, 1}) == Rational(tr));
  CHECK(tr == 6);

  Integer two_edges = 0;
  for (const auto& m : all_maps(2)) two_edges += static_cast<long>(all_spanning_trees(m).size());
  CHECK(two_edges == 10);
  CHECK(closed_form("tree_rooted", {0, 2}) == 2);

  Integer bip = 0;
  for (int k = 0; k <= 4; ++k)
    for (const auto& m : nonseparable_near_triangulations(k))
      if (m.num_vertices() == 3) bip += specializations(m).bipolar_count;
  CHECK(closed_form("bipolar_tri", {2}) == Rational(bip));
  CHECK(bip == 2);
  CHECK(closed_form("bipolar_tri", {1}) == 1);
  CHECK(closed_form("bipolar", {2, 1}) == 1);
  CHECK(closed_form("tree_rooted_triang", {1, 1}) == 1);

  long nt1 = 0;
  for (const auto& m : near_triangulations(5)) nt1 += m.root_face_degree() == 1;
  CHECK(closed_form("nt1", {1}) == nt1);
  CHECK(nt1 == 4);
  CHECK_THROWS_AS(closed_form("bipolar_degrees", {2, 1, 2, 2}), DomainError);
  CHECK_THROWS_AS(closed_form("unknown", {1}), DomainError);
}

TEST_CASE("Lagrange inversion") {
  // T = 1 + 3tT^2: T - 1 = t phi(T - 1) with phi(x) = 3(1 + x)^2.
  TSeries phi(6, Var::x);
  phi.at(0) = 3;
  phi.at(1) = 6;
  phi.at(2) = 3;
  // 3^n C_n by the Catalan convolution.
  std::vector<Rational> cat(7, 0);
  cat[0] = 1;
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k < n; ++k) cat[n] += cat[k] * cat[n - 1 - k];
  Rational three = 1;
  for (int n = 1; n <= 6; ++n) {
    three *= 3;
    CHECK(lagrange_coeff(phi, n).constant_term() == three * cat[n]);
  }
}

TEST_CASE("kernel series") {
  // [w z t^2 u^-1] V = 1 and V = t(1 + uV)(1 + V/u) at w = z = 1.
  const TSeries v = V_series(5);
  CHECK(v[2].coeff(Var::w, 1).coeff(Var::z, 1).coeff(Var::u, -1) == MultiPoly(1));
  CHECK(closed_form("v_coeff", {1, 1, 2}) == 1);
  const TSeries v11 = at(at(v, Var::w, 1), Var::z, 1);
  const MultiPoly u = V(Var::u);
  TSeries rhs = (TSeries::constant(1, 5) + v11 * u) * (TSeries::constant(1, 5) + v11 * V(Var::u, -1));
  CHECK(rhs.shift(1).truncated(5) == v11);
  // [t^2 y^3] U = 1.
  const TSeries U = U_series(3);
  CHECK(U[2].coeff(Var::y, 3) == MultiPoly(1));
  CHECK(closed_form("u_coeff", {2, 1}) == 1);
  CHECK(check_kernel_orbits().pass());
}

TEST_CASE("algebraic identities") {
  for (const auto& name : algebraic_identities()) {
    CheckReport r = check_algebraic(name, 6);
    CHECK_MESSAGE(r.pass(), name);
  }
  CHECK_THROWS_AS(check_algebraic("maps_quadratic", 2), DomainError);
  CHECK_THROWS_AS(check_tutte_potts_change_of_variables(3, {{Rational(2), Rational(1)}}), DomainError);
  CHECK(check_tutte_potts_change_of_variables(3, {{Rational(2), Rational(3)}}).pass());
  // [t] M(2, nu, t, 1; 1, 1) = 2 nu + 1 by brute force over the two one-edge maps.
  MultiPoly t1;
  for (const auto& m : all_maps(1)) t1 += potts(m).divide_exact(V(Var::q)).subs(Var::q, Rational(2));
  CHECK(t1 == MultiPoly(2) * V(Var::nu) + 1);
}

TEST_CASE("differential systems") {
  DeMapsSolution s = solve_de_maps(2, 2, 1, 3);
  CHECK(s.A[0][0] == MultiPoly(1));
  CHECK(s.A[1][0] == MultiPoly(-2));
  CHECK(s.A[2][0] == MultiPoly(1));
  CHECK(s.B[0][0] == MultiPoly(1));
  CHECK(s.B[1][0] == MultiPoly(-1));
  // M(1, 1) at q = nu = 2, w = 1 against potts sums of generated maps.
  for (int n = 0; n <= 3; ++n) {
    Rational total = 0;
    for (const auto& m : all_maps(n)) total += colouring_sum(m, 2, 2) / 2;
    CHECK(s.M11[n].constant_term() == total);
  }
  CHECK_THROWS_AS(solve_de_maps(2, 1, 1, 3), SolveError);
  CHECK_THROWS_AS(solve_de_tri(4, 4), DomainError);
  CHECK(check_de_tri(3, 8).pass());
  CHECK(check_tutte_ode(1, 6).pass());
  CHECK(check_tutte_ode(2, 6).pass());
}

TEST_CASE("Ising identity") { CHECK(check_ising_identity(3).pass()); }

TEST_CASE("verification reports") {
  CHECK_THROWS_AS(run_suite("nope"), DomainError);
  CheckReport r = run_suite("potts");
  CHECK(r.pass());
  const auto j = reports_to_json({r});
  REQUIRE(j.is_array());
  CHECK(j[0].contains("suite"));
  CHECK(j[0].contains("case"));
  CHECK(j[0]["pass"] == true);
  CHECK(reports_to_csv({r}).rfind("suite,case,expected,got,pass\n", 0) == 0);
  CheckReport empty{"empty", {}};
  CHECK_FALSE(empty.pass());
}
