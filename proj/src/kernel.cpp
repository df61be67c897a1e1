#include "tuttelab/kernel.hpp"

#include <climits>
#include <functional>
#include <map>

#include "tuttelab/closed_forms.hpp"
#include "tuttelab/equations.hpp"
#include "tuttelab/errors.hpp"
#include "tuttelab/mapgen.hpp"
#include "tuttelab/potts.hpp"

namespace tuttelab {

namespace {

using enum Var;

MultiPoly V(Var v, int e = 1) { return MultiPoly::var(v, e); }

MultiPoly inverse_monomial(const MultiPoly& p) {
  if (p.size() != 1) throw DivisionError("not a monomial");
  Monomial m = p.terms()[0].first;
  for (auto& e : m) e = static_cast<int16_t>(-e);
  return MultiPoly::monomial(m, 1 / p.terms()[0].second);
}

// Order-by-order fixed point of F = rhs(F) when rhs(F) carries a factor of
// the main variable.
TSeries fixed_point(const std::function<TSeries(const TSeries&)>& rhs, int N, Var main) {
  TSeries F(0, main);
  for (int k = 0; k <= N; ++k) {
    TSeries G(k, main);
    for (int n = 0; n < k; ++n) G.at(n) = F[n];
    F = rhs(G);
  }
  return F;
}

TSeries truncate_var(const TSeries& s, Var v, int hi) {
  return s.map([&](const MultiPoly& p) { return p.truncate_above(v, hi); });
}

std::string str(const TSeries& s) { return s.to_string(); }

// sum_{k <= D} C(m+k, k) u^k, the expansion of (1-u)^-(m+1).
MultiPoly inverse_power_of_one_minus_u(int m, int D) {
  MultiPoly p;
  for (int k = 0; k <= D; ++k) p += MultiPoly::monomial([&] {
                                      Monomial mm{};
                                      mm[static_cast<int>(u)] = static_cast<int16_t>(k);
                                      return mm;
                                    }(), Rational(binomial(m + k, k)));
  return p;
}

Monomial mono_of(std::initializer_list<std::pair<Var, int>> es) {
  Monomial m{};
  for (auto [v, e] : es) m[static_cast<int>(v)] = static_cast<int16_t>(e);
  return m;
}

// Orbit of (a, b) under alternating phi, psi; the kernel is given in the
// placeholder variables x (first) and second, neither of which may occur in
// the pairs.
void check_orbit(CheckReport& r, const std::string& name, const MultiPoly& kernel_xv, Var second,
                 const std::function<std::pair<MultiPoly, MultiPoly>(const MultiPoly&, const MultiPoly&)>& phi,
                 const std::function<std::pair<MultiPoly, MultiPoly>(const MultiPoly&, const MultiPoly&)>& psi,
                 const MultiPoly& a0, const MultiPoly& b0, const std::vector<std::pair<MultiPoly, MultiPoly>>& listed) {
  auto eval = [&](const MultiPoly& a, const MultiPoly& b) { return kernel_xv.subs(x, a).subs(second, b); };
  const MultiPoly k0 = eval(a0, b0);
  std::vector<std::pair<MultiPoly, MultiPoly>> orbit{{a0, b0}};
  for (int step = 0; step < 6; ++step) {
    auto [a, b] = orbit.back();
    orbit.push_back(step % 2 == 0 ? phi(a, b) : psi(a, b));
  }
  r.add(name + ": orbit closes after 6 steps", "true", orbit[6] == orbit[0] ? "true" : "false");
  for (int i = 0; i < 6; ++i) {
    const auto& [a, b] = orbit[i];
    r.add(name + ": pair " + std::to_string(i), "(" + listed[i].first.to_string() + ", " + listed[i].second.to_string() + ")",
          "(" + a.to_string() + ", " + b.to_string() + ")");
    r.add(name + ": kernel at pair " + std::to_string(i), k0.to_string(), eval(a, b).to_string());
  }
}

using Counts = std::map<std::vector<long>, Integer>;

std::string counts_get(const Counts& c, const std::vector<long>& key) {
  auto it = c.find(key);
  return to_string(it == c.end() ? Integer(0) : it->second);
}

std::string key_name(const std::string& name, const std::vector<long>& args) {
  std::string s = name + "(";
  for (size_t i = 0; i < args.size(); ++i) s += (i ? "," : "") + std::to_string(args[i]);
  return s + ")";
}

void add_formula(CheckReport& r, const std::string& name, const std::vector<long>& args, const std::string& got) {
  r.add(key_name(name, args), to_string(closed_form(name, args)), got);
}

}  // namespace

TSeries V_series(int N) {
  if (N < 1) throw DomainError("V needs order >= 1");
  const MultiPoly coef = V(u) + V(w) * V(u, -1);
  return fixed_point(
      [&](const TSeries& F) {
        TSeries r = TSeries::constant(V(z), F.order(), t) + F * coef + F * F;
        return r.shift(1);
      },
      N, t);
}

TSeries U_series(int N) {
  if (N < 1) throw DomainError("U needs order >= 1");
  return fixed_point(
      [&](const TSeries& F) {
        TSeries denom = TSeries::constant(MultiPoly(1), F.order(), t) - F * V(y);
        TSeries num = TSeries::constant(V(y), F.order(), t) + F * V(y, -1);
        return (num * denom.inverse()).shift(1);
      },
      N, t);
}

TSeries X_of_u(int N) {
  if (N < 0) throw DomainError("negative order");
  TSeries X(N, t);
  for (int n = 0; n <= N; ++n) X.at(n) = MultiPoly(Rational(catalan(n))) * V(u, n + 1);
  return X;
}

CheckReport check_kernel_orbits() {
  CheckReport r{"kernel-orbits", {}};
  const MultiPoly U = V(u), Y = V(y), Z = V(z), W = V(w), Vv = V(v);
  // 1 - u - z(y/u + 1/y) with u -> x, y -> v.
  const MultiPoly k_tri = MultiPoly(1) - V(x) - Z * (V(v) * V(x, -1) + V(v, -1));
  auto phi_tri = [&](const MultiPoly& a, const MultiPoly& b) { return std::make_pair(b * Z * inverse_monomial(a), b); };
  auto psi_tri = [&](const MultiPoly& a, const MultiPoly& b) { return std::make_pair(a, a * inverse_monomial(b)); };
  const MultiPoly ub = V(u, -1), yb = V(y, -1);
  check_orbit(r, "triangulations", k_tri, v, phi_tri, psi_tri, U, Y,
              {{U, Y}, {Y * Z * ub, Y}, {Y * Z * ub, Z * ub}, {Z * yb, Z * ub}, {Z * yb, U * yb}, {U, U * yb}});
  // 1 - t(1 + 1/u)(1 + 1/v)(u + v w) with u -> x, v -> y.
  const MultiPoly T = V(t);
  const MultiPoly k_maps = MultiPoly(1) - T * (MultiPoly(1) + V(x, -1)) * (MultiPoly(1) + V(y, -1)) * (V(x) + V(y) * W);
  auto phi_maps = [&](const MultiPoly& a, const MultiPoly& b) { return std::make_pair(inverse_monomial(a) * W * b, b); };
  auto psi_maps = [&](const MultiPoly& a, const MultiPoly& b) {
    return std::make_pair(a, a * inverse_monomial(b) * inverse_monomial(W));
  };
  const MultiPoly vb = V(v, -1), wb = V(w, -1);
  check_orbit(r, "maps", k_maps, y, phi_maps, psi_maps, U, Vv,
              {{U, Vv},
               {ub * W * Vv, Vv},
               {ub * W * Vv, ub},
               {vb, ub},
               {vb, U * vb * wb},
               {U, U * vb * wb}});
  return r;
}

CheckReport check_kernel_solutions(int N) {
  if (N < 1) throw DomainError("order must be at least 1");
  CheckReport r{"kernel-solutions", {}};
  const int Ub = N;  // u-degree compared
  const MultiPoly U = V(u), Y = V(y), Z = V(z);

  // Bipolar triangulations at x = 1/(1-u), truncated in u.
  TSeries BT = expand(EquationId::BIPOLAR_TRI, {}, N);
  const MultiPoly geo_u = inverse_power_of_one_minus_u(0, Ub);
  TSeries BTu = truncate_var(BT.map([&](const MultiPoly& p) { return p.subs(x, geo_u); }), u, Ub);
  for (int n = 0; n <= N; ++n) {
    MultiPoly formula;
    for (int i = 0; i <= Ub; ++i)
      for (int j = 0; j <= n + 2; ++j)
        formula += MultiPoly::monomial(mono_of({{u, i}, {y, j}}),
                                       closed_form("bipolar_tri_series", {n, i, j}));
    r.add("closed form of [z^" + std::to_string(n) + "] BT(1/(1-u), y)", formula.to_string(), BTu[n].to_string());
  }

  // 1/K = sum_n z^n (y/u + 1/y)^n / (1-u)^(n+1), and the trinomial formula.
  const MultiPoly Wk = Y * V(u, -1) + V(y, -1);
  TSeries invK(N, z);
  for (int n = 0; n <= N; ++n) invK.at(n) = Wk.pow(n) * inverse_power_of_one_minus_u(n, Ub + n + 2);
  for (int n = 0; n <= N; ++n) {
    MultiPoly formula;
    for (int a = -n; a <= Ub; ++a)
      for (int b = -n; b <= n; b += 2)
        formula += MultiPoly::monomial(mono_of({{u, a}, {y, b}}),
                                       Rational(binomial(n, (b + n) / 2) * binomial((b + n) / 2 + n + a, n)));
    r.add("trinomial expansion of [z^" + std::to_string(n) + "] 1/K", formula.to_string(),
          invK[n].truncate_above(u, Ub).to_string());
  }

  // Positive part of R(z;u,y) against u/y BT(1/(1-u), y).
  const MultiPoly ub = V(u, -1), yb = V(y, -1);
  const MultiPoly num0 = U * Y - U * U * yb, num1 = Z.subs(z, Rational(1)) * (U * yb * yb - Y * Y * ub),
                  num2 = Y * ub * ub - yb * ub;
  TSeries R(N, z);
  for (int n = 0; n <= N; ++n) {
    MultiPoly c = num0 * invK[n];
    if (n >= 1) c += num1 * invK[n - 1];
    if (n >= 2) c += num2 * invK[n - 2];
    R.at(n) = c.positive_part(u).positive_part(y).truncate_above(u, Ub);
  }
  TSeries lhs = truncate_var(BTu.map([&](const MultiPoly& p) { return (p * U).divide_exact(Y); }), u, Ub);
  r.add("positive part of R(z;u,y) = u/y BT(1/(1-u), y) to z^" + std::to_string(N), str(lhs), str(R));

  // Bipolar maps: G(1+u, 1+v) is the non-negative part of a rational function.
  TSeries B = expand(EquationId::BIPOLAR_MAPS, {}, N + 2);
  r.add("[t^1] B", (V(x) * Y * Y * V(w)).to_string(), B[1].to_string());
  TSeries G(N, t);
  const MultiPoly scale = V(x, 2) * V(y, 2) * V(w);
  for (int n = 0; n <= N; ++n)
    G.at(n) = B[n + 2].divide_exact(scale).subs(x, MultiPoly(1) + U).subs(y, MultiPoly(1) + V(v));
  const MultiPoly vb = V(v, -1), W = V(w), wb = V(w, -1), Vv = V(v);
  const MultiPoly numer = (MultiPoly(1) - ub * vb) * (U * vb - W * ub) * (ub * Vv - vb * wb);
  const MultiPoly P = (MultiPoly(1) + ub) * (MultiPoly(1) + vb) * (U + Vv * W);
  TSeries Gk(N, t);
  MultiPoly Pn(1);
  for (int n = 0; n <= N; ++n) {
    Gk.at(n) = (numer * Pn).nonneg_part(u).nonneg_part(v);
    Pn = Pn * P;
  }
  r.add("non-negative part construction = G(1+u, 1+v) to t^" + std::to_string(N), str(G), str(Gk));

  // Bipolar orientations of near-triangulations, m <= 3.
  Counts tri;  // (m, i, j)
  for (int k = 0; k <= 4; ++k)
    for (const auto& m : nonseparable_near_triangulations(k)) {
      Integer c = specializations(m).bipolar_count;
      if (c != 0) tri[{m.num_vertices() - 1, m.root_vertex_degree(), m.root_face_degree()}] += c;
    }
  for (long m = 1; m <= 3; ++m) {
    Integer total = 0, outside = 0;
    std::map<long, Integer> by_j;
    for (const auto& [key, c] : tri) {
      if (key[0] != m) continue;
      total += c;
      by_j[key[2]] += c;
      const long i = key[1], j = key[2];
      bool in_range = m >= 2 && i >= 2 && j >= 2 && j <= m + 1 && i + j <= 2 * m + 1;
      if (m >= 2 && !in_range) outside += c;
    }
    add_formula(r, "bipolar_tri", {m}, to_string(total));
    for (long j = 2; j <= m + 1; ++j)
      add_formula(r, "bipolar_tri_root_face", {m, j}, to_string(by_j.count(j) ? by_j[j] : Integer(0)));
    if (m < 2) continue;
    for (long j = 2; j <= m + 1; ++j)
      for (long i = 2; i + j <= 2 * m + 1; ++i) add_formula(r, "bipolar_tri_degrees", {m, i, j}, counts_get(tri, {m, i, j}));
    r.add("bipolar_tri orientations outside the formula range, m=" + std::to_string(m), "0", to_string(outside));
  }

  // Bipolar orientations of general maps, n <= 4.
  for (long n = 2; n <= 4; ++n) {
    Counts bm;  // (m, i, j)
    for (const auto& m : all_maps(n)) {
      Integer c = specializations(m).bipolar_count;
      if (c != 0) bm[{m.num_vertices() - 1, m.root_vertex_degree(), m.root_face_degree()}] += c;
    }
    Integer outside = 0;
    for (const auto& [key, c] : bm) {
      const long m = key[0], i = key[1], j = key[2];
      if (!(m >= 1 && m < n && i >= 2 && i <= n - m + 1 && j >= 2 && j <= m + 1)) outside += c;
    }
    r.add("bipolar orientations outside the formula range, n=" + std::to_string(n), "0", to_string(outside));
    for (long m = 1; m < n; ++m) {
      Integer total = 0;
      std::map<long, Integer> by_j;
      for (const auto& [key, c] : bm)
        if (key[0] == m) {
          total += c;
          by_j[key[2]] += c;
        }
      add_formula(r, "bipolar", {n, m}, to_string(total));
      for (long j = 2; j <= m + 1; ++j)
        add_formula(r, "bipolar_root_face", {n, m, j}, to_string(by_j.count(j) ? by_j[j] : Integer(0)));
      if (n < 3) continue;
      for (long i = 2; i <= n - m + 1; ++i)
        for (long j = 2; j <= m + 1; ++j) add_formula(r, "bipolar_degrees", {n, m, i, j}, counts_get(bm, {m, i, j}));
    }
  }
  return r;
}

CheckReport check_tree_rooted(int N) {
  if (N < 1) throw DomainError("order must be at least 1");
  CheckReport r{"tree-rooted", {}};
  const MultiPoly U = V(u), Y = V(y), Z = V(z), W = V(w), T = V(t);

  // Brute force: spanning trees of maps with at most 4 edges.
  Counts tr;     // (i, j) = (V-1, F-1)
  Counts by_deg;  // (d, n_1, n_2, ...) root degree then other degree counts
  std::vector<Integer> by_edges(5, 0);
  for (int n = 0; n <= 4; ++n)
    for (const auto& m : all_maps(n)) {
      Integer c = specializations(m).spanning_tree_count;
      tr[{m.num_vertices() - 1, m.num_faces() - 1}] += c;
      by_edges[n] += c;
      if (m.is_atomic()) continue;
      std::vector<long> key{m.root_vertex_degree()};
      auto vs = m.vertices();
      auto vof = m.vertex_of();
      for (size_t k = 0; k < vs.size(); ++k) {
        if (static_cast<int32_t>(k) == vof[m.root()]) continue;
        const long deg = static_cast<long>(vs[k].size());
        if (static_cast<long>(key.size()) <= deg) key.resize(deg + 1, 0);
        key[deg]++;
      }
      by_deg[key] += c;
    }
  for (long n = 0; n <= 4; ++n) {
    add_formula(r, "tree_rooted_edges", {n}, to_string(by_edges[n]));
    add_formula(r, "spanning_tree_series", {n}, to_string(by_edges[n]));
  }
  for (const auto& [key, c] : by_deg) add_formula(r, "tree_rooted_degrees", key, to_string(c));
  // T' times the number of dual trees gives the same counts.
  for (const auto& [key, c] : by_deg) {
    long excess2 = key[0];
    for (size_t k = 1; k < key.size(); ++k) excess2 += (static_cast<long>(k) - 2) * key[k];
    std::vector<long> args{key[0], excess2 / 2};
    args.insert(args.end(), key.begin() + 1, key.end());
    r.add("C_j T'" + key_name("", args), to_string(c),
          to_string(Rational(catalan(excess2 / 2)) * closed_form("half_edge_tree", args)));
  }
  for (long i = 1; i <= 2; ++i)
    for (long d = 1; d <= 2 * i; ++d) {
      if (d + 3 * (2 * i - d) > 8) continue;  // more than 4 edges
      std::vector<long> key{d, 0, 0, 2 * i - d};
      if (2 * i - d == 0) key.resize(1);
      auto it = by_deg.find(key);
      add_formula(r, "tree_rooted_cubic", {i, d}, to_string(it == by_deg.end() ? Integer(0) : it->second));
    }

  // V and its Lagrange coefficients.
  const int NV = 9;
  TSeries Vs = V_series(NV);
  {
    TSeries V11 = specialize(Vs, {{w, 1}, {z, 1}});
    TSeries one = TSeries::constant(MultiPoly(1), NV, t);
    TSeries rhs = ((one + V11 * U) * (one + V11 * V(u, -1))).shift(1);
    r.add("V = t(1+uV)(1+V/u) at w = z = 1", str(rhs), str(V11));
  }
  for (int n = 1; n <= NV; ++n) {
    MultiPoly formula;
    for (long j = 1; 2 * j <= n + 1; ++j)
      for (long i = 0; i + 2 * j <= n + 1; ++i)
        formula += MultiPoly::monomial(mono_of({{w, static_cast<int>(i)}, {z, static_cast<int>(j)}, {u, static_cast<int>(n + 1 - 2 * i - 2 * j)}}),
                                       closed_form("v_coeff", {i, j, n}));
    r.add("Lagrange coefficients of [t^" + std::to_string(n) + "] V", formula.to_string(), Vs[n].to_string());
  }
  // TR(i, j) by the trees-diff extraction.
  for (long i = 0; i <= 4; ++i)
    for (long j = 0; i + j <= 4; ++j) {
      const int n = static_cast<int>(2 * i + 2 * j + 1);
      Rational a = Vs[n].coefficient(mono_of({{w, static_cast<int>(i)}, {z, static_cast<int>(j + 1)}}));
      Rational b = i >= 1 ? Vs[n].coefficient(mono_of({{w, static_cast<int>(i - 1)}, {z, static_cast<int>(j + 1)}, {u, 2}}))
                          : Rational(0);
      r.add(key_name("extraction TR", {i, j}), to_string(closed_form("tree_rooted", {i, j})), to_string(a - b));
      add_formula(r, "tree_rooted", {i, j}, counts_get(tr, {i, j}));
    }

  // tzu S(u,0) = positive part in u of (u - w/u) V, with S from equation iteration.
  {
    const int K = N / 2;
    const int cmp = std::min(N, 2 * K + 1);
    TSeries Mt = at(expand(EquationId::TUTTE_MAPS, {{mu, 1}, {nu, 1}}, K), y, 1);
    TSeries st = stretch(Mt, 2);
    TSeries xs(st.order(), t);
    for (int n = 0; n <= st.order(); ++n) xs.at(n) = V(u, n);
    TSeries S = st.subs(x, xs) * geometric(U, st.order(), t);
    TSeries lhs(cmp, t);
    for (int n = 1; n <= cmp; ++n) lhs.at(n) = S[n - 1] * (Z * U);
    TSeries Vc = V_series(std::max(cmp, 1)).truncated(cmp);
    TSeries rhs = positive_part(Vc * (U - W * V(u, -1)), u);
    r.add("tzuS(u,0) = positive part of (u - w/u)V to t^" + std::to_string(cmp), str(lhs), str(rhs));
  }

  // Near-triangulations: U, its Lagrange coefficients, and the extraction.
  const int NU = std::max(N, 8);
  TSeries Us = U_series(NU);
  {
    TSeries one = TSeries::constant(MultiPoly(1), NU, t);
    TSeries lhs = Us * (one - Us * Y);
    TSeries rhs = (TSeries::constant(Y, NU, t) + Us * V(y, -1)).shift(1);
    r.add("U (1 - U y) = t (y + U/y)", str(rhs), str(lhs));
  }
  for (int n = 1; n <= NU; ++n) {
    MultiPoly formula;
    for (long i = 0; i <= n; ++i) {
      Rational c = closed_form("u_coeff", {n, i});
      if (c != 0) formula += MultiPoly::monomial(mono_of({{y, static_cast<int>(3 * i - n + 2)}}), c);
    }
    r.add("Lagrange coefficients of [t^" + std::to_string(n) + "] U", formula.to_string(), Us[n].to_string());
  }
  TSeries Q0 = at(expand(EquationId::TUTTE_QUASI_TRI, {{mu, 1}, {nu, 1}, {z, 1}}, NU), x, 0);
  {
    TSeries one = TSeries::constant(MultiPoly(1), NU, t);
    TSeries ext = positive_part(Us * (one - (one * (MultiPoly(2) * V(y, -1))).shift(1)), y);
    TSeries lhs = (Q0 * Y).shift(1);
    r.add("ty Q(0,y) = positive part of U(1 - 2t/y) to t^" + std::to_string(NU), str(lhs), str(ext));
  }
  Counts nt;  // (edges, outer degree)
  for (int n = 0; n <= 8; ++n)
    for (const auto& m : near_triangulations(n))
      nt[{n, m.is_atomic() ? 0 : m.root_face_degree()}] += specializations(m).spanning_tree_count;
  for (long i = 1; i <= 3; ++i)
    for (long d = 1; d <= 3 * i - 1; ++d) {
      const long n = 3 * i - d;
      add_formula(r, "tree_rooted_triang", {i, d}, counts_get(nt, {n, d}));
      r.add(key_name("extraction tree_rooted_triang", {i, d}), to_string(closed_form("tree_rooted_triang", {i, d})),
            to_string(Q0[n].coefficient(mono_of({{y, static_cast<int>(d)}}))));
      add_formula(r, "tree_rooted_triang_edges", {n, i}, counts_get(nt, {n, d}));
    }
  (void)T;
  return r;
}

}  // namespace tuttelab
