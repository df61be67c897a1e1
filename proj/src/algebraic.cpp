#include "tuttelab/algebraic.hpp"

#include <functional>

#include "tuttelab/closed_forms.hpp"
#include "tuttelab/equations.hpp"
#include "tuttelab/errors.hpp"
#include "tuttelab/mapgen.hpp"
#include "tuttelab/potts.hpp"

namespace tuttelab {

namespace {

using enum Var;

MultiPoly V(Var v, int e = 1) { return MultiPoly::var(v, e); }

TSeries cst(const MultiPoly& p, int N, Var main = t) { return TSeries::constant(p, N, main); }
// Polynomial in t lifted to a series.
TSeries tp(const MultiPoly& p, int N) { return TSeries::from_poly(p, N, t); }

// Fixed point of F = rhs(F) when rhs raises the valuation of differences;
// confirmed by one more iteration.
TSeries iterate(const std::function<TSeries(const TSeries&)>& rhs, int N, Var main = t) {
  TSeries F(N, main);
  for (int k = 0; k <= N; ++k) F = rhs(F);
  if (auto n = rhs(F).first_difference(F)) throw SolveError("iteration did not stabilise at order " + std::to_string(*n));
  return F;
}

// sum_k c_k S^k.
TSeries poly_in(const TSeries& S, const std::vector<MultiPoly>& c) {
  TSeries r(S.order(), S.main_var());
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * S + cst(*it, S.order(), S.main_var());
  return r;
}

void add_series(CheckReport& r, const std::string& name, const TSeries& expected, const TSeries& got) {
  r.add(name, expected.to_string(), got.to_string());
}

TSeries maps_at_1(int N) { return at(expand(EquationId::MAPS_1CAT, {}, N), y, 1); }

void maps_quadratic(CheckReport& r, int N) {
  TSeries M = maps_at_1(N);
  TSeries rhs = tp(MultiPoly(1) - MultiPoly(16) * V(t), N) + (M * MultiPoly(18)).shift(1) -
                (M * M * MultiPoly(27)).shift(2);
  add_series(r, "M = 1 - 16t + 18tM - 27t^2M^2 to t^" + std::to_string(N), M, rhs);
}

void four_valent_system(CheckReport& r, int N) {
  TSeries T = iterate([&](const TSeries& F) { return cst(1, N) + (F * F * MultiPoly(3)).shift(1); }, N);
  TSeries M4 = T - (T * T * T).shift(1);
  add_series(r, "M = T - tT^3 with T = 1 + 3tT^2, against equation iteration, to t^" + std::to_string(N), maps_at_1(N),
             M4);
  TSeries phi(N, x);  // T - 1 = t * 3(1 + x)^2
  phi.at(0) = MultiPoly(3);
  if (N >= 1) phi.at(1) = MultiPoly(6);
  if (N >= 2) phi.at(2) = MultiPoly(3);
  for (int n = 1; n <= N; ++n) {
    r.add("[t^" + std::to_string(n) + "] T by Lagrange inversion", T[n].to_string(), lagrange_coeff(phi, n).to_string());
    r.add("[t^" + std::to_string(n) + "] T = 3^n C_n", to_string(closed_form("labelled_trees", {n})), T[n].to_string());
    r.add("[t^" + std::to_string(n) + "] (T - tT^3)", to_string(closed_form("four_valent", {n})), M4[n].to_string());
  }
}

TSeries nt1_series(int N) { return coeff(expand(EquationId::NT, {}, N), y, 1); }

void nt1_cubic(CheckReport& r, int N) {
  TSeries A = nt1_series(N);
  TSeries rhs = tp(V(t, 2) - MultiPoly(27) * V(t, 5), N) + (A * MultiPoly(30)).shift(3) +
                tp(V(t) - MultiPoly(96) * V(t, 4), N) * (A * A) + (A * A * A * MultiPoly(64)).shift(5);
  add_series(r, "NT_1 cubic equation to t^" + std::to_string(N), A, rhs);
}

void nt1_parametrisation(CheckReport& r, int N) {
  const int K = N + 1;
  // X = t^3 / ((1 - 2X)(1 - 4X)).
  TSeries X = iterate(
      [&](const TSeries& F) {
        TSeries d = (cst(1, K) - F * MultiPoly(2)) * (cst(1, K) - F * MultiPoly(4));
        return d.inverse().shift(3);
      },
      K);
  TSeries one = cst(1, K);
  TSeries tA = X * (one - X * MultiPoly(6)) * (one - X * MultiPoly(4)).inverse();
  TSeries A = nt1_series(K);
  add_series(r, "t NT_1 = X(1-6X)/(1-4X) with t^3 = X(1-2X)(1-4X), to t^" + std::to_string(N), A.shift(1), tA);
  // Lagrange inversion in s = t^3: X = s phi(X), phi = 1/((1-2x)(1-4x)).
  const int S = (N - 2) / 3 + 1;
  if (S < 1) return;
  TSeries phi = (cst(1, S, x) - TSeries::from_poly(MultiPoly(2) * V(x), S, x)) *
                (cst(1, S, x) - TSeries::from_poly(MultiPoly(4) * V(x), S, x));
  phi = phi.inverse();
  TSeries H = TSeries::from_poly(V(x) - MultiPoly(6) * V(x, 2), S, x) *
              (cst(1, S, x) - TSeries::from_poly(MultiPoly(4) * V(x), S, x)).inverse();
  for (int n = 0; 3 * n + 2 <= N; ++n) {
    const std::string tag = "[t^" + std::to_string(3 * n + 2) + "] NT_1";
    r.add(tag + " closed form", to_string(closed_form("nt1", {n})), A[3 * n + 2].to_string());
    r.add(tag + " by Lagrange inversion", A[3 * n + 2].to_string(), lagrange_coeff(phi, n + 1, H).to_string());
  }
}

void potts_q2(CheckReport& r, int N) {
  const MultiPoly nu_ = V(nu), nu2 = nu_ * nu_;
  const std::vector<MultiPoly> P = {MultiPoly(1), MultiPoly(3) * nu_, MultiPoly(-3) * nu_, -nu2};
  const std::vector<MultiPoly> D = {MultiPoly(1), MultiPoly(-2), MultiPoly(0), MultiPoly(2) * nu2, -nu2};
  TSeries S = iterate(
      [&](const TSeries& F) {
        TSeries p = poly_in(F, P);
        return (p * p * poly_in(F, D).inverse()).shift(1);
      },
      N);
  const std::vector<MultiPoly> Q = {MultiPoly(1),
                                    -(MultiPoly(3) + nu_),
                                    MultiPoly(1) + MultiPoly(2) * nu_,
                                    -nu_ * (MultiPoly(1) - MultiPoly(5) * nu_),
                                    nu_ * (MultiPoly(1) - MultiPoly(6) * nu_),
                                    MultiPoly(2) * nu2 * (MultiPoly(1) - nu_),
                                    nu2 * nu_};
  TSeries d = poly_in(S, D);
  TSeries M = poly_in(S, P) * (d * d).inverse() * poly_in(S, Q);
  TSeries E = expand(EquationId::POTTS_MAPS, {{q, 2}, {w, 1}, {x, 1}, {y, 1}}, N);
  add_series(r, "M(2, nu, t, 1; 1, 1) by parametrisation to t^" + std::to_string(N), E, M);
  r.add("[t] M(2, nu, t, 1; 1, 1)", (MultiPoly(2) * nu_ + MultiPoly(1)).to_string(), E[1].to_string());
}

void potts_q3(CheckReport& r, int N) {
  // S = t (1 + 2S)^3 / (1 - 2S^3).
  const std::vector<MultiPoly> P = {MultiPoly(1), MultiPoly(2)};
  const std::vector<MultiPoly> D = {MultiPoly(1), MultiPoly(0), MultiPoly(0), MultiPoly(-2)};
  TSeries S = iterate(
      [&](const TSeries& F) {
        TSeries p = poly_in(F, P);
        return (p * p * p * poly_in(F, D).inverse()).shift(1);
      },
      N);
  TSeries d = poly_in(S, D);
  TSeries M = poly_in(S, P) * poly_in(S, {MultiPoly(1), MultiPoly(0), MultiPoly(-2), MultiPoly(-4), MultiPoly(-4)}) *
              (d * d).inverse();
  TSeries E = expand(EquationId::POTTS_MAPS, {{q, 3}, {nu, 0}, {w, 1}, {x, 1}, {y, 1}}, N);
  add_series(r, "M(3, 0, t, 1; 1, 1) by parametrisation to t^" + std::to_string(N), E, M);
  r.add("[t] M(3, 0, t, 1; 1, 1)", "2", E[1].to_string());
}

const std::vector<std::pair<std::string, std::function<void(CheckReport&, int)>>>& identity_table() {
  static const std::vector<std::pair<std::string, std::function<void(CheckReport&, int)>>> table = {
      {"maps_quadratic", maps_quadratic}, {"four_valent_system", four_valent_system},
      {"nt1_cubic", nt1_cubic},           {"nt1_parametrisation", nt1_parametrisation},
      {"potts_q2", potts_q2},             {"potts_q3", potts_q3},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& algebraic_identities() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, f] : identity_table()) v.push_back(n);
    return v;
  }();
  return names;
}

CheckReport check_algebraic(const std::string& name, int N) {
  if (N < 3) throw DomainError("order must be at least 3");
  for (const auto& [n, f] : identity_table())
    if (n == name) {
      CheckReport r{"algebraic/" + name, {}};
      f(r, N);
      return r;
    }
  throw DomainError("unknown identity: " + name);
}

MultiPoly lagrange_coeff(const TSeries& phi, int n, const TSeries& H) {
  if (n < 1) throw DomainError("Lagrange inversion needs n >= 1");
  if (phi.order() < n - 1 || H.order() < n) throw DomainError("series too short for the requested coefficient");
  if (phi[0].is_zero()) throw DomainError("phi(0) must be nonzero");
  TSeries p = phi.truncated(n - 1).pow(static_cast<unsigned>(n)) * H.truncated(n).derivative().truncated(n - 1);
  return p[n - 1] * MultiPoly(Rational(1, n));
}

MultiPoly lagrange_coeff(const TSeries& phi, int n) {
  TSeries H(std::max(n, 1), phi.main_var());
  H.at(1) = MultiPoly(1);
  return lagrange_coeff(phi, n, H);
}

CheckReport check_tutte_potts_change_of_variables(int N, const std::vector<std::pair<Rational, Rational>>& samples) {
  if (N < 0) throw DomainError("negative order");
  CheckReport r{"tutte-potts", {}};
  for (const auto& [qv, nuv] : samples) {
    if (nuv == 1) throw DomainError("the change of variables needs nu != 1");
    TSeries P = expand(EquationId::POTTS_MAPS, {{q, qv}, {nu, nuv}}, N);
    const Rational muv = 1 + qv / (nuv - 1);
    TSeries T = expand(EquationId::TUTTE_MAPS, {{mu, muv}, {nu, nuv}, {w, MultiPoly(nuv - 1) * V(w)}, {z, 1}}, N);
    add_series(r, "q=" + to_string(qv) + ", nu=" + to_string(nuv) + " to t^" + std::to_string(N), P, T);
  }
  return r;
}

CheckReport check_potts_specialization(int N) {
  if (N < 0) throw DomainError("negative order");
  CheckReport r{"potts-specialization", {}};
  TSeries M = expand(EquationId::MAPS_1CAT, {}, N);
  for (const auto& [qv, wv] : std::vector<std::pair<Rational, Rational>>{{1, 1}, {2, Rational(1, 2)}, {3, Rational(1, 3)}}) {
    TSeries P = expand(EquationId::POTTS_MAPS, {{q, qv}, {nu, 1}, {w, wv}, {x, 1}}, N);
    add_series(r, "nu=1, x=1, q=" + to_string(qv) + ", w=" + to_string(wv) + " to t^" + std::to_string(N), M, P);
  }
  // Only the product q w matters: q symbolic, w = 1 against q = 1, w symbolic.
  TSeries Pq = expand(EquationId::POTTS_MAPS, {{nu, 1}, {w, 1}, {x, 1}}, N);
  TSeries Pw = expand(EquationId::POTTS_MAPS, {{q, 1}, {nu, 1}, {x, 1}}, N);
  add_series(r, "nu=1, x=1: q and w enter as q w", Pw, Pq.map([](const MultiPoly& p) { return p.subs(q, V(w)); }));
  return r;
}

CheckReport check_ising_identity(int N) {
  if (N < 0) throw DomainError("negative order");
  if (N > gen_config().listing_cap) throw CapExceeded("Ising identity needs maps with at most the listing cap");
  CheckReport r{"ising", {}};
  TSeries g(N, t);  // 1/(1 - t^2 v^2)
  for (int k = 0; 2 * k <= N; ++k) g.at(2 * k) = V(v, 2 * k);
  TSeries bi = (g * MultiPoly(1)).shift(1);
  TSeries mono = (g * V(v)).shift(2);
  TSeries lhs(N, t), rhs(N, t);
  for (int n = 0; n <= N; ++n) {
    for (const auto& m : all_maps(n)) {
      const int nv = m.num_vertices();
      const auto vof = m.vertex_of();
      const int root_v = m.is_atomic() ? 0 : vof[m.root()];
      const MultiPoly base = V(w, nv - 1) * V(x, m.is_atomic() ? 0 : m.root_vertex_degree());
      for (unsigned mask = 0; mask < (1u << nv); ++mask) {
        if (mask >> root_v & 1u) continue;  // root vertex black
        TSeries term = cst(base, N);
        for (int d = 0; d < m.n_darts(); ++d) {
          const int e = m.alpha(d);
          if (d > e) continue;
          const bool same = ((mask >> vof[d]) & 1u) == ((mask >> vof[e]) & 1u);
          term = term * (same ? mono : bi);
        }
        lhs += term;
      }
    }
    for (const auto& m : bipartite_maps(n)) {
      MultiPoly weight = V(x, m.is_atomic() ? 0 : m.root_vertex_degree());
      if (!m.is_atomic()) {
        const auto vs = m.vertices();
        const int root_v = m.vertex_of()[m.root()];
        for (int k = 0; k < static_cast<int>(vs.size()); ++k)
          if (k != root_v) weight = weight * (vs[k].size() == 2 ? V(v) + V(w) : V(w));
      }
      rhs.at(n) += weight;
    }
  }
  add_series(r, "M(2, tv, t/(1-t^2v^2), w; x, 1) = B(t, v+w, w; x) to t^" + std::to_string(N), rhs, lhs);
  return r;
}

}  // namespace tuttelab
