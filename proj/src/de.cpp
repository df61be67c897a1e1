#include "tuttelab/de.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "tuttelab/equations.hpp"
#include "tuttelab/errors.hpp"

namespace tuttelab {

namespace {

using enum Var;

MultiPoly V(Var x, int e = 1) { return MultiPoly::var(x, e); }

// Coefficient tables: c[j][k] is [v^j main^k]. Entries may still involve
// placeholder symbols for directions not yet fixed by the system.
using Table = std::vector<std::vector<MultiPoly>>;

struct State {
  Table a, b, c;
};

MultiPoly build(const Table& tab, Var main) {
  MultiPoly p;
  for (size_t j = 0; j < tab.size(); ++j)
    for (size_t k = 0; k < tab[j].size(); ++k)
      if (!tab[j][k].is_zero()) p += tab[j][k] * V(v, static_cast<int>(j)) * V(main, static_cast<int>(k));
  return p;
}

Rational constant_of(const MultiPoly& p) { return p.coefficient(unit_monomial()); }

bool is_constant(const MultiPoly& p) { return p.is_zero() || (p.size() == 1 && p.terms()[0].first == unit_monomial()); }

// Gaussian elimination of M x = rhs with constant M and rhs entries that are
// polynomials in the placeholders. Returns, per column, the pivot row or -1;
// rows beyond the rank are left holding the equations that do not involve x.
std::vector<int> eliminate(std::vector<std::vector<Rational>>& M, std::vector<MultiPoly>& rhs, size_t& rank) {
  const size_t rows = M.size(), cols = rows ? M[0].size() : 0;
  std::vector<int> pivot_row(cols, -1);
  size_t r = 0;
  for (size_t col = 0; col < cols && r < rows; ++col) {
    size_t p = r;
    while (p < rows && M[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(M[p], M[r]);
    std::swap(rhs[p], rhs[r]);
    const Rational inv = 1 / M[r][col];
    for (size_t k = 0; k < cols; ++k) M[r][k] *= inv;
    rhs[r] = rhs[r] * MultiPoly(inv);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || M[i][col] == 0) continue;
      const Rational f = M[i][col];
      for (size_t k = 0; k < cols; ++k) M[i][k] -= f * M[r][k];
      rhs[i] -= rhs[r] * MultiPoly(f);
    }
    pivot_row[col] = static_cast<int>(r);
    ++r;
  }
  rank = r;
  return pivot_row;
}

int symbol_degree(const MultiPoly& p, const std::vector<Var>& symbols) {
  int d = 0;
  for (const auto& [m, c] : p.terms()) {
    int e = 0;
    for (Var x : symbols) e += exponent(m, x);
    d = std::max(d, e);
  }
  return d;
}

// Solves the equations that are affine in the open symbols, repeatedly,
// each pivot symbol expressed through the remaining ones. Equations still
// nonlinear are returned in eqs for later orders; a failed constant equation
// throws.
std::map<Var, MultiPoly> solve_symbols(std::vector<MultiPoly>& eqs, const std::vector<Var>& live, int order) {
  std::map<Var, MultiPoly> values;
  auto inconsistent = [&] { return SolveError("differential system inconsistent at order " + std::to_string(order)); };
  for (bool progress = true; progress;) {
    progress = false;
    std::vector<Var> open;
    for (Var x : live)
      if (!values.count(x)) open.push_back(x);
    std::vector<std::vector<Rational>> M;
    std::vector<MultiPoly> rhs;
    std::vector<MultiPoly> kept;
    for (auto& e : eqs) {
      if (!values.empty()) e = e.subs(values);
      if (e.is_zero()) continue;
      if (is_constant(e)) throw inconsistent();
      if (symbol_degree(e, open) > 1) {
        kept.push_back(e);
        continue;
      }
      std::vector<Rational> row;
      MultiPoly rest = e;
      for (Var x : open) {
        const MultiPoly cx = e.coeff(x, 1);
        row.push_back(constant_of(cx));
        rest -= cx * V(x);
      }
      M.push_back(row);
      rhs.push_back(-rest);
    }
    eqs = kept;
    if (M.empty()) break;
    size_t rank = 0;
    std::vector<int> piv = eliminate(M, rhs, rank);
    for (size_t i = rank; i < rhs.size(); ++i)
      if (!rhs[i].is_zero()) throw inconsistent();
    std::map<Var, MultiPoly> found;
    for (size_t k = 0; k < open.size(); ++k) {
      if (piv[k] < 0) continue;
      MultiPoly e = rhs[piv[k]];
      for (size_t j = 0; j < open.size(); ++j)
        if (piv[j] < 0 && M[piv[k]][j] != 0) e -= MultiPoly(M[piv[k]][j]) * V(open[j]);
      found[open[k]] = e;
    }
    for (auto& [x, e] : values) e = e.subs(found);
    values.insert(found.begin(), found.end());
    progress = !found.empty();
  }
  return values;
}

// A system in A, B, C (C may be absent) whose residual, a polynomial in v
// and main, vanishes. A_0 = 1 at all orders and C_0 is constant. The
// equation of order n involves A_j, B_j at order n+1 (through derivatives,
// j >= 1 for A) and C_j at order n (j >= 1); those enter linearly with
// constant coefficients. Directions the equation leaves free become
// placeholder symbols, fixed by later orders, where they may meet other
// unknowns nonlinearly; equations affine in the open symbols are solved
// first.
struct System {
  int degA, degB, degC;  // degC < 0: no C
  Var main;
  std::vector<Rational> A0, B0;  // values at main = 0
  Rational C0;
  std::function<MultiPoly(const MultiPoly&, const MultiPoly&, const MultiPoly&)> residual;
};

void substitute(State& s, const std::map<Var, MultiPoly>& values) {
  if (values.empty()) return;
  for (Table* tab : {&s.a, &s.b, &s.c})
    for (auto& row : *tab)
      for (auto& e : row) e = e.subs(values);
}

State solve_system(const System& sys, int steps) {
  std::vector<Var> pool;
  for (Var x : {Var::q, Var::nu, Var::mu, Var::w, Var::x, Var::y, Var::u, Var::z, Var::t})
    if (x != sys.main) pool.push_back(x);
  std::vector<Var> live;
  std::vector<MultiPoly> pending;  // nonlinear conditions on live symbols

  State s;
  s.a.assign(sys.degA + 1, std::vector<MultiPoly>(steps + 1));
  s.b.assign(sys.degB + 1, std::vector<MultiPoly>(steps + 1));
  s.c.assign(std::max(sys.degC + 1, 0), std::vector<MultiPoly>(steps + 1));
  for (int j = 0; j <= sys.degA; ++j) s.a[j][0] = sys.A0[j];
  for (int j = 0; j <= sys.degB; ++j) s.b[j][0] = sys.B0[j];
  if (sys.degC >= 0) s.c[0][0] = sys.C0;

  for (int n = 0; n < steps; ++n) {
    std::vector<MultiPoly*> unknowns;
    for (int j = 1; j <= sys.degA; ++j) unknowns.push_back(&s.a[j][n + 1]);
    for (int j = 0; j <= sys.degB; ++j) unknowns.push_back(&s.b[j][n + 1]);
    for (int j = 1; j <= sys.degC; ++j) unknowns.push_back(&s.c[j][n]);
    auto eval = [&] {
      MultiPoly e = sys.residual(build(s.a, sys.main), build(s.b, sys.main), build(s.c, sys.main)).coeff(sys.main, n);
      std::vector<MultiPoly> out(std::max(e.max_degree(v), 0) + 1);
      for (int k = 0; k < static_cast<int>(out.size()); ++k) out[k] = e.coeff(v, k);
      return out;
    };
    for (auto* x : unknowns) *x = MultiPoly();
    std::vector<MultiPoly> base = eval();
    std::vector<std::vector<MultiPoly>> cols;
    size_t rows = base.size();
    for (auto* x : unknowns) {
      *x = MultiPoly(1);
      cols.push_back(eval());
      *x = MultiPoly();
      rows = std::max(rows, cols.back().size());
    }
    base.resize(rows);
    std::vector<std::vector<Rational>> M(rows, std::vector<Rational>(unknowns.size()));
    std::vector<MultiPoly> rhs(rows);
    for (size_t i = 0; i < rows; ++i) {
      rhs[i] = -base[i];
      for (size_t k = 0; k < unknowns.size(); ++k) {
        cols[k].resize(rows);
        const MultiPoly d = cols[k][i] - base[i];
        if (!is_constant(d))
          throw SolveError("differential system: new unknowns enter nonlinearly at order " + std::to_string(n));
        M[i][k] = constant_of(d);
      }
    }
    size_t rank = 0;
    std::vector<int> piv = eliminate(M, rhs, rank);
    // Rows past the rank only constrain the open symbols.
    pending.insert(pending.end(), rhs.begin() + static_cast<long>(rank), rhs.end());
    std::map<Var, MultiPoly> values = solve_symbols(pending, live, n);
    // Free columns become new symbols; pivot columns follow from them.
    std::vector<Var> next_live;
    for (Var x : live)
      if (!values.count(x)) next_live.push_back(x);
    std::vector<MultiPoly> sol(unknowns.size());
    for (size_t k = 0; k < unknowns.size(); ++k) {
      if (piv[k] >= 0) continue;
      auto it = std::find_if(pool.begin(), pool.end(), [&](Var x) {
        return std::find(next_live.begin(), next_live.end(), x) == next_live.end() && !values.count(x);
      });
      if (it == pool.end()) throw SolveError("differential system underdetermined: free directions accumulate by order " + std::to_string(n));
      next_live.push_back(*it);
      sol[k] = V(*it);
    }
    for (size_t k = 0; k < unknowns.size(); ++k) {
      if (piv[k] < 0) continue;
      MultiPoly e = rhs[piv[k]];
      for (size_t j = 0; j < unknowns.size(); ++j)
        if (piv[j] < 0 && M[piv[k]][j] != 0) e -= MultiPoly(M[piv[k]][j]) * sol[j];
      sol[k] = e;
    }
    substitute(s, values);  // before any solved symbol is reused below
    for (size_t k = 0; k < unknowns.size(); ++k) *unknowns[k] = sol[k].subs(values);
    live = next_live;
  }
  for (auto& e : pending)
    if (!e.is_zero()) throw SolveError("differential system: nonlinear conditions left unresolved");
  return s;
}

std::vector<TSeries> to_series(const Table& tab, int order, Var main) {
  std::vector<TSeries> out;
  for (const auto& row : tab) {
    TSeries s(order, main);
    for (int k = 0; k <= order && k < static_cast<int>(row.size()); ++k) {
      if (!is_constant(row[k])) throw SolveError("differential system: coefficient of order " + std::to_string(k) + " not determined");
      s.at(k) = row[k];
    }
    out.push_back(s);
  }
  return out;
}

// Free directions left at the last orders are fixed by the following ones.
constexpr int kExtraSteps = 2;

TSeries from_poly(const MultiPoly& p, int N, Var main) { return TSeries::from_poly(p, N, main); }

// Divides a series by main^k after checking the low coefficients vanish.
TSeries unshift(const TSeries& s, int k, const char* what) {
  for (int n = 0; n < k && n <= s.order(); ++n)
    if (!s[n].is_zero()) throw SolveError(std::string(what) + ": nonzero coefficient of order " + std::to_string(n));
  TSeries r(s.order() - k, s.main_var());
  for (int n = 0; n <= r.order(); ++n) r.at(n) = s[n + k];
  return r;
}

}  // namespace

DeMapsSolution solve_de_maps(const Rational& q, const Rational& nu, const Rational& w, int N) {
  if (N < 0) throw DomainError("negative order");
  const Rational beta = nu - 1;
  if (w * (q * nu + beta * beta) == 0) throw DomainError("the relation for M(1,1) needs w (q nu + (nu-1)^2) != 0");
  const MultiPoly T = V(t), Vv = V(v);
  const MultiPoly Delta = MultiPoly(q * nu + beta * beta) - MultiPoly(q * (nu + 1)) * Vv +
                          (MultiPoly(beta * (q - 4) * (w * q + beta)) * T + MultiPoly(q)) * Vv * Vv;
  const MultiPoly Dv = Delta.derivative(v), Dt = Delta.derivative(t);
  System sys{4, 2, 2, t, {1, -2, 1, 0, 0}, {1, -1, 0}, w * (q + 2 * beta) - 1 - nu, nullptr};
  // (1/C) d/dv (v^4 C^2 / (A D^2)) = (v^2/B) d/dt (B^2 / (A D^2)), times A^2 D^3 / v^2.
  sys.residual = [&](const MultiPoly& A, const MultiPoly& B, const MultiPoly& C) {
    const MultiPoly Av = A.derivative(v), At = A.derivative(t);
    const MultiPoly lhs = (MultiPoly(4) * Vv * C + MultiPoly(2) * Vv * Vv * C.derivative(v)) * A * Delta -
                          Vv * Vv * C * (Av * Delta + MultiPoly(2) * A * Dv);
    const MultiPoly rhs = MultiPoly(2) * B.derivative(t) * A * Delta - B * (At * Delta + MultiPoly(2) * A * Dt);
    return lhs - rhs;
  };
  const int K = N + 2;
  State s = solve_system(sys, K + kExtraSteps);
  DeMapsSolution out;
  out.A = to_series(s.a, K, t);
  out.B = to_series(s.b, K, t);
  out.C = to_series(s.c, K - 1, t);
  const Rational g = q + 2 * beta;
  const MultiPoly rhs_rel =
      MultiPoly(4) * T *
      (MultiPoly(1) - MultiPoly(3 * (beta + 2) * (beta + 2)) * T +
       (MultiPoly(6 * (beta + 2) * g) * T + MultiPoly(q + 3 * beta)) * MultiPoly(w) - MultiPoly(3 * g * g * w * w) * T);
  TSeries num = from_poly(rhs_rel, K, t) + out.A[2] - out.B[2] * MultiPoly(2) +
                (out.B[1] * MultiPoly(8 * (w * g - nu - 1))).shift(1) - out.B[1] * out.B[1];
  out.M11 = unshift(num, 2, "relation for M(1,1)") * MultiPoly(1 / (12 * w * (q * nu + beta * beta)));
  return out;
}

DeTriSolution solve_de_tri(const Rational& q, int N) {
  if (N < 0) throw DomainError("negative order");
  if (q == 4) throw DomainError("the relation for T_2 needs q != 4");
  const MultiPoly Z = V(z), Vv = V(v);
  const MultiPoly Delta = Vv + MultiPoly(4 - q);
  System sys{3, 1, -1, z, {1, Rational(1, 4), 0, 0}, {1, 0}, 0, nullptr};
  // -(4z/v) d/dv (v^3/A) = (1/(B D)) d/dz (B^2/A), times A^2 B D.
  sys.residual = [&](const MultiPoly& A, const MultiPoly& B, const MultiPoly&) {
    const MultiPoly lhs = MultiPoly(-4) * Z * Delta * (MultiPoly(3) * Vv * A - Vv * Vv * A.derivative(v));
    const MultiPoly rhs = MultiPoly(2) * B.derivative(z) * A - B * A.derivative(z);
    return lhs - rhs;
  };
  const int K = N + 4;
  State s = solve_system(sys, K + kExtraSteps);
  DeTriSolution out;
  out.A = to_series(s.a, K, z);
  out.B = to_series(s.b, K, z);
  const MultiPoly Z2 = Z * Z;
  TSeries num = out.B[1] * out.B[1] * MultiPoly(2) +
                from_poly(MultiPoly(96) * Z2 - MultiPoly(24 * q) * Z2 + MultiPoly(1), K, z) * out.B[1] -
                out.A[2] * MultiPoly(2) +
                from_poly(MultiPoly(2) * Z2 *
                              (MultiPoly(10 - q) + MultiPoly(432 - 216 * q + 27 * q * q) * Z2),
                          K, z);
  out.T2 = unshift(num, 4, "relation for T_2") * MultiPoly(q / (20 * (q - 4)));
  return out;
}

CheckReport check_de_maps(const Rational& q, const Rational& nu, const Rational& w, int N) {
  CheckReport r{"de-maps", {}};
  const std::string tag = "(q,nu,w)=(" + to_string(q) + "," + to_string(nu) + "," + to_string(w) + ")";
  DeMapsSolution s = solve_de_maps(q, nu, w, N);
  const Rational beta = nu - 1;
  r.add(tag + " A(0,v)", "1 -2 1 0 0",
        to_string(constant_of(s.A[0][0])) + " " + to_string(constant_of(s.A[1][0])) + " " +
            to_string(constant_of(s.A[2][0])) + " " + to_string(constant_of(s.A[3][0])) + " " +
            to_string(constant_of(s.A[4][0])));
  r.add(tag + " B(0,v)", "1 -1 0",
        to_string(constant_of(s.B[0][0])) + " " + to_string(constant_of(s.B[1][0])) + " " +
            to_string(constant_of(s.B[2][0])));
  r.add(tag + " A(t,0)", TSeries::constant(1, s.A[0].order()).to_string(), s.A[0].to_string());
  r.add(tag + " C(t,0)", TSeries::constant(Rational(w * (q + 2 * beta) - 1 - nu), s.C[0].order()).to_string(),
        s.C[0].to_string());
  TSeries M = expand(EquationId::POTTS_MAPS, {{Var::q, q}, {Var::nu, nu}, {Var::w, w}, {Var::x, 1}, {Var::y, 1}}, N);
  r.add(tag + " M(1,1) from the system against equation iteration to t^" + std::to_string(N), M.to_string(),
        s.M11.to_string());
  return r;
}

namespace {

TSeries iterated_t2(const Rational& q, int N) {
  if (q == 0) throw DomainError("the triangulation equation divides by q");
  return coeff(at(expand(EquationId::TUTTE_NONSEP_TRI, {{Var::q, q}}, N), Var::x, 1), Var::y, 2);
}

}  // namespace

CheckReport check_de_tri(const Rational& q, int N) {
  CheckReport r{"de-tri", {}};
  const std::string tag = "q=" + to_string(q);
  DeTriSolution s = solve_de_tri(q, N);
  r.add(tag + " A(0,v)", "1 1/4 0 0",
        to_string(constant_of(s.A[0][0])) + " " + to_string(constant_of(s.A[1][0])) + " " +
            to_string(constant_of(s.A[2][0])) + " " + to_string(constant_of(s.A[3][0])));
  r.add(tag + " B(0,v)", "1 0", to_string(constant_of(s.B[0][0])) + " " + to_string(constant_of(s.B[1][0])));
  r.add(tag + " A(z,0)", TSeries::constant(1, s.A[0].order(), z).to_string(), s.A[0].to_string());
  r.add(tag + " T_2 from the system against equation iteration to z^" + std::to_string(N),
        iterated_t2(q, N).to_string(), s.T2.to_string());
  return r;
}

CheckReport check_tutte_ode(const Rational& q, int N) {
  if (N < 4) throw DomainError("order must be at least 4");
  CheckReport r{"tutte-ode", {}};
  const std::string tag = "q=" + to_string(q);
  TSeries T2 = iterated_t2(q, N);
  std::string odd;
  for (int n = 1; n <= N; n += 2)
    if (!T2[n].is_zero()) odd += (odd.empty() ? "" : " ") + std::to_string(n);
  r.add(tag + " T_2 has no odd powers of z", "", odd);
  // H(t) = t^2 T_2 with t = z^2, known to order K = N/2 + 2.
  const int K = N / 2 + 2;
  TSeries H(K, t);
  for (int m = 0; 2 * m <= N; ++m) H.at(m + 2) = T2[2 * m];
  const TSeries H1 = H.derivative(), H2 = H1.derivative();
  const int R = K - 2;
  auto cut = [&](const TSeries& x) { return x.truncated(R); };
  const MultiPoly T = V(t);
  TSeries res = TSeries::from_poly(MultiPoly(2 * q * q * (1 - q)) * T, R, t) +
                cut(TSeries::from_poly(MultiPoly(q) * T, R, t) + cut(H) * MultiPoly(10) - (cut(H1) * MultiPoly(6)).shift(1)) *
                    cut(H2) +
                (cut(H) * MultiPoly(20) - (cut(H1) * MultiPoly(18)).shift(1) + (cut(H2) * MultiPoly(9)).shift(2)) *
                    MultiPoly(q * (4 - q));
  r.add(tag + " ODE residual to t^" + std::to_string(R), TSeries(R, t).to_string(), res.to_string());
  return r;
}

}  // namespace tuttelab
