#include "tuttelab/equations.hpp"

#include <climits>
#include <functional>
#include <sstream>

#include "tuttelab/errors.hpp"
#include "tuttelab/mapgen.hpp"
#include "tuttelab/map_ops.hpp"
#include "tuttelab/potts.hpp"

namespace tuttelab {

namespace {

MultiPoly V(Var v, int e = 1) { return MultiPoly::var(v, e); }

TSeries extend(const TSeries& s, int order) {
  TSeries r(order, s.main_var());
  for (int n = 0; n <= std::min(order, s.order()); ++n) r.at(n) = s[n];
  return r;
}

// Evaluation context: equation coefficients with the parameters substituted.
struct Env {
  const Params& params;
  Var m;
  MultiPoly c(const MultiPoly& p) const { return p.subs(params); }
  // c(p) * main * F
  TSeries tm(const MultiPoly& p, const TSeries& F) const { return (F * c(p)).shift(1); }
  TSeries one(int order) const { return TSeries::constant(MultiPoly(1), order, m); }
  TSeries constant(const MultiPoly& p, int order) const { return TSeries::from_poly(c(p), order, m); }
};

// Divides every coefficient by the monomial or constant d.
TSeries divide(const TSeries& F, const MultiPoly& d) {
  return F.map([&](const MultiPoly& p) { return p.divide_exact(d); });
}

using Rhs = std::function<TSeries(const TSeries&, const Env&)>;

TSeries maps_1cat(const TSeries& F, const Env& e) {
  const MultiPoly y = V(Var::y);
  return e.one(F.order()) + e.tm(y * y, F * F) + e.tm(y, divided_difference(F * y, Var::y, 1));
}

TSeries near_tri(const TSeries& F, const Env& e) {
  const MultiPoly y = V(Var::y);
  TSeries high = F.map([](const MultiPoly& p) { return p.part(Var::y, 2, INT16_MAX); });
  return e.one(F.order()) + e.tm(y * y, F * F) + e.tm(1, divide(high, y));
}

TSeries near_quad(const TSeries& F, const Env& e) {
  const MultiPoly y = V(Var::y);
  TSeries high = F.map([](const MultiPoly& p) { return p.part(Var::y, 3, INT16_MAX); });
  return e.one(F.order()) + e.tm(y * y, F * F) + e.tm(1, divide(high, y * y));
}

TSeries bip(const TSeries& F, const Env& e) {
  const MultiPoly y = V(Var::y);
  return e.one(F.order()) + e.tm(y, F * F) + e.tm(y, divided_difference(F, Var::y, 1));
}

TSeries euler_nt(const TSeries& F, const Env& e) {
  const MultiPoly y = V(Var::y);
  TSeries F0 = coeff(F, Var::y, 0);
  TSeries high = F.map([](const MultiPoly& p) { return p.part(Var::y, 2, INT16_MAX); });
  return e.one(F.order()) + e.tm(y, F * F * F) + e.tm(2, F * (F - F0)) + e.tm(1, F - F0) + e.tm(1, divide(high, y));
}

TSeries potts_maps(const TSeries& F, const Env& e) {
  const MultiPoly x = V(Var::x), y = V(Var::y), w = V(Var::w), q = V(Var::q), nu = V(Var::nu);
  return e.one(F.order()) + e.tm(x * y * w * (q * y + (nu - 1) * (y - 1)), F * at(F, Var::x, 1)) +
         e.tm(x * y * (x * nu - 1), F * at(F, Var::y, 1)) +
         e.tm(x * y * w * (nu - 1), divided_difference(F * x, Var::x, 1)) +
         e.tm(x * y, divided_difference(F * y, Var::y, 1));
}

// Tutte's 1971 equation with w -> wt and z -> zt, so t counts edges.
TSeries tutte_maps(const TSeries& F, const Env& e) {
  const MultiPoly x = V(Var::x), y = V(Var::y), w = V(Var::w), z = V(Var::z), mu = V(Var::mu), nu = V(Var::nu);
  return e.one(F.order()) + e.tm(x * y * w * (y * mu - 1), F * at(F, Var::x, 1)) +
         e.tm(x * y * z * (x * nu - 1), F * at(F, Var::y, 1)) +
         e.tm(x * y * w, divided_difference(F * x, Var::x, 1)) +
         e.tm(x * y * z, divided_difference(F * y, Var::y, 1));
}

TSeries tutte_nonsep_tri(const TSeries& F, const Env& e) {
  const MultiPoly x = V(Var::x), y = V(Var::y), q = V(Var::q);
  TSeries F1y = divide(at(F, Var::x, 1), e.c(q));
  TSeries strip = F - coeff(F, Var::y, 2) * (y * y);
  return e.constant(x * y * y * q * (q - 1), F.order()) + e.tm(x, divide(F1y * F, y)) + e.tm(x, divide(strip, y)) -
         e.tm(x * x * y, divided_difference(F, Var::x, 1));
}

// Shared by the Potts and Tutte quasi-triangulation equations; `inner` is the
// factor in front of t Q(0,y) Q besides y^2, `tail` multiplies t/(1-xztnu).
TSeries quasi_tri(const TSeries& F, const Env& e, const TSeries& inner, const MultiPoly& tail) {
  const MultiPoly x = V(Var::x), y = V(Var::y), z = V(Var::z), nu = V(Var::nu);
  const int N = F.order();
  TSeries g = geometric(e.c(x * z * nu), N, e.m);
  TSeries one = e.one(N);
  TSeries F1 = coeff(F, Var::y, 1), F2 = coeff(F, Var::y, 2), F0y = at(F, Var::x, 0);
  TSeries r = one;
  if (N > 0) {
    // Only orders below N survive the factor t; the seed at order N is not
    // yet divisible by y.
    TSeries low = extend(F.truncated(N - 1), N);
    r += e.tm(z, divide(low - one - coeff(low, Var::y, 1) * y, y));
  }
  r += e.tm(x * z, F - one);
  r += e.tm(x * y * z, F1 * F);
  r += e.tm(y * z * (nu - 1), F * (F1 * (MultiPoly(2) * x) + F2));
  r += (inner * F0y * F * e.c(y * y)).shift(1);
  r += (g * divided_difference(F, Var::x, 0) * e.c(y * tail)).shift(1);
  return r;
}

TSeries potts_quasi_tri(const TSeries& F, const Env& e) {
  const MultiPoly x = V(Var::x), z = V(Var::z), nu = V(Var::nu), q = V(Var::q);
  TSeries g = geometric(e.c(x * z * nu), F.order(), e.m);
  TSeries inner = e.constant(q, F.order()) + g * e.c(nu - 1);
  return quasi_tri(F, e, inner, nu - 1);
}

TSeries tutte_quasi_tri(const TSeries& F, const Env& e) {
  const MultiPoly x = V(Var::x), z = V(Var::z), nu = V(Var::nu), mu = V(Var::mu);
  TSeries g = geometric(e.c(x * z * nu), F.order(), e.m);
  TSeries inner = e.constant(mu, F.order()) + (g * e.c(x * nu * z)).shift(1);
  return quasi_tri(F, e, inner, 1);
}

TSeries bipolar_maps(const TSeries& F, const Env& e) {
  const MultiPoly x = V(Var::x), y = V(Var::y), w = V(Var::w);
  TSeries nx = F - at(F, Var::x, 1) * x, ny = F - at(F, Var::y, 1) * y;
  return e.constant((x * y * y * w).shift(e.m, 1), F.order()) +
         e.tm(x * y * w, divided_difference(nx, Var::x, 1)) + e.tm(x * y, divided_difference(ny, Var::y, 1));
}

TSeries bipolar_tri(const TSeries& F, const Env& e) {
  const MultiPoly x = V(Var::x), y = V(Var::y);
  TSeries strip = F - coeff(F, Var::y, 2) * (y * y);
  return e.constant(x * y * y, F.order()) + e.tm(x, divide(strip, y)) +
         e.tm(x * x * y, divided_difference(F, Var::x, 1));
}

const std::vector<EquationInfo>& catalog() {
  using enum Var;
  static const std::vector<EquationInfo> list = {
      {EquationId::MAPS_1CAT, "MAPS_1CAT", t, {y}, {}, "planar maps by edges and root-face degree"},
      {EquationId::NT, "NT", t, {y}, {}, "near-triangulations by edges and outer degree"},
      {EquationId::NQ, "NQ", t, {y}, {}, "near-quadrangulations by edges and outer degree"},
      {EquationId::BIP, "BIP", t, {y}, {}, "bipartite maps by edges and half the outer degree"},
      {EquationId::EULER_NT, "EULER_NT", z, {y}, {}, "Eulerian near-triangulations by black faces and outer degree / 3"},
      {EquationId::POTTS_MAPS, "POTTS_MAPS", t, {x, y}, {q, nu, w}, "Potts generating function of planar maps"},
      {EquationId::TUTTE_MAPS, "TUTTE_MAPS", t, {x, y}, {mu, nu, w, z}, "Tutte generating function of planar maps, t = edges"},
      {EquationId::TUTTE_NONSEP_TRI, "TUTTE_NONSEP_TRI", z, {x, y}, {q}, "properly q-coloured non-separable near-triangulations"},
      {EquationId::POTTS_QUASI_TRI, "POTTS_QUASI_TRI", t, {x, y}, {q, nu, z}, "Potts generating function of quasi-triangulations"},
      {EquationId::TUTTE_QUASI_TRI, "TUTTE_QUASI_TRI", t, {x, y}, {mu, nu, z}, "Tutte generating function of quasi-triangulations"},
      {EquationId::BIPOLAR_MAPS, "BIPOLAR_MAPS", t, {x, y}, {w}, "bipolar orientations of planar maps"},
      {EquationId::BIPOLAR_TRI, "BIPOLAR_TRI", z, {x, y}, {}, "bipolar orientations of near-triangulations"},
  };
  return list;
}

Rhs rhs_of(EquationId id) {
  switch (id) {
    case EquationId::MAPS_1CAT: return maps_1cat;
    case EquationId::NT: return near_tri;
    case EquationId::NQ: return near_quad;
    case EquationId::BIP: return bip;
    case EquationId::EULER_NT: return euler_nt;
    case EquationId::POTTS_MAPS: return potts_maps;
    case EquationId::TUTTE_MAPS: return tutte_maps;
    case EquationId::TUTTE_NONSEP_TRI: return tutte_nonsep_tri;
    case EquationId::POTTS_QUASI_TRI: return potts_quasi_tri;
    case EquationId::TUTTE_QUASI_TRI: return tutte_quasi_tri;
    case EquationId::BIPOLAR_MAPS: return bipolar_maps;
    case EquationId::BIPOLAR_TRI: return bipolar_tri;
  }
  throw DomainError("unknown equation");
}

bool contains(const std::vector<Var>& vs, Var v) { return std::find(vs.begin(), vs.end(), v) != vs.end(); }

// Splits params into values used while iterating and catalytic values applied
// afterwards; rejects variables the equation does not have.
std::pair<Params, Params> split_params(const EquationInfo& info, const Params& params) {
  Params inner, outer;
  for (const auto& [v, p] : params) {
    if (contains(info.params, v))
      inner[v] = p;
    else if (contains(info.catalytic, v))
      outer[v] = p;
    else
      throw DomainError(std::string(info.name) + " has no variable " + var_name(v));
    if (p.depends_on(info.main)) throw DomainError("parameter values may not involve the main variable");
  }
  return {inner, outer};
}

}  // namespace

const std::vector<EquationInfo>& equations() { return catalog(); }

const EquationInfo& equation_info(EquationId id) { return catalog().at(static_cast<size_t>(id)); }

EquationId equation_from_name(const std::string& s) {
  for (const auto& e : catalog())
    if (s == e.name) return e.id;
  throw DomainError("unknown equation: " + s);
}

Params parse_params(const std::string& s) {
  Params out;
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw DomainError("expected var=value, got " + item);
    auto v = var_from_name(item.substr(0, eq));
    if (!v) throw DomainError("unknown variable: " + item.substr(0, eq));
    out[*v] = MultiPoly(parse_rational(item.substr(eq + 1)));
  }
  return out;
}

TSeries specialize(const TSeries& s, const Params& params) {
  if (params.empty()) return s;
  return s.map([&](const MultiPoly& p) { return p.subs(params); });
}

TSeries at(const TSeries& s, Var v, const Rational& a) {
  return s.map([&](const MultiPoly& p) { return p.subs(v, a); });
}

TSeries coeff(const TSeries& s, Var v, int k) {
  return s.map([&](const MultiPoly& p) { return p.coeff(v, k); });
}

TSeries divided_difference(const TSeries& s, Var v, const Rational& a) {
  return s.map([&](const MultiPoly& p) { return p.divided_difference(v, a); });
}

TSeries positive_part(const TSeries& s, Var v) {
  return s.map([&](const MultiPoly& p) { return p.positive_part(v); });
}

TSeries nonneg_part(const TSeries& s, Var v) {
  return s.map([&](const MultiPoly& p) { return p.nonneg_part(v); });
}

TSeries geometric(const MultiPoly& c, int order, Var main) {
  TSeries g(order, main);
  MultiPoly p(1);
  for (int n = 0; n <= order; ++n) {
    g.at(n) = p;
    p = p * c;
  }
  return g;
}

TSeries stretch(const TSeries& s, int k) {
  if (k < 1) throw DomainError("stretch factor must be positive");
  TSeries r(s.order() * k, s.main_var());
  for (int n = 0; n <= s.order(); ++n) r.at(n * k) = s[n];
  return r;
}

TSeries expand(EquationId eq, const Params& params, int N) {
  if (N < 0) throw DomainError("negative order");
  const EquationInfo& info = equation_info(eq);
  auto [inner, outer] = split_params(info, params);
  Env env{inner, info.main};
  Rhs rhs = rhs_of(eq);
  TSeries F(0, info.main);
  for (int k = 0; k <= N; ++k) F = rhs(extend(F, k), env);
  TSeries again = rhs(F, env);
  if (auto n = again.first_difference(F))
    throw SolveError(std::string(info.name) + ": iteration did not stabilise at order " + std::to_string(*n));
  return specialize(F, outer);
}

namespace {

struct Stats {
  int edges, vertices, faces, dv, df;
};

Stats stats_of(const RootedMap& m) {
  return {m.num_edges(), m.num_vertices(), m.num_faces(), m.is_atomic() ? 0 : m.root_vertex_degree(),
          m.is_atomic() ? 0 : m.root_face_degree()};
}

MultiPoly mono(Var v, int e) { return MultiPoly::var(v, e); }

}  // namespace

TSeries brute_force_gf(EquationId eq, const Params& params, int N) {
  if (N < 0) throw DomainError("negative order");
  const EquationInfo& info = equation_info(eq);
  split_params(info, params);
  using enum Var;
  TSeries out(N, info.main);
  auto add = [&](int n, const MultiPoly& p) { out.at(n) += p; };
  for (int n = 0; n <= N; ++n) {
    switch (eq) {
      case EquationId::MAPS_1CAT:
        for (const auto& m : all_maps(n)) add(n, mono(y, stats_of(m).df));
        break;
      case EquationId::NT:
        for (const auto& m : near_triangulations(n)) add(n, mono(y, stats_of(m).df));
        break;
      case EquationId::NQ:
        for (const auto& m : near_quadrangulations(n)) add(n, mono(y, stats_of(m).df));
        break;
      case EquationId::BIP:
        for (const auto& m : bipartite_maps(n)) add(n, mono(y, stats_of(m).df / 2));
        break;
      case EquationId::EULER_NT:
        for (const auto& m : eulerian_near_triangulations(n)) add(n, mono(y, stats_of(m).df / 3));
        break;
      case EquationId::POTTS_MAPS:
        for (const auto& m : all_maps(n)) {
          Stats s = stats_of(m);
          add(n, potts(m).divide_exact(mono(q, 1)) * mono(w, s.vertices - 1) * mono(x, s.dv) * mono(y, s.df));
        }
        break;
      case EquationId::TUTTE_MAPS:
        for (const auto& m : all_maps(n)) {
          Stats s = stats_of(m);
          add(n, tutte(m) * mono(w, s.vertices - 1) * mono(z, s.faces - 1) * mono(x, s.dv) * mono(y, s.df));
        }
        break;
      case EquationId::TUTTE_NONSEP_TRI:
        for (const auto& m : nonseparable_near_triangulations(n)) {
          Stats s = stats_of(m);
          add(n, specializations(m).chromatic_poly * mono(x, s.dv) * mono(y, s.df));
        }
        break;
      case EquationId::POTTS_QUASI_TRI:
        for (const auto& m : near_triangulations(n)) {
          Stats s = stats_of(m);
          add(n, potts(m).divide_exact(mono(q, 1)) * mono(z, s.faces - 1) * mono(y, s.df));
        }
        break;
      case EquationId::TUTTE_QUASI_TRI:
        for (const auto& m : near_triangulations(n)) {
          Stats s = stats_of(m);
          add(n, tutte(m) * mono(z, s.faces - 1) * mono(y, s.df));
        }
        break;
      case EquationId::BIPOLAR_MAPS:
        if (n == 0) break;
        for (const auto& m : all_maps(n)) {
          Stats s = stats_of(m);
          add(n, MultiPoly(Rational(specializations(m).bipolar_count)) * mono(w, s.vertices - 1) * mono(x, s.dv) *
                     mono(y, s.df));
        }
        break;
      case EquationId::BIPOLAR_TRI:
        for (const auto& m : nonseparable_near_triangulations(n)) {
          Stats s = stats_of(m);
          add(n, MultiPoly(Rational(specializations(m).bipolar_count)) * mono(x, s.dv) * mono(y, s.df));
        }
        break;
    }
  }
  return specialize(out, params);
}

}  // namespace tuttelab
