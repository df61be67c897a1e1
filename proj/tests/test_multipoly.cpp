#include <doctest.h>

#include "tuttelab/errors.hpp"
#include "tuttelab/multipoly.hpp"
#include "tuttelab/tseries.hpp"

using namespace tuttelab;

namespace {
MultiPoly V(Var v, int e = 1) { return MultiPoly::var(v, e); }
}  // namespace

TEST_CASE("arithmetic and canonical printing") {
  MultiPoly p = V(Var::q) * V(Var::q) * V(Var::nu) - MultiPoly(Rational(1, 2)) * V(Var::q) + V(Var::x, -1);
  CHECK(p.to_string() == "q^2*nu - 1/2*q + x^-1");
  CHECK((p - p).is_zero());
  CHECK(((V(Var::x) + 1) * (V(Var::x) - 1)).to_string() == "x^2 - 1");
  CHECK(MultiPoly().to_string() == "0");
  CHECK((V(Var::q) + V(Var::nu)).pow(2).to_string() == "q^2 + 2*q*nu + nu^2");
}

TEST_CASE("substitution and derivatives") {
  MultiPoly p = V(Var::x, 2) * V(Var::y) + V(Var::y, -1);
  CHECK(p.subs(Var::y, Rational(2)).to_string() == "2*x^2 + 1/2");
  CHECK(p.subs(Var::x, V(Var::y) + 1).to_string() == "y^3 + 2*y^2 + y + y^-1");
  CHECK_THROWS_AS(p.subs(Var::y, V(Var::x) + 1), DivisionError);
  CHECK(p.derivative(Var::x).to_string() == "2*x*y");
  CHECK(p.coeff(Var::y, 1).to_string() == "x^2");
}

TEST_CASE("positive part of a Laurent polynomial") {
  MultiPoly p = V(Var::x, -1) + 1 + V(Var::x);
  CHECK(p.positive_part(Var::x) == V(Var::x));
  CHECK(p.nonneg_part(Var::x) == V(Var::x) + 1);
}

TEST_CASE("divided differences are exact") {
  MultiPoly p = V(Var::y, 3) * V(Var::q) + V(Var::y) + 5;
  MultiPoly dd = p.divided_difference(Var::y, Rational(1));
  CHECK(dd * (V(Var::y) - 1) == p - p.subs(Var::y, Rational(1)));
  CHECK((V(Var::y, 2) - 4).divided_difference(Var::y, Rational(2)) == V(Var::y) + 2);
  CHECK_THROWS_AS(V(Var::y, -1).divided_difference(Var::y, Rational(1)), DivisionError);
}

TEST_CASE("monomial exact division") {
  MultiPoly p = V(Var::q, 2) * V(Var::nu) + V(Var::q);
  CHECK(p.divide_exact(V(Var::q)) == V(Var::q) * V(Var::nu) + 1);
  CHECK_THROWS_AS(p.divide_exact(V(Var::q, 2)), DivisionError);
  CHECK(p.divide_exact(MultiPoly(2)) == p * Rational(1, 2));
}

TEST_CASE("series arithmetic") {
  TSeries one_minus_t(5);
  one_minus_t.at(0) = 1;
  one_minus_t.at(1) = -1;
  TSeries inv = one_minus_t.inverse();
  for (int n = 0; n <= 5; ++n) CHECK(inv[n] == MultiPoly(1));
  CHECK((inv * one_minus_t).to_poly() == MultiPoly(1));
  TSeries sq = inv.pow(2);
  CHECK(sq[4] == MultiPoly(5));
  CHECK(inv.derivative()[2] == MultiPoly(3));
  CHECK(inv.shift(2)[2] == MultiPoly(1));
  CHECK(inv.shift(2)[1].is_zero());
}

TEST_CASE("series substitution of a catalytic variable") {
  // F = sum_n x^n t^n with x -> 1/(1-t) gives sum_n t^n (1-t)^-n.
  TSeries f(4);
  for (int n = 0; n <= 4; ++n) f.at(n) = V(Var::x, n);
  TSeries x(4);
  for (int n = 0; n <= 4; ++n) x.at(n) = 1;
  TSeries g = f.subs(Var::x, x);
  // t/(1-t) / (1 - t/(1-t)) + 1 = (1-t)/(1-2t): coefficients 1,1,2,4,8
  CHECK(g[0] == MultiPoly(1));
  CHECK(g[1] == MultiPoly(1));
  CHECK(g[2] == MultiPoly(2));
  CHECK(g[4] == MultiPoly(8));
}
