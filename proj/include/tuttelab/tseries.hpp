#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tuttelab/multipoly.hpp"

namespace tuttelab {

// Power series in a main variable (t or z) truncated after order N, with
// MultiPoly coefficients. Coefficients may be Laurent in other variables.
class TSeries {
 public:
  TSeries() : TSeries(0) {}
  explicit TSeries(int order, Var main = Var::t);

  static TSeries constant(const MultiPoly& p, int order, Var main = Var::t);
  // Splits p by powers of the main variable; negative powers are rejected.
  static TSeries from_poly(const MultiPoly& p, int order, Var main = Var::t);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  Var main_var() const { return main_; }

  const MultiPoly& operator[](int n) const { return c_.at(n); }
  MultiPoly& at(int n) { return c_.at(n); }
  const std::vector<MultiPoly>& coefficients() const { return c_; }

  TSeries truncated(int order) const;
  // Multiply by main^k; k < 0 requires the low coefficients to vanish.
  TSeries shift(int k) const;
  TSeries map(const std::function<MultiPoly(const MultiPoly&)>& f) const;
  TSeries inverse() const;
  TSeries pow(unsigned e) const;
  TSeries derivative() const;
  // Substitutes a catalytic variable by a series in the same main variable.
  TSeries subs(Var v, const TSeries& s) const;
  MultiPoly to_poly() const;

  TSeries operator-() const;
  TSeries& operator+=(const TSeries& o);
  TSeries& operator-=(const TSeries& o);
  TSeries& operator*=(const MultiPoly& p);

  friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
  friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
  friend TSeries operator*(const TSeries& a, const TSeries& b);
  friend TSeries operator*(TSeries a, const MultiPoly& p) { return a *= p; }
  friend TSeries operator*(const MultiPoly& p, TSeries a) { return a *= p; }

  friend bool operator==(const TSeries& a, const TSeries& b) { return a.main_ == b.main_ && a.c_ == b.c_; }
  friend bool operator!=(const TSeries& a, const TSeries& b) { return !(a == b); }

  // Smallest n <= min(order) where the coefficients differ.
  std::optional<int> first_difference(const TSeries& o) const;

  std::string to_string() const;

 private:
  Var main_;
  std::vector<MultiPoly> c_;
};

}  // namespace tuttelab
