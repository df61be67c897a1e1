#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tuttelab/rational.hpp"

namespace tuttelab {

// Declared variable list; printing order follows this order.
enum class Var : int { q = 0, nu, mu, w, z, x, y, u, v, t };
inline constexpr int kNumVars = 10;

const char* var_name(Var v);
std::optional<Var> var_from_name(const std::string& s);

// Exponent vector. Negative entries are allowed (Laurent monomials).
using Monomial = std::array<int16_t, kNumVars>;

// Sparse exact polynomial (Laurent in any variable) with rational coefficients.
// Terms are kept sorted by exponent vector and never hold a zero coefficient.
class MultiPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(long c);             // NOLINT(google-explicit-constructor)
  MultiPoly(int c) : MultiPoly(static_cast<long>(c)) {}  // NOLINT

  static MultiPoly var(Var v, int exponent = 1);
  static MultiPoly monomial(const Monomial& m, const Rational& c = 1);
  static MultiPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Coefficient of the empty monomial.
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;

  bool depends_on(Var v) const;
  // Largest / smallest exponent of v; 0 for the zero polynomial.
  int max_degree(Var v) const;
  int min_degree(Var v) const;

  // [v^k]P as a polynomial free of v.
  MultiPoly coeff(Var v, int k) const;
  // Terms whose v-exponent lies in [lo, hi].
  MultiPoly part(Var v, int lo, int hi) const;
  MultiPoly positive_part(Var v) const;
  MultiPoly nonneg_part(Var v) const;
  MultiPoly truncate_above(Var v, int max_exponent) const;

  MultiPoly shift(Var v, int k) const;  // multiply by v^k
  MultiPoly subs(Var v, const Rational& a) const;
  // Substitution by a polynomial; negative powers of v require p to be a monomial.
  MultiPoly subs(Var v, const MultiPoly& p) const;
  MultiPoly subs(const std::map<Var, MultiPoly>& values) const;
  MultiPoly derivative(Var v) const;

  // (P(v) - P(a)) / (v - a) by synthetic division; P must be polynomial in v.
  MultiPoly divided_difference(Var v, const Rational& a) const;
  // Exact division by a nonzero constant or a single monomial. Throws
  // DivisionError if dividing by a monomial would create a negative exponent
  // in a variable where this polynomial has none.
  MultiPoly divide_exact(const MultiPoly& d) const;

  MultiPoly pow(unsigned e) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  // Canonical string: graded lex on the declared variable list, e.g.
  // "q^2*nu - 1/2*q + x^-1".
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
  void add_scaled(const MultiPoly& o, int sign);
};

inline Monomial unit_monomial() { return Monomial{}; }
inline int exponent(const Monomial& m, Var v) { return m[static_cast<int>(v)]; }
std::string monomial_string(const Monomial& m);

}  // namespace tuttelab
