#include "tuttelab/tseries.hpp"

#include <algorithm>
#include <map>

#include "tuttelab/errors.hpp"

namespace tuttelab {

TSeries::TSeries(int order, Var main) : main_(main) {
  if (order < 0) throw DomainError("negative truncation order");
  c_.resize(order + 1);
}

TSeries TSeries::constant(const MultiPoly& p, int order, Var main) {
  TSeries s(order, main);
  s.c_[0] = p;
  return s;
}

TSeries TSeries::from_poly(const MultiPoly& p, int order, Var main) {
  TSeries s(order, main);
  if (p.min_degree(main) < 0) throw DomainError("negative power of the main variable");
  int top = std::min(order, p.max_degree(main));
  for (int n = 0; n <= top; ++n) s.c_[n] = p.coeff(main, n);
  return s;
}

TSeries TSeries::truncated(int order) const {
  TSeries s(std::min(order, this->order()), main_);
  std::copy(c_.begin(), c_.begin() + s.order() + 1, s.c_.begin());
  return s;
}

TSeries TSeries::shift(int k) const {
  TSeries s(order(), main_);
  for (int n = 0; n <= order(); ++n) {
    int m = n + k;
    if (m < 0) {
      if (!c_[n].is_zero()) throw DivisionError("negative shift of a series with low terms");
      continue;
    }
    if (m <= order()) s.c_[m] = c_[n];
  }
  if (k < 0) s = s.truncated(order() + k);
  return s;
}

TSeries TSeries::map(const std::function<MultiPoly(const MultiPoly&)>& f) const {
  TSeries s(order(), main_);
  for (int n = 0; n <= order(); ++n) s.c_[n] = f(c_[n]);
  return s;
}

TSeries TSeries::inverse() const {
  const MultiPoly& c0 = c_[0];
  if (c0.size() != 1) throw DivisionError("series inverse needs a monomial constant term");
  MultiPoly inv0 = MultiPoly(1).divide_exact(c0);
  TSeries r(order(), main_);
  r.c_[0] = inv0;
  for (int n = 1; n <= order(); ++n) {
    MultiPoly acc;
    for (int k = 1; k <= n; ++k)
      if (!c_[k].is_zero() && !r.c_[n - k].is_zero()) acc += c_[k] * r.c_[n - k];
    r.c_[n] = -(acc * inv0);
  }
  return r;
}

TSeries TSeries::pow(unsigned e) const {
  TSeries result = constant(MultiPoly(1), order(), main_);
  TSeries base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

TSeries TSeries::derivative() const {
  TSeries s(order(), main_);
  for (int n = 1; n <= order(); ++n) s.c_[n - 1] = c_[n] * Rational(n);
  return s.truncated(std::max(0, order() - 1));
}

TSeries TSeries::subs(Var v, const TSeries& s) const {
  if (v == main_) throw DomainError("cannot substitute the main variable");
  int N = std::min(order(), s.order());
  std::map<int, TSeries> powers;
  auto power = [&](int k) -> const TSeries& {
    auto it = powers.find(k);
    if (it != powers.end()) return it->second;
    TSeries p = k >= 0 ? s.truncated(N).pow(static_cast<unsigned>(k))
                       : s.truncated(N).inverse().pow(static_cast<unsigned>(-k));
    return powers.emplace(k, std::move(p)).first->second;
  };
  TSeries r(N, main_);
  for (int n = 0; n <= N; ++n) {
    if (c_[n].is_zero()) continue;
    int lo = c_[n].min_degree(v), hi = c_[n].max_degree(v);
    for (int k = lo; k <= hi; ++k) {
      MultiPoly ck = c_[n].coeff(v, k);
      if (ck.is_zero()) continue;
      const TSeries& pk = power(k);
      for (int m = 0; m + n <= N; ++m)
        if (!pk[m].is_zero()) r.c_[n + m] += ck * pk[m];
    }
  }
  return r;
}

MultiPoly TSeries::to_poly() const {
  MultiPoly p;
  for (int n = 0; n <= order(); ++n) p += c_[n].shift(main_, n);
  return p;
}

TSeries TSeries::operator-() const {
  TSeries s = *this;
  for (auto& c : s.c_) c = -c;
  return s;
}

TSeries& TSeries::operator+=(const TSeries& o) {
  if (o.order() < order()) *this = truncated(o.order());
  for (int n = 0; n <= order(); ++n) c_[n] += o.c_[n];
  return *this;
}

TSeries& TSeries::operator-=(const TSeries& o) {
  if (o.order() < order()) *this = truncated(o.order());
  for (int n = 0; n <= order(); ++n) c_[n] -= o.c_[n];
  return *this;
}

TSeries& TSeries::operator*=(const MultiPoly& p) {
  for (auto& c : c_) c = c * p;
  return *this;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
  int N = std::min(a.order(), b.order());
  TSeries r(N, a.main_);
  for (int i = 0; i <= N; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; i + j <= N; ++j)
      if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

std::optional<int> TSeries::first_difference(const TSeries& o) const {
  int N = std::min(order(), o.order());
  for (int n = 0; n <= N; ++n)
    if (c_[n] != o.c_[n]) return n;
  return std::nullopt;
}

std::string TSeries::to_string() const {
  std::string s;
  for (int n = 0; n <= order(); ++n) {
    if (c_[n].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + c_[n].to_string() + ")*" + var_name(main_) + "^" + std::to_string(n);
  }
  s += (s.empty() ? "" : " + ") + std::string("O(") + var_name(main_) + "^" + std::to_string(order() + 1) + ")";
  return s;
}

}  // namespace tuttelab
