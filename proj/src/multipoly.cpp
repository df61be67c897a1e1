#include "tuttelab/multipoly.hpp"

#include <algorithm>
#include <numeric>

#include "tuttelab/errors.hpp"

namespace tuttelab {

namespace {

constexpr const char* kVarNames[kNumVars] = {"q", "nu", "mu", "w", "z", "x", "y", "u", "v", "t"};

int idx(Var v) { return static_cast<int>(v); }

Monomial add(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) r[i] = static_cast<int16_t>(a[i] + b[i]);
  return r;
}

bool is_unit(const Monomial& m) {
  return std::all_of(m.begin(), m.end(), [](int16_t e) { return e == 0; });
}

int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

void normalize(std::vector<MultiPoly::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const MultiPoly::Term& a, const MultiPoly::Term& b) { return a.first < b.first; });
  size_t out = 0;
  for (size_t i = 0; i < terms.size();) {
    size_t j = i + 1;
    Rational c = terms[i].second;
    while (j < terms.size() && terms[j].first == terms[i].first) c += terms[j++].second;
    if (c != 0) {
      terms[out].first = terms[i].first;
      terms[out].second = c;
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

const char* var_name(Var v) { return kVarNames[idx(v)]; }

std::optional<Var> var_from_name(const std::string& s) {
  for (int i = 0; i < kNumVars; ++i)
    if (s == kVarNames[i]) return static_cast<Var>(i);
  return std::nullopt;
}

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_.emplace_back(unit_monomial(), c);
}

MultiPoly::MultiPoly(long c) : MultiPoly(Rational(c)) {}

MultiPoly MultiPoly::var(Var v, int exponent) {
  Monomial m{};
  m[idx(v)] = static_cast<int16_t>(exponent);
  return monomial(m);
}

MultiPoly MultiPoly::monomial(const Monomial& m, const Rational& c) {
  MultiPoly p;
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  normalize(terms);
  MultiPoly p;
  p.terms_ = std::move(terms);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && is_unit(terms_[0].first));
}

Rational MultiPoly::constant_term() const { return coefficient(unit_monomial()); }

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.first < key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

bool MultiPoly::depends_on(Var v) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.first[idx(v)] != 0; });
}

int MultiPoly::max_degree(Var v) const {
  if (terms_.empty()) return 0;
  int r = terms_[0].first[idx(v)];
  for (const auto& t : terms_) r = std::max(r, static_cast<int>(t.first[idx(v)]));
  return r;
}

int MultiPoly::min_degree(Var v) const {
  if (terms_.empty()) return 0;
  int r = terms_[0].first[idx(v)];
  for (const auto& t : terms_) r = std::min(r, static_cast<int>(t.first[idx(v)]));
  return r;
}

MultiPoly MultiPoly::coeff(Var v, int k) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.first[idx(v)] != k) continue;
    Monomial m = t.first;
    m[idx(v)] = 0;
    out.emplace_back(m, t.second);
  }
  return from_terms(std::move(out));
}

MultiPoly MultiPoly::part(Var v, int lo, int hi) const {
  MultiPoly p;
  for (const auto& t : terms_) {
    int e = t.first[idx(v)];
    if (e >= lo && e <= hi) p.terms_.push_back(t);
  }
  return p;
}

MultiPoly MultiPoly::positive_part(Var v) const { return part(v, 1, INT16_MAX); }
MultiPoly MultiPoly::nonneg_part(Var v) const { return part(v, 0, INT16_MAX); }
MultiPoly MultiPoly::truncate_above(Var v, int max_exponent) const {
  return part(v, INT16_MIN, max_exponent);
}

MultiPoly MultiPoly::shift(Var v, int k) const {
  if (k == 0) return *this;
  MultiPoly p = *this;
  for (auto& t : p.terms_) t.first[idx(v)] = static_cast<int16_t>(t.first[idx(v)] + k);
  return p;
}

MultiPoly MultiPoly::subs(Var v, const Rational& a) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    int e = t.first[idx(v)];
    Monomial m = t.first;
    m[idx(v)] = 0;
    if (e != 0 && a == 0) {
      if (e < 0) throw DivisionError(std::string("substituting 0 into negative power of ") + var_name(v));
      continue;
    }
    Rational c = t.second;
    if (e > 0) {
      Rational p(ipow(a.get_num(), e), ipow(a.get_den(), e));
      c *= p;
    } else if (e < 0) {
      Rational p(ipow(a.get_den(), -e), ipow(a.get_num(), -e));
      p.canonicalize();
      c *= p;
    }
    out.emplace_back(m, c);
  }
  return from_terms(std::move(out));
}

MultiPoly MultiPoly::subs(Var v, const MultiPoly& p) const {
  if (p.is_constant()) return subs(v, p.constant_term());
  std::map<int, std::vector<Term>> buckets;
  for (const auto& t : terms_) {
    Monomial m = t.first;
    m[idx(v)] = 0;
    buckets[t.first[idx(v)]].emplace_back(m, t.second);
  }
  MultiPoly inv;
  if (!buckets.empty() && buckets.begin()->first < 0) {
    if (p.size() != 1)
      throw DivisionError(std::string("negative power of ") + var_name(v) + " substituted by a non-monomial");
    Monomial m = p.terms_[0].first;
    for (auto& e : m) e = static_cast<int16_t>(-e);
    inv = monomial(m, 1 / p.terms_[0].second);
  }
  MultiPoly result;
  for (auto& [e, ts] : buckets) {
    MultiPoly rest = from_terms(std::move(ts));
    if (e >= 0)
      result += rest * p.pow(static_cast<unsigned>(e));
    else
      result += rest * inv.pow(static_cast<unsigned>(-e));
  }
  return result;
}

MultiPoly MultiPoly::subs(const std::map<Var, MultiPoly>& values) const {
  MultiPoly r = *this;
  for (const auto& [v, p] : values) r = r.subs(v, p);
  return r;
}

MultiPoly MultiPoly::derivative(Var v) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = t.first[idx(v)];
    if (e == 0) continue;
    Monomial m = t.first;
    m[idx(v)] = static_cast<int16_t>(e - 1);
    out.emplace_back(m, t.second * e);
  }
  return from_terms(std::move(out));
}

MultiPoly MultiPoly::divided_difference(Var v, const Rational& a) const {
  if (min_degree(v) < 0)
    throw DivisionError(std::string("divided difference of a Laurent polynomial in ") + var_name(v));
  std::map<Monomial, std::vector<Rational>> groups;
  for (const auto& t : terms_) {
    Monomial m = t.first;
    int e = m[idx(v)];
    m[idx(v)] = 0;
    auto& c = groups[m];
    if (static_cast<int>(c.size()) <= e) c.resize(e + 1);
    c[e] = t.second;
  }
  std::vector<Term> out;
  for (auto& [m, c] : groups) {
    int d = static_cast<int>(c.size()) - 1;
    Rational acc = 0;
    for (int j = d; j >= 1; --j) {
      acc = c[j] + a * acc;
      if (acc != 0) {
        Monomial mm = m;
        mm[idx(v)] = static_cast<int16_t>(j - 1);
        out.emplace_back(mm, acc);
      }
    }
  }
  return from_terms(std::move(out));
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& d) const {
  if (d.is_zero()) throw DivisionError("division by zero polynomial");
  if (d.is_constant()) return *this * (1 / d.constant_term());
  if (d.size() != 1) throw DivisionError("exact division only supports monomial divisors");
  const auto& [dm, dc] = d.terms_[0];
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (int i = 0; i < kNumVars; ++i) {
    if (dm[i] <= 0) continue;
    Var v = static_cast<Var>(i);
    if (!is_zero() && min_degree(v) >= 0 && min_degree(v) < dm[i])
      throw DivisionError(std::string("polynomial not divisible by ") + monomial_string(dm));
  }
  for (const auto& t : terms_) {
    Monomial m = t.first;
    for (int i = 0; i < kNumVars; ++i) m[i] = static_cast<int16_t>(m[i] - dm[i]);
    out.emplace_back(m, t.second / dc);
  }
  return from_terms(std::move(out));
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

void MultiPoly::add_scaled(const MultiPoly& o, int sign) {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      out.emplace_back(o.terms_[j].first, sign > 0 ? o.terms_[j].second : Rational(-o.terms_[j].second));
      ++j;
    } else {
      Rational c = terms_[i].second;
      if (sign > 0)
        c += o.terms_[j].second;
      else
        c -= o.terms_[j].second;
      if (c != 0) out.emplace_back(terms_[i].first, c);
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  add_scaled(o, 1);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  add_scaled(o, -1);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  if (a.size() == 1 || b.size() == 1) {
    const MultiPoly& one = a.size() == 1 ? a : b;
    const MultiPoly& other = a.size() == 1 ? b : a;
    const auto& [m, c] = one.terms_[0];
    r.terms_.reserve(other.size());
    // Translation by a fixed monomial keeps lexicographic order.
    for (const auto& t : other.terms_) r.terms_.emplace_back(add(t.first, m), t.second * c);
    return r;
  }
  struct Prod {
    Monomial m;
    uint32_t i, j;
  };
  std::vector<Prod> prods;
  prods.reserve(a.size() * b.size());
  for (uint32_t i = 0; i < a.size(); ++i)
    for (uint32_t j = 0; j < b.size(); ++j) prods.push_back({add(a.terms_[i].first, b.terms_[j].first), i, j});
  std::sort(prods.begin(), prods.end(), [](const Prod& x, const Prod& y) { return x.m < y.m; });
  Rational acc, tmp;
  for (size_t k = 0; k < prods.size();) {
    size_t l = k;
    mpq_mul(acc.get_mpq_t(), a.terms_[prods[l].i].second.get_mpq_t(), b.terms_[prods[l].j].second.get_mpq_t());
    for (++l; l < prods.size() && prods[l].m == prods[k].m; ++l) {
      mpq_mul(tmp.get_mpq_t(), a.terms_[prods[l].i].second.get_mpq_t(), b.terms_[prods[l].j].second.get_mpq_t());
      acc += tmp;
    }
    if (acc != 0) r.terms_.emplace_back(prods[k].m, acc);
    k = l;
  }
  return r;
}

std::string monomial_string(const Monomial& m) {
  std::string s;
  for (int i = 0; i < kNumVars; ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += kVarNames[i];
    if (m[i] != 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const Term*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
    int da = total_degree(a->first), db = total_degree(b->first);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  std::string s;
  bool first = true;
  for (const Term* t : order) {
    Rational c = t->second;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    first = false;
    bool unit = is_unit(t->first);
    if (unit) {
      s += tuttelab::to_string(c);
    } else {
      if (c != 1) s += tuttelab::to_string(c) + "*";
      s += monomial_string(t->first);
    }
  }
  return s;
}

}  // namespace tuttelab
