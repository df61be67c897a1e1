#include "tuttelab/closed_forms.hpp"

#include <functional>
#include <map>
#include <numeric>

#include "tuttelab/errors.hpp"

namespace tuttelab {

namespace {

using Args = std::vector<long>;
using Fn = std::function<Rational(const Args&)>;

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError("argument out of range: " + what);
}

Rational q(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer f(long n) { return factorial(n); }
// Binomial extended to negative integers as the symmetric limit of Gamma
// ratios: C(n, k) = (-1)^k C(k-n-1, k) for n < 0 <= k, and
// C(n, k) = (-1)^(n-k) C(-k-1, n-k) for k <= n < 0, so C(-1, -1) = 1.
Integer c(long n, long k) {
  if (k < 0) {
    if (n >= 0 || k > n) return 0;
    Integer b = binomial(-k - 1, n - k);
    return (n - k) % 2 ? Integer(-b) : b;
  }
  if (n >= 0) return binomial(n, k);
  Integer b = binomial(k - n - 1, k);
  return k % 2 ? Integer(-b) : b;
}

// T'(d, j, n_1, n_2, ...) and the tree-rooted count share this tail.
long sum_tail(const Args& a, size_t from) { return std::accumulate(a.begin() + from, a.end(), 0L); }

Integer prod_fact_tail(const Args& a, size_t from) {
  Integer p = 1;
  for (size_t k = from; k < a.size(); ++k) {
    require(a[k] >= 0, "degree counts must be nonnegative");
    p *= f(a[k]);
  }
  return p;
}

struct Entry {
  FormulaInfo info;
  size_t arity;  // minimum arity when variadic
  bool variadic;
  Fn fn;
};

const std::vector<Entry>& table() {
  static const std::vector<Entry> entries = {
      {{"maps", "n", "rooted planar maps with n edges"}, 1, false,
       [](const Args& a) {
         const long n = a[0];
         require(n >= 0, "n >= 0");
         return q(2 * ipow(3, n) * f(2 * n), f(n) * f(n + 2));
       }},
      {{"four_valent", "n", "rooted 4-valent planar maps with n vertices"}, 1, false,
       [](const Args& a) {
         const long n = a[0];
         require(n >= 0, "n >= 0");
         return q(2 * ipow(3, n) * c(2 * n, n), Integer((n + 1) * (n + 2)));
       }},
      {{"blossoming", "n", "blossoming trees with n inner nodes (t_n)"}, 1, false,
       [](const Args& a) {
         const long n = a[0];
         require(n >= 0, "n >= 0");
         return q(ipow(3, n) * c(2 * n, n), Integer(n + 1));
       }},
      {{"balanced_blossoming", "n", "balanced blossoming trees, 2 t_n / (n+2)"}, 1, false,
       [](const Args& a) {
         const long n = a[0];
         require(n >= 0, "n >= 0");
         return q(2 * ipow(3, n) * catalan(n), Integer(n + 2));
       }},
      {{"labelled_trees", "n", "labelled trees with n edges, 3^n C_n"}, 1, false,
       [](const Args& a) {
         const long n = a[0];
         require(n >= 0, "n >= 0");
         return Rational(ipow(3, n) * catalan(n));
       }},
      {{"quadrangulations", "n", "rooted quadrangulations with n faces, 2 3^n C_n / (n+2)"}, 1, false,
       [](const Args& a) {
         const long n = a[0];
         require(n >= 0, "n >= 0");
         return q(2 * ipow(3, n) * catalan(n), Integer(n + 2));
       }},
      {{"nt1", "n", "near-triangulations of outer degree 1 with 3n+2 edges"}, 1, false,
       [](const Args& a) {
         const long n = a[0];
         require(n >= 0, "n >= 0");
         return q(2 * ipow(4, n) * double_factorial(3 * n), double_factorial(n) * f(n + 2));
       }},
      {{"spanning_tree_series", "n", "maps with n edges weighted by spanning trees"}, 1, false,
       [](const Args& a) {
         const long n = a[0];
         require(n >= 0, "n >= 0");
         return q(c(2 * n, n) * c(2 * n + 2, n + 1), Integer((n + 1) * (n + 2)));
       }},
      {{"bipolar_tri", "m", "bipolar orientations of near-triangulations with m+1 vertices"}, 1, false,
       [](const Args& a) {
         const long m = a[0];
         require(m >= 1, "m >= 1");
         return q(f(3 * m), Integer(4 * m * m - 1) * f(m) * f(m) * f(m + 1));
       }},
      {{"bipolar_tri_root_face", "m j", "same, with root-face degree j"}, 2, false,
       [](const Args& a) {
         const long m = a[0], j = a[1];
         require(m >= 1 && j >= 2 && j <= m + 1, "m >= 1, 2 <= j <= m+1");
         return q(Integer(j * (j - 1)) * f(3 * m - j - 1), f(m) * f(m + 1) * f(m - j + 1));
       }},
      {{"bipolar_tri_degrees", "m i j", "same, with root-vertex degree i and root-face degree j"}, 3, false,
       [](const Args& a) {
         const long m = a[0], i = a[1], j = a[2];
         require(m >= 2 && i >= 2 && j >= 2 && j <= m + 1 && i + j <= 2 * m + 1,
                 "m >= 2, i >= 2, 2 <= j <= m+1, i+j <= 2m+1");
         // At j = m+1 the bracket is (m-1)(m-2), so (2m-j-2)! times it is (m-1)!,
         // which also covers m = 2 where (2m-j-2)! alone is undefined.
         Integer lead = j == m + 1 ? f(m - 1)
                                   : f(2 * m - j - 2) * Integer((2 * j + i - 6) * m + i + 3 * j - j * j - i * j);
         Integer num = Integer((i - 1) * (j - 1)) * lead * f(3 * m - i - j - 1);
         return q(num, f(m - 1) * f(m) * f(m - j + 1) * f(2 * m - i - j + 1));
       }},
      {{"bipolar_tri_series", "n i j", "[z^n u^i y^j] of the bipolar triangulation series at x = 1/(1-u)"}, 3, false,
       [](const Args& a) {
         const long n = a[0], i = a[1], j = a[2];
         require(n >= 0 && i >= 0, "n, i >= 0");
         if (j < 2 || j > n + 2 || (n + j) % 2 != 0) return Rational(0);
         Integer num = Integer((i + 1) * (j - 1) * (i + j)) * f((3 * n + j) / 2 + i - 1);
         return q(num, f((n - j) / 2 + 1) * f((n + j) / 2 + i + 1) * f((n + j) / 2));
       }},
      {{"bipolar", "n m", "bipolar orientations of maps with n edges and m+1 vertices"}, 2, false,
       [](const Args& a) {
         const long n = a[0], m = a[1];
         require(m >= 1 && m < n, "1 <= m < n");
         return q(2 * c(n, m - 1) * c(n, m) * c(n, m + 1), Integer((n - 1) * n * n));
       }},
      {{"bipolar_root_face", "n m j", "same, with root-face degree j"}, 3, false,
       [](const Args& a) {
         const long n = a[0], m = a[1], j = a[2];
         require(m >= 1 && m < n && j >= 2 && j <= m + 1, "1 <= m < n, 2 <= j <= m+1");
         return q(Integer(j * (j - 1)) * c(n, m) * c(n, m + 1) * c(n - j - 1, m - j + 1),
                  Integer((n - 1) * n * n));
       }},
      {{"bipolar_degrees", "n m i j", "same, with root-vertex degree i and root-face degree j"}, 4, false,
       [](const Args& a) {
         const long n = a[0], m = a[1], i = a[2], j = a[3];
         require(n >= 3 && m >= 1 && m < n && i >= 2 && i <= n - m + 1 && j >= 2 && j <= m + 1,
                 "n >= 3, 1 <= m < n, 2 <= i <= n-m+1, 2 <= j <= m+1");
         Integer bracket =
             c(n - j - 1, n - m - 2) * c(n - i - 1, m - 2) - c(n - j - 1, n - m - 1) * c(n - i - 1, m - 1);
         return q(Integer((i - 1) * (j - 1)) * c(n, m) * bracket, Integer((n - 1) * n));
       }},
      {{"tree_rooted_edges", "n", "tree-rooted maps with n edges"}, 1, false,
       [](const Args& a) {
         const long n = a[0];
         require(n >= 0, "n >= 0");
         return q(f(2 * n) * f(2 * n + 2), f(n) * f(n + 1) * f(n + 1) * f(n + 2));
       }},
      {{"tree_rooted", "i j", "tree-rooted maps with i+1 vertices and j+1 faces"}, 2, false,
       [](const Args& a) {
         const long i = a[0], j = a[1];
         require(i >= 0 && j >= 0, "i, j >= 0");
         return q(f(2 * i + 2 * j), f(i) * f(i + 1) * f(j) * f(j + 1));
       }},
      {{"tree_rooted_triang", "i d", "tree-rooted near-triangulations with i+1 vertices and outer degree d"}, 2,
       false,
       [](const Args& a) {
         const long i = a[0], d = a[1];
         require(i >= 1 && d >= 1 && d <= 3 * i, "i >= 1, 1 <= d <= 3i");
         return q(Integer(d) * c(3 * i - d, i) * c(4 * i - d, i), Integer((i + 1) * (4 * i - d)));
       }},
      {{"tree_rooted_triang_edges", "n i", "[t^n y^(3i-n)] of the Tutte series of near-triangulations at mu = nu = 1"},
       2, false,
       [](const Args& a) {
         const long n = a[0], i = a[1];
         require(n >= 1 && i >= 0 && 3 * i - n >= 0, "n >= 1, 3i >= n");
         return q(Integer(3 * i - n) * c(n, i) * c(n + i, i), Integer((i + 1) * (n + i)));
       }},
      {{"tree_rooted_cubic", "i d", "tree-rooted maps, root degree d, 2i-d other vertices all of degree 3"}, 2,
       false,
       [](const Args& a) {
         const long i = a[0], d = a[1];
         require(i >= 1 && d >= 1 && d <= 2 * i, "i >= 1, 1 <= d <= 2i");
         return q(Integer(d) * f(4 * i - d - 1), f(i) * f(i + 1) * f(2 * i - d));
       }},
      {{"half_edge_tree", "d j n1 ...", "plane trees with root degree d, n_k other vertices of degree k, 2j half-edges"},
       2, true,
       [](const Args& a) {
         const long d = a[0], j = a[1];
         require(d >= 1 && j >= 0 && 2 * j - 1 + sum_tail(a, 2) >= 0, "d >= 1, j >= 0, some vertex besides the root");
         return q(Integer(d) * f(2 * j - 1 + sum_tail(a, 2)), f(2 * j) * prod_fact_tail(a, 2));
       }},
      {{"tree_rooted_degrees", "d n1 ...", "tree-rooted maps, root degree d, n_k other vertices of degree k"}, 1,
       true,
       [](const Args& a) {
         const long d = a[0];
         require(d >= 1, "d >= 1");
         long excess2 = d;
         for (size_t k = 1; k < a.size(); ++k) excess2 += (static_cast<long>(k) - 2) * a[k];
         require(excess2 >= 0 && excess2 % 2 == 0, "d + sum (k-2) n_k even and nonnegative");
         const long j = excess2 / 2;
         require(2 * j - 1 + sum_tail(a, 1) >= 0, "some vertex besides the root");
         return q(Integer(d) * f(2 * j - 1 + sum_tail(a, 1)), f(j) * f(j + 1) * prod_fact_tail(a, 1));
       }},
      {{"shuffles", "i j", "shuffles of a Dyck word of length 2i and one of length 2j"}, 2, false,
       [](const Args& a) {
         const long i = a[0], j = a[1];
         require(i >= 0 && j >= 0, "i, j >= 0");
         return Rational(c(2 * i + 2 * j, 2 * i) * catalan(i) * catalan(j));
       }},
      {{"v_coeff", "i j n", "[w^i z^j t^n u^(n+1-2i-2j)] V"}, 3, false,
       [](const Args& a) {
         const long i = a[0], j = a[1], n = a[2];
         require(n >= 1 && i >= 0 && j >= 1 && n + 1 - i - 2 * j >= 0, "n >= 1, i >= 0, j >= 1, i + 2j <= n+1");
         return q(f(n - 1), f(i) * f(j - 1) * f(j) * f(n + 1 - i - 2 * j));
       }},
      {{"u_coeff", "n i", "[t^n y^(3i-n+2)] U"}, 2, false,
       [](const Args& a) {
         const long n = a[0], i = a[1];
         require(n >= 1 && i >= 0, "n >= 1, i >= 0");
         return q(c(n, i + 1) * c(n + i - 1, i), Integer(n));
       }},
  };
  return entries;
}

}  // namespace

const std::vector<FormulaInfo>& formulas() {
  static const std::vector<FormulaInfo> list = [] {
    std::vector<FormulaInfo> out;
    for (const auto& e : table()) out.push_back(e.info);
    return out;
  }();
  return list;
}

Rational closed_form(const std::string& name, const std::vector<long>& args) {
  for (const auto& e : table()) {
    if (name != e.info.name) continue;
    if (e.variadic ? args.size() < e.arity : args.size() != e.arity)
      throw DomainError(name + " expects arguments: " + e.info.args);
    return e.fn(args);
  }
  throw DomainError("unknown formula: " + name);
}

}  // namespace tuttelab
