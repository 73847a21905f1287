#pragma once

// Exact evaluation of the hook-product identity
//
//   (n+1)^(n-1) = sum over binary shapes b of n!/2^n * prod_v (1 + 1/h(v))
//
// and its expanded form, the labeling count behind it, and the proper-vertex
// polynomials sum_T t^pv(T) for k-ary trees, forests, plane forests, rooted
// trees and plane trees (closed form, brute force, and recurrence).

#include <cstdint>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "enumerate.hpp"
#include "polynomial.hpp"
#include "shape.hpp"
#include "statistics.hpp"

namespace treecount {

/// n!/2^n * prod_v (1 + 1/h(v)) for one shape of size n.
inline Rational shape_weight(const BinaryShape& shape, int n) {
  if (shape.size() != n) throw std::invalid_argument("shape_weight: shape size differs from n");
  Rational w(factorial(n), ipow(2, n));
  for (int h : shape.hooks()) w *= Rational(h + 1, h);
  return w;
}

/// Per-shape weights in canonical shape order.
inline std::vector<Rational> shape_contributions(int n) {
  std::vector<Rational> out;
  for (const auto& s : binary_shapes(n)) out.push_back(shape_weight(s, n));
  return out;
}

/// Sum of shape weights over all shapes of size n. With threads > 1 the
/// shapes are split by rank and the partial sums added in rank order.
inline Rational rhs_postnikov(int n, unsigned threads = 1) {
  if (n < 1) throw std::invalid_argument("rhs_postnikov: n must be at least 1");
  auto partial = [n](std::uint64_t first, std::uint64_t last) {
    Rational sum = 0;
    const auto& shapes = binary_shapes(n);
    for (std::uint64_t i = first; i < last; ++i) sum += shape_weight(shapes[i], n);
    return sum;
  };
  Rational total = 0;
  for (const auto& p : partition_by_shape(n, threads, partial)) total += p;
  return total;
}

/// n! * prod_v (1 + 1/h(v)): one shape's share of the expanded identity.
inline Rational expanded_by_product(const BinaryShape& shape) {
  Rational w(factorial(shape.size()));
  for (int h : shape.hooks()) w *= Rational(h + 1, h);
  return w;
}

/// n! * sum over vertex subsets a of prod_{v in a} 1/h(v), summed literally.
inline Rational expanded_by_subsets(const BinaryShape& shape) {
  const int n = shape.size();
  if (n > 20) throw std::out_of_range("expanded_by_subsets: too many subsets");
  auto h = shape.hooks();
  Rational sum = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Rational term = 1;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) term /= h[static_cast<std::size_t>(v)];
    sum += term;
  }
  return sum * factorial(n);
}

/// Sum of expanded_by_product over the shapes of size n. Throws
/// std::logic_error if the exact sum is not an integer.
inline BigInt rhs_expanded(int n) {
  if (n < 1) throw std::invalid_argument("rhs_expanded: n must be at least 1");
  Rational sum = 0;
  for (const auto& s : binary_shapes(n)) sum += expanded_by_product(s);
  return to_integer(sum);
}

inline BigInt rhs_expanded_subsets(int n) {
  if (n < 1) throw std::invalid_argument("rhs_expanded_subsets: n must be at least 1");
  Rational sum = 0;
  for (const auto& s : binary_shapes(n)) sum += expanded_by_subsets(s);
  return to_integer(sum);
}

/// Number of labelings of the shape in which every node of `alpha` (preorder
/// node indices) carries the smallest label of its descendants:
/// n! / prod_{v in alpha} h(v).
inline BigInt labeling_count(const BinaryShape& shape, const std::vector<int>& alpha) {
  auto h = shape.hooks();
  BigInt denom = 1;
  for (int v : alpha) {
    if (v < 0 || v >= shape.size()) throw std::out_of_range("labeling_count: node outside shape");
    denom *= h[static_cast<std::size_t>(v)];
  }
  BigInt num = factorial(shape.size());
  if (num % denom != 0) throw std::logic_error("labeling_count: hook product does not divide n!");
  return num / denom;
}

/// Families that carry a proper-vertex polynomial. Binary trees are k-ary
/// with k = 2. For rooted and plane trees, n is the number of vertices.
enum class PolyFamily { kary, forest, plane_forest, rooted_tree, plane_tree };

inline PolyFamily poly_family(Family f) {
  switch (f) {
    case Family::kary:
    case Family::binary: return PolyFamily::kary;
    case Family::forest: return PolyFamily::forest;
    case Family::plane_forest: return PolyFamily::plane_forest;
    case Family::rooted_tree: return PolyFamily::rooted_tree;
    case Family::plane_tree: return PolyFamily::plane_tree;
  }
  throw std::logic_error("poly_family");
}

namespace detail {

// t * prod_{i=lo}^{hi} (a(i) t + b(i))
template <class A, class B>
PolyT t_times_linear_product(int lo, int hi, A a, B b) {
  PolyT p = PolyT::t();
  for (int i = lo; i <= hi; ++i) p *= PolyT{BigInt(b(i)), BigInt(a(i))};
  return p;
}

}  // namespace detail

/// Closed-form sum of t^pv over the family on [n].
inline PolyT poly_closed(PolyFamily family, int n, int k = 2) {
  if (n < 0) throw std::invalid_argument("poly_closed: n must be nonnegative");
  switch (family) {
    case PolyFamily::kary:
      if (k < 2) throw std::invalid_argument("k must be at least 2");
      if (n == 0) return PolyT{1};
      return detail::t_times_linear_product(1, n - 1, [&](int i) { return k * i - i + 1; },
                                            [&](int i) { return k * (n - i); });
    case PolyFamily::forest:
      if (n == 0) return PolyT{1};
      return detail::t_times_linear_product(1, n - 1, [](int i) { return i + 1; },
                                            [&](int i) { return n - i; });
    case PolyFamily::plane_forest:
      if (n == 0) return PolyT{1};
      return detail::t_times_linear_product(1, n - 1, [](int i) { return 2 * i + 1; },
                                            [&](int i) { return n - i; });
    case PolyFamily::rooted_tree:
      if (n == 0) return PolyT{};
      return detail::t_times_linear_product(0, n - 2, [](int i) { return i + 1; },
                                            [&](int i) { return n - 1 - i; });
    case PolyFamily::plane_tree:
      if (n == 0) return PolyT{};
      return detail::t_times_linear_product(0, n - 2, [](int i) { return 2 * i + 1; },
                                            [&](int i) { return n - 1 - i; });
  }
  throw std::logic_error("poly_closed: unknown family");
}

inline PolyT poly_closed(Family family, int n, int k = 2) {
  return poly_closed(poly_family(family), n, family == Family::binary ? 2 : k);
}

/// sum of t^pv(T) by exhaustive enumeration.
inline PolyT poly_brute(Family family, int n, int k = 2, const EnumOptions& opt = {}) {
  if (family == Family::binary) k = 2;
  std::vector<std::uint64_t> by_pv(static_cast<std::size_t>(n) + 1, 0);
  for_each_labeled(family, n, k, [&](const auto& s) { ++by_pv[static_cast<std::size_t>(pv(s))]; }, opt);
  std::vector<BigInt> cs(by_pv.begin(), by_pv.end());
  return PolyT(std::move(cs));
}

/// a_n(t) for k-ary trees from the root-deletion recurrence
///
///   a_{m+1} = k * sum_j m * C(m-1, j) a_{j+1} c^{(k-1)}_{m-1-j} + t * c^{(k)}_m
///
/// where c^{(r)}_s sums prod a_{n_i} * multinomial(s; n_1..n_r) over
/// compositions of s into r parts. The first term covers a root that is not
/// the minimum vertex (the minimum sits in one of k subtrees); the second a
/// root that is the minimum.
inline PolyT poly_recurrence(int n, int k) {
  if (n < 0) throw std::invalid_argument("poly_recurrence: n must be nonnegative");
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  std::vector<PolyT> a{PolyT{1}};
  // conv[r][s] = c^{(r)}_s for the values of a known so far.
  auto convolutions = [&](int upto) {
    std::vector<std::vector<PolyT>> c(static_cast<std::size_t>(k) + 1,
                                      std::vector<PolyT>(static_cast<std::size_t>(upto) + 1));
    c[0][0] = PolyT{1};
    for (int r = 1; r <= k; ++r)
      for (int s = 0; s <= upto; ++s) {
        PolyT acc;
        for (int j = 0; j <= s; ++j) {
          const PolyT& prev = c[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(s - j)];
          if (prev.is_zero()) continue;
          acc += binomial(s, j) * (a[static_cast<std::size_t>(j)] * prev);
        }
        c[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] = std::move(acc);
      }
    return c;
  };
  for (int m = 0; m < n; ++m) {
    auto c = convolutions(m);
    PolyT next = PolyT::t() * c[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)];
    for (int j = 0; j <= m - 1; ++j) {
      BigInt w = BigInt(k) * m * binomial(m - 1, j);
      next += w * (a[static_cast<std::size_t>(j + 1)] *
                   c[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(m - 1 - j)]);
    }
    a.push_back(std::move(next));
  }
  return a[static_cast<std::size_t>(n)];
}

struct CheckResult {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

inline CheckResult make_check(std::string name, const BigInt& expected, const BigInt& actual) {
  return {std::move(name), to_decimal(expected), to_decimal(actual), expected == actual};
}

/// Evaluations of the closed forms at t = 1 and t = 2 against the family
/// sizes they generalize.
inline std::vector<CheckResult> special_values(int n, int k = 2) {
  if (n < 1) throw std::invalid_argument("special_values: n must be at least 1");
  std::vector<CheckResult> out;
  const BigInt one = 1, two = 2;
  out.push_back(make_check("a_n(1) = kn(kn-1)...(kn-n+2), k=" + std::to_string(k),
                           falling(k * n, n - 1), poly_closed(PolyFamily::kary, n, k).eval(one)));
  out.push_back(make_check("a_n(2) = 2^n (n+1)^(n-1), k=2", ipow(2, n) * ipow(n + 1, n - 1),
                           poly_closed(PolyFamily::kary, n, 2).eval(two)));
  out.push_back(make_check("f_n(1) = (n+1)^(n-1)", ipow(n + 1, n - 1),
                           poly_closed(PolyFamily::forest, n).eval(one)));
  out.push_back(make_check("p_n(1) = n! C_n", factorial(n) * catalan(n),
                           poly_closed(PolyFamily::plane_forest, n).eval(one)));
  out.push_back(make_check("rooted trees on n+1 vertices at t=1 = (n+1)^n", ipow(n + 1, n),
                           poly_closed(PolyFamily::rooted_tree, n + 1).eval(one)));
  out.push_back(make_check("plane trees on n+1 vertices at t=1 = (n+1)! C_n",
                           factorial(n + 1) * catalan(n),
                           poly_closed(PolyFamily::plane_tree, n + 1).eval(one)));
  return out;
}

}  // namespace treecount
