#pragma once

// Truncated power series in x over exact coefficients, and checks of the
// differential and functional equations satisfied by the exponential
// generating functions of the proper-vertex polynomials.

#include <optional>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "identity.hpp"
#include "polynomial.hpp"

namespace treecount {

class order_mismatch : public error {
 public:
  using error::error;
};

class degenerate_exponent : public error {
 public:
  using error::error;
};

namespace detail {

inline Rational invert_unit(const Rational& c) {
  if (c == 0) throw domain_error("series reciprocal: constant term is zero");
  return 1 / c;
}

inline PolyQ invert_unit(const PolyQ& c) {
  if (c.degree() != 0) throw domain_error("series reciprocal: constant term is not a unit");
  return PolyQ::constant(1 / c[0]);
}

}  // namespace detail

/// sum_{i=0}^{N} c_i x^i, with every coefficient beyond N unknown.
template <class R>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : c_(static_cast<std::size_t>(check_order(order)) + 1, R(0)) {}
  TruncatedSeries(int order, std::vector<R> coeffs) : TruncatedSeries(order) {
    for (std::size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = std::move(coeffs[i]);
  }

  static TruncatedSeries constant(int order, R v) {
    TruncatedSeries s(order);
    s.c_[0] = std::move(v);
    return s;
  }
  /// The series x.
  static TruncatedSeries x(int order) {
    TruncatedSeries s(order);
    if (order >= 1) s.c_[1] = R(1);
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const R& operator[](int i) const { return c_.at(static_cast<std::size_t>(i)); }
  R& operator[](int i) { return c_.at(static_cast<std::size_t>(i)); }
  const std::vector<R>& coeffs() const { return c_; }

  TruncatedSeries truncate(int order) const {
    if (order > this->order()) throw order_mismatch("cannot raise the truncation order");
    return TruncatedSeries(order, std::vector<R>(c_.begin(), c_.begin() + order + 1));
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    same_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    same_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  TruncatedSeries& operator*=(const R& s) {
    for (auto& c : c_) c = c * s;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const R& s) { return a *= s; }
  friend TruncatedSeries operator*(const R& s, TruncatedSeries a) {
    for (auto& c : a.c_) c = s * c;
    return a;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.same_order(b);
    TruncatedSeries out(a.order());
    const int n = a.order();
    for (int i = 0; i <= n; ++i) {
      if (a.c_[static_cast<std::size_t>(i)] == R(0)) continue;
      for (int j = 0; i + j <= n; ++j)
        out.c_[static_cast<std::size_t>(i + j)] +=
            a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
    }
    return out;
  }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  /// Multiplication by x; the top coefficient falls off.
  TruncatedSeries shift() const {
    TruncatedSeries out(order());
    for (std::size_t i = 1; i < c_.size(); ++i) out.c_[i] = c_[i - 1];
    return out;
  }

  /// d/dx. Only N-1 coefficients of the derivative are known.
  TruncatedSeries derivative() const {
    if (order() < 1) throw order_mismatch("derivative needs order at least 1");
    TruncatedSeries out(order() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out.c_[i - 1] = c_[i] * R(static_cast<int>(i));
    return out;
  }

  TruncatedSeries pow(int m) const {
    if (m < 0) throw domain_error("pow: negative exponent");
    TruncatedSeries result = constant(order(), R(1));
    TruncatedSeries base = *this;
    while (m > 0) {
      if (m & 1) result *= base;
      m >>= 1;
      if (m) base *= base;
    }
    return result;
  }

  /// 1/s; the constant term must be invertible.
  TruncatedSeries reciprocal() const {
    R inv0 = detail::invert_unit(c_[0]);
    TruncatedSeries out(order());
    out.c_[0] = inv0;
    for (std::size_t i = 1; i < c_.size(); ++i) {
      R acc(0);
      for (std::size_t j = 1; j <= i; ++j) acc += c_[j] * out.c_[i - j];
      out.c_[i] = R(0) - acc * inv0;
    }
    return out;
  }

  /// Replaces every coefficient by f(coefficient).
  template <class F>
  auto map(F&& f) const {
    using D = decltype(f(c_[0]));
    std::vector<D> out;
    for (const auto& c : c_) out.push_back(f(c));
    return TruncatedSeries<D>(order(), std::move(out));
  }

  bool operator==(const TruncatedSeries&) const = default;

 private:
  static int check_order(int order) {
    if (order < 0) throw order_mismatch("negative truncation order");
    return order;
  }
  void same_order(const TruncatedSeries& o) const {
    if (o.order() != order())
      throw order_mismatch("truncation orders differ: " + std::to_string(order()) + " vs " +
                           std::to_string(o.order()));
  }

  std::vector<R> c_;
};

/// Series with coefficients in Q[t].
using SeriesX = TruncatedSeries<PolyQ>;
/// Series with rational coefficients (t specialized).
using SeriesQ = TruncatedSeries<Rational>;

/// Families with a generating-function equation of the form
///   G' = c x G^(p-1) G' + t G^p,   G(0) = 1,
/// with (c, p) = (k, k) for k-ary trees, (1, 2) for forests and (1, 3) for
/// plane forests.
struct EquationShape {
  int c;
  int p;
};

inline EquationShape equation_shape(PolyFamily family, int k) {
  switch (family) {
    case PolyFamily::kary:
      if (k < 2) throw std::invalid_argument("k must be at least 2");
      return {k, k};
    case PolyFamily::forest: return {1, 2};
    case PolyFamily::plane_forest: return {1, 3};
    default: throw std::invalid_argument("no generating-function equation for this family");
  }
}

/// sum_{n<=N} poly_closed(n) x^n / n!
inline SeriesX build_series(PolyFamily family, int order, int k = 2) {
  if (order < 1) throw std::invalid_argument("build_series: order must be at least 1");
  SeriesX s(order);
  for (int n = 0; n <= order; ++n)
    s[n] = poly_closed(family, n, k).cast<Rational>() / Rational(factorial(n));
  return s;
}

inline SeriesQ specialize(const SeriesX& s, const Rational& t0) {
  return s.map([&](const PolyQ& p) { return p.eval(t0); });
}

struct SeriesCheck {
  bool pass = true;
  /// Lowest order where the two sides differ.
  std::optional<int> first_failure;
};

template <class R>
SeriesCheck compare_series(const TruncatedSeries<R>& lhs, const TruncatedSeries<R>& rhs) {
  for (int i = 0; i <= lhs.order(); ++i)
    if (!(lhs[i] == rhs[i])) return {false, i};
  return {};
}

/// Checks G' = c x G^(p-1) G' + t G^p coefficientwise through x^(N-1),
/// symbolically in t.
inline SeriesCheck check_ode(PolyFamily family, int order, int k = 2) {
  if (order < 2) throw std::invalid_argument("check_ode: order must be at least 2");
  auto [c, p] = equation_shape(family, k);
  SeriesX g = build_series(family, order, k);
  SeriesX dg = g.derivative();
  SeriesX g1 = g.truncate(order - 1);
  SeriesX rhs = PolyQ::constant(c) * (g1.pow(p - 1) * dg).shift() + PolyQ::t() * g1.pow(p);
  return compare_series(dg, rhs);
}

/// Exponent base e(t0) = (p-1) t0 - c of the functional equation
/// G = (1 + e x G^(p-1))^(t/e).
inline int functional_exponent(PolyFamily family, int t0, int k = 2) {
  auto [c, p] = equation_shape(family, k);
  return (p - 1) * t0 - c;
}

/// Checks G^e = (1 + e x G^(p-1))^t0 at t = t0 through x^N, where
/// e = (p-1) t0 - c. Negative powers are moved to the other side, so only
/// nonnegative integer powers are taken.
inline SeriesCheck check_functional(PolyFamily family, int order, int t0, int k = 2) {
  const int e = functional_exponent(family, t0, k);
  if (e == 0)
    throw degenerate_exponent("functional equation is degenerate at t = " + std::to_string(t0) +
                              " (exponent base is zero)");
  auto [c, p] = equation_shape(family, k);
  (void)c;
  SeriesQ g = specialize(build_series(family, order, k), Rational(t0));
  SeriesQ base = SeriesQ::constant(order, 1) + Rational(e) * g.pow(p - 1).shift();
  auto pos = [](int v) { return v > 0 ? v : 0; };
  SeriesQ lhs = g.pow(pos(e)) * base.pow(pos(-t0));
  SeriesQ rhs = base.pow(pos(t0)) * g.pow(pos(-e));
  return compare_series(lhs, rhs);
}

}  // namespace treecount
