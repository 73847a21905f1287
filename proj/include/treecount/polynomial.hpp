#pragma once

#include <concepts>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"

namespace treecount {

/// Dense univariate polynomial in t, coefficients low to high. Always kept
/// without trailing zeros; the zero polynomial has no coefficients.
template <class C>
class Polynomial {
 public:
  using coeff_type = C;

  Polynomial() = default;
  Polynomial(std::initializer_list<C> cs) : c_(cs) { trim(); }
  explicit Polynomial(std::vector<C> cs) : c_(std::move(cs)) { trim(); }
  /// Constant polynomial.
  Polynomial(const C& v) : c_{v} { trim(); }
  template <std::integral I>
  Polynomial(I v) : c_{C(v)} {
    trim();
  }

  static Polynomial constant(C v) { return Polynomial(std::vector<C>{std::move(v)}); }
  static Polynomial monomial(C v, int degree) {
    std::vector<C> cs(static_cast<std::size_t>(degree) + 1, C(0));
    cs.back() = std::move(v);
    return Polynomial(std::move(cs));
  }
  static Polynomial t() { return monomial(C(1), 1); }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<C>& coeffs() const { return c_; }

  C operator[](int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : C(0);
  }

  C leading() const { return c_.empty() ? C(0) : c_.back(); }

  template <class X>
  X eval(const X& x) const {
    X acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  template <class D>
  Polynomial<D> cast() const {
    std::vector<D> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(D(c));
    return Polynomial<D>(std::move(out));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const C& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
  }
  Polynomial& operator/=(const C& s) {
    for (auto& c : c_) c /= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const C& s) { return a *= s; }
  friend Polynomial operator*(const C& s, Polynomial a) { return a *= s; }
  friend Polynomial operator/(Polynomial a, const C& s) { return a /= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> out(a.c_.size() + b.c_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(out));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  bool operator==(const Polynomial&) const = default;

  /// Coefficients as decimal strings, low to high.
  std::vector<std::string> to_strings() const {
    std::vector<std::string> out;
    for (const auto& c : c_) out.push_back(to_decimal(c));
    return out;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      const C& c = c_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      std::string mag = to_decimal(c < 0 ? C(-c) : c);
      if (!s.empty()) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      bool unit = (c == 1 || c == -1) && i > 0;
      if (!unit) s += mag;
      if (i > 0) s += i == 1 ? "t" : "t^" + std::to_string(i);
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<C> c_;
};

/// Polynomials in t with integer coefficients.
using PolyT = Polynomial<BigInt>;
/// Polynomials in t with rational coefficients.
using PolyQ = Polynomial<Rational>;

}  // namespace treecount
