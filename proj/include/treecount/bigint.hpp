#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace treecount {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt ipow(const BigInt& base, int exp) {
  if (exp < 0) throw std::domain_error("ipow: negative exponent");
  return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline BigInt catalan(int n) { return binomial(2 * n, n) / (n + 1); }

/// Falling factorial m (m-1) ... (m-len+1); empty product is 1.
inline BigInt falling(int m, int len) {
  BigInt r = 1;
  for (int i = 0; i < len; ++i) r *= m - i;
  return r;
}

inline std::string to_decimal(const BigInt& x) { return x.str(); }

inline std::string to_decimal(const Rational& q) {
  auto num = boost::multiprecision::numerator(q);
  auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Exact conversion of an integral rational; throws if the value has a denominator.
inline BigInt to_integer(const Rational& q) {
  if (boost::multiprecision::denominator(q) != 1)
    throw std::logic_error("non-integral rational " + to_decimal(q));
  return boost::multiprecision::numerator(q);
}

}  // namespace treecount
