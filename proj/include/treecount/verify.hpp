#pragma once

// End-to-end checks reported as named expected/actual pairs. These back the
// `verify` command and are reused by the acceptance suite.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "bijection.hpp"
#include "enumerate.hpp"
#include "identity.hpp"
#include "series.hpp"

namespace treecount {

inline std::vector<CheckResult> verify_postnikov(int n, unsigned threads = 1) {
  Rational sum = rhs_postnikov(n, threads);
  return {{"(n+1)^(n-1) = sum over shapes of n!/2^n prod(1+1/h)", to_decimal(ipow(n + 1, n - 1)),
           to_decimal(sum), sum == Rational(ipow(n + 1, n - 1))}};
}

/// Expanded identity; the literal subset sum is compared shape by shape up to
/// `subset_limit`.
inline std::vector<CheckResult> verify_expanded(int n, int subset_limit = 5) {
  std::vector<CheckResult> out;
  out.push_back(make_check("2^n (n+1)^(n-1) = sum over shapes of n! prod(1+1/h)",
                           ipow(2, n) * ipow(n + 1, n - 1), rhs_expanded(n)));
  if (n <= subset_limit) {
    std::uint64_t agree = 0;
    for (const auto& s : binary_shapes(n)) agree += expanded_by_product(s) == expanded_by_subsets(s);
    out.push_back(make_check("shapes where subset sum = product form", catalan(n), agree));
    out.push_back(make_check("2^n (n+1)^(n-1) = literal subset sum", ipow(2, n) * ipow(n + 1, n - 1),
                             rhs_expanded_subsets(n)));
  }
  return out;
}

/// |Dn| three ways: the Dn generator, sum of 2^pv over binary trees, and the
/// closed form.
inline std::vector<CheckResult> verify_dn_count(int n, const EnumOptions& opt = {}) {
  std::uint64_t generated = 0;
  for_each_in_Dn(n, [&](const ColoredBinary&) { ++generated; }, opt);
  BigInt weighted = 0;
  for_each_binary_tree(n, [&](const SlottedTree& b) { weighted += BigInt(1) << pv(b); }, opt);
  BigInt expected = ipow(2, n) * count(Family::forest, n);
  return {make_check("|Dn| generated = sum over binary trees of 2^pv", weighted, generated),
          make_check("|Dn| = 2^n (n+1)^(n-1)", expected, generated)};
}

namespace detail {

inline std::string forest_key(const ColoredForest& f) {
  std::string key;
  for (Vertex v : f.vertices()) {
    key.push_back(static_cast<char>(f.parent(v)));
    key.push_back(color_code(f.color(v)));
  }
  return key;
}

struct BijectionTally {
  std::uint64_t members = 0;
  std::uint64_t in_En = 0;
  std::uint64_t white_is_right = 0;
  std::uint64_t in_Gn = 0;
  std::uint64_t forests = 0;
  std::uint64_t roundtrips = 0;
  std::set<std::string> images;
};

inline void tally_member(const ColoredBinary& d, int n, BijectionTally& t) {
  ++t.members;
  ColoredBinary e = big_flip(d);
  if (is_in_En(e)) ++t.in_En;
  if (white_improper_set(e) == right_improper_set(d)) ++t.white_is_right;
  if (!is_in_En(e)) return;
  ColoredPlaneTree g = restricted_phi(e);
  if (is_in_Gn(g)) ++t.in_Gn;
  ColoredForest f = full_map(d);
  if (f.structure().is_standard() && static_cast<int>(f.size()) == n) ++t.forests;
  if (full_map_inv(f) == d) ++t.roundtrips;
  t.images.insert(forest_key(f));
}

}  // namespace detail

/// Exhaustive check of Dn -> En -> Gn -> bicolored forests. Work is split by
/// binary shape rank across `threads`.
inline std::vector<CheckResult> verify_bijection(int n, unsigned threads = 1, const EnumOptions& opt = {}) {
  detail::check_ceiling(count_colored(Family::binary, n, Constraint::Dn), opt, "Dn");
  auto parts = partition_by_shape(n, threads, [n](std::uint64_t first, std::uint64_t last) {
    detail::BijectionTally t;
    for_each_binary_tree_by_shape(n, first, last, [&](const SlottedTree& b) {
      for_each_coloring_of(b, proper_set(b), [&](const ColoredBinary& d) { detail::tally_member(d, n, t); });
    });
    return t;
  });
  detail::BijectionTally all;
  for (auto& p : parts) {
    all.members += p.members;
    all.in_En += p.in_En;
    all.white_is_right += p.white_is_right;
    all.in_Gn += p.in_Gn;
    all.forests += p.forests;
    all.roundtrips += p.roundtrips;
    all.images.merge(p.images);
  }
  const BigInt expected = ipow(2, n) * count(Family::forest, n);
  const BigInt members = all.members;
  return {make_check("|Dn| = 2^n (n+1)^(n-1)", expected, members),
          make_check("big_flip(D) in En", members, all.in_En),
          make_check("white improper of big_flip(D) = right improper of D", members, all.white_is_right),
          make_check("restricted_phi(big_flip(D)) in Gn", members, all.in_Gn),
          make_check("full_map(D) is a bicolored forest on [n]", members, all.forests),
          make_check("full_map_inv(full_map(D)) = D", members, all.roundtrips),
          make_check("distinct images = 2^n (n+1)^(n-1)", expected, all.images.size())};
}

inline std::string describe(const SeriesCheck& c) {
  return c.pass ? "pass" : "fails at x^" + std::to_string(*c.first_failure);
}

inline std::vector<CheckResult> verify_ode(PolyFamily family, int order, int k = 2) {
  auto r = check_ode(family, order, k);
  return {{"differential equation through x^" + std::to_string(order - 1), "pass", describe(r), r.pass}};
}

inline std::vector<CheckResult> verify_functional(PolyFamily family, int order, int t0, int k = 2) {
  auto r = check_functional(family, order, t0, k);
  return {{"functional equation at t=" + std::to_string(t0) + " through x^" + std::to_string(order), "pass",
           describe(r), r.pass}};
}

inline bool all_pass(const std::vector<CheckResult>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const CheckResult& r) { return r.pass; });
}

}  // namespace treecount
