#pragma once

// Exhaustive generators for every labeled family on [n], colored variants,
// and closed-form counts.
//
// Unordered trees and forests come from a backtracking search over parent
// maps. Plane families permute the child lists of those forests; k-ary trees
// assign child lists to slots injectively. Binary trees also have a
// shape-by-labeling route that can be split by shape rank.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <numeric>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "bigint.hpp"
#include "core.hpp"
#include "membership.hpp"
#include "shape.hpp"
#include "statistics.hpp"

namespace treecount {

enum class Family { rooted_tree, forest, plane_tree, plane_forest, binary, kary };

inline Family parse_family(std::string_view name) {
  if (name == "rooted_tree" || name == "rooted_trees" || name == "tree" || name == "trees")
    return Family::rooted_tree;
  if (name == "forest" || name == "forests") return Family::forest;
  if (name == "plane_tree" || name == "plane_trees") return Family::plane_tree;
  if (name == "plane_forest" || name == "plane_forests") return Family::plane_forest;
  if (name == "binary" || name == "binary_tree" || name == "binary_trees") return Family::binary;
  if (name == "kary" || name == "kary_tree" || name == "kary_trees") return Family::kary;
  throw std::invalid_argument("unsupported family: " + std::string(name));
}

inline std::string family_name(Family f) {
  switch (f) {
    case Family::rooted_tree: return "rooted_tree";
    case Family::forest: return "forest";
    case Family::plane_tree: return "plane_tree";
    case Family::plane_forest: return "plane_forest";
    case Family::binary: return "binary";
    case Family::kary: return "kary";
  }
  return "?";
}

/// Colored sub-families. `all` is every bicoloring of the chosen family.
enum class Constraint { all, Dn, En, Gn, Qn };

inline Constraint parse_constraint(std::string_view name) {
  if (name == "all" || name == "all-bicolorings" || name == "bicolored") return Constraint::all;
  if (name == "Dn") return Constraint::Dn;
  if (name == "En") return Constraint::En;
  if (name == "Gn") return Constraint::Gn;
  if (name == "Qn") return Constraint::Qn;
  throw std::invalid_argument("unsupported constraint: " + std::string(name));
}

class ceiling_exceeded : public error {
 public:
  using error::error;
};

struct EnumOptions {
  /// Largest number of structures a generator may visit.
  std::uint64_t ceiling = 10'000'000;
};

/// Size of each family on [n]. Trees need a vertex, so rooted and plane trees
/// on zero vertices count 0; the empty forest, plane forest and k-ary tree
/// count 1.
inline BigInt count(Family family, int n, int k = 2) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  switch (family) {
    case Family::forest: return n == 0 ? BigInt(1) : ipow(n + 1, n - 1);
    case Family::rooted_tree: return n == 0 ? BigInt(0) : ipow(n, n - 1);
    case Family::plane_forest:
    case Family::binary: return factorial(n) * catalan(n);
    case Family::plane_tree: return n == 0 ? BigInt(0) : factorial(n) * catalan(n - 1);
    case Family::kary:
      if (k < 2) throw std::invalid_argument("k must be at least 2");
      return n == 0 ? BigInt(1) : falling(k * n, n - 1);
  }
  throw std::logic_error("count: unknown family");
}

/// Size of a colored sub-family. For Gn and Qn the structures live on [n+1].
inline BigInt count_colored(Family family, int n, Constraint c, int k = 2) {
  BigInt two_n = ipow(2, n);
  switch (c) {
    case Constraint::all: return two_n * count(family, n, k);
    case Constraint::Dn:
    case Constraint::En:
    case Constraint::Gn: return two_n * count(Family::forest, n);
    case Constraint::Qn: return two_n * count(Family::plane_forest, n);
  }
  throw std::logic_error("count_colored: unknown constraint");
}

namespace detail {

inline void check_ceiling(const BigInt& visits, const EnumOptions& opt, std::string_view what) {
  if (visits > opt.ceiling)
    throw ceiling_exceeded(std::string(what) + ": " + visits.str() +
                           " structures exceed the enumeration ceiling of " +
                           std::to_string(opt.ceiling));
}

enum class RootRule { any, single, fixed };

// Visits every acyclic parent array on [n] (index 0 unused, 0 = root)
// satisfying the root rule, in lexicographic order of (parent[1], ...,
// parent[n]) with 0 first.
template <class F>
void for_each_parent_array(int n, RootRule rule, Vertex fixed_root, F&& f) {
  std::vector<Vertex> par(static_cast<std::size_t>(n) + 1, -1);
  int roots = 0;
  auto creates_cycle = [&](Vertex v, Vertex p) {
    for (Vertex w = p;; w = par[w]) {
      if (w == v) return true;
      if (par[w] <= 0) return false;
    }
  };
  std::function<void(Vertex)> rec = [&](Vertex v) {
    if (v > n) {
      if (rule == RootRule::single && roots != 1) return;
      f(std::as_const(par));
      return;
    }
    if (rule == RootRule::fixed && v == fixed_root) {
      par[v] = kNoParent;
      rec(v + 1);
      par[v] = -1;
      return;
    }
    if (rule == RootRule::any || (rule == RootRule::single && roots == 0)) {
      par[v] = kNoParent;
      ++roots;
      rec(v + 1);
      --roots;
    }
    for (Vertex p = 1; p <= n; ++p) {
      if (p == v || creates_cycle(v, p)) continue;
      par[v] = p;
      rec(v + 1);
    }
    par[v] = -1;
  };
  rec(1);
}

inline Forest forest_from(const std::vector<Vertex>& par) {
  return Forest::from_parent_array(std::span(par).subspan(1));
}

// Steps every list to its next permutation, odometer style (last list
// fastest). Returns false after the last combination.
inline bool next_arrangement(std::vector<std::vector<Vertex>>& lists) {
  for (auto it = lists.rbegin(); it != lists.rend(); ++it)
    if (std::next_permutation(it->begin(), it->end())) return true;
  return false;
}

// Every ordering of the roots and child lists of f.
template <class F>
void for_each_plane_order(const Forest& f, F&& emit) {
  std::vector<Vertex> owners;
  std::vector<std::vector<Vertex>> lists;
  lists.emplace_back(f.roots().begin(), f.roots().end());
  for (Vertex v : f.vertices()) {
    if (f.children(v).size() < 2) continue;
    owners.push_back(v);
    lists.emplace_back(f.children(v).begin(), f.children(v).end());
  }
  do {
    std::map<Vertex, std::vector<Vertex>> kids;
    for (Vertex v : f.vertices())
      if (!f.children(v).empty()) kids[v].assign(f.children(v).begin(), f.children(v).end());
    for (std::size_t i = 0; i < owners.size(); ++i) kids[owners[i]] = lists[i + 1];
    emit(PlaneForest(lists[0], kids));
  } while (next_arrangement(lists));
}

// All injections [d] -> [k] as ordered slot tuples, in lexicographic order.
inline std::vector<std::vector<int>> slot_injections(int d, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<bool> used(static_cast<std::size_t>(k) + 1, false);
  std::function<void()> rec = [&] {
    if (static_cast<int>(cur.size()) == d) {
      out.push_back(cur);
      return;
    }
    for (int s = 1; s <= k; ++s) {
      if (used[static_cast<std::size_t>(s)]) continue;
      used[static_cast<std::size_t>(s)] = true;
      cur.push_back(s);
      rec();
      cur.pop_back();
      used[static_cast<std::size_t>(s)] = false;
    }
  };
  rec();
  return out;
}

// Every slot assignment of the children of t.
template <class F>
void for_each_slotting(const LabeledTree& t, int k, F&& emit) {
  std::vector<Vertex> owners;
  std::vector<std::vector<std::vector<int>>> choices;
  for (Vertex v : t.vertices()) {
    int d = static_cast<int>(t.children(v).size());
    if (d == 0) continue;
    if (d > k) return;
    owners.push_back(v);
    choices.push_back(slot_injections(d, k));
  }
  std::vector<std::size_t> digit(owners.size(), 0);
  while (true) {
    std::map<Vertex, std::vector<Vertex>> rows;
    for (std::size_t i = 0; i < owners.size(); ++i) {
      auto& row = rows[owners[i]];
      row.assign(static_cast<std::size_t>(k), 0);
      auto ks = t.children(owners[i]);
      const auto& inj = choices[i][digit[i]];
      for (std::size_t j = 0; j < ks.size(); ++j) row[static_cast<std::size_t>(inj[j] - 1)] = ks[j];
    }
    emit(SlottedTree(k, t.root(), rows));
    std::size_t i = owners.size();
    while (i > 0) {
      --i;
      if (++digit[i] < choices[i].size()) break;
      digit[i] = 0;
      if (i == 0) return;
    }
    if (owners.empty()) return;
  }
}

}  // namespace detail

template <class F>
void for_each_forest(int n, F&& f, const EnumOptions& opt = {}) {
  detail::check_ceiling(count(Family::forest, n), opt, "forests");
  if (n == 0) {
    f(Forest());
    return;
  }
  detail::for_each_parent_array(n, detail::RootRule::any, 0,
                                [&](const auto& par) { f(detail::forest_from(par)); });
}

template <class F>
void for_each_rooted_tree(int n, F&& f, const EnumOptions& opt = {}) {
  detail::check_ceiling(count(Family::rooted_tree, n), opt, "rooted trees");
  if (n == 0) return;
  detail::for_each_parent_array(n, detail::RootRule::single, 0,
                                [&](const auto& par) { f(LabeledTree(detail::forest_from(par))); });
}

/// Trees on [n] whose root is the given vertex.
template <class F>
void for_each_rooted_tree_at(int n, Vertex root, F&& f, const EnumOptions& opt = {}) {
  if (root < 1 || root > n) throw invalid_vertex(root);
  detail::check_ceiling(ipow(n, std::max(n - 2, 0)), opt, "rooted trees");
  detail::for_each_parent_array(n, detail::RootRule::fixed, root,
                                [&](const auto& par) { f(LabeledTree(detail::forest_from(par))); });
}

template <class F>
void for_each_plane_forest(int n, F&& f, const EnumOptions& opt = {}) {
  detail::check_ceiling(count(Family::plane_forest, n), opt, "plane forests");
  if (n == 0) {
    f(PlaneForest());
    return;
  }
  detail::for_each_parent_array(n, detail::RootRule::any, 0, [&](const auto& par) {
    detail::for_each_plane_order(detail::forest_from(par), f);
  });
}

template <class F>
void for_each_plane_tree(int n, F&& f, const EnumOptions& opt = {}) {
  detail::check_ceiling(count(Family::plane_tree, n), opt, "plane trees");
  if (n == 0) return;
  detail::for_each_parent_array(n, detail::RootRule::single, 0, [&](const auto& par) {
    detail::for_each_plane_order(detail::forest_from(par),
                                 [&](PlaneForest p) { f(PlaneTree(std::move(p))); });
  });
}

/// Plane trees on [n] whose root is the given vertex.
template <class F>
void for_each_plane_tree_at(int n, Vertex root, F&& f, const EnumOptions& opt = {}) {
  if (root < 1 || root > n) throw invalid_vertex(root);
  detail::check_ceiling(count(Family::plane_forest, n - 1), opt, "plane trees");
  detail::for_each_parent_array(n, detail::RootRule::fixed, root, [&](const auto& par) {
    detail::for_each_plane_order(detail::forest_from(par),
                                 [&](PlaneForest p) { f(PlaneTree(std::move(p))); });
  });
}

template <class F>
void for_each_kary_tree(int n, int k, F&& f, const EnumOptions& opt = {}) {
  detail::check_ceiling(count(Family::kary, n, k), opt, "k-ary trees");
  if (n == 0) {
    f(SlottedTree(k, 0, {}));
    return;
  }
  detail::for_each_parent_array(n, detail::RootRule::single, 0, [&](const auto& par) {
    detail::for_each_slotting(LabeledTree(detail::forest_from(par)), k, f);
  });
}

template <class F>
void for_each_binary_tree(int n, F&& f, const EnumOptions& opt = {}) {
  for_each_kary_tree(n, 2, std::forward<F>(f), opt);
}

/// Binary trees as (shape, labeling) pairs for shapes with rank in
/// [first, last). Labelings run through permutations in lexicographic order.
template <class F>
void for_each_binary_tree_by_shape(int n, std::uint64_t first, std::uint64_t last, F&& f) {
  const auto& shapes = binary_shapes(n);
  last = std::min<std::uint64_t>(last, shapes.size());
  std::vector<Vertex> omega(static_cast<std::size_t>(n));
  for (std::uint64_t i = first; i < last; ++i) {
    std::iota(omega.begin(), omega.end(), 1);
    do {
      f(shapes[i].label(omega));
    } while (std::next_permutation(omega.begin(), omega.end()));
  }
}

/// Calls f with each family member; f must accept every structure type.
template <class F>
void for_each_labeled(Family family, int n, int k, F&& f, const EnumOptions& opt = {}) {
  switch (family) {
    case Family::rooted_tree: return for_each_rooted_tree(n, f, opt);
    case Family::forest: return for_each_forest(n, f, opt);
    case Family::plane_tree: return for_each_plane_tree(n, f, opt);
    case Family::plane_forest: return for_each_plane_forest(n, f, opt);
    case Family::binary: return for_each_binary_tree(n, f, opt);
    case Family::kary: return for_each_kary_tree(n, k, f, opt);
  }
}

/// Every coloring of s, in order of the bitmask over vertices() (bit set =
/// white).
template <class S, class F>
void for_each_bicoloring(const S& s, F&& f) {
  auto vs = s.vertices();
  const std::uint64_t total = std::uint64_t{1} << vs.size();
  std::vector<Vertex> white;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    white.clear();
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (mask >> i & 1) white.push_back(vs[i]);
    f(Bicolored<S>::with_white(s, white));
  }
}

// Colorings that may paint only the given vertices white.
template <class S, class F>
void for_each_coloring_of(const S& s, const std::vector<Vertex>& free, F&& f) {
  const std::uint64_t total = std::uint64_t{1} << free.size();
  std::vector<Vertex> white;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    white.clear();
    for (std::size_t i = 0; i < free.size(); ++i)
      if (mask >> i & 1) white.push_back(free[i]);
    f(Bicolored<S>::with_white(s, white));
  }
}

/// Bicolored binary trees on [n] with every improper vertex black.
template <class F>
void for_each_in_Dn(int n, F&& f, const EnumOptions& opt = {}) {
  detail::check_ceiling(count_colored(Family::binary, n, Constraint::Dn), opt, "Dn");
  for_each_binary_tree(n, [&](const SlottedTree& b) { for_each_coloring_of(b, proper_set(b), f); }, opt);
}

/// Bicolored binary trees on [n] with every improper vertex left improper.
template <class F>
void for_each_in_En(int n, F&& f, const EnumOptions& opt = {}) {
  detail::check_ceiling(count_colored(Family::binary, n, Constraint::En), opt, "En");
  for_each_binary_tree(n, [&](const SlottedTree& b) {
    if (improper_vertices_on(b, Side::right).empty()) for_each_bicoloring(b, f);
  }, opt);
}

/// Bicolored plane trees on [n+1] rooted at a black n+1.
template <class F>
void for_each_in_Qn(int n, F&& f, const EnumOptions& opt = {}) {
  detail::check_ceiling(count_colored(Family::plane_tree, n, Constraint::Qn), opt, "Qn");
  std::vector<Vertex> free(static_cast<std::size_t>(n));
  std::iota(free.begin(), free.end(), 1);
  for_each_plane_tree_at(n + 1, n + 1, [&](const PlaneTree& p) { for_each_coloring_of(p, free, f); }, opt);
}

/// Members of Qn whose sibling lists have increasing subtree minima.
template <class F>
void for_each_in_Gn(int n, F&& f, const EnumOptions& opt = {}) {
  detail::check_ceiling(count(Family::plane_forest, n), opt, "Gn");
  detail::check_ceiling(count_colored(Family::plane_tree, n, Constraint::Gn), opt, "Gn");
  std::vector<Vertex> free(static_cast<std::size_t>(n));
  std::iota(free.begin(), free.end(), 1);
  for_each_plane_tree_at(n + 1, n + 1, [&](const PlaneTree& p) {
    if (is_in_Gn(ColoredPlaneTree(p))) for_each_coloring_of(p, free, f);
  }, opt);
}

/// Dispatch over constraints. Dn and En need the binary family, Gn and Qn the
/// plane-tree family (members live on [n+1]); `all` colors any family.
template <class F>
void for_each_colored(Family family, int n, int k, Constraint c, F&& f, const EnumOptions& opt = {}) {
  auto require = [&](Family want) {
    if (family != want)
      throw std::invalid_argument("constraint needs family " + family_name(want));
  };
  switch (c) {
    case Constraint::all:
      detail::check_ceiling(count_colored(family, n, c, k), opt, "bicolored structures");
      return for_each_labeled(family, n, k, [&](const auto& s) { for_each_bicoloring(s, f); }, opt);
    case Constraint::Dn: require(Family::binary); return for_each_in_Dn(n, f, opt);
    case Constraint::En: require(Family::binary); return for_each_in_En(n, f, opt);
    case Constraint::Gn: require(Family::plane_tree); return for_each_in_Gn(n, f, opt);
    case Constraint::Qn: require(Family::plane_tree); return for_each_in_Qn(n, f, opt);
  }
}

template <class T, class Gen>
std::vector<T> collect(Gen&& gen) {
  std::vector<T> out;
  gen([&](const T& x) { out.push_back(x); });
  return out;
}

/// Splits the shape ranks of size n into contiguous chunks, runs
/// work(first, last) on each in its own thread, and returns the results in
/// rank order.
template <class Work>
auto partition_by_shape(int n, unsigned chunks, Work&& work) {
  using R = std::invoke_result_t<Work&, std::uint64_t, std::uint64_t>;
  const std::uint64_t total = catalan_u64(n);
  chunks = std::max(1u, std::min<unsigned>(chunks, static_cast<unsigned>(total)));
  binary_shapes(n);  // fill the cache before the workers start
  std::vector<std::future<R>> parts;
  for (unsigned c = 0; c < chunks; ++c) {
    std::uint64_t first = total * c / chunks, last = total * (c + 1) / chunks;
    parts.push_back(std::async(std::launch::async, [&work, first, last] { return work(first, last); }));
  }
  std::vector<R> out;
  for (auto& p : parts) out.push_back(p.get());
  return out;
}

}  // namespace treecount
