#pragma once

// Vertex statistics shared by every family: descendant subtrees, minimum
// labels, hooks, and proper/improper vertices.

#include <concepts>
#include <optional>
#include <ranges>
#include <set>
#include <vector>

#include "core.hpp"

namespace treecount {

template <class S>
concept RootedStructure = requires(const S& s, Vertex v) {
  { s.size() } -> std::convertible_to<std::size_t>;
  { s.vertices() } -> std::ranges::range;
  { s.roots() } -> std::ranges::range;
  { s.children(v) } -> std::ranges::range;
  { s.parent(v) } -> std::convertible_to<Vertex>;
  { s.contains(v) } -> std::same_as<bool>;
  { s.max_label() } -> std::convertible_to<Vertex>;
};

template <RootedStructure S>
S subtree(const S& s, Vertex v) {
  return s.subtree(v);
}

/// Vertices in preorder, components in root order.
template <RootedStructure S>
std::vector<Vertex> preorder(const S& s) {
  std::vector<Vertex> out;
  out.reserve(s.size());
  std::vector<Vertex> stack;
  for (auto it = s.roots().rbegin(); it != s.roots().rend(); ++it) stack.push_back(*it);
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    out.push_back(u);
    auto ks = s.children(u);
    for (auto it = ks.rbegin(); it != ks.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

/// Smallest label of the whole structure; infinity when empty.
template <RootedStructure S>
ExtLabel min_label(const S& s) {
  return s.size() == 0 ? ExtLabel::infinity() : ExtLabel(*std::ranges::min_element(s.vertices()));
}

template <RootedStructure S>
ExtLabel min_label(const std::optional<S>& s) {
  return s ? min_label(*s) : ExtLabel::infinity();
}

/// For every vertex v, the minimum label in the descendant subtree of v.
/// Indexed by label; entries for absent labels are 0.
template <RootedStructure S>
std::vector<Vertex> subtree_minima(const S& s) {
  std::vector<Vertex> m(static_cast<std::size_t>(s.max_label()) + 1, 0);
  auto order = preorder(s);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    Vertex best = v;
    for (Vertex c : s.children(v)) best = std::min(best, m[c]);
    m[v] = best;
  }
  return m;
}

/// Descendant counts h(v), including v. Indexed by label.
template <RootedStructure S>
std::vector<int> hooks(const S& s) {
  std::vector<int> h(static_cast<std::size_t>(s.max_label()) + 1, 0);
  auto order = preorder(s);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int total = 1;
    for (Vertex c : s.children(*it)) total += h[c];
    h[*it] = total;
  }
  return h;
}

template <RootedStructure S>
int hook(const S& s, Vertex v) {
  if (!s.contains(v)) throw invalid_vertex(v);
  return hooks(s)[v];
}

template <RootedStructure S>
bool is_proper(const S& s, Vertex v) {
  if (!s.contains(v)) throw invalid_vertex(v);
  return subtree_minima(s)[v] == v;
}

/// Proper vertices in ascending order.
template <RootedStructure S>
std::vector<Vertex> proper_set(const S& s) {
  auto m = subtree_minima(s);
  std::vector<Vertex> out;
  for (Vertex v : s.vertices())
    if (m[v] == v) out.push_back(v);
  return out;
}

template <RootedStructure S>
std::vector<Vertex> improper_set(const S& s) {
  auto m = subtree_minima(s);
  std::vector<Vertex> out;
  for (Vertex v : s.vertices())
    if (m[v] != v) out.push_back(v);
  return out;
}

/// Number of proper vertices.
template <RootedStructure S>
int pv(const S& s) {
  auto m = subtree_minima(s);
  int count = 0;
  for (Vertex v : s.vertices()) count += (m[v] == v);
  return count;
}

enum class Side { left, right };

namespace detail {

inline const SlottedTree& as_slotted(const SlottedTree& b) { return b; }
inline const SlottedTree& as_slotted(const Bicolored<SlottedTree>& b) { return b.structure(); }

inline ExtLabel slot_min(const SlottedTree& b, const std::vector<Vertex>& minima, Vertex v,
                         int slot) {
  Vertex c = b.child(v, slot);
  return c == 0 ? ExtLabel::infinity() : ExtLabel(minima[c]);
}

}  // namespace detail

/// Minimum label of the descendant subtree hanging from slot s of v.
template <class B>
ExtLabel slot_subtree_min(const B& tree, Vertex v, int slot) {
  const SlottedTree& b = detail::as_slotted(tree);
  return detail::slot_min(b, subtree_minima(b), v, slot);
}

/// Classifies an improper vertex of a binary tree: right improper when the
/// left side's minimum exceeds the right side's (an empty side counts as
/// infinity), left improper otherwise.
template <class B>
Side improper_side(const B& tree, Vertex v) {
  const SlottedTree& b = detail::as_slotted(tree);
  if (b.arity() != 2) throw domain_error("improper_side needs a binary tree");
  if (!b.contains(v)) throw invalid_vertex(v);
  auto m = subtree_minima(b);
  if (m[v] == v)
    throw domain_error("vertex " + std::to_string(v) + " is proper; left/right improper is undefined");
  return detail::slot_min(b, m, v, 1) > detail::slot_min(b, m, v, 2) ? Side::right : Side::left;
}

/// Improper vertices of each side, ascending.
template <class B>
std::vector<Vertex> improper_vertices_on(const B& tree, Side side) {
  const SlottedTree& b = detail::as_slotted(tree);
  if (b.arity() != 2) throw domain_error("improper sides need a binary tree");
  auto m = subtree_minima(b);
  std::vector<Vertex> out;
  for (Vertex v : b.vertices()) {
    if (m[v] == v) continue;
    Side s = detail::slot_min(b, m, v, 1) > detail::slot_min(b, m, v, 2) ? Side::right : Side::left;
    if (s == side) out.push_back(v);
  }
  return out;
}

}  // namespace treecount
