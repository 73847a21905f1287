#pragma once

// Maps between the colored families:
//
//   Dn --big_flip--> En --restricted_phi--> Gn --gamma--> bicolored forests on [n]
//
// together with the root-deletion maps gamma / gamma_bar, the single flip,
// the first-child/next-sibling correspondence phi, and all inverses.

#include <algorithm>
#include <string>
#include <vector>

#include "core.hpp"
#include "membership.hpp"
#include "statistics.hpp"

namespace treecount {

namespace detail {

inline void require(bool ok, const char* predicate) {
  if (!ok) throw domain_error(std::string("input is not in ") + predicate);
}

inline Vertex require_top_root(const detail::Links& s, Vertex root, const char* what) {
  const Vertex top = static_cast<Vertex>(s.size());
  if (s.empty() || !s.is_standard() || root != top)
    throw domain_error(std::string(what) + ": root must be the largest vertex n+1 of [n+1]");
  return top;
}

template <class S>
std::map<Vertex, Color> colors_without(const Bicolored<S>& b, Vertex drop) {
  auto m = b.colors();
  m.erase(drop);
  return m;
}

}  // namespace detail

// ---- gamma: trees rooted at n+1 <-> forests on [n] ----

inline Forest gamma(const LabeledTree& t) {
  const Vertex top = detail::require_top_root(t, t.root(), "gamma");
  std::map<Vertex, Vertex> par;
  for (Vertex v = 1; v < top; ++v) {
    Vertex p = t.parent(v);
    par[v] = p == top ? kNoParent : p;
  }
  return Forest(par);
}

inline LabeledTree gamma_inv(const Forest& f) {
  if (!f.is_standard()) throw domain_error("gamma inverse: forest must be on [n]");
  const Vertex top = static_cast<Vertex>(f.size()) + 1;
  std::map<Vertex, Vertex> par{{top, kNoParent}};
  for (Vertex v : f.vertices()) par[v] = f.is_root(v) ? top : f.parent(v);
  return LabeledTree(par);
}

inline ColoredForest gamma(const ColoredTree& g) {
  detail::require(is_in_Gn(g), "Gn");
  return ColoredForest(gamma(g.structure()), detail::colors_without(g, g.structure().root()));
}

inline ColoredTree gamma_inv(const ColoredForest& f) {
  LabeledTree t = gamma_inv(f.structure());
  auto colors = f.colors();
  colors[t.root()] = Color::black;
  return ColoredTree(std::move(t), colors);
}

// ---- gamma_bar: plane trees rooted at n+1 <-> plane forests on [n] ----

inline PlaneForest gamma_bar(const PlaneTree& p) {
  const Vertex top = detail::require_top_root(p, p.root(), "gamma_bar");
  std::map<Vertex, std::vector<Vertex>> kids;
  for (Vertex v = 1; v < top; ++v)
    if (!p.children(v).empty()) kids[v].assign(p.children(v).begin(), p.children(v).end());
  auto roots = p.children(top);
  return PlaneForest(std::vector<Vertex>(roots.begin(), roots.end()), kids);
}

inline PlaneTree gamma_bar_inv(const PlaneForest& f) {
  if (!f.is_standard()) throw domain_error("gamma_bar inverse: plane forest must be on [n]");
  const Vertex top = static_cast<Vertex>(f.size()) + 1;
  std::map<Vertex, std::vector<Vertex>> kids;
  for (Vertex v : f.vertices())
    if (!f.children(v).empty()) kids[v].assign(f.children(v).begin(), f.children(v).end());
  if (!f.roots().empty()) kids[top].assign(f.roots().begin(), f.roots().end());
  return PlaneTree(top, kids);
}

inline ColoredPlaneForest gamma_bar(const ColoredPlaneTree& q) {
  detail::require(is_in_Qn(q), "Qn");
  return ColoredPlaneForest(gamma_bar(q.structure()), detail::colors_without(q, q.structure().root()));
}

inline ColoredPlaneTree gamma_bar_inv(const ColoredPlaneForest& f) {
  PlaneTree p = gamma_bar_inv(f.structure());
  auto colors = f.colors();
  colors[p.root()] = Color::black;
  return ColoredPlaneTree(std::move(p), colors);
}

// ---- flips ----

namespace detail {

inline ColoredBinary flip_all(const ColoredBinary& b, const std::vector<Vertex>& at) {
  const SlottedTree& t = b.structure();
  if (t.arity() != 2) throw domain_error("flips need a binary tree");
  auto rows = t.slot_rows();
  auto colors = b.colors();
  for (Vertex v : at) {
    if (!t.contains(v)) throw invalid_vertex(v);
    auto it = rows.find(v);
    if (it != rows.end()) std::swap(it->second[0], it->second[1]);
    colors[v] = toggled(colors[v]);
  }
  return ColoredBinary(SlottedTree(2, t.root(), rows), colors);
}

}  // namespace detail

/// Swaps the two subtrees under v and toggles the color of v.
inline ColoredBinary flip_at(const ColoredBinary& b, Vertex v) { return detail::flip_all(b, {v}); }

/// Right improper vertices, ascending.
inline std::vector<Vertex> right_improper_set(const ColoredBinary& b) {
  return improper_vertices_on(b, Side::right);
}

/// White improper vertices, ascending.
inline std::vector<Vertex> white_improper_set(const ColoredBinary& b) {
  std::vector<Vertex> out;
  for (Vertex v : improper_set(b))
    if (b.color(v) == Color::white) out.push_back(v);
  return out;
}

/// Flips every right improper vertex of D at once; lands in En.
inline ColoredBinary big_flip(const ColoredBinary& d) {
  detail::require(is_in_Dn(d), "Dn");
  return detail::flip_all(d, right_improper_set(d));
}

/// Flips every white improper vertex of E at once; lands in Dn.
inline ColoredBinary big_flip_inv(const ColoredBinary& e) {
  detail::require(is_in_En(e), "En");
  return detail::flip_all(e, white_improper_set(e));
}

// ---- phi: binary trees on [n] <-> plane trees rooted at n+1 ----
//
// Left child in the binary tree = first child in the plane tree; right child
// = next sibling. The binary root becomes the first child of n+1.

inline PlaneTree phi(const SlottedTree& b) {
  if (b.arity() != 2) throw domain_error("phi needs a binary tree");
  if (!b.is_standard()) throw domain_error("phi: binary tree must be on [n]");
  const Vertex top = static_cast<Vertex>(b.size()) + 1;
  auto sibling_chain = [&](Vertex first) {
    std::vector<Vertex> chain;
    for (Vertex w = first; w != 0; w = b.right(w)) chain.push_back(w);
    return chain;
  };
  std::map<Vertex, std::vector<Vertex>> kids;
  if (!b.empty()) kids[top] = sibling_chain(b.root());
  for (Vertex u : b.vertices())
    if (b.left(u) != 0) kids[u] = sibling_chain(b.left(u));
  return PlaneTree(top, kids);
}

inline SlottedTree phi_inv(const PlaneTree& q) {
  const Vertex top = detail::require_top_root(q, q.root(), "phi inverse");
  std::map<Vertex, std::pair<Vertex, Vertex>> lr;
  for (Vertex u : q.vertices()) {
    auto ks = q.children(u);
    for (std::size_t i = 0; i < ks.size(); ++i) lr[ks[i]].second = i + 1 < ks.size() ? ks[i + 1] : 0;
    if (u != top && !ks.empty()) lr[u].first = ks.front();
  }
  auto top_kids = q.children(top);
  Vertex root = top_kids.empty() ? 0 : top_kids.front();
  // Drop rows of leaves with no right sibling.
  std::erase_if(lr, [](const auto& kv) { return kv.second.first == 0 && kv.second.second == 0; });
  return SlottedTree::binary(root, lr);
}

inline ColoredPlaneTree phi(const ColoredBinary& b) {
  PlaneTree q = phi(b.structure());
  auto colors = b.colors();
  colors[q.root()] = Color::black;
  return ColoredPlaneTree(std::move(q), colors);
}

inline ColoredBinary phi_inv(const ColoredPlaneTree& q) {
  detail::require(is_in_Qn(q), "Qn");
  return ColoredBinary(phi_inv(q.structure()), detail::colors_without(q, q.structure().root()));
}

/// phi restricted to En; the image is Gn.
inline ColoredPlaneTree restricted_phi(const ColoredBinary& e) {
  detail::require(is_in_En(e), "En");
  return phi(e);
}

inline ColoredBinary restricted_phi_inv(const ColoredPlaneTree& g) {
  detail::require(is_in_Gn(g), "Gn");
  return phi_inv(g);
}

/// The plane tree of Gn over an unordered tree: every child list sorted by
/// increasing subtree minimum.
inline ColoredPlaneTree order_by_minima(const ColoredTree& g) {
  const LabeledTree& t = g.structure();
  auto m = subtree_minima(t);
  std::map<Vertex, std::vector<Vertex>> kids;
  for (Vertex v : t.vertices()) {
    if (t.children(v).empty()) continue;
    auto& list = kids[v];
    list.assign(t.children(v).begin(), t.children(v).end());
    std::sort(list.begin(), list.end(), [&](Vertex a, Vertex b) { return m[a] < m[b]; });
  }
  return ColoredPlaneTree(PlaneTree(t.root(), kids), g.colors());
}

inline ColoredTree forget_order(const ColoredPlaneTree& q) {
  return ColoredTree(q.structure().unordered(), q.colors());
}

/// Dn -> bicolored forests on [n]: gamma after phi after big_flip.
inline ColoredForest full_map(const ColoredBinary& d) {
  return gamma(forget_order(restricted_phi(big_flip(d))));
}

inline ColoredBinary full_map_inv(const ColoredForest& f) {
  return big_flip_inv(restricted_phi_inv(order_by_minima(gamma_inv(f))));
}

}  // namespace treecount
