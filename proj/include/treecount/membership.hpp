#pragma once

// Membership predicates for the colored families used by the bijection.
// Each one checks the defining property directly; none goes through a map.

#include "statistics.hpp"

namespace treecount {

using ColoredBinary = Bicolored<SlottedTree>;
using ColoredPlaneTree = Bicolored<PlaneTree>;
using ColoredTree = Bicolored<LabeledTree>;
using ColoredForest = Bicolored<Forest>;
using ColoredPlaneForest = Bicolored<PlaneForest>;

/// Binary tree on [n] whose improper vertices are all black.
inline bool is_in_Dn(const ColoredBinary& b) {
  if (b.structure().arity() != 2 || !b.structure().is_standard()) return false;
  for (Vertex v : improper_set(b))
    if (b.color(v) != Color::black) return false;
  return true;
}

/// Binary tree on [n] whose improper vertices are all left improper.
inline bool is_in_En(const ColoredBinary& b) {
  if (b.structure().arity() != 2 || !b.structure().is_standard()) return false;
  return improper_vertices_on(b, Side::right).empty();
}

/// Plane tree on [n+1] rooted at n+1, root colored black.
inline bool is_in_Qn(const ColoredPlaneTree& q) {
  const PlaneTree& p = q.structure();
  if (p.empty() || !p.is_standard()) return false;
  return p.root() == static_cast<Vertex>(p.size()) && q.color(p.root()) == Color::black;
}

/// Tree on [n+1] rooted at n+1, root colored black.
inline bool is_in_Gn(const ColoredTree& g) {
  const LabeledTree& t = g.structure();
  if (t.empty() || !t.is_standard()) return false;
  return t.root() == static_cast<Vertex>(t.size()) && g.color(t.root()) == Color::black;
}

/// The plane-tree form of G_n: a member of Q_n in which every sibling list is
/// ordered by strictly increasing subtree minimum.
inline bool is_in_Gn(const ColoredPlaneTree& q) {
  if (!is_in_Qn(q)) return false;
  auto m = subtree_minima(q);
  for (Vertex v : q.vertices()) {
    auto ks = q.children(v);
    for (std::size_t i = 1; i < ks.size(); ++i)
      if (!(m[ks[i - 1]] < m[ks[i]])) return false;
  }
  return true;
}

}  // namespace treecount
