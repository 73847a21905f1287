#pragma once

// Tree and forest families on labeled vertex sets.
//
// Every structure stores a parent map plus child lists derived from it. For
// unordered families (Forest, LabeledTree) child lists and roots are kept in
// ascending label order, so defaulted equality is structural equality. Plane
// families keep the caller's order; slotted trees keep one entry per slot.
// Structures are validated on construction and immutable afterwards.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace treecount {

using Vertex = int;

/// Parent value stored for roots.
inline constexpr Vertex kNoParent = 0;

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class invalid_vertex : public error {
 public:
  explicit invalid_vertex(Vertex v) : error("invalid vertex " + std::to_string(v)) {}
};

class invalid_structure : public error {
 public:
  using error::error;
};

/// Argument is outside the domain of a map or predicate-restricted operation.
class domain_error : public error {
 public:
  using error::error;
};

enum class Color : std::uint8_t { black, white };

constexpr Color toggled(Color c) { return c == Color::black ? Color::white : Color::black; }
constexpr char color_code(Color c) { return c == Color::black ? 'b' : 'w'; }

/// A vertex label or +infinity; infinity compares above every label.
class ExtLabel {
 public:
  constexpr ExtLabel() = default;
  constexpr explicit ExtLabel(Vertex v) : value_(v) {}

  static constexpr ExtLabel infinity() { return ExtLabel(); }

  constexpr bool is_infinite() const { return value_ == kInf; }
  Vertex value() const {
    if (is_infinite()) throw std::logic_error("ExtLabel: infinite value");
    return static_cast<Vertex>(value_);
  }

  constexpr auto operator<=>(const ExtLabel&) const = default;
  constexpr bool operator==(const ExtLabel&) const = default;
  constexpr bool operator==(Vertex v) const { return value_ == v; }

 private:
  static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  std::int64_t value_ = kInf;
};

namespace detail {

// Shared storage: vertices sorted ascending, vectors indexed by label.
class Links {
 public:
  std::size_t size() const { return verts_.size(); }
  bool empty() const { return verts_.empty(); }
  std::span<const Vertex> vertices() const { return verts_; }
  std::span<const Vertex> roots() const { return roots_; }
  Vertex max_label() const { return verts_.empty() ? 0 : verts_.back(); }

  bool contains(Vertex v) const {
    return v >= 1 && static_cast<std::size_t>(v) < parent_.size() && parent_[v] >= 0;
  }
  Vertex parent(Vertex v) const {
    check(v);
    return parent_[v];
  }
  bool is_root(Vertex v) const { return parent(v) == kNoParent; }
  std::span<const Vertex> children(Vertex v) const {
    check(v);
    return kids_[v];
  }

  /// True when the vertex set is exactly {1, ..., size()}.
  bool is_standard() const { return max_label() == static_cast<Vertex>(size()); }

  bool operator==(const Links&) const = default;

 protected:
  void check(Vertex v) const {
    if (!contains(v)) throw invalid_vertex(v);
  }

  // Builds from ordered roots and ordered child lists. Every vertex must occur
  // exactly once among the roots and child lists; everything must be
  // reachable from a root.
  void assemble(std::vector<Vertex> roots, const std::map<Vertex, std::vector<Vertex>>& kids) {
    Vertex hi = 0;
    auto note = [&](Vertex v) {
      if (v < 1) throw invalid_vertex(v);
      hi = std::max(hi, v);
    };
    for (Vertex r : roots) note(r);
    for (const auto& [u, list] : kids) {
      note(u);
      for (Vertex c : list) note(c);
    }
    const std::size_t table = hi == 0 ? 0 : static_cast<std::size_t>(hi) + 1;
    parent_.assign(table, -1);
    kids_.assign(table, {});
    auto place = [&](Vertex v, Vertex p) {
      if (parent_[v] != -1)
        throw invalid_structure("vertex " + std::to_string(v) + " occurs more than once");
      parent_[v] = p;
    };
    for (Vertex r : roots) place(r, kNoParent);
    for (const auto& [u, list] : kids)
      for (Vertex c : list) place(c, u);
    for (const auto& [u, list] : kids) {
      if (parent_[u] == -1)
        throw invalid_structure("children given for vertex " + std::to_string(u) +
                                " which is not in the structure");
      kids_[u] = list;
    }
    verts_.clear();
    for (Vertex v = 1; v <= hi; ++v)
      if (parent_[v] >= 0) verts_.push_back(v);
    roots_ = std::move(roots);

    std::size_t seen = 0;
    std::vector<Vertex> stack(roots_.begin(), roots_.end());
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      ++seen;
      for (Vertex c : kids_[v]) stack.push_back(c);
    }
    if (seen != verts_.size()) throw invalid_structure("parent map contains a cycle");
  }

  void assemble_from_parents(const std::map<Vertex, Vertex>& parent_of) {
    std::vector<Vertex> roots;
    std::map<Vertex, std::vector<Vertex>> kids;
    for (const auto& [v, p] : parent_of) {
      if (p == kNoParent) {
        roots.push_back(v);
      } else {
        if (!parent_of.contains(p)) throw invalid_vertex(p);
        kids[p].push_back(v);
      }
    }
    assemble(std::move(roots), kids);
  }

  void sort_canonically() {
    std::sort(roots_.begin(), roots_.end());
    for (auto& k : kids_) std::sort(k.begin(), k.end());
  }

  // Descendants of v (v first), in preorder.
  std::vector<Vertex> descendants(Vertex v) const {
    check(v);
    std::vector<Vertex> out;
    std::vector<Vertex> stack{v};
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      out.push_back(u);
      const auto& ks = kids_[u];
      for (auto it = ks.rbegin(); it != ks.rend(); ++it) stack.push_back(*it);
    }
    return out;
  }

  // Restriction to the descendants of v, rooted at v, keeping child order.
  void restrict_to(Links& out, Vertex v) const {
    std::map<Vertex, std::vector<Vertex>> kids;
    for (Vertex u : descendants(v))
      if (!kids_[u].empty()) kids[u] = kids_[u];
    out.assemble({v}, kids);
  }

  std::vector<Vertex> verts_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> roots_;
  std::vector<std::vector<Vertex>> kids_;
};

inline std::map<Vertex, Vertex> parent_array_to_map(std::span<const Vertex> parent) {
  std::map<Vertex, Vertex> m;
  for (std::size_t i = 0; i < parent.size(); ++i) m[static_cast<Vertex>(i + 1)] = parent[i];
  return m;
}

}  // namespace detail

/// Rooted forest with unordered children.
class Forest : public detail::Links {
 public:
  Forest() = default;

  /// Keys are the vertex set; a value of kNoParent marks a root.
  explicit Forest(const std::map<Vertex, Vertex>& parent_of) {
    assemble_from_parents(parent_of);
    sort_canonically();
  }

  /// Forest on {1..n}; parent[i] is the parent of vertex i+1.
  static Forest from_parent_array(std::span<const Vertex> parent) {
    return Forest(detail::parent_array_to_map(parent));
  }

  Forest subtree(Vertex v) const {
    Forest f;
    restrict_to(f, v);
    return f;
  }

  bool operator==(const Forest&) const = default;
};

/// Rooted tree with unordered children.
class LabeledTree : public Forest {
 public:
  LabeledTree() = default;
  explicit LabeledTree(const std::map<Vertex, Vertex>& parent_of) : Forest(parent_of) {
    require_single_root();
  }
  explicit LabeledTree(Forest f) : Forest(std::move(f)) { require_single_root(); }

  static LabeledTree from_parent_array(std::span<const Vertex> parent) {
    return LabeledTree(detail::parent_array_to_map(parent));
  }

  Vertex root() const { return roots_.front(); }

  LabeledTree subtree(Vertex v) const { return LabeledTree(Forest::subtree(v)); }

  bool operator==(const LabeledTree&) const = default;

 private:
  void require_single_root() const {
    if (roots_.size() != 1) throw invalid_structure("a tree must have exactly one root");
  }
};

/// Ordered sequence of plane trees; child order and root order are significant.
class PlaneForest : public detail::Links {
 public:
  PlaneForest() = default;
  PlaneForest(std::vector<Vertex> roots, const std::map<Vertex, std::vector<Vertex>>& children) {
    assemble(std::move(roots), children);
  }

  PlaneForest subtree(Vertex v) const {
    PlaneForest f;
    restrict_to(f, v);
    return f;
  }

  /// Drops the order information.
  Forest unordered() const {
    std::map<Vertex, Vertex> m;
    for (Vertex v : verts_) m[v] = parent_[v];
    return Forest(m);
  }

  bool operator==(const PlaneForest&) const = default;
};

class PlaneTree : public PlaneForest {
 public:
  PlaneTree() = default;
  PlaneTree(Vertex root, const std::map<Vertex, std::vector<Vertex>>& children)
      : PlaneForest({root}, children) {}
  explicit PlaneTree(PlaneForest f) : PlaneForest(std::move(f)) {
    if (roots_.size() != 1) throw invalid_structure("a plane tree must have exactly one root");
  }

  Vertex root() const { return roots_.front(); }

  PlaneTree subtree(Vertex v) const { return PlaneTree(PlaneForest::subtree(v)); }

  LabeledTree unordered() const { return LabeledTree(PlaneForest::unordered()); }

  bool operator==(const PlaneTree&) const = default;
};

/// k-ary tree: every child occupies one of the slots 1..k of its parent.
/// Binary trees are k = 2 with slot 1 = left and slot 2 = right. The empty
/// tree is allowed.
class SlottedTree : public detail::Links {
 public:
  SlottedTree() = default;

  /// slots[u][s-1] is the child of u in slot s, or 0 if that slot is empty.
  /// Shorter vectors are padded with empty slots.
  SlottedTree(int k, Vertex root, const std::map<Vertex, std::vector<Vertex>>& slots) : k_(k) {
    if (k < 2) throw invalid_structure("arity must be at least 2");
    if (root == 0) {
      if (!slots.empty()) throw invalid_structure("empty tree cannot have children");
      return;
    }
    std::map<Vertex, std::vector<Vertex>> kids;
    for (const auto& [u, row] : slots) {
      if (static_cast<int>(row.size()) > k)
        throw invalid_structure("more than k slots for vertex " + std::to_string(u));
      for (Vertex c : row)
        if (c != 0) kids[u].push_back(c);
    }
    assemble({root}, kids);
    for (const auto& [u, row] : slots)
      if (!contains(u)) throw invalid_vertex(u);
    slot_.assign(parent_.size(), 0);
    slots_.assign(parent_.size(), {});
    for (Vertex v : verts_) slots_[v].assign(static_cast<std::size_t>(k), 0);
    for (const auto& [u, row] : slots)
      for (std::size_t s = 0; s < row.size(); ++s)
        if (row[s] != 0) {
          slots_[u][s] = row[s];
          slot_[row[s]] = static_cast<int>(s) + 1;
        }
  }

  static SlottedTree binary(Vertex root, const std::map<Vertex, std::pair<Vertex, Vertex>>& lr) {
    std::map<Vertex, std::vector<Vertex>> slots;
    for (const auto& [u, p] : lr) slots[u] = {p.first, p.second};
    return SlottedTree(2, root, slots);
  }

  int arity() const { return k_; }
  Vertex root() const { return roots_.empty() ? 0 : roots_.front(); }

  /// Child in slot s (1-based), or 0.
  Vertex child(Vertex v, int s) const {
    check(v);
    if (s < 1 || s > k_) throw std::out_of_range("slot " + std::to_string(s));
    return slots_[v][static_cast<std::size_t>(s - 1)];
  }
  Vertex left(Vertex v) const { return child(v, 1); }
  Vertex right(Vertex v) const { return child(v, 2); }

  /// Slot the vertex occupies under its parent; 0 for the root.
  int slot_of(Vertex v) const {
    check(v);
    return slot_[v];
  }

  /// Slot rows for every vertex, as accepted by the constructor.
  std::map<Vertex, std::vector<Vertex>> slot_rows() const {
    std::map<Vertex, std::vector<Vertex>> m;
    for (Vertex v : verts_)
      if (!kids_[v].empty()) m[v] = slots_[v];
    return m;
  }

  SlottedTree subtree(Vertex v) const {
    std::map<Vertex, std::vector<Vertex>> rows;
    for (Vertex u : descendants(v))
      if (!kids_[u].empty()) rows[u] = slots_[u];
    return SlottedTree(k_, v, rows);
  }

  LabeledTree unordered() const {
    std::map<Vertex, Vertex> m;
    for (Vertex v : verts_) m[v] = parent_[v];
    return LabeledTree(m);
  }

  bool operator==(const SlottedTree&) const = default;

 private:
  int k_ = 2;
  std::vector<int> slot_;
  std::vector<std::vector<Vertex>> slots_;
};

/// A structure together with a black/white coloring of its vertices.
template <class Structure>
class Bicolored {
 public:
  using structure_type = Structure;

  Bicolored() = default;

  /// All vertices black.
  explicit Bicolored(Structure s) : s_(std::move(s)), color_(s_.max_label() + 1, Color::black) {}

  Bicolored(Structure s, const std::map<Vertex, Color>& colors) : Bicolored(std::move(s)) {
    if (colors.size() != s_.size()) throw invalid_structure("coloring must cover every vertex");
    for (const auto& [v, c] : colors) {
      if (!s_.contains(v)) throw invalid_vertex(v);
      color_[v] = c;
    }
  }

  /// Colors every vertex in `white` white and the rest black.
  static Bicolored with_white(Structure s, std::span<const Vertex> white) {
    Bicolored b(std::move(s));
    for (Vertex v : white) {
      if (!b.s_.contains(v)) throw invalid_vertex(v);
      b.color_[v] = Color::white;
    }
    return b;
  }

  const Structure& structure() const { return s_; }

  Color color(Vertex v) const {
    if (!s_.contains(v)) throw invalid_vertex(v);
    return color_[v];
  }
  std::map<Vertex, Color> colors() const {
    std::map<Vertex, Color> m;
    for (Vertex v : s_.vertices()) m[v] = color_[v];
    return m;
  }

  // Structure queries, so colored structures work with the generic statistics.
  std::size_t size() const { return s_.size(); }
  bool empty() const { return s_.empty(); }
  std::span<const Vertex> vertices() const { return s_.vertices(); }
  std::span<const Vertex> roots() const { return s_.roots(); }
  bool contains(Vertex v) const { return s_.contains(v); }
  Vertex parent(Vertex v) const { return s_.parent(v); }
  std::span<const Vertex> children(Vertex v) const { return s_.children(v); }
  Vertex max_label() const { return s_.max_label(); }

  Bicolored subtree(Vertex v) const {
    Structure sub = s_.subtree(v);
    Bicolored b(sub);
    for (Vertex u : sub.vertices()) b.color_[u] = color_[u];
    return b;
  }

  bool operator==(const Bicolored&) const = default;

 private:
  Structure s_;
  std::vector<Color> color_;
};

}  // namespace treecount
