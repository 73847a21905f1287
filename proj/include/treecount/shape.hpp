#pragma once

// Unlabeled binary tree shapes, their canonical order, and rank/unrank.
//
// Canonical order of the shapes of size n: by left-subtree size ascending
// (0..n-1), then by the rank of the left subtree, then by the rank of the
// right subtree. The rank of a shape is its 0-based position in that order.

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "core.hpp"

namespace treecount {

class BinaryShape {
 public:
  static constexpr int kNone = -1;

  /// The empty shape.
  BinaryShape() = default;

  static BinaryShape node(const BinaryShape& left, const BinaryShape& right) {
    BinaryShape s;
    s.nodes_.reserve(1 + left.size() + right.size());
    s.nodes_.push_back({kNone, kNone});
    if (!left.empty()) {
      s.nodes_[0][0] = 1;
      s.append(left);
    }
    if (!right.empty()) {
      s.nodes_[0][1] = static_cast<int>(s.nodes_.size());
      s.append(right);
    }
    return s;
  }

  /// Parses "" (empty) or "(L,R)" recursively, e.g. "((,),)" is a root with a
  /// left leaf.
  static BinaryShape parse(std::string_view text) {
    std::size_t pos = 0;
    BinaryShape s = parse_at(text, pos);
    if (pos != text.size()) throw invalid_structure("trailing characters in shape");
    return s;
  }

  int size() const { return static_cast<int>(nodes_.size()); }
  bool empty() const { return nodes_.empty(); }

  /// Nodes are numbered in preorder; node 0 is the root.
  int left(int node) const { return nodes_.at(static_cast<std::size_t>(node))[0]; }
  int right(int node) const { return nodes_.at(static_cast<std::size_t>(node))[1]; }

  BinaryShape left_shape() const { return sub(left(0)); }
  BinaryShape right_shape() const { return sub(right(0)); }

  /// Hook (descendant count) of each node, preorder.
  std::vector<int> hooks() const {
    std::vector<int> h(nodes_.size(), 1);
    for (int i = size() - 1; i >= 0; --i) {
      for (int c : nodes_[static_cast<std::size_t>(i)])
        if (c != kNone) h[static_cast<std::size_t>(i)] += h[static_cast<std::size_t>(c)];
    }
    return h;
  }

  /// Binary tree whose node i carries label omega[i].
  SlottedTree label(std::span<const Vertex> omega) const {
    if (static_cast<int>(omega.size()) != size()) throw invalid_structure("labeling size mismatch");
    if (empty()) return SlottedTree();
    std::map<Vertex, std::vector<Vertex>> rows;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      auto [l, r] = nodes_[i];
      if (l == kNone && r == kNone) continue;
      rows[omega[i]] = {l == kNone ? 0 : omega[static_cast<std::size_t>(l)],
                        r == kNone ? 0 : omega[static_cast<std::size_t>(r)]};
    }
    return SlottedTree(2, omega[0], rows);
  }

  /// Shape of a labeled binary tree, nodes in the same preorder.
  static BinaryShape of(const SlottedTree& b) {
    if (b.arity() != 2) throw invalid_structure("shape of a non-binary tree");
    if (b.empty()) return {};
    return of_at(b, b.root());
  }

  std::string to_string() const { return empty() ? std::string() : str_at(0); }

  bool operator==(const BinaryShape&) const = default;

 private:
  void append(const BinaryShape& other) {
    int offset = static_cast<int>(nodes_.size());
    for (auto n : other.nodes_) {
      for (int& c : n)
        if (c != kNone) c += offset;
      nodes_.push_back(n);
    }
  }

  BinaryShape sub(int root) const {
    if (root == kNone) return {};
    BinaryShape l = sub(left(root));
    BinaryShape r = sub(right(root));
    return node(l, r);
  }

  static BinaryShape of_at(const SlottedTree& b, Vertex v) {
    Vertex l = b.left(v), r = b.right(v);
    return node(l ? of_at(b, l) : BinaryShape(), r ? of_at(b, r) : BinaryShape());
  }

  std::string str_at(int i) const {
    std::string s = "(";
    if (left(i) != kNone) s += str_at(left(i));
    s += ",";
    if (right(i) != kNone) s += str_at(right(i));
    return s + ")";
  }

  static BinaryShape parse_at(std::string_view t, std::size_t& pos) {
    if (pos >= t.size() || t[pos] != '(') return {};
    ++pos;
    BinaryShape l = parse_at(t, pos);
    if (pos >= t.size() || t[pos] != ',') throw invalid_structure("malformed shape");
    ++pos;
    BinaryShape r = parse_at(t, pos);
    if (pos >= t.size() || t[pos] != ')') throw invalid_structure("malformed shape");
    ++pos;
    return node(l, r);
  }

  std::vector<std::array<int, 2>> nodes_;
};

/// Position of a shape in the canonical order of shapes of its size.
struct ShapeIndex {
  int n = 0;
  std::uint64_t index = 0;
  bool operator==(const ShapeIndex&) const = default;
};

/// Catalan(n) as a 64-bit value; valid for n <= 35.
inline std::uint64_t catalan_u64(int n) {
  static const std::vector<std::uint64_t> table = [] {
    std::vector<std::uint64_t> c{1};
    for (int m = 1; m <= 35; ++m) {
      std::uint64_t s = 0;
      for (int i = 0; i < m; ++i) s += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - 1 - i)];
      c.push_back(s);
    }
    return c;
  }();
  if (n < 0 || n > 35) throw std::out_of_range("catalan_u64");
  return table[static_cast<std::size_t>(n)];
}

inline BinaryShape unrank_shape(ShapeIndex idx) {
  if (idx.n < 0 || idx.index >= catalan_u64(idx.n)) throw std::out_of_range("shape index");
  if (idx.n == 0) return {};
  std::uint64_t r = idx.index;
  for (int m = 0; m < idx.n; ++m) {
    std::uint64_t cr = catalan_u64(idx.n - 1 - m);
    std::uint64_t block = catalan_u64(m) * cr;
    if (r < block) {
      return BinaryShape::node(unrank_shape({m, r / cr}), unrank_shape({idx.n - 1 - m, r % cr}));
    }
    r -= block;
  }
  throw std::logic_error("unrank_shape: unreachable");
}

inline ShapeIndex rank_shape(const BinaryShape& s) {
  int n = s.size();
  if (n == 0) return {0, 0};
  BinaryShape l = s.left_shape(), r = s.right_shape();
  int m = l.size();
  std::uint64_t offset = 0;
  for (int j = 0; j < m; ++j) offset += catalan_u64(j) * catalan_u64(n - 1 - j);
  std::uint64_t cr = catalan_u64(n - 1 - m);
  return {n, offset + rank_shape(l).index * cr + rank_shape(r).index};
}

/// All shapes of size n in canonical order.
inline const std::vector<BinaryShape>& binary_shapes(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<BinaryShape>> cache;
  if (n < 0) throw std::out_of_range("binary_shapes: negative size");
  if (n > 16) throw std::out_of_range("binary_shapes: size above 16 is not supported");
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<BinaryShape> out;
  if (n == 0) {
    out.emplace_back();
  } else {
    for (int m = 0; m < n; ++m) {
      const auto& ls = binary_shapes(m);
      const auto& rs = binary_shapes(n - 1 - m);
      for (const auto& l : ls)
        for (const auto& r : rs) out.push_back(BinaryShape::node(l, r));
    }
  }
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(out)).first->second;
}

}  // namespace treecount
