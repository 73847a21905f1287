#pragma once

// JSON records for structures and polynomials.
//
// A tree record stores the parent array (entry i is the parent of vertex i+1,
// 0 for a root) and only the extra fields its family needs:
//
//   {"family": "plane_forest", "n": 3, "parent": [0, 1, 0],
//    "children": {"1": [2]}, "trees": [3, 1], "color": ["b", "w", "b"]}
//
//   family     fields besides family/n/parent
//   forest       -
//   rooted_tree  -
//   plane_tree   children
//   plane_forest children, trees
//   binary       k (= 2), slot
//   kary         k, slot
//
// `slot` holds each vertex's slot under its parent (1-based, 0 for the root);
// `children` maps a vertex to its ordered child list, vertices with no
// children omitted; `color` is optional. Vertex sets are always {1..n}.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "core.hpp"
#include "enumerate.hpp"
#include "polynomial.hpp"

namespace treecount {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent record.
class record_error : public error {
 public:
  using error::error;
};

namespace detail {

inline Json parent_array(const detail::Links& s) {
  if (!s.is_standard()) throw record_error("records need the vertex set {1..n}");
  Json arr = Json::array();
  for (Vertex v : s.vertices()) arr.push_back(s.parent(v));
  return arr;
}

inline Json children_object(const detail::Links& s) {
  Json obj = Json::object();
  for (Vertex v : s.vertices())
    if (!s.children(v).empty())
      obj[std::to_string(v)] = std::vector<Vertex>(s.children(v).begin(), s.children(v).end());
  return obj;
}

inline Json record_of(const LabeledTree& t) {
  return Json{{"family", "rooted_tree"}, {"n", t.size()}, {"parent", parent_array(t)}};
}
inline Json record_of(const Forest& f) {
  return Json{{"family", "forest"}, {"n", f.size()}, {"parent", parent_array(f)}};
}
inline Json record_of(const PlaneTree& p) {
  return Json{{"family", "plane_tree"},
              {"n", p.size()},
              {"parent", parent_array(p)},
              {"children", children_object(p)}};
}
inline Json record_of(const PlaneForest& p) {
  return Json{{"family", "plane_forest"},
              {"n", p.size()},
              {"parent", parent_array(p)},
              {"children", children_object(p)},
              {"trees", std::vector<Vertex>(p.roots().begin(), p.roots().end())}};
}
inline Json record_of(const SlottedTree& b) {
  Json slots = Json::array();
  for (Vertex v : b.vertices()) slots.push_back(b.slot_of(v));
  return Json{{"family", b.arity() == 2 ? "binary" : "kary"},
              {"n", b.size()},
              {"k", b.arity()},
              {"parent", parent_array(b)},
              {"slot", slots}};
}

inline void require_keys(const Json& j, const std::vector<std::string>& allowed,
                         const std::vector<std::string>& required) {
  if (!j.is_object()) throw record_error("record must be a JSON object");
  for (const auto& r : required)
    if (!j.contains(r)) throw record_error("record lacks field '" + r + "'");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
      throw record_error("unexpected field '" + it.key() + "' for family " +
                         j.value("family", std::string("?")));
}

inline std::vector<Vertex> int_array(const Json& j, const char* what) {
  if (!j.is_array()) throw record_error(std::string(what) + " must be an array");
  std::vector<Vertex> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw record_error(std::string(what) + " must hold integers");
    out.push_back(x.get<Vertex>());
  }
  return out;
}

inline int record_n(const Json& j) {
  if (!j.at("n").is_number_integer() || j.at("n").get<int>() < 0)
    throw record_error("n must be a nonnegative integer");
  return j.at("n").get<int>();
}

inline std::vector<Vertex> record_parents(const Json& j) {
  auto par = int_array(j.at("parent"), "parent");
  if (static_cast<int>(par.size()) != record_n(j)) throw record_error("parent array length differs from n");
  for (Vertex p : par)
    if (p < 0 || p > static_cast<Vertex>(par.size())) throw record_error("parent entry out of range");
  return par;
}

inline std::map<Vertex, std::vector<Vertex>> record_children(const Json& j, int n) {
  const Json& obj = j.at("children");
  if (!obj.is_object()) throw record_error("children must be an object");
  std::map<Vertex, std::vector<Vertex>> kids;
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    Vertex v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(it.key(), &used);
      if (used != it.key().size()) throw std::invalid_argument("junk");
    } catch (const std::exception&) {
      throw record_error("children key '" + it.key() + "' is not a vertex");
    }
    if (v < 1 || v > n) throw record_error("children key out of range");
    kids[v] = int_array(it.value(), "children list");
    if (kids[v].empty()) throw record_error("children lists must be nonempty");
  }
  return kids;
}

// Plane order must agree with the parent array.
inline void check_plane_consistency(const detail::Links& s, const std::vector<Vertex>& par) {
  for (Vertex v : s.vertices())
    if (s.parent(v) != par[static_cast<std::size_t>(v - 1)])
      throw record_error("children lists disagree with the parent array at vertex " + std::to_string(v));
}

template <class T>
T decode_structure(const Json& j);

template <>
inline Forest decode_structure<Forest>(const Json& j) {
  return Forest::from_parent_array(record_parents(j));
}

template <>
inline LabeledTree decode_structure<LabeledTree>(const Json& j) {
  return LabeledTree::from_parent_array(record_parents(j));
}

template <>
inline PlaneForest decode_structure<PlaneForest>(const Json& j) {
  auto par = record_parents(j);
  auto roots = int_array(j.at("trees"), "trees");
  PlaneForest f(roots, record_children(j, record_n(j)));
  if (static_cast<int>(f.size()) != record_n(j) || !f.is_standard())
    throw record_error("plane forest does not cover {1..n}");
  check_plane_consistency(f, par);
  return f;
}

template <>
inline PlaneTree decode_structure<PlaneTree>(const Json& j) {
  auto par = record_parents(j);
  if (par.empty()) throw record_error("a plane tree needs a vertex");
  auto root_it = std::find(par.begin(), par.end(), 0);
  if (root_it == par.end() || std::count(par.begin(), par.end(), 0) != 1)
    throw record_error("a plane tree has exactly one root");
  Vertex root = static_cast<Vertex>(root_it - par.begin()) + 1;
  PlaneTree p(root, record_children(j, record_n(j)));
  if (static_cast<int>(p.size()) != record_n(j) || !p.is_standard())
    throw record_error("plane tree does not cover {1..n}");
  check_plane_consistency(p, par);
  return p;
}

template <>
inline SlottedTree decode_structure<SlottedTree>(const Json& j) {
  auto par = record_parents(j);
  auto slot = int_array(j.at("slot"), "slot");
  if (!j.at("k").is_number_integer()) throw record_error("k must be an integer");
  const int k = j.at("k").get<int>();
  if (k < 2) throw record_error("k must be at least 2");
  if (j.at("family") == "binary" && k != 2) throw record_error("binary records have k = 2");
  if (slot.size() != par.size()) throw record_error("slot array length differs from n");
  Vertex root = 0;
  std::map<Vertex, std::vector<Vertex>> rows;
  for (std::size_t i = 0; i < par.size(); ++i) {
    Vertex v = static_cast<Vertex>(i) + 1;
    if (par[i] == 0) {
      if (root != 0) throw record_error("a k-ary tree has exactly one root");
      if (slot[i] != 0) throw record_error("the root has slot 0");
      root = v;
      continue;
    }
    if (slot[i] < 1 || slot[i] > k) throw record_error("slot out of range at vertex " + std::to_string(v));
    auto& row = rows[par[i]];
    row.resize(static_cast<std::size_t>(k), 0);
    Vertex& cell = row[static_cast<std::size_t>(slot[i] - 1)];
    if (cell != 0) throw record_error("two children share a slot under vertex " + std::to_string(par[i]));
    cell = v;
  }
  if (!par.empty() && root == 0) throw record_error("a k-ary tree needs a root");
  SlottedTree b(k, root, rows);
  if (static_cast<int>(b.size()) != record_n(j)) throw record_error("k-ary tree does not cover {1..n}");
  return b;
}

template <class T>
struct family_of;
template <> struct family_of<Forest> { static constexpr const char* names[] = {"forest"}; };
template <> struct family_of<LabeledTree> { static constexpr const char* names[] = {"rooted_tree"}; };
template <> struct family_of<PlaneTree> { static constexpr const char* names[] = {"plane_tree"}; };
template <> struct family_of<PlaneForest> { static constexpr const char* names[] = {"plane_forest"}; };
template <> struct family_of<SlottedTree> { static constexpr const char* names[] = {"binary", "kary"}; };

template <class T>
std::vector<std::string> allowed_fields(bool colored) {
  std::vector<std::string> keys{"family", "n", "parent"};
  if constexpr (std::is_same_v<T, PlaneTree> || std::is_same_v<T, PlaneForest>) keys.push_back("children");
  if constexpr (std::is_same_v<T, PlaneForest>) keys.push_back("trees");
  if constexpr (std::is_same_v<T, SlottedTree>) {
    keys.push_back("k");
    keys.push_back("slot");
  }
  if (colored) keys.push_back("color");
  return keys;
}

}  // namespace detail

template <class S>
Json to_record(const S& s) {
  return detail::record_of(s);
}

template <class S>
Json to_record(const Bicolored<S>& b) {
  Json j = detail::record_of(b.structure());
  Json colors = Json::array();
  for (Vertex v : b.vertices()) colors.push_back(std::string(1, color_code(b.color(v))));
  j["color"] = colors;
  return j;
}

inline std::string record_family(const Json& j) {
  if (!j.is_object() || !j.contains("family") || !j.at("family").is_string())
    throw record_error("record lacks a string 'family'");
  return j.at("family").get<std::string>();
}

inline bool record_is_colored(const Json& j) { return j.is_object() && j.contains("color"); }

/// Decodes a record of structure type S (colored input is rejected).
template <class S>
S from_record(const Json& j) {
  const std::string fam = record_family(j);
  const auto& names = detail::family_of<S>::names;
  if (std::find(std::begin(names), std::end(names), fam) == std::end(names))
    throw record_error("expected a " + std::string(names[0]) + " record, got " + fam);
  auto keys = detail::allowed_fields<S>(false);
  detail::require_keys(j, keys, keys);
  try {
    return detail::decode_structure<S>(j);
  } catch (const nlohmann::json::exception& e) {
    throw record_error(e.what());
  }
}

/// Decodes a colored record of structure type S.
template <class S>
Bicolored<S> colored_from_record(const Json& j) {
  if (!record_is_colored(j)) throw record_error("record has no 'color' field");
  Json plain = j;
  plain.erase("color");
  S s = from_record<S>(plain);
  const Json& cs = j.at("color");
  if (!cs.is_array() || cs.size() != s.size()) throw record_error("color array length differs from n");
  std::map<Vertex, Color> colors;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i] == "b") colors[static_cast<Vertex>(i) + 1] = Color::black;
    else if (cs[i] == "w") colors[static_cast<Vertex>(i) + 1] = Color::white;
    else throw record_error("colors must be \"b\" or \"w\"");
  }
  return Bicolored<S>(std::move(s), colors);
}

/// Compact single-line serialization used for JSONL output.
inline std::string dump_line(const Json& j) { return j.dump(); }

struct PolyRecord {
  std::string family;
  int n = 0;
  std::optional<int> k;
  std::string method;
  PolyT poly;
};

inline Json to_json(const PolyRecord& r) {
  Json j{{"family", r.family}, {"n", r.n}};
  if (r.k) j["k"] = *r.k;
  j["method"] = r.method;
  j["coeffs"] = r.poly.to_strings();
  return j;
}

inline PolyRecord poly_record_from_json(const Json& j) {
  PolyRecord r;
  try {
    r.family = j.at("family").get<std::string>();
    r.n = j.at("n").get<int>();
    if (j.contains("k")) r.k = j.at("k").get<int>();
    r.method = j.at("method").get<std::string>();
    std::vector<BigInt> cs;
    for (const auto& s : j.at("coeffs")) cs.emplace_back(s.get<std::string>().c_str());
    if (!cs.empty() && cs.back() == 0) throw record_error("coefficient list has a trailing zero");
    r.poly = PolyT(std::move(cs));
  } catch (const nlohmann::json::exception& e) {
    throw record_error(e.what());
  } catch (const std::runtime_error& e) {
    throw record_error(e.what());
  }
  return r;
}

}  // namespace treecount
