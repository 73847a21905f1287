#include <gtest/gtest.h>

#include <set>
#include <string>

#include <treecount/shape.hpp>

namespace {

using namespace treecount;

// C_m = sum_i C_i C_{m-1-i}, computed here without the library.
std::uint64_t catalan_by_recurrence(int n) {
  std::vector<std::uint64_t> c{1};
  for (int m = 1; m <= n; ++m) {
    std::uint64_t s = 0;
    for (int i = 0; i < m; ++i) s += c[i] * c[m - 1 - i];
    c.push_back(s);
  }
  return c[n];
}

TEST(Shapes, CountsMatchCatalanRecurrence) {
  EXPECT_EQ(binary_shapes(0).size(), 1u);
  EXPECT_TRUE(binary_shapes(0).front().empty());
  EXPECT_EQ(binary_shapes(3).size(), 5u);
  EXPECT_EQ(catalan_by_recurrence(8), 1430u);
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(binary_shapes(n).size(), catalan_by_recurrence(n)) << n;
}

TEST(Shapes, CanonicalOrderOnThree) {
  std::vector<std::string> got;
  for (const auto& s : binary_shapes(3)) got.push_back(s.to_string());
  EXPECT_EQ(got, (std::vector<std::string>{"(,(,(,)))", "(,((,),))", "((,),(,))", "((,(,)),)", "(((,),),)"}));
}

TEST(Shapes, DistinctAndSized) {
  for (int n = 0; n <= 8; ++n) {
    std::set<std::string> seen;
    for (const auto& s : binary_shapes(n)) {
      EXPECT_EQ(s.size(), n);
      seen.insert(s.to_string());
    }
    EXPECT_EQ(seen.size(), binary_shapes(n).size());
  }
}

TEST(Shapes, RankUnrankRoundTrip) {
  for (int n = 0; n <= 8; ++n) {
    const auto& shapes = binary_shapes(n);
    for (std::uint64_t i = 0; i < shapes.size(); ++i) {
      EXPECT_EQ(rank_shape(shapes[i]), (ShapeIndex{n, i}));
      EXPECT_EQ(unrank_shape({n, i}), shapes[i]);
    }
  }
  EXPECT_THROW(unrank_shape({3, 5}), std::out_of_range);
}

TEST(Shapes, ParsePrintRoundTrip) {
  for (const auto& s : binary_shapes(5)) EXPECT_EQ(BinaryShape::parse(s.to_string()), s);
  EXPECT_THROW(BinaryShape::parse("(,"), invalid_structure);
  EXPECT_THROW(BinaryShape::parse("(,))"), invalid_structure);
}

TEST(Shapes, LabelingKeepsShape) {
  const auto& s = binary_shapes(4)[7];
  std::vector<Vertex> omega{4, 2, 3, 1};
  SlottedTree b = s.label(omega);
  EXPECT_EQ(b.root(), 4);
  EXPECT_EQ(BinaryShape::of(b), s);
  EXPECT_THROW(s.label(std::vector<Vertex>{1, 2}), invalid_structure);
}

TEST(Shapes, HookSumsOverChildren) {
  for (const auto& s : binary_shapes(6)) {
    auto h = s.hooks();
    for (int i = 0; i < s.size(); ++i) {
      int expect = 1;
      if (s.left(i) != BinaryShape::kNone) expect += h[s.left(i)];
      if (s.right(i) != BinaryShape::kNone) expect += h[s.right(i)];
      EXPECT_EQ(h[i], expect);
    }
  }
}

}  // namespace
