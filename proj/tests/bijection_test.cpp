#include <gtest/gtest.h>

#include <set>
#include <string>

#include <treecount/bijection.hpp>
#include <treecount/enumerate.hpp>
#include <treecount/record.hpp>

#include "figures.hpp"

namespace {

using namespace treecount;
using treecount::testing::figure_d;
using treecount::testing::figure_flipped;
using treecount::testing::figure_phi;

template <class S>
std::string key(const S& s) {
  return dump_line(to_record(s));
}

TEST(Figures, BigFlip) {
  ASSERT_TRUE(is_in_Dn(figure_d()));
  EXPECT_EQ(key(big_flip(figure_d())), key(figure_flipped()));
  EXPECT_EQ(big_flip_inv(figure_flipped()), figure_d());
}

TEST(Figures, Phi) {
  ASSERT_TRUE(is_in_En(figure_flipped()));
  EXPECT_EQ(key(phi(figure_flipped())), key(figure_phi()));
  EXPECT_EQ(key(restricted_phi(figure_flipped())), key(figure_phi()));
  EXPECT_TRUE(is_in_Gn(figure_phi()));
  EXPECT_EQ(phi_inv(figure_phi()), figure_flipped());
}

TEST(Figures, WhiteImproperAfterFlip) {
  EXPECT_EQ(white_improper_set(figure_flipped()), right_improper_set(figure_d()));
  EXPECT_EQ(right_improper_set(figure_flipped()), std::vector<Vertex>{});
}

TEST(Flip, InvolutionAndCommuting) {
  for (int n = 1; n <= 3; ++n)
    for_each_binary_tree(n, [&](const SlottedTree& t) {
      for_each_bicoloring(t, [&](const ColoredBinary& b) {
        for (Vertex v : b.vertices()) {
          auto once = flip_at(b, v);
          EXPECT_NE(once.color(v), b.color(v));
          EXPECT_EQ(once.structure().left(v), b.structure().right(v));
          EXPECT_EQ(flip_at(once, v), b);
          for (Vertex w : b.vertices()) EXPECT_EQ(flip_at(flip_at(b, v), w), flip_at(flip_at(b, w), v));
        }
      });
    });
}

TEST(Flip, Errors) {
  EXPECT_THROW(flip_at(figure_d(), 12), invalid_vertex);
  EXPECT_THROW(big_flip(figure_flipped()), domain_error);
  auto en_only = ColoredBinary::with_white(SlottedTree::binary(2, {{2, {1, 0}}}), std::vector<Vertex>{2});
  EXPECT_THROW(big_flip(en_only), domain_error);
  EXPECT_NO_THROW(big_flip_inv(en_only));
}

TEST(Gamma, RoundTrips) {
  for (int n = 0; n <= 4; ++n) {
    std::set<std::string> images;
    for_each_rooted_tree_at(n + 1, n + 1, [&](const LabeledTree& t) {
      Forest f = gamma(t);
      EXPECT_EQ(static_cast<int>(f.size()), n);
      EXPECT_EQ(gamma_inv(f), t);
      images.insert(key(f));
    });
    EXPECT_EQ(BigInt(images.size()), count(Family::forest, n));
    for_each_forest(n, [&](const Forest& f) { EXPECT_EQ(gamma(gamma_inv(f)), f); });
  }
}

TEST(Gamma, BarKeepsOrder) {
  for (int n = 0; n <= 3; ++n) {
    std::set<std::string> images;
    for_each_plane_tree_at(n + 1, n + 1, [&](const PlaneTree& p) {
      PlaneForest f = gamma_bar(p);
      EXPECT_EQ(gamma_bar_inv(f), p);
      images.insert(key(f));
    });
    EXPECT_EQ(BigInt(images.size()), count(Family::plane_forest, n));
  }
  PlaneTree p(4, {{4, {2, 1}}, {2, {3}}});
  PlaneForest f = gamma_bar(p);
  EXPECT_EQ(f, PlaneForest({2, 1}, {{2, {3}}}));
}

TEST(Gamma, RootMustBeTop) {
  EXPECT_THROW(gamma(LabeledTree({{1, 0}, {2, 1}})), domain_error);
  EXPECT_THROW(gamma_bar(PlaneTree(2, {{2, {3}}})), domain_error);
}

TEST(Phi, SmallCase) {
  auto b = SlottedTree::binary(1, {{1, {0, 2}}});
  EXPECT_EQ(phi(b), PlaneTree(3, {{3, {1, 2}}}));
  auto c = SlottedTree::binary(1, {{1, {2, 0}}});
  EXPECT_EQ(phi(c), PlaneTree(3, {{3, {1}}, {1, {2}}}));
}

TEST(Phi, RoundTripsOverAllBinaryTrees) {
  for (int n = 0; n <= 5; ++n) {
    std::set<std::string> images;
    for_each_binary_tree(n, [&](const SlottedTree& b) {
      PlaneTree q = phi(b);
      EXPECT_EQ(q.root(), n + 1);
      EXPECT_EQ(phi_inv(q), b);
      images.insert(key(q));
    });
    EXPECT_EQ(BigInt(images.size()), count(Family::binary, n));
  }
}

TEST(Phi, InverseNeedsTopRoot) {
  EXPECT_THROW(phi_inv(PlaneTree(1, {{1, {2}}})), domain_error);
  auto white_root = ColoredPlaneTree::with_white(PlaneTree(2, {{2, {1}}}), std::vector<Vertex>{2});
  EXPECT_THROW(phi_inv(white_root), domain_error);
}

TEST(Phi, RestrictedImageIsGn) {
  for (int n = 0; n <= 4; ++n) {
    std::set<std::string> images, gn;
    for_each_in_En(n, [&](const ColoredBinary& e) {
      auto g = restricted_phi(e);
      EXPECT_EQ(restricted_phi_inv(g), e);
      images.insert(key(g));
    });
    for_each_in_Gn(n, [&](const ColoredPlaneTree& g) { gn.insert(key(g)); });
    EXPECT_EQ(images, gn) << n;
  }
  EXPECT_THROW(restricted_phi(ColoredBinary(SlottedTree::binary(2, {{2, {0, 1}}}))), domain_error);
}

TEST(Phi, SingleVertex) {
  ColoredBinary e = ColoredBinary::with_white(SlottedTree::binary(1, {}), std::vector<Vertex>{1});
  ASSERT_TRUE(is_in_En(e));
  auto g = restricted_phi(e);
  EXPECT_EQ(g.structure(), PlaneTree(2, {{2, {1}}}));
  EXPECT_EQ(g.color(1), Color::white);
  EXPECT_EQ(g.color(2), Color::black);
}

TEST(Ordering, MinimaOrderRoundTrip) {
  for_each_in_Gn(3, [](const ColoredPlaneTree& g) { EXPECT_EQ(order_by_minima(forget_order(g)), g); });
}

TEST(FullMap, BijectiveOnThree) {
  std::set<std::string> images, forests;
  for_each_in_Dn(3, [&](const ColoredBinary& d) {
    ColoredForest f = full_map(d);
    EXPECT_TRUE(f.structure().is_standard());
    EXPECT_EQ(full_map_inv(f), d);
    images.insert(key(f));
  });
  for_each_forest(3, [&](const Forest& s) { for_each_bicoloring(s, [&](const ColoredForest& f) { forests.insert(key(f)); }); });
  EXPECT_EQ(images.size(), 128u);
  EXPECT_EQ(images, forests);
}

TEST(FullMap, Figure) {
  ColoredForest f = full_map(figure_d());
  EXPECT_EQ(f.structure(), Forest({{3, 0}, {7, 0}, {4, 0}, {6, 3}, {1, 6}, {8, 6}, {5, 7}, {9, 7}, {2, 5}}));
  EXPECT_EQ(f.color(7), Color::white);
  EXPECT_EQ(full_map_inv(f), figure_d());
}

}  // namespace
