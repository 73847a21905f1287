#include <gtest/gtest.h>

#include <treecount/enumerate.hpp>
#include <treecount/record.hpp>

#include "figures.hpp"

namespace {

using namespace treecount;

template <class S>
void expect_roundtrip(const S& s) {
  Json j = to_record(s);
  Json reparsed = Json::parse(dump_line(j));
  EXPECT_EQ(from_record<S>(reparsed), s) << dump_line(j);
  EXPECT_EQ(dump_line(to_record(from_record<S>(reparsed))), dump_line(j));
}

template <class S>
void expect_colored_roundtrip(const Bicolored<S>& b) {
  Json j = Json::parse(dump_line(to_record(b)));
  EXPECT_EQ(colored_from_record<S>(j), b) << j.dump();
}

TEST(Record, ForestLayout) {
  Forest f({{1, 2}, {2, 0}, {3, 0}});
  EXPECT_EQ(dump_line(to_record(f)), R"({"family":"forest","n":3,"parent":[2,0,0]})");
}

TEST(Record, PlaneForestLayout) {
  PlaneForest p({3, 1}, {{1, {2}}});
  EXPECT_EQ(dump_line(to_record(p)),
            R"({"family":"plane_forest","n":3,"parent":[0,1,0],"children":{"1":[2]},"trees":[3,1]})");
}

TEST(Record, BinaryLayout) {
  auto b = SlottedTree::binary(2, {{2, {0, 1}}, {1, {3, 0}}});
  EXPECT_EQ(dump_line(to_record(b)), R"({"family":"binary","n":3,"k":2,"parent":[2,0,1],"slot":[2,0,1]})");
}

TEST(Record, ColoredLayout) {
  auto f = ColoredForest::with_white(Forest({{1, 0}, {2, 1}}), std::vector<Vertex>{2});
  EXPECT_EQ(dump_line(to_record(f)), R"({"family":"forest","n":2,"parent":[0,1],"color":["b","w"]})");
}

TEST(Record, RoundTripAllFamiliesThroughFive) {
  for (int n = 0; n <= 5; ++n) {
    for_each_forest(n, [](const Forest& s) { expect_roundtrip(s); });
    for_each_rooted_tree(n, [](const LabeledTree& s) { expect_roundtrip(s); });
    for_each_plane_forest(n, [](const PlaneForest& s) { expect_roundtrip(s); });
    for_each_plane_tree(n, [](const PlaneTree& s) { expect_roundtrip(s); });
    for_each_binary_tree(n, [](const SlottedTree& s) { expect_roundtrip(s); });
  }
  for (int n = 0; n <= 4; ++n) for_each_kary_tree(n, 3, [](const SlottedTree& s) { expect_roundtrip(s); });
}

TEST(Record, RoundTripColored) {
  for (int n = 0; n <= 3; ++n) {
    for_each_forest(n, [](const Forest& f) { for_each_bicoloring(f, [](const ColoredForest& s) { expect_colored_roundtrip(s); }); });
    for_each_plane_forest(n, [](const PlaneForest& f) {
      for_each_bicoloring(f, [](const ColoredPlaneForest& s) { expect_colored_roundtrip(s); });
    });
    for_each_in_Dn(n, [](const ColoredBinary& s) { expect_colored_roundtrip(s); });
    for_each_in_Gn(n, [](const ColoredPlaneTree& s) { expect_colored_roundtrip(s); });
  }
  expect_colored_roundtrip(treecount::testing::figure_phi());
}

TEST(Record, RejectsMalformed) {
  auto bad = [](const char* text) { return Json::parse(text); };
  EXPECT_THROW(from_record<Forest>(bad(R"({"family":"forest","n":2})")), record_error);
  EXPECT_THROW(from_record<Forest>(bad(R"({"family":"forest","n":2,"parent":[0]})")), record_error);
  EXPECT_THROW(from_record<Forest>(bad(R"({"family":"forest","n":1,"parent":[0],"extra":1})")), record_error);
  EXPECT_THROW(from_record<Forest>(bad(R"({"family":"binary","n":1,"parent":[0]})")), record_error);
  EXPECT_THROW(from_record<Forest>(bad(R"({"family":"forest","n":2,"parent":[2,1]})")), error);
  EXPECT_THROW(from_record<Forest>(bad(R"({"family":"forest","n":1,"parent":[7]})")), record_error);
  EXPECT_THROW(from_record<Forest>(bad(R"([1,2])")), record_error);
  EXPECT_THROW(from_record<SlottedTree>(bad(R"({"family":"binary","n":2,"k":2,"parent":[0,1],"slot":[0,3]})")),
               record_error);
  EXPECT_THROW(from_record<SlottedTree>(bad(R"({"family":"binary","n":3,"k":2,"parent":[0,1,1],"slot":[0,1,1]})")),
               record_error);
  EXPECT_THROW(from_record<PlaneTree>(bad(R"({"family":"plane_tree","n":2,"parent":[0,1],"children":{"2":[1]}})")),
               error);
  EXPECT_THROW(colored_from_record<Forest>(bad(R"({"family":"forest","n":1,"parent":[0],"color":["x"]})")),
               record_error);
  EXPECT_THROW(colored_from_record<Forest>(bad(R"({"family":"forest","n":1,"parent":[0]})")), record_error);
}

TEST(PolyRecord, RoundTrip) {
  PolyRecord r{"kary", 3, 3, "closed", PolyT{0, 8, 16, 6}};
  Json j = to_json(r);
  EXPECT_EQ(j.dump(), R"({"family":"kary","n":3,"k":3,"method":"closed","coeffs":["0","8","16","6"]})");
  PolyRecord back = poly_record_from_json(j);
  EXPECT_EQ(back.poly, r.poly);
  EXPECT_EQ(back.k, r.k);
  EXPECT_THROW(poly_record_from_json(Json::parse(R"({"family":"forest","n":1,"method":"closed","coeffs":["1","0"]})")),
               record_error);
}

}  // namespace
