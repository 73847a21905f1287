#include <gtest/gtest.h>

#include <treecount/series.hpp>

namespace {

using namespace treecount;

TEST(Series, ReciprocalOfOneMinusX) {
  SeriesQ s(6, {1, -1});
  SeriesQ inv = s.reciprocal();
  for (int i = 0; i <= 6; ++i) EXPECT_EQ(inv[i], Rational(1));
  EXPECT_EQ(s * inv, SeriesQ::constant(6, 1));
}

TEST(Series, PowMatchesBinomials) {
  SeriesQ s(5, {1, 1});
  SeriesQ p = s.pow(4);
  for (int i = 0; i <= 4; ++i) EXPECT_EQ(p[i], Rational(binomial(4, i)));
  EXPECT_EQ(p[5], Rational(0));
  EXPECT_EQ(s.pow(0), SeriesQ::constant(5, 1));
}

TEST(Series, DerivativeAndShift) {
  SeriesQ s(4, {5, 1, 1, 1, 1});
  SeriesQ d = s.derivative();
  EXPECT_EQ(d.order(), 3);
  EXPECT_EQ(d, SeriesQ(3, {1, 2, 3, 4}));
  EXPECT_EQ(s.shift(), SeriesQ(4, {0, 5, 1, 1, 1}));
}

TEST(Series, OrderMismatch) {
  EXPECT_THROW(SeriesQ(3) + SeriesQ(4), order_mismatch);
  EXPECT_THROW(SeriesQ(3) * SeriesQ(2), order_mismatch);
  EXPECT_THROW(SeriesQ(2).truncate(3), order_mismatch);
  EXPECT_THROW(SeriesQ(-1), order_mismatch);
}

TEST(Series, NonUnitReciprocal) { EXPECT_THROW(SeriesQ(3, {0, 1}).reciprocal(), treecount::domain_error); }

TEST(Series, PolynomialCoefficients) {
  SeriesX s(2, {PolyQ{1}, PolyQ::t()});
  SeriesX sq = s * s;
  EXPECT_EQ(sq[1], (PolyQ{0, 2}));
  EXPECT_EQ(sq[2], (PolyQ{0, 0, 1}));
}

TEST(Equations, OdeHoldsSymbolically) {
  for (int k = 2; k <= 4; ++k) EXPECT_TRUE(check_ode(PolyFamily::kary, 10, k).pass) << k;
  EXPECT_TRUE(check_ode(PolyFamily::forest, 10).pass);
  EXPECT_TRUE(check_ode(PolyFamily::plane_forest, 10).pass);
  EXPECT_THROW(check_ode(PolyFamily::rooted_tree, 10), std::invalid_argument);
}

TEST(Equations, OdeDetectsWrongShape) {
  // Plane-forest coefficients do not satisfy the forest equation.
  auto [c, p] = equation_shape(PolyFamily::forest, 2);
  SeriesX g = build_series(PolyFamily::plane_forest, 6);
  SeriesX dg = g.derivative();
  SeriesX g1 = g.truncate(5);
  SeriesX rhs = PolyQ::constant(c) * (g1.pow(p - 1) * dg).shift() + PolyQ::t() * g1.pow(p);
  EXPECT_FALSE(compare_series(dg, rhs).pass);
}

TEST(Equations, FunctionalAllIntegerPoints) {
  for (PolyFamily f : {PolyFamily::forest, PolyFamily::plane_forest, PolyFamily::kary})
    for (int t0 = -3; t0 <= 5; ++t0) {
      if (functional_exponent(f, t0) == 0) {
        EXPECT_THROW(check_functional(f, 8, t0), degenerate_exponent);
        continue;
      }
      EXPECT_TRUE(check_functional(f, 8, t0).pass) << t0;
    }
  EXPECT_EQ(functional_exponent(PolyFamily::forest, 1), 0);
  EXPECT_EQ(functional_exponent(PolyFamily::kary, 1, 2), -1);
}

// At t = 1 the plane-forest series is the Catalan series P = 1 + x P^2.
TEST(Equations, CatalanSpecialization) {
  SeriesQ p = specialize(build_series(PolyFamily::plane_forest, 8), Rational(1));
  std::vector<Rational> cat{1};
  for (int m = 1; m <= 8; ++m) {
    Rational s = 0;
    for (int i = 0; i < m; ++i) s += cat[i] * cat[m - 1 - i];
    cat.push_back(s);
  }
  for (int i = 0; i <= 8; ++i) EXPECT_EQ(p[i], cat[i]) << i;
  EXPECT_EQ(p, SeriesQ::constant(8, 1) + (p * p).shift());
}

}  // namespace
