#include <gtest/gtest.h>

#include "descpoly/error.hpp"
#include "descpoly/eulerian.hpp"
#include "test_support.hpp"

using namespace descpoly;
using testing_support::to_ll;

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(3, 4), 0);
  for (int n = 0; n <= 30; ++n)
    for (int j = 0; j <= n + 1; ++j) EXPECT_EQ(binomial(n, j), oracle::choose(n, j));
}

TEST(GenBinomial, Examples) {
  EXPECT_EQ(gen_binomial(5, 2), 10);
  EXPECT_EQ(gen_binomial(-1, 3), -1);
  EXPECT_EQ(gen_binomial(2, 5), 0);
  EXPECT_EQ(gen_binomial(-3, 0), 1);
  // C(-a, j) = (-1)^j C(a+j-1, j)
  for (int a = 1; a <= 6; ++a)
    for (int j = 0; j <= 6; ++j)
      EXPECT_EQ(gen_binomial(-a, j), (j % 2 ? -1 : 1) * oracle::choose(a + j - 1, j));
}

TEST(EulerianNumber, Examples) {
  EXPECT_EQ(eulerian_number(2, 1), 1);
  EXPECT_EQ(eulerian_number(4, 1), 11);
  EXPECT_EQ(eulerian_number(0, 0), 1);
  EXPECT_EQ(eulerian_number(3, -1), 0);
  EXPECT_EQ(eulerian_number(3, 3), 0);
}

TEST(EulerianPoly, Examples) {
  EXPECT_EQ(eulerian_poly(0), IntPoly{1});
  EXPECT_EQ(eulerian_poly(1), IntPoly{1});
  EXPECT_EQ(eulerian_poly(2), (IntPoly{1, 1}));
  EXPECT_EQ(eulerian_poly(4), (IntPoly{1, 11, 11, 1}));
}

TEST(EulerianPoly, MatchesDescentCensusOverSn) {
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(to_ll(eulerian_poly(n)), oracle::eulerian(n)) << "n=" << n;
}

TEST(EulerianPoly, SumsToFactorialAndIsSymmetric) {
  Integer fact = 1;
  for (unsigned n = 1; n <= 20; ++n) {
    fact *= n;
    IntPoly a = eulerian_poly(n);
    EXPECT_EQ(a.eval(1), fact);
    EXPECT_EQ(*a.degree(), n - 1);
    EXPECT_TRUE(is_symmetric(a));
    EXPECT_TRUE(is_unimodal(a));
  }
}

TEST(EulerianTable, RowsMatchDirectComputation) {
  EulerianTable t(9);
  EXPECT_EQ(t.max_n(), 9u);
  for (unsigned n = 0; n <= 9; ++n) EXPECT_EQ(t[n], eulerian_poly(n));
  EXPECT_THROW(t[10], std::out_of_range);
}

TEST(EulerIdentity, ResidualAtZeroIsOneMinusX) {
  EXPECT_EQ(euler_identity_residual(0), (IntPoly{1, -1}));
}

TEST(EulerIdentity, VanishesForPositiveIndex) {
  for (unsigned kp = 1; kp <= 12; ++kp) EXPECT_TRUE(euler_identity_residual(kp).is_zero()) << "k'=" << kp;
}

TEST(AbIdentity, Examples) {
  EXPECT_TRUE(ab_identity_residual(1, 0).is_zero());
  EXPECT_TRUE(ab_identity_residual(-2, 3).is_zero());
  EXPECT_TRUE(ab_identity_residual(0, 0).is_zero());
}

TEST(AbIdentity, VanishesOnBox) {
  for (long a = -6; a <= 6; ++a)
    for (long b = -6; b <= 6; ++b)
      if (a + b >= 0) EXPECT_TRUE(ab_identity_residual(a, b).is_zero()) << a << "," << b;
}

TEST(AbIdentity, RejectsNegativeTotal) {
  try {
    ab_identity_residual(-3, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
}
