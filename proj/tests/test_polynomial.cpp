#include <random>

#include <gtest/gtest.h>

#include "descpoly/error.hpp"
#include "descpoly/polynomial.hpp"
#include "test_support.hpp"

using namespace descpoly;
using testing_support::from_ll;
using testing_support::to_ll;

namespace {

IntPoly random_poly(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<long long> coef(-50, 50);
  oracle::Coeffs c(len(rng));
  for (auto& v : c) v = coef(rng);
  return from_ll(c);
}

}  // namespace

TEST(IntPoly, NormalizesTrailingZeros) {
  IntPoly p{1, 2, 0, 0};
  EXPECT_EQ(p.coeffs().size(), 2u);
  EXPECT_EQ(*p.degree(), 1u);
  IntPoly z{0, 0};
  EXPECT_TRUE(z.is_zero());
  EXPECT_FALSE(z.degree().has_value());
  EXPECT_EQ(z, IntPoly{});
}

TEST(IntPoly, CoeffPastEndIsZero) {
  IntPoly p{3, 4};
  EXPECT_EQ(p.coeff(0), 3);
  EXPECT_EQ(p.coeff(7), 0);
}

TEST(IntPoly, AddIdentity) { EXPECT_EQ(add(IntPoly{1, 1}, IntPoly{}), (IntPoly{1, 1})); }

TEST(IntPoly, MulExample) { EXPECT_EQ(mul(IntPoly{1, 1}, IntPoly{1, 1, 1}), (IntPoly{1, 2, 2, 1})); }

TEST(IntPoly, PowMatchesBinomialRow) {
  EXPECT_EQ(pow(IntPoly{1, 1}, 3), (IntPoly{1, 3, 3, 1}));
  EXPECT_EQ(pow(IntPoly{1, 1}, 0), IntPoly::constant(1));
  IntPoly p20 = pow(IntPoly{1, 1}, 20);
  for (int j = 0; j <= 20; ++j) EXPECT_EQ(p20.coeff(j), oracle::choose(20, j));
}

TEST(IntPoly, CancellationToZero) {
  IntPoly p{1, -2, 5};
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_TRUE((p + (-p)).is_zero());
  EXPECT_TRUE((p * IntPoly{}).is_zero());
}

TEST(IntPoly, RingLawsOnRandomInputs) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    IntPoly a = random_poly(rng, 6), b = random_poly(rng, 6), c = random_poly(rng, 6);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(to_ll(a * b), oracle::multiply(to_ll(a), to_ll(b)));
    if (!a.is_zero() && !b.is_zero()) EXPECT_EQ(*(a * b).degree(), *a.degree() + *b.degree());
  }
}

TEST(IntPoly, EvalHorner) {
  IntPoly p{1, 11, 11, 1};
  EXPECT_EQ(p.eval(1), 24);
  EXPECT_EQ(p.eval(-1), 0);
  EXPECT_EQ(IntPoly{}.eval(5), 0);
}

TEST(IntPoly, ExactBeyondMachineWords) {
  IntPoly p = pow(IntPoly{1, 1}, 100);
  Integer expected = Integer(1) << 100;
  EXPECT_EQ(p.eval(1), expected);
  EXPECT_EQ(p.coeff(50).str(), "100891344545564193334812497256");
}

TEST(IntPoly, ToString) {
  EXPECT_EQ((IntPoly{1, 3}).to_string('y'), "1 + 3y");
  EXPECT_EQ((IntPoly{1, 0, 1, 2, 1, 0, 1}).to_string('u'), "1 + u^2 + 2u^3 + u^4 + u^6");
  EXPECT_EQ(IntPoly{}.to_string(), "0");
  EXPECT_EQ((IntPoly{0, -1}).to_string(), "-x");
}

TEST(Geometric, Examples) {
  EXPECT_EQ(geometric(0), IntPoly{1});
  EXPECT_EQ(geometric(2), (IntPoly{1, 1, 1}));
  EXPECT_EQ(geometric(4), (IntPoly{1, 1, 1, 1, 1}));
}

TEST(SubstitutePower, Examples) {
  EXPECT_EQ(substitute_power(IntPoly{1, 1}, 5), (IntPoly{1, 0, 0, 0, 0, 1}));
  EXPECT_EQ(substitute_power(IntPoly{1, 4, 1}, 3), (IntPoly{1, 0, 0, 4, 0, 0, 1}));
  IntPoly p{2, -3, 7};
  EXPECT_EQ(substitute_power(p, 1), p);
  EXPECT_THROW(substitute_power(p, 0), Error);
}

TEST(Multisect, Examples) {
  EXPECT_EQ(multisect(IntPoly{1, 3, 3, 1}, 2), (IntPoly{1, 3}));
  EXPECT_EQ(multisect(IntPoly{1, 1, 1, 1, 1, 1}, 3), (IntPoly{1, 1}));
  IntPoly p{2, -3, 7};
  EXPECT_EQ(multisect(p, 1), p);
  EXPECT_THROW(multisect(p, 0), Error);
}

TEST(Multisect, InvertsSubstitutePower) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    IntPoly p = random_poly(rng, 8);
    for (std::size_t m = 1; m <= 5; ++m) EXPECT_EQ(multisect(substitute_power(p, m), m), p);
  }
}

TEST(Reverse, Examples) {
  EXPECT_EQ(reverse(IntPoly{1, 1}, 1), (IntPoly{1, 1}));
  EXPECT_EQ(reverse(IntPoly{1, 2}, 2), (IntPoly{0, 2, 1}));
  IntPoly p2{1, 1, 2, 1, 1};
  EXPECT_EQ(reverse(p2, 4), p2);
  EXPECT_THROW(reverse(p2, 3), Error);
}

TEST(Reverse, IsAnInvolution) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    IntPoly p = random_poly(rng, 7);
    std::size_t d = p.degree().value_or(0) + trial % 3;
    if (p.coeff(0) != 0) EXPECT_EQ(reverse(reverse(p, d), d), p);
  }
}

TEST(Shape, SymmetryAndUnimodality) {
  EXPECT_TRUE(is_symmetric(IntPoly{1, 1, 2, 1, 1}));
  EXPECT_FALSE(is_symmetric(IntPoly{1, 2}));
  EXPECT_FALSE(is_unimodal(IntPoly{1, 3, 1, 3, 1}));
  EXPECT_TRUE(is_unimodal(IntPoly{1, 2, 2, 1}));
  EXPECT_TRUE(is_unimodal(IntPoly{5}));
  EXPECT_THROW(is_symmetric(IntPoly{}), Error);
  EXPECT_THROW(is_unimodal(IntPoly{}), Error);
}

TEST(Laurent, Examples) {
  LaurentPoly inv = LaurentPoly::monomial(1, -1);
  LaurentPoly u = LaurentPoly::monomial(1, 1);
  EXPECT_EQ(l_mul(inv, u), LaurentPoly(IntPoly{1}));
  // u - u^{-1} + 1 + u^{-1}
  LaurentPoly sum = l_add(l_add(u, l_scale(inv, -1)), l_add(LaurentPoly(IntPoly{1}), inv));
  EXPECT_EQ(to_poly(sum), (IntPoly{1, 1}));
  try {
    to_poly(inv);
    FAIL() << "expected NegativeExponentResidue";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NegativeExponentResidue);
  }
}

TEST(Laurent, TrimsBothEnds) {
  LaurentPoly p(-3, {0, 0, 5, 0});
  EXPECT_EQ(p.min_exp(), -1);
  EXPECT_EQ(p.coeffs().size(), 1u);
  EXPECT_EQ(p.coeff(-1), 5);
  EXPECT_EQ(p.coeff(4), 0);
  LaurentPoly z(-2, {0, 0});
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.min_exp(), 0);
}
