#include "chtilde/laurent_oracle.hpp"

#include <gtest/gtest.h>

#include "chtilde/sampling.hpp"
#include "support/helpers.hpp"
#include "support/oracle.hpp"

namespace {

using namespace chtilde;
using testing_helpers::laurent;
using testing_helpers::tilde;

TEST(Laurent, BasisImages) {
  EXPECT_EQ(eval_basis(1), laurent({{1, 1}, {-1, 1}}));
  EXPECT_TRUE(eval_basis(-1).is_zero());
  EXPECT_EQ(eval_basis(-3), laurent({{1, -1}, {-1, -1}}));
  EXPECT_EQ(eval_basis(0), laurent({{0, 1}}));
  EXPECT_EQ(eval_basis(-2), laurent({{0, -1}}));
}

TEST(Laurent, BasisMatchesChebyshevReference) {
  for (std::int64_t i = -12; i <= 12; ++i) {
    LaurentPoly expected;
    for (const auto& [e, c] : oracle::chebyshev_u(i)) expected.add_term(e, BigInt(static_cast<long>(c)));
    EXPECT_EQ(eval_basis(i), expected) << i;
  }
}

TEST(Laurent, EvalExamples) {
  const LaurentPoly p = eval(tilde({{2, 1}, {4, 1}, {6, 1}}));
  EXPECT_EQ(p.max_index(), 6);
  EXPECT_EQ(p.coeff(6), 1);
  EXPECT_EQ(p.coeff(0), 3);
  EXPECT_TRUE(is_palindromic(p));
  EXPECT_TRUE(eval(TildeElement{}).is_zero());
  // The kernel is nontrivial.
  EXPECT_TRUE(eval(tilde({{0, 1}, {-2, 1}})).is_zero());
}

TEST(Laurent, ProductExamples) {
  const LaurentPoly u1 = eval_basis(1);
  EXPECT_EQ(lmul(u1, u1), laurent({{2, 1}, {0, 2}, {-2, 1}}));
  EXPECT_EQ(lmul(u1, u1), eval_basis(0) + eval_basis(2));
  const LaurentPoly p = laurent({{-3, 2}, {5, -1}});
  EXPECT_EQ(lmul(p, laurent({{0, 1}})), p);
  EXPECT_TRUE(lmul(p, LaurentPoly{}).is_zero());
}

TEST(Laurent, CrossCheckOnRandomPairs) {
  sampling::Rng rng(500);
  for (int trial = 0; trial < 500; ++trial) {
    const TildeElement g1 = sampling::random_tilde(rng);
    const TildeElement g2 = sampling::random_tilde(rng);
    ASSERT_TRUE(cross_check(g1, g2)) << to_string(g1) << " | " << to_string(g2);
  }
}

TEST(Laurent, ImagesAreSymmetric) {
  sampling::Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const LaurentPoly p = eval(sampling::random_tilde(rng));
    EXPECT_EQ(invert_variable(p), p);
    EXPECT_TRUE(is_palindromic(p));
  }
  EXPECT_FALSE(is_palindromic(laurent({{1, 1}})));
}

TEST(Laurent, ValueAtOne) {
  // U_i(1) = i + 1.
  for (std::int64_t i = -6; i <= 6; ++i) EXPECT_EQ(evaluate_at_one(eval_basis(i)), i + 1);
  EXPECT_EQ(evaluate_at_one(laurent({{-2, 3}, {4, -1}})), 2);
}

TEST(Laurent, Rendering) {
  EXPECT_EQ(to_string(LaurentPoly{}), "0");
  EXPECT_NE(to_string(eval_basis(1)).find("t^"), std::string::npos);
}

}  // namespace
