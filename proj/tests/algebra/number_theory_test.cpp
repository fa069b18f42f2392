#include "mvg/algebra/number_theory.hpp"

#include <gtest/gtest.h>

#include "mvg/core/error.hpp"

namespace mvg::algebra {
namespace {

TEST(IsPrimePowerTest, Examples) {
  EXPECT_EQ(is_prime_power(343), (PrimePower{7, 3}));
  EXPECT_FALSE(is_prime_power(21).has_value());
  EXPECT_EQ(is_prime_power(2048), (PrimePower{2, 11}));
  EXPECT_FALSE(is_prime_power(1).has_value());
  EXPECT_EQ(is_prime_power(2), (PrimePower{2, 1}));
  EXPECT_THROW(is_prime_power(0), InputError);
}

TEST(IsPrimePowerTest, AgreesWithEnumeration) {
  std::vector<bool> expected(5000, false);
  for (auto p : primes_up_to(5000))
    for (std::int64_t v = p; v < 5000; v *= p) expected[v] = true;
  for (std::int64_t v = 1; v < 5000; ++v) EXPECT_EQ(is_prime_power(v).has_value(), expected[v]) << v;
}

TEST(MultOrderTest, Examples) {
  EXPECT_EQ(mult_order(2, 3), 2);
  EXPECT_EQ(mult_order(3, 5), 4);
  EXPECT_EQ(mult_order(2, 7), 3);
  EXPECT_THROW(mult_order(2, 4), InputError);
  EXPECT_THROW(mult_order(3, 1), InputError);
}

TEST(SumOfTwoSquaresTest, Examples) {
  EXPECT_TRUE(is_sum_of_two_squares(13));
  EXPECT_FALSE(is_sum_of_two_squares(21));
  EXPECT_TRUE(is_sum_of_two_squares(0));
  EXPECT_TRUE(is_sum_of_two_squares(2));
  EXPECT_FALSE(is_sum_of_two_squares(3));
}

TEST(ExactSqrtTest, Squares) {
  EXPECT_EQ(exact_sqrt(256), 16);
  EXPECT_FALSE(exact_sqrt(255).has_value());
  EXPECT_EQ(exact_sqrt(0), 0);
}

}  // namespace
}  // namespace mvg::algebra
