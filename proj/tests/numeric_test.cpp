#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "coupon/numeric.hpp"

namespace coupon {
namespace {

TEST(ToDouble, MatchesIeeeDivisionOfExactIntegers) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> num(-(1L << 52), 1L << 52);
  std::uniform_int_distribution<long> den(1, 1L << 52);
  for (int i = 0; i < 200000; ++i) {
    const long a = num(rng), b = den(rng);
    ASSERT_EQ(to_double(make_rational(a, static_cast<unsigned long>(b))),
              static_cast<double>(a) / static_cast<double>(b))
        << a << "/" << b;
  }
  EXPECT_EQ(to_double(make_rational(189, 625)), 0.3024);
  EXPECT_EQ(to_double(Rational(0)), 0.0);
}

TEST(ToDouble, WideExponents) {
  const Rational big = pow(Rational(10), 300) / 3;
  EXPECT_EQ(to_double(big), std::strtod("3.333333333333333333333333333333333e299", nullptr));
  const Rational tiny = 1 / (3 * pow(Rational(10), 300));
  EXPECT_EQ(to_double(tiny), std::strtod("3.333333333333333333333333333333333e-301", nullptr));
  EXPECT_TRUE(std::isinf(to_double(pow(Rational(10), 400))));
}

TEST(Rationals, FormattingAndParsing) {
  EXPECT_EQ(to_string(make_rational(30240, 100000)), "189/625");
  EXPECT_EQ(to_string(Rational(4)), "4");
  EXPECT_EQ(parse_rational("6/8"), make_rational(3, 4));
  EXPECT_EQ(binomial(10, 5), 252);
  EXPECT_EQ(factorial(10), 3628800);
}

}  // namespace
}  // namespace coupon
