#include <bethenorm/factored.hpp>
#include <bethenorm/rational.hpp>

#include <gtest/gtest.h>

using namespace bethenorm;

TEST(ParseRational, AcceptsIntegersAndFractions) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_EQ(parse_rational("3/2"), make_rational(3, 2));
  EXPECT_EQ(parse_rational("-9/2"), make_rational(-9, 2));
  EXPECT_EQ(parse_rational("6/4"), make_rational(3, 2));
}

TEST(ParseRational, RejectsMalformed) {
  for (const char* bad : {"", "x", "1/", "/2", "1/0", "1.5", "1/-2", "2 ", "--1", "1/2/3", "0x10"})
    EXPECT_THROW(parse_rational(bad), InputError) << bad;
}

TEST(ParseRational, Lists) {
  const auto v = parse_rational_list("2,3/2,5");
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[1], make_rational(3, 2));
  EXPECT_EQ(parse_rational_list("-1,-1"), (std::vector<Rational>{Rational(-1), Rational(-1)}));
  EXPECT_THROW(parse_rational_list("1,x"), InputError);
  EXPECT_THROW(parse_rational_list("1,,2"), InputError);
}

TEST(Format, RationalAndDouble) {
  EXPECT_EQ(to_string(make_rational(8192, 27)), "8192/27");
  EXPECT_EQ(to_string(Rational(-4)), "-4");
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(ipow(make_rational(2, 3), -2), make_rational(9, 4));
  EXPECT_EQ(ipow(Rational(5), 0), Rational(1));
}

TEST(Factored, CanonicalForm) {
  const auto a = FactoredValue::of(make_rational(27, 4));
  EXPECT_EQ(a.exponents().at(Integer(2)), Rational(-2));
  EXPECT_EQ(a.exponents().at(Integer(3)), Rational(3));
  EXPECT_EQ(a.to_string(), "2^-2 * 3^3");
  // different routes to the same value compare equal
  const auto b = FactoredValue::power(make_rational(2, 3), Rational(-2)) * FactoredValue::power(make_rational(1, 3), Rational(-1));
  EXPECT_EQ(a, b);
  EXPECT_EQ(*b.to_rational(), make_rational(27, 4));
  EXPECT_EQ(FactoredValue::of(Rational(1)).to_string(), "1");
  EXPECT_TRUE((a / a).exponents().empty());
}

TEST(Factored, FractionalPowersAndSign) {
  const auto r = FactoredValue::power(Rational(12), make_rational(1, 2));
  EXPECT_FALSE(r.to_rational().has_value());
  EXPECT_EQ(r * r, FactoredValue::of(Rational(12)));
  EXPECT_EQ(r.pow(Rational(4)), FactoredValue::of(Rational(144)));
  EXPECT_NEAR(r.log_abs(), 0.5 * std::log(12.0), 1e-15);
  const auto neg = FactoredValue::of(make_rational(-5, 7));
  EXPECT_TRUE(neg.negative());
  EXPECT_EQ(*(neg * neg).to_rational(), make_rational(25, 49));
  EXPECT_THROW(neg.pow(make_rational(1, 2)), DomainError);
  EXPECT_THROW(FactoredValue::of(Rational(0)), DomainError);
  EXPECT_THROW(FactoredValue::power(Rational(-2), Rational(1)), DomainError);
}
