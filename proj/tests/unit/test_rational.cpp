#include <gtest/gtest.h>

#include "hcrep/error.hpp"
#include "hcrep/linalg.hpp"
#include "hcrep/rational.hpp"

using namespace hcrep;

TEST(Rational, ParsesIntegersAndFractions) {
    EXPECT_EQ(parse_rational("3"), Rational(3));
    EXPECT_EQ(parse_rational("-1/2"), make_rational(-1, 2));
    EXPECT_EQ(parse_rational(" 4/6 "), make_rational(2, 3));
    EXPECT_EQ(parse_rational("−1/2"), make_rational(-1, 2));
}

TEST(Rational, RejectsGarbage) {
    EXPECT_THROW(parse_rational(""), InvalidInput);
    EXPECT_THROW(parse_rational("1/0"), InvalidInput);
    EXPECT_THROW(parse_rational("1.5"), InvalidInput);
    EXPECT_THROW(parse_rational("a"), InvalidInput);
    EXPECT_THROW(parse_rational("1/"), InvalidInput);
}

TEST(Rational, ListAndRendering) {
    auto v = parse_rational_list("3,−1/2, 0");
    ASSERT_EQ(v.size(), 3u);
    EXPECT_EQ(to_string(v[0]), "3");
    EXPECT_EQ(to_string(v[1]), "-1/2");
    EXPECT_EQ(to_string(v[2]), "0");
    EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
}

TEST(Rational, ToLongRequiresInteger) {
    EXPECT_EQ(to_long(Rational(-7)), -7);
    EXPECT_THROW(to_long(make_rational(1, 2)), InvalidInput);
}

TEST(RationalMatrix, InverseRankDeterminant) {
    auto a = RationalMatrix::from_int({{2, -1}, {-1, 2}});
    EXPECT_EQ(a.determinant(), Rational(3));
    EXPECT_EQ(a.rank(), 2u);
    auto inv = a.inverse();
    ASSERT_TRUE(inv);
    EXPECT_EQ((*inv)(0, 0), make_rational(2, 3));
    EXPECT_EQ((*inv)(0, 1), make_rational(1, 3));
    EXPECT_EQ(a * *inv, RationalMatrix::identity(2));

    auto s = RationalMatrix::from_int({{1, 2}, {2, 4}});
    EXPECT_EQ(s.rank(), 1u);
    EXPECT_EQ(s.determinant(), Rational(0));
    EXPECT_FALSE(s.inverse());
    EXPECT_FALSE(solve(s, {Rational(1), Rational(0)}));
}
