#include <gtest/gtest.h>

#include "ordvec/rational.hpp"

using namespace ordvec;

TEST(ParseRational, AcceptsFractionsIntegersAndDecimals)
{
    EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
    EXPECT_EQ(parse_rational(" -7 "), Rational(-7));
    EXPECT_EQ(parse_rational("-0.125"), Rational(-1, 8));
    EXPECT_EQ(parse_rational("2."), Rational(2));
    EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
    EXPECT_EQ(parse_rational("4/-8"), Rational(-1, 2));
}

TEST(ParseRational, RejectsMalformedText)
{
    for (const char* bad : {"", "1/0", "abc", "1/2/3", "1.2.3", "--1", ".", "1e5", "0x10"})
        EXPECT_THROW(parse_rational(bad), ParseError) << bad;
}

TEST(ParseVector, SplitsOnCommas)
{
    const Vec v = parse_vector("1/2, -3,0.25");
    ASSERT_EQ(v.size(), 3);
    EXPECT_EQ(v(0), Rational(1, 2));
    EXPECT_EQ(v(1), Rational(-3));
    EXPECT_EQ(v(2), Rational(1, 4));
    EXPECT_THROW(parse_vector("1,,2"), ParseError);
    EXPECT_THROW(parse_vector(""), ParseError);
}

TEST(ToString, CanonicalFormRoundTrips)
{
    EXPECT_EQ(to_string(Rational(3)), "3/1");
    EXPECT_EQ(to_string(Rational(-4, 6)), "-2/3");
    EXPECT_EQ(to_string(make_vec({1, Rational(1, 3)})), "1/1,1/3");
    for (const char* text : {"-2/3", "0/1", "17/5"}) EXPECT_EQ(to_string(parse_rational(text)), text);
    EXPECT_EQ(to_string(0.1), "0.1");
    EXPECT_EQ(std::stod(to_string(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(Rounding, FloorAndCeilOnBothSidesOfZero)
{
    EXPECT_EQ(floor_integer(Rational(7, 2)), 3);
    EXPECT_EQ(ceil_integer(Rational(7, 2)), 4);
    EXPECT_EQ(floor_integer(Rational(-7, 2)), -4);
    EXPECT_EQ(ceil_integer(Rational(-7, 2)), -3);
    EXPECT_EQ(ceil_integer(Rational(5)), 5);
}

TEST(PrimitiveDirection, IdentifiesRays)
{
    EXPECT_EQ(primitive_direction(make_vec({Rational(2, 3), Rational(4, 3)})), make_vec({1, 2}));
    EXPECT_EQ(primitive_direction(make_vec({-6, 0, 9})), make_vec({-2, 0, 3}));
    EXPECT_EQ(primitive_direction(make_vec({1, 1})), primitive_direction(make_vec({5, 5})));
}

TEST(ExactLinearAlgebra, RankNullSpaceAndSolve)
{
    Mat m(2, 3);
    m << 1, 2, 3,
         2, 4, 6;
    EXPECT_EQ(exact_rank(m), 1);
    const Mat ns = exact_null_space(m);
    EXPECT_EQ(ns.rows(), 2);
    for (Index r = 0; r < ns.rows(); ++r) EXPECT_TRUE(is_zero(Vec(m * ns.row(r).transpose())));

    const Vec x = exact_solve(m, make_vec({1, 2}));
    ASSERT_EQ(x.size(), 3);
    EXPECT_EQ(Vec(m * x), make_vec({1, 2}));
    EXPECT_EQ(exact_solve(m, make_vec({1, 3})).size(), 0);
}

TEST(Lexicographic, StrictComparison)
{
    EXPECT_TRUE(lexicographically_less(make_vec({0, 5}), make_vec({1, -100})));
    EXPECT_FALSE(lexicographically_less(make_vec({1, 0}), make_vec({1, 0})));
    EXPECT_TRUE(lexicographically_less(make_vec({1, 0}), make_vec({1, 1})));
}
