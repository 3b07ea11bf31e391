#include <gtest/gtest.h>

#include "oracles/oracles.hpp"
#include "ordvec/generators.hpp"
#include "ordvec/toposets.hpp"

using namespace ordvec;

namespace {

const HCone kOrthant = HCone::orthant(2);

Polytope unit_box() { return Polytope::box(make_vec({1, 1})); }

// |y1| + |y2| <= 1
Polytope diamond()
{
    Mat a(4, 2);
    a << 1, 1,
         1, -1,
         -1, 1,
         -1, -1;
    return Polytope(a, make_vec({1, 1, 1, 1}));
}

}   // namespace

TEST(Polytope, BasicsAndBoundedness)
{
    EXPECT_TRUE(unit_box().contains(make_vec({1, -1})));
    EXPECT_FALSE(unit_box().contains(make_vec({1, Rational(-11, 10)})));
    EXPECT_TRUE(unit_box().bounded());
    EXPECT_TRUE(unit_box().zero_in_interior());
    Mat half(1, 2);
    half << 1, 0;
    EXPECT_FALSE(Polytope(half, make_vec({1})).bounded());
    EXPECT_THROW(Polytope(half, make_vec({1, 2})), DimensionMismatch);
    EXPECT_THROW(Polytope::box(make_vec({1, 0}), make_vec({0, 0})), EmptyInterval);
}

TEST(Circled, Examples)
{
    EXPECT_TRUE(is_circled(unit_box()));
    EXPECT_TRUE(is_circled(Polytope::box(make_vec({2, 1}))));
    // Triangle with vertices (-1/10,-1/10), (1,0), (0,1): -(1,0) lies outside.
    Mat a(3, 2);
    a << 1, -11,
         -11, 1,
         1, 1;
    const Polytope triangle(a, make_vec({1, 1, 1}));
    EXPECT_TRUE(triangle.contains(make_vec({Rational(-1, 10), Rational(-1, 10)})));
    EXPECT_FALSE(is_circled(triangle));
    Mat half(1, 2);
    half << 1, 0;
    EXPECT_THROW(is_circled(Polytope(half, make_vec({1}))), InvalidArgument);
    EXPECT_THROW(is_circled(Polytope::box(make_vec({1, 1}), make_vec({2, 2}))), InvalidArgument);
}

TEST(Absorption, Examples)
{
    const auto a = absorbs_interval(unit_box(), make_interval(make_vec({-1, -1}), make_vec({2, 3}), kOrthant));
    EXPECT_FALSE(a.infinite);
    EXPECT_EQ(a.mu, Rational(1, 3));

    const auto b = absorbs_interval(unit_box(), make_interval(make_vec({0, 0}), make_vec({0, 0}), kOrthant));
    EXPECT_TRUE(b.infinite);
    EXPECT_TRUE(b.absorbs());

    const auto c = absorbs_interval(diamond(), make_interval(make_vec({0, 0}), make_vec({1, 1}), kOrthant));
    EXPECT_EQ(c.mu, Rational(1, 2));

    Mat wedge(2, 2);
    wedge << 1, 0,
             1, 1;
    Mat not_simplicial(3, 2);
    not_simplicial << 1, 0, 0, 1, 1, 1;
    EXPECT_THROW(absorbs_interval(unit_box(), make_interval(make_vec({0, 0}), make_vec({1, 0}), HCone(not_simplicial))), ConeNotSimplicial);
    EXPECT_NO_THROW(absorbs_interval(unit_box(), make_interval(make_vec({0, 0}), make_vec({1, 0}), HCone(wedge))));
}

TEST(IntervalInBob, Examples)
{
    EXPECT_TRUE(interval_in_Bob(kOrthant, make_vec({1, 1})).in_bob);
    const auto boundary = interval_in_Bob(kOrthant, make_vec({1, 0}));
    EXPECT_FALSE(boundary.in_bob);
    EXPECT_FALSE(boundary.diagnosis.empty());
    EXPECT_FALSE(interval_in_Bob(kOrthant, make_vec({0, 0})).in_bob);
    EXPECT_FALSE(interval_in_Bob(kOrthant, make_vec({-1, 2})).in_bob);
    EXPECT_THROW(interval_in_Bob(HCone(Mat::Ones(1, 2)), make_vec({1, 1})), ConeNotSimplicial);
}

TEST(OrderBoundInterior, RadiusAndCorners)
{
    EXPECT_EQ(order_bound_interior_radius(kOrthant, make_vec({2, 3})), Rational(2));
    EXPECT_FALSE(order_bound_interior_radius(kOrthant, make_vec({2, 0})).has_value());
}

TEST(VofU, MembershipExamples)
{
    EXPECT_TRUE(V_of_U_member(unit_box(), make_vec({Rational(1, 2), Rational(-3, 4)})));
    EXPECT_FALSE(V_of_U_member(unit_box(), make_vec({1, -2})));
    EXPECT_TRUE(V_of_U_member(unit_box(), make_vec({0, 0})));
    EXPECT_TRUE(V_of_U_member(diamond(), make_vec({Rational(1, 2), Rational(-1, 2)})));
    EXPECT_FALSE(V_of_U_member(diamond(), make_vec({Rational(3, 4), Rational(1, 2)})));

    // 0 on the boundary of U: I(U) collapses in the second coordinate.
    const Polytope flat_side = Polytope::box(make_vec({-1, 0}), make_vec({1, 1}));
    EXPECT_TRUE(V_of_U_member(flat_side, make_vec({1, 0})));
    EXPECT_FALSE(V_of_U_member(flat_side, make_vec({0, Rational(1, 100)})));
}

TEST(CanonicalCatching, Examples)
{
    EXPECT_EQ(catches_canonical_chain(unit_box(), make_vec({3, 5})).index, 5u);
    EXPECT_EQ(catches_canonical_chain(diamond(), make_vec({1, 1})).index, 2u);
    EXPECT_EQ(catches_canonical_chain(unit_box(), make_vec({0, 0})).index, 1u);
    const auto miss = catches_canonical_chain(Polytope::box(make_vec({-1, 0}), make_vec({1, 1})), make_vec({0, 1}), 64);
    EXPECT_FALSE(miss.caught());
    EXPECT_EQ(miss.depth, 64u);
    EXPECT_THROW(catches_canonical_chain(unit_box(), make_vec({-1, 0})), NotPositive);
    EXPECT_STREQ(kCanonicalFamilyLabel, "canonical-family only");
}

TEST(SimplicialFrame, TransformsRoundTrip)
{
    Mat a(2, 2);
    a << 1, 0,
         1, -1;
    const HCone cone(a);
    const SimplicialFrame frame(cone);
    const Vec y = make_vec({3, Rational(1, 2)});
    EXPECT_EQ(frame.from_orthant(frame.to_orthant(y)), y);
    const Polytope u = diamond();
    const Polytope image = frame.to_orthant(u);
    EXPECT_EQ(image.contains(frame.to_orthant(y)), u.contains(y));
    EXPECT_EQ(V_of_U_member(u, y, cone), V_of_U_member(image, frame.to_orthant(y)));
}

// V(U) on planar polytopes against the grid oracle, at every grid point.
TEST(VofUProperty, MatchesGridOracle)
{
    Sampler s = Sampler::for_stream(8, "toposets.grid");
    const auto grid = oracle::planar_grid();
    for (int trial = 0; trial < 4; ++trial)
    {
        const Polytope u = random_planar_polytope(s, s.integer(1, 4));
        const oracle::GridV reference(u);
        const Polytope v = V_of_U_polytope(u);
        for (std::size_t k = 0; k < grid.size(); k += 7)
            ASSERT_EQ(V_of_U_member(u, grid[k]), reference.member(grid[k])) << "y=" << to_string(grid[k]);
        for (const auto& y : grid) ASSERT_EQ(v.contains(y), reference.member(y)) << "y=" << to_string(y);
    }
}

TEST(VofUProperty, SubsetCircledAndCatching)
{
    Sampler s = Sampler::for_stream(10, "toposets.lemma");
    for (int trial = 0; trial < 40; ++trial)
    {
        const Index d = s.integer(1, 4);
        const Polytope u = random_symmetric_polytope(s, d, s.integer(1, 3));
        ASSERT_TRUE(is_circled(u));
        const Polytope v = V_of_U_polytope(u);
        for (int k = 0; k < 10; ++k)
        {
            const Vec y = s.rational_vector(d, 2, 6);
            if (!V_of_U_member(u, y)) continue;
            EXPECT_TRUE(u.contains(y));
            EXPECT_TRUE(V_of_U_member(u, Vec(s.rational(1, 6) * y)));
        }
        Vec w = s.rational_vector(d, 3, 3);
        for (Index j = 0; j < d; ++j) w(j) = abs(w(j));
        if (catches_canonical_chain(u, w).caught()) { EXPECT_TRUE(catches_canonical_chain(v, w).caught()); }
        const Vec lo = s.rational_vector(d, 3, 2);
        EXPECT_TRUE(absorbs_box(v, lo, Vec(lo + w)).absorbs());
    }
}

TEST(BobProperty, MatchesOrderUnitsOnSimplicialCones)
{
    Sampler s = Sampler::for_stream(12, "toposets.bob");
    for (int trial = 0; trial < 60; ++trial)
    {
        const Index d = s.integer(1, 4);
        const HCone cone = random_simplicial_cone(s, d);
        const SimplicialFrame frame(cone);
        Vec z = s.rational_vector(d, 2, 3);
        if (trial % 3 == 0)
            for (Index j = 0; j < d; ++j) z(j) = abs(z(j));
        const Vec u = frame.from_orthant(z);
        const bool unit = is_order_unit(cone, u);
        EXPECT_EQ(interval_in_Bob(cone, u, static_cast<std::uint64_t>(trial)).in_bob, unit);
        EXPECT_EQ(order_bound_interior_radius(cone, u).has_value(), unit);
    }
}
