#include <gtest/gtest.h>

#include "ordvec/core.hpp"
#include "ordvec/generators.hpp"
#include "ordvec/lexseq.hpp"
#include "ordvec/polyhedral.hpp"

using namespace ordvec;

namespace {

const HCone kOrthant = HCone::orthant(2);

}   // namespace

TEST(ConeLeq, OrthantAndLexExamples)
{
    EXPECT_TRUE(cone_leq(kOrthant, make_vec({0, 0}), make_vec({1, 2})));
    EXPECT_FALSE(cone_leq(kOrthant, make_vec({0, 1}), make_vec({1, 0})));
    EXPECT_FALSE(cone_leq(kOrthant, make_vec({1, 0}), make_vec({0, 1})));
    EXPECT_TRUE(cone_leq(LexCone(2), make_vec({0, 5}), make_vec({1, -100})));
    EXPECT_THROW(cone_leq(kOrthant, make_vec({0, 0}), make_vec({1, 2, 3})), DimensionMismatch);
}

TEST(MakeInterval, EndpointsAndEmptiness)
{
    const auto iv = make_interval(make_vec({0, 0}), make_vec({1, 1}), kOrthant);
    EXPECT_EQ(iv.lo(), make_vec({0, 0}));
    EXPECT_EQ(iv.hi(), make_vec({1, 1}));
    EXPECT_TRUE(iv.contains(make_vec({Rational(1, 2), 1})));
    EXPECT_FALSE(iv.contains(make_vec({2, 0})));
    EXPECT_THROW(make_interval(make_vec({1, 1}), make_vec({0, 0}), kOrthant), EmptyInterval);

    const auto point = make_interval(make_vec({3, 4}), make_vec({3, 4}), kOrthant);
    EXPECT_TRUE(point.contains(make_vec({3, 4})));
    EXPECT_FALSE(point.contains(make_vec({3, 5})));
}

TEST(CanonicalChain, OrthantChainDecreasesToZero)
{
    const auto chain = canonical_chain(make_vec({2, 2}), kOrthant);
    EXPECT_EQ(chain.at(4), make_vec({Rational(1, 2), Rational(1, 2)}));
    EXPECT_EQ(chain.claimed_infimum(), make_vec({0, 0}));
    const auto verdict = validate_chain_infimum(chain, {make_vec({1, 1})}, 10);
    EXPECT_FALSE(verdict.refuted());
    EXPECT_EQ(verdict.depth, 10u);
}

TEST(CanonicalChain, ZeroGeneratorGivesConstantChain)
{
    const auto chain = canonical_chain(make_vec({0, 0}), kOrthant);
    for (std::uint64_t n = 1; n <= 5; ++n) EXPECT_TRUE(is_zero(chain.at(n)));
    EXPECT_FALSE(validate_chain_infimum(chain, {make_vec({-1, 0}), make_vec({1, 1})}, 8).refuted());
}

TEST(CanonicalChain, LexInfimumClaimIsRefuted)
{
    const auto chain = canonical_chain(make_vec({1, 0}), LexCone(2));
    const auto verdict = validate_chain_infimum(chain, {make_vec({0, 1})}, 50);
    ASSERT_TRUE(verdict.refuted());
    EXPECT_EQ(*verdict.refuting_bound, make_vec({0, 1}));
}

TEST(CanonicalChain, RejectsNonPositiveGenerator)
{
    EXPECT_THROW(canonical_chain(make_vec({-1, 0}), kOrthant), NotPositive);
    EXPECT_THROW(validate_chain_infimum(canonical_chain(make_vec({1, 0}), kOrthant), {}, 0), InvalidArgument);
}

TEST(DecreasingChain, AtDetectsBrokenInvariants)
{
    const DecreasingChain<HCone> increasing(kOrthant, [](std::uint64_t n) { return make_vec({Rational(n), 0}); }, make_vec({0, 0}));
    EXPECT_THROW(increasing.at(1), InvalidArgument);
    EXPECT_THROW(increasing.raw(0), InvalidArgument);
}

// Order axioms over random cones: reflexive, transitive, antisymmetric when
// pointed, and invariant under translation and positive scaling.
TEST(OrderProperties, RandomCones)
{
    Sampler s = Sampler::for_stream(7, "core.order");
    for (int trial = 0; trial < 40; ++trial)
    {
        const Index d = s.integer(1, 4);
        const HCone cone = random_hcone(s, d, d + s.integer(0, 2));
        const Vec p = *interior_point(cone);
        const Vec x = s.rational_vector(d, 3, 3);
        const Vec y = x + random_boundary_point(s, cone, p) + Rational(s.integer(0, 2)) * p;
        const Vec z = y + random_boundary_point(s, cone, p);
        const Vec t = s.rational_vector(d, 3, 3);
        const Rational lambda(s.integer(1, 9), s.integer(1, 5));

        EXPECT_TRUE(cone_leq(cone, x, x));
        ASSERT_TRUE(cone_leq(cone, x, y));
        ASSERT_TRUE(cone_leq(cone, y, z));
        EXPECT_TRUE(cone_leq(cone, x, z));
        EXPECT_TRUE(cone_leq(cone, Vec(x + t), Vec(y + t)));
        EXPECT_TRUE(cone_leq(cone, Vec(lambda * x), Vec(lambda * y)));
        if (exact_null_space(cone.normals()).rows() == 0 && cone_leq(cone, y, x)) { EXPECT_EQ(x, y); }

        const Vec q = s.rational_vector(d, 3, 3);
        bool built = true;
        try { (void)make_interval(x, q, cone); }
        catch (const EmptyInterval&) { built = false; }
        EXPECT_EQ(built, cone_leq(cone, x, q));
    }
}
