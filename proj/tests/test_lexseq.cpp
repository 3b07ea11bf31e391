#include <gtest/gtest.h>

#include "ordvec/generators.hpp"
#include "ordvec/lexseq.hpp"

using namespace ordvec;

TEST(Lex, Classification)
{
    EXPECT_EQ(lex_classify(make_vec({0, 0, 5})), (LexSign{LexSign::Kind::Positive, 3}));
    EXPECT_EQ(lex_classify(make_vec({0, -1, 100})), (LexSign{LexSign::Kind::Negative, 2}));
    EXPECT_EQ(lex_classify(make_vec({0, 0, 0})), (LexSign{LexSign::Kind::Zero, 0}));
    EXPECT_THROW(LexCone(1), DimensionTooSmall);
}

TEST(Lex, OrderUnitsAndNetCatching)
{
    EXPECT_TRUE(lex_is_order_unit(make_vec({1, -5, 0})));
    EXPECT_FALSE(lex_is_order_unit(make_vec({0, 1, 0})));
    EXPECT_FALSE(lex_is_order_unit(make_vec({0, 0, 0})));
    EXPECT_TRUE(lex_is_net_catching(make_vec({0, 1, 0})));
    EXPECT_TRUE(lex_is_net_catching(make_vec({1, 0, 0})));
    EXPECT_FALSE(lex_is_net_catching(make_vec({-1, 0, 0})));
}

TEST(Lex, CatchIndex)
{
    const LexCone cone(3);
    const Vec x = make_vec({0, 1, 0});
    const DecreasingChain<LexCone> second(cone, [](std::uint64_t n) { return make_vec({0, Rational(1, n), 0}); }, make_vec({0, 0, 0}));
    EXPECT_EQ(lex_catch_index(x, second, 100).index, 1u);

    const auto first = canonical_chain(make_vec({1, 0, 0}), cone);
    const auto outcome = lex_catch_index(x, first, 200);
    EXPECT_FALSE(outcome.caught());
    EXPECT_EQ(outcome.depth, 200u);
    EXPECT_TRUE(validate_chain_infimum(first, {make_vec({0, 1, 0})}, 200).refuted());

    EXPECT_EQ(lex_catch_index(make_vec({1, 0}), canonical_chain(make_vec({1, 0}), LexCone(2)), 10).index, 1u);
}

TEST(Lex, NonArchimedeanWitness)
{
    const auto [small, big] = lex_non_archimedean_witness(2);
    EXPECT_EQ(small, make_vec({0, 1}));
    EXPECT_EQ(big, make_vec({1, 0}));
    EXPECT_TRUE(cone_leq(LexCone(2), Vec(Rational(1000000) * small), big));
    EXPECT_EQ(lex_non_archimedean_witness(3).first, make_vec({0, 1, 0}));
    EXPECT_THROW(lex_non_archimedean_witness(1), DimensionTooSmall);
}

TEST(Lex, TotalityOnRandomPairs)
{
    Sampler s = Sampler::for_stream(4, "lex.total");
    const LexCone cone(4);
    for (int k = 0; k < 10000; ++k)
    {
        const Vec a = s.integer_vector(4, 1);
        const Vec b = s.coin(0.1) ? a : s.integer_vector(4, 1);
        const int count = int(lexicographically_less(a, b)) + int(a == b) + int(lexicographically_less(b, a));
        ASSERT_EQ(count, 1);
        ASSERT_EQ(cone_leq(cone, a, b), !lexicographically_less(b, a));
    }
}

TEST(EvSeq, CanonicalFormAndText)
{
    const EvSeq a({1, 2, 2}, 2);
    EXPECT_EQ(a.support(), 1u);
    EXPECT_EQ(a.to_string(), "1/1|2/1");
    EXPECT_EQ(a.at(1), 1);
    EXPECT_EQ(a.at(50), 2);
    EXPECT_EQ(EvSeq::parse("1, 0.5 | -3"), EvSeq({1, Rational(1, 2)}, -3));
    EXPECT_EQ(EvSeq::parse("|1"), EvSeq::constant(1));
    EXPECT_EQ(EvSeq::parse(EvSeq({0, 0, 7}, Rational(1, 3)).to_string()), EvSeq({0, 0, 7}, Rational(1, 3)));
    EXPECT_THROW(EvSeq::parse("1,2"), ParseError);
    EXPECT_THROW(EvSeq::parse("1|"), ParseError);
    EXPECT_THROW(a.at(0), InvalidArgument);
}

TEST(EvSeq, ArithmeticAndLattice)
{
    const EvSeq a({3}, 1), b({0, 4}, 2);
    EXPECT_EQ(a + b, EvSeq({3, 5}, 3));
    EXPECT_EQ(a - b, EvSeq({3, -3}, -1));
    EXPECT_EQ(a * Rational(2), EvSeq({6}, 2));
    EXPECT_EQ(ev_min(a, b), EvSeq({0, 1}, 1));
    EXPECT_EQ(ev_max(a, b), EvSeq({3, 4}, 2));
    EXPECT_TRUE(ev_leq(EvSeq::constant(1), EvSeq::constant(2)));
    EXPECT_FALSE(ev_leq(a, b));
    EXPECT_EQ(a.min_entry(), 1);
    EXPECT_EQ(b.max_entry(), 4);
}

TEST(EvSeq, OrderUnits)
{
    EXPECT_TRUE(ev_is_order_unit(EvSeq::constant(1)));
    EXPECT_FALSE(ev_is_order_unit(EvSeq({0}, 1)));
    EXPECT_TRUE(ev_is_order_unit(EvSeq({2, 3}, Rational(1, 2))));
    EXPECT_EQ(ev_archimedean_bound(EvSeq::constant(1), EvSeq({9}, 2)), 10u);
    EXPECT_EQ(ev_archimedean_bound(EvSeq({0}, 1), EvSeq({9}, 2)), 3u);
    EXPECT_THROW(ev_archimedean_bound(EvSeq::constant(-1), EvSeq::constant(1)), InvalidArgument);
}

TEST(Witness, UnitSequenceGivesTheStandardChain)
{
    const EvSeq e = EvSeq::constant(1);
    const auto w = non_netcatching_witness(e, 40);
    EXPECT_EQ(w.c, 2);
    EXPECT_TRUE(w.certified());
    for (std::uint64_t n = 1; n <= 40; ++n)
    {
        const EvSeq x = w.chain.raw(n);
        EXPECT_EQ(x, EvSeq(std::vector<Rational>(n - 1, Rational(0)), 2));
        EXPECT_FALSE(ev_leq(x, e));
        EXPECT_EQ(w.escape_index[n - 1], n);
    }
    EXPECT_FALSE(ev_is_net_catching(e));
}

TEST(Witness, OtherUnits)
{
    const auto a = non_netcatching_witness(EvSeq({5}, 1), 20);
    EXPECT_EQ(a.c, 6);
    EXPECT_TRUE(a.certified());
    for (std::uint64_t n = 1; n <= 20; ++n) EXPECT_EQ(a.escape_index[n - 1], std::max<std::uint64_t>(n, 2));
    EXPECT_EQ(non_netcatching_witness(EvSeq::constant(3)).c, 4);
    EXPECT_THROW(non_netcatching_witness(EvSeq::constant(0)), NotPositive);
    EXPECT_THROW(non_netcatching_witness(EvSeq({-1}, 1)), NotPositive);
    EXPECT_FALSE(ev_is_net_catching(EvSeq({-1}, 1)));
}

// Lattice identities, Archimedean bound and witnesses over random sequences.
TEST(EvSeqProperties, RandomSequences)
{
    Sampler s = Sampler::for_stream(6, "evseq.random");
    int units = 0;
    for (int trial = 0; trial < 1500; ++trial)
    {
        const EvSeq a = random_evseq(s, -3, 3), b = random_evseq(s, -3, 3), c = random_evseq(s, -3, 3);
        ASSERT_EQ(ev_min(a, ev_max(a, b)), a);
        ASSERT_EQ(ev_max(a, ev_min(a, b)), a);
        ASSERT_EQ(ev_min(a, ev_max(b, c)), ev_max(ev_min(a, b), ev_min(a, c)));
        ASSERT_EQ(ev_max(a, ev_min(b, c)), ev_min(ev_max(a, b), ev_max(a, c)));
        if (a.max_entry() > 0) { ASSERT_FALSE(ev_leq(a * Rational(ev_archimedean_bound(a, b)), b)); }

        const EvSeq u = random_evseq(s, 0, 4);
        if (!ev_is_order_unit(u)) continue;
        ++units;
        const auto w = non_netcatching_witness(u, 12);
        ASSERT_TRUE(w.certified()) << u.to_string();
        for (std::uint64_t n = 1; n <= 12; ++n) ASSERT_FALSE(ev_leq(w.chain.raw(n), u));
    }
    EXPECT_GT(units, 100);
}
