#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ordvec/errors.hpp"
#include "ordvec/rational.hpp"

namespace ordvec {

/**
 * A positive cone X_+ inducing the vector order x <= y  <=>  y - x in X_+.
 *
 * `compatible` reports whether an element lives in the cone's ambient space;
 * `contains` is the membership predicate.
 */
template <typename C>
concept PositiveCone = requires(const C& cone, const typename C::element_type& x) {
    typename C::element_type;
    { cone.contains(x) } -> std::convertible_to<bool>;
    { cone.compatible(x) } -> std::convertible_to<bool>;
};

template <PositiveCone C>
using element_t = typename C::element_type;

/** x <= y in the order induced by `cone`. */
template <PositiveCone C>
bool cone_leq(const C& cone, const element_t<C>& x, const element_t<C>& y)
{
    if (!cone.compatible(x) || !cone.compatible(y))
        throw DimensionMismatch("cone_leq: operand outside the cone's ambient space");
    return cone.contains(element_t<C>(y - x));
}

/** Order interval [lo, hi] = {z : lo <= z <= hi}. Never empty: lo <= hi holds. */
template <PositiveCone C>
class OrderInterval
{
    public:
        using element_type = element_t<C>;

        const element_type& lo() const { return lo_; }
        const element_type& hi() const { return hi_; }
        const C& cone() const { return cone_; }

        bool contains(const element_type& z) const
        {
            return cone_leq(cone_, lo_, z) && cone_leq(cone_, z, hi_);
        }

    private:
        template <PositiveCone D>
        friend OrderInterval<D> make_interval(const element_t<D>&, const element_t<D>&, const D&);

        OrderInterval(element_type lo, element_type hi, C cone)
            : lo_(std::move(lo)), hi_(std::move(hi)), cone_(std::move(cone)) {}

        element_type lo_;
        element_type hi_;
        C cone_;
};

/** [x, y]; throws EmptyInterval unless x <= y. */
template <PositiveCone C>
OrderInterval<C> make_interval(const element_t<C>& x, const element_t<C>& y, const C& cone)
{
    if (!cone_leq(cone, x, y)) throw EmptyInterval("make_interval: lower end is not below upper end");
    return OrderInterval<C>(x, y, cone);
}

/**
 * An N-indexed decreasing sequence n -> x_n (n >= 1) together with the value it
 * is claimed to decrease to. Both invariants are checked at every queried index.
 */
template <PositiveCone C>
class DecreasingChain
{
    public:
        using element_type = element_t<C>;
        using Generator = std::function<element_type(std::uint64_t)>;

        DecreasingChain(C cone, Generator generator, element_type claimed_infimum)
            : cone_(std::move(cone)), generator_(std::move(generator)),
              claimed_infimum_(std::move(claimed_infimum)) {}

        /** Element at index n >= 1, without invariant checks. */
        element_type raw(std::uint64_t n) const
        {
            if (n == 0) throw InvalidArgument("chain indices start at 1");
            return generator_(n);
        }

        /** Element at index n >= 1; throws InvalidArgument if the chain is not
         *  decreasing at n or the claimed infimum is not below x_n. */
        element_type at(std::uint64_t n) const
        {
            element_type x = raw(n);
            if (!cone_leq(cone_, raw(n + 1), x))
                throw InvalidArgument("chain is not decreasing at index " + std::to_string(n));
            if (!cone_leq(cone_, claimed_infimum_, x))
                throw InvalidArgument("claimed infimum is not a lower bound at index " + std::to_string(n));
            return x;
        }

        const element_type& claimed_infimum() const { return claimed_infimum_; }
        const C& cone() const { return cone_; }

    private:
        C cone_;
        Generator generator_;
        element_type claimed_infimum_;
};

/** The chain n -> (1/n) w with claimed infimum 0. Throws NotPositive if w is not in the cone. */
template <PositiveCone C>
DecreasingChain<C> canonical_chain(const element_t<C>& w, const C& cone)
{
    if (!cone.compatible(w)) throw DimensionMismatch("canonical_chain: dimension");
    if (!cone.contains(w)) throw NotPositive("canonical_chain: generator is not positive");
    using E = element_t<C>;
    E zero = E(w * Rational(0));
    return DecreasingChain<C>(cone, [w](std::uint64_t n) { return E(w * Rational(1, n)); }, std::move(zero));
}

/** Least index at which a chain is caught, or NotCaughtUpTo(depth). */
struct CatchOutcome
{
    std::optional<std::uint64_t> index;
    std::uint64_t depth = 0;   // search depth when not caught

    bool caught() const { return index.has_value(); }
    static CatchOutcome at(std::uint64_t n) { return {n, 0}; }
    static CatchOutcome not_caught_up_to(std::uint64_t depth) { return {std::nullopt, depth}; }
};

/**
 * Outcome of a finite refutation search for an infimum claim. A claim is never
 * proved; at best it survives all supplied lower-bound candidates.
 */
template <typename Element>
struct ChainVerdict
{
    enum class Kind { Refuted, ConsistentUpTo };

    Kind kind;
    std::uint64_t depth;
    std::optional<Element> refuting_bound;   // set iff kind == Refuted

    bool refuted() const { return kind == Kind::Refuted; }
};

/**
 * Refuted(z) if some candidate z is below x_1..x_depth without being below the
 * claimed infimum; ConsistentUpTo(depth) otherwise.
 */
template <PositiveCone C>
ChainVerdict<element_t<C>> validate_chain_infimum(const DecreasingChain<C>& chain,
                                                  const std::vector<element_t<C>>& candidate_lower_bounds,
                                                  std::uint64_t depth)
{
    if (depth == 0) throw InvalidArgument("validate_chain_infimum: depth must be >= 1");
    std::vector<element_t<C>> elements;
    elements.reserve(depth);
    for (std::uint64_t n = 1; n <= depth; ++n) elements.push_back(chain.raw(n));

    const C& cone = chain.cone();
    for (const auto& z : candidate_lower_bounds)
    {
        bool below_all = true;
        for (const auto& x : elements)
            if (!cone_leq(cone, z, x)) { below_all = false; break; }
        if (below_all && !cone_leq(cone, z, chain.claimed_infimum()))
            return {ChainVerdict<element_t<C>>::Kind::Refuted, depth, z};
    }
    return {ChainVerdict<element_t<C>>::Kind::ConsistentUpTo, depth, std::nullopt};
}

}   // namespace ordvec
