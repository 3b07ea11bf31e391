#pragma once

// Two model spaces whose orders behave unlike closed finite-dimensional cones.
//
//  * R^n with the lexicographic order: total, not Archimedean. Every nonzero
//    positive vector is net catching but only those with x_1 > 0 are order units.
//  * Eventually constant rational sequences with the componentwise order: an
//    infinite-dimensional Archimedean lattice with order units and no net
//    catching elements at all.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ordvec/core.hpp"
#include "ordvec/rational.hpp"

namespace ordvec {

// ---------------------------------------------------------------------------
// Lexicographic space

/** Positive cone {0} u {x : first nonzero coordinate positive}. */
class LexCone
{
    public:
        using element_type = Vec;

        /** Throws DimensionTooSmall for dim < 2. */
        explicit LexCone(Index dim);

        Index dim() const { return dim_; }
        bool compatible(const Vec& x) const { return x.size() == dim_; }
        bool contains(const Vec& x) const;

    private:
        Index dim_;
};

struct LexSign
{
    enum class Kind { Zero, Positive, Negative };

    Kind kind;
    Index leading;   // 1-based index of the first nonzero coordinate; 0 for Zero

    friend bool operator==(const LexSign&, const LexSign&) = default;
};

LexSign lex_classify(const Vec& x);

/** x_1 > 0. */
bool lex_is_order_unit(const Vec& x);

/** x is positive and nonzero. */
bool lex_is_net_catching(const Vec& x);

/** Least n <= depth with chain(n) <= x lexicographically. */
CatchOutcome lex_catch_index(const Vec& x, const DecreasingChain<LexCone>& chain, std::uint64_t depth);

/** (e_2, e_1): n e_2 <= e_1 for every n although e_2 is not <= 0. Throws DimensionTooSmall. */
std::pair<Vec, Vec> lex_non_archimedean_witness(Index dim);

// ---------------------------------------------------------------------------
// Eventually constant sequences

/**
 * Sequence (x_k)_{k >= 1} equal to prefix[k-1] for k <= prefix.size() and to
 * `tail` afterwards. Canonical: the prefix never ends in the tail value.
 */
class EvSeq
{
    public:
        EvSeq() = default;
        EvSeq(std::vector<Rational> prefix, Rational tail);
        /** The constant sequence c. */
        static EvSeq constant(Rational c) { return EvSeq({}, std::move(c)); }

        const std::vector<Rational>& prefix() const { return prefix_; }
        const Rational& tail() const { return tail_; }
        /** Every index beyond this one carries the tail value. */
        std::size_t support() const { return prefix_.size(); }

        /** k-th entry, k >= 1. */
        const Rational& at(std::size_t k) const;

        /** Smallest and largest entry (attained, since the sequence has finitely many values). */
        Rational min_entry() const;
        Rational max_entry() const;

        friend EvSeq operator+(const EvSeq& a, const EvSeq& b);
        friend EvSeq operator-(const EvSeq& a, const EvSeq& b);
        friend EvSeq operator-(const EvSeq& a);
        friend EvSeq operator*(const EvSeq& a, const Rational& s);
        friend EvSeq operator*(const Rational& s, const EvSeq& a) { return a * s; }
        friend bool operator==(const EvSeq&, const EvSeq&) = default;

        /** "a,b,c|t" with p/q entries; the empty prefix prints as "|t". */
        std::string to_string() const;
        /** Accepts the to_string format with any rational syntax parse_rational takes. */
        static EvSeq parse(std::string_view text);

    private:
        std::vector<Rational> prefix_;
        Rational tail_ = 0;
};

/** Componentwise positive cone. */
struct EvSeqCone
{
    using element_type = EvSeq;

    bool compatible(const EvSeq&) const { return true; }
    bool contains(const EvSeq& x) const { return x.min_entry() >= 0; }
};

bool ev_leq(const EvSeq& a, const EvSeq& b);
EvSeq ev_min(const EvSeq& a, const EvSeq& b);
EvSeq ev_max(const EvSeq& a, const EvSeq& b);

/** Every entry is strictly positive. */
bool ev_is_order_unit(const EvSeq& u);

/**
 * For x with some positive entry x_k: N = floor(y_k / x_k) + 1 (at least 1)
 * makes N x <= y false. Throws InvalidArgument if x has no positive entry.
 */
std::uint64_t ev_archimedean_bound(const EvSeq& x, const EvSeq& y);

/**
 * Decreasing chain x^(n) = (0, ..., 0, c, c, ...) with n - 1 leading zeros and
 * c = max entry of u + 1, decreasing to 0 yet never below u. The flags record
 * the exact checks carried out for n = 1..depth.
 */
struct NonCatchingWitness
{
    EvSeq unit;
    Rational c;
    DecreasingChain<EvSeqCone> chain;
    std::uint64_t depth;

    bool decreasing;       // x^(n+1) <= x^(n)
    bool infimum_zero;     // 0 is a lower bound and x^(k+1)_k = 0, forcing every lower bound to be <= 0
    bool escapes;          // x^(n)_{k(n)} = c > u_{k(n)} with k(n) = max(n, support(u) + 1)
    std::vector<std::uint64_t> escape_index;   // k(n) for n = 1..depth

    bool certified() const { return decreasing && infimum_zero && escapes; }
};

/** Throws NotPositive unless u >= 0 and u != 0. */
NonCatchingWitness non_netcatching_witness(const EvSeq& u, std::uint64_t depth = 64);

/** Always false: positive nonzero u are refuted by their witness chain, others are not positive. */
bool ev_is_net_catching(const EvSeq& u);

}   // namespace ordvec
