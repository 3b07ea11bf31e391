#include "ordvec/lexseq.hpp"

#include <algorithm>
#include <functional>

namespace ordvec {

LexCone::LexCone(Index dim) : dim_(dim)
{
    if (dim < 2) throw DimensionTooSmall("lexicographic space needs dimension >= 2");
}

bool LexCone::contains(const Vec& x) const
{
    return lex_classify(x).kind != LexSign::Kind::Negative;
}

LexSign lex_classify(const Vec& x)
{
    for (Index i = 0; i < x.size(); ++i)
    {
        if (x(i) > 0) return {LexSign::Kind::Positive, i + 1};
        if (x(i) < 0) return {LexSign::Kind::Negative, i + 1};
    }
    return {LexSign::Kind::Zero, 0};
}

bool lex_is_order_unit(const Vec& x)
{
    return x.size() > 0 && x(0) > 0;
}

bool lex_is_net_catching(const Vec& x)
{
    return lex_classify(x).kind == LexSign::Kind::Positive;
}

CatchOutcome lex_catch_index(const Vec& x, const DecreasingChain<LexCone>& chain, std::uint64_t depth)
{
    for (std::uint64_t n = 1; n <= depth; ++n)
        if (cone_leq(chain.cone(), chain.raw(n), x)) return CatchOutcome::at(n);
    return CatchOutcome::not_caught_up_to(depth);
}

std::pair<Vec, Vec> lex_non_archimedean_witness(Index dim)
{
    if (dim < 2) throw DimensionTooSmall("non-Archimedean witness needs dimension >= 2");
    return {unit_vector(dim, 1), unit_vector(dim, 0)};
}

// ---------------------------------------------------------------------------

EvSeq::EvSeq(std::vector<Rational> prefix, Rational tail) : prefix_(std::move(prefix)), tail_(std::move(tail))
{
    while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
}

const Rational& EvSeq::at(std::size_t k) const
{
    if (k == 0) throw InvalidArgument("EvSeq indices start at 1");
    return k <= prefix_.size() ? prefix_[k - 1] : tail_;
}

Rational EvSeq::min_entry() const
{
    Rational m = tail_;
    for (const auto& v : prefix_) m = std::min(m, v);
    return m;
}

Rational EvSeq::max_entry() const
{
    Rational m = tail_;
    for (const auto& v : prefix_) m = std::max(m, v);
    return m;
}

namespace {

EvSeq combine(const EvSeq& a, const EvSeq& b, const std::function<Rational(const Rational&, const Rational&)>& op)
{
    const std::size_t n = std::max(a.support(), b.support());
    std::vector<Rational> prefix;
    prefix.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) prefix.push_back(op(a.at(k), b.at(k)));
    return EvSeq(std::move(prefix), op(a.tail(), b.tail()));
}

}   // namespace

EvSeq operator+(const EvSeq& a, const EvSeq& b)
{
    return combine(a, b, [](const Rational& x, const Rational& y) { return x + y; });
}

EvSeq operator-(const EvSeq& a, const EvSeq& b)
{
    return combine(a, b, [](const Rational& x, const Rational& y) { return x - y; });
}

EvSeq operator-(const EvSeq& a)
{
    return a * Rational(-1);
}

EvSeq operator*(const EvSeq& a, const Rational& s)
{
    std::vector<Rational> prefix;
    prefix.reserve(a.support());
    for (const auto& v : a.prefix()) prefix.push_back(v * s);
    return EvSeq(std::move(prefix), a.tail() * s);
}

std::string EvSeq::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < prefix_.size(); ++i)
    {
        if (i > 0) out += ',';
        out += ordvec::to_string(prefix_[i]);
    }
    return out + '|' + ordvec::to_string(tail_);
}

EvSeq EvSeq::parse(std::string_view text)
{
    const auto bar = text.find('|');
    if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos)
        throw ParseError("sequence must have the form 'a,b,...|tail': '" + std::string(text) + "'");
    const std::string_view head = text.substr(0, bar);
    std::vector<Rational> prefix;
    if (head.find_first_not_of(" \t") != std::string_view::npos)
    {
        const Vec v = parse_vector(head);
        prefix.assign(v.data(), v.data() + v.size());
    }
    return EvSeq(std::move(prefix), parse_rational(text.substr(bar + 1)));
}

bool ev_leq(const EvSeq& a, const EvSeq& b)
{
    return EvSeqCone{}.contains(b - a);
}

EvSeq ev_min(const EvSeq& a, const EvSeq& b)
{
    return combine(a, b, [](const Rational& x, const Rational& y) { return std::min(x, y); });
}

EvSeq ev_max(const EvSeq& a, const EvSeq& b)
{
    return combine(a, b, [](const Rational& x, const Rational& y) { return std::max(x, y); });
}

bool ev_is_order_unit(const EvSeq& u)
{
    return u.min_entry() > 0;
}

std::uint64_t ev_archimedean_bound(const EvSeq& x, const EvSeq& y)
{
    // Entries beyond the common support all equal the tails, so support + 1 stands for them.
    const std::size_t n = std::max(x.support(), y.support()) + 1;
    for (std::size_t k = 1; k <= n; ++k)
    {
        if (x.at(k) <= 0) continue;
        const Rational ratio = y.at(k) / x.at(k);
        if (ratio < 0) return 1;
        return static_cast<std::uint64_t>(floor_integer(ratio)) + 1;
    }
    throw InvalidArgument("ev_archimedean_bound: x has no positive entry");
}

NonCatchingWitness non_netcatching_witness(const EvSeq& u, std::uint64_t depth)
{
    if (!EvSeqCone{}.contains(u) || u == EvSeq{}) throw NotPositive("non_netcatching_witness: u must be positive and nonzero");
    if (depth == 0) throw InvalidArgument("non_netcatching_witness: depth must be >= 1");

    const Rational c = u.max_entry() + 1;
    auto generator = [c](std::uint64_t n) { return EvSeq(std::vector<Rational>(n - 1, Rational(0)), c); };
    NonCatchingWitness w{u, c, DecreasingChain<EvSeqCone>(EvSeqCone{}, generator, EvSeq{}), depth, true, true, true, {}};

    for (std::uint64_t n = 1; n <= depth; ++n)
    {
        const EvSeq x = w.chain.raw(n);
        if (!ev_leq(w.chain.raw(n + 1), x)) w.decreasing = false;
        // 0 is a lower bound, and coordinate n is already 0 from index n + 1 on.
        if (!ev_leq(EvSeq{}, x) || w.chain.raw(n + 1).at(n) != 0) w.infimum_zero = false;

        const std::uint64_t k = std::max<std::uint64_t>(n, u.support() + 1);
        w.escape_index.push_back(k);
        if (!(x.at(k) == c && c > u.at(k)) || ev_leq(x, u)) w.escapes = false;
    }
    return w;
}

bool ev_is_net_catching(const EvSeq& u)
{
    if (!EvSeqCone{}.contains(u) || u == EvSeq{}) return false;
    if (!non_netcatching_witness(u, 8).certified())
        throw TheoremViolation("non_netcatching_witness failed to certify for " + u.to_string());
    return false;
}

}   // namespace ordvec
