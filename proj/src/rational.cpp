#include "ordvec/rational.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <utility>

namespace ordvec {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(),
                                      [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Integer parse_integer(std::string_view s, std::string_view whole)
{
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
    {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw ParseError("malformed rational: '" + std::string(whole) + "'");
    const Integer value{std::string(s)};
    return negative ? Integer(-value) : value;
}

}   // namespace

Rational parse_rational(std::string_view text)
{
    const std::string_view s = trim(text);
    if (s.empty()) throw ParseError("empty rational");

    if (const auto slash = s.find('/'); slash != std::string_view::npos)
    {
        const Integer num = parse_integer(trim(s.substr(0, slash)), s);
        const Integer den = parse_integer(trim(s.substr(slash + 1)), s);
        if (den == 0) throw ParseError("zero denominator: '" + std::string(s) + "'");
        return Rational(num, den);
    }

    if (const auto dot = s.find('.'); dot != std::string_view::npos)
    {
        std::string_view int_part = s.substr(0, dot);
        const std::string_view frac_part = s.substr(dot + 1);
        bool negative = false;
        if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+'))
        {
            negative = int_part.front() == '-';
            int_part.remove_prefix(1);
        }
        if ((int_part.empty() && frac_part.empty()) ||
            (!int_part.empty() && !all_digits(int_part)) ||
            (!frac_part.empty() && !all_digits(frac_part)))
            throw ParseError("malformed decimal: '" + std::string(s) + "'");
        const Integer whole = int_part.empty() ? Integer(0) : Integer(std::string(int_part));
        const Integer frac  = frac_part.empty() ? Integer(0) : Integer(std::string(frac_part));
        Integer scale = 1;
        for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
        Rational r = Rational(whole) + Rational(frac, scale);
        return negative ? Rational(-r) : r;
    }

    return Rational(parse_integer(s, s));
}

Vec parse_vector(std::string_view text)
{
    std::vector<Rational> coords;
    std::string_view rest = trim(text);
    if (rest.empty()) throw ParseError("empty vector");
    while (true)
    {
        const auto comma = rest.find(',');
        coords.push_back(parse_rational(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    Vec v(static_cast<Index>(coords.size()));
    for (std::size_t i = 0; i < coords.size(); ++i) v(static_cast<Index>(i)) = coords[i];
    return v;
}

std::string to_string(const Rational& r)
{
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

std::string to_string(const Vec& v)
{
    std::string out;
    for (Index i = 0; i < v.size(); ++i)
    {
        if (i) out += ',';
        out += to_string(v(i));
    }
    return out;
}

std::string to_string(double x)
{
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), res.ptr);
}

Vec make_vec(std::initializer_list<Rational> coords)
{
    Vec v(static_cast<Index>(coords.size()));
    Index i = 0;
    for (const auto& c : coords) v(i++) = c;
    return v;
}

Vec unit_vector(Index dim, Index k)
{
    Vec v = Vec::Zero(dim);
    v(k) = 1;
    return v;
}

Integer floor_integer(const Rational& r)
{
    const Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    Integer q = num / den;      // truncates toward zero
    if (q * den != num && num < 0) q -= 1;
    return q;
}

Integer ceil_integer(const Rational& r)
{
    return -floor_integer(Rational(-r));
}

Vec primitive_direction(const Vec& v)
{
    Integer lcm_den = 1;
    for (Index i = 0; i < v.size(); ++i)
        if (v(i) != 0) lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(v(i)));
    Integer g = 0;
    std::vector<Integer> scaled(static_cast<std::size_t>(v.size()));
    for (Index i = 0; i < v.size(); ++i)
    {
        scaled[static_cast<std::size_t>(i)] = boost::multiprecision::numerator(v(i)) *
                                              (lcm_den / boost::multiprecision::denominator(v(i)));
        g = boost::multiprecision::gcd(g, scaled[static_cast<std::size_t>(i)]);
    }
    if (g == 0) throw InvalidArgument("primitive_direction of the zero vector");
    Vec out(v.size());
    for (Index i = 0; i < v.size(); ++i) out(i) = Rational(scaled[static_cast<std::size_t>(i)] / g);
    return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<Index> rref(Mat& m)
{
    std::vector<Index> pivots;
    Index row = 0;
    for (Index col = 0; col < m.cols() && row < m.rows(); ++col)
    {
        Index sel = -1;
        for (Index r = row; r < m.rows(); ++r)
            if (m(r, col) != 0) { sel = r; break; }
        if (sel < 0) continue;
        if (sel != row) m.row(sel).swap(m.row(row));
        const Rational inv = Rational(1) / m(row, col);
        for (Index c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (Index r = 0; r < m.rows(); ++r)
        {
            if (r == row || m(r, col) == 0) continue;
            const Rational f = m(r, col);
            for (Index c = col; c < m.cols(); ++c)
                if (m(row, c) != 0) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}   // namespace

Index exact_rank(const Mat& m)
{
    Mat work = m;
    return static_cast<Index>(rref(work).size());
}

Mat exact_null_space(const Mat& m)
{
    Mat work = m;
    const auto pivots = rref(work);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (Index p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<Index> free_cols;
    for (Index c = 0; c < m.cols(); ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);

    Mat basis = Mat::Zero(static_cast<Index>(free_cols.size()), m.cols());
    for (std::size_t k = 0; k < free_cols.size(); ++k)
    {
        const Index f = free_cols[k];
        basis(static_cast<Index>(k), f) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            basis(static_cast<Index>(k), pivots[r]) = -work(static_cast<Index>(r), f);
    }
    return basis;
}

Vec exact_solve(const Mat& m, const Vec& rhs)
{
    if (rhs.size() != m.rows()) throw DimensionMismatch("exact_solve: rhs size");
    Mat aug(m.rows(), m.cols() + 1);
    aug.leftCols(m.cols()) = m;
    aug.col(m.cols()) = rhs;
    const auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return Vec();
    Vec x = Vec::Zero(m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x(pivots[r]) = aug(static_cast<Index>(r), m.cols());
    return x;
}

bool lexicographically_less(const Vec& a, const Vec& b)
{
    const Index n = std::min(a.size(), b.size());
    for (Index i = 0; i < n; ++i)
    {
        if (a(i) < b(i)) return true;
        if (b(i) < a(i)) return false;
    }
    return a.size() < b.size();
}

}   // namespace ordvec
