#pragma once

// Independent reference computations for the test suite. None of these call
// into the solver, the double-description code or the closed-form norms; they
// only share the scalar types and the membership predicates being compared.

#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include "ordvec/exactlp.hpp"
#include "ordvec/icecream.hpp"
#include "ordvec/polyhedral.hpp"
#include "ordvec/toposets.hpp"

namespace oracle {

using ordvec::Index;
using ordvec::Integer;
using ordvec::Mat;
using ordvec::Rational;
using ordvec::Vec;

/** Unique solution of the square system m x = b by Gauss-Jordan, or nullopt if singular. */
inline std::optional<Vec> solve_square(Mat m, Vec b)
{
    const Index n = m.rows();
    for (Index col = 0; col < n; ++col)
    {
        Index pivot = col;
        while (pivot < n && m(pivot, col) == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        m.row(col).swap(m.row(pivot));
        std::swap(b(col), b(pivot));
        for (Index r = 0; r < n; ++r)
        {
            if (r == col || m(r, col) == 0) continue;
            const Rational f = m(r, col) / m(col, col);
            for (Index c = col; c < n; ++c) m(r, c) -= f * m(col, c);
            b(r) -= f * b(col);
        }
    }
    Vec x(n);
    for (Index i = 0; i < n; ++i) x(i) = b(i) / m(i, i);
    return x;
}

struct LpAnswer
{
    bool feasible = false;
    Rational value;   // optimum when feasible and an objective is set
};

/**
 * Brute-force LP over a bounded feasible region: every vertex is the unique
 * solution of some n active rows, so enumerating all n-subsets finds the
 * optimum. Only valid when the region is bounded (callers add box rows).
 */
inline LpAnswer brute_force_lp(const ordvec::lp::LinearProgram& prog)
{
    const Index n = prog.num_variables();
    const Index m = prog.num_constraints();
    LpAnswer best;
    std::vector<Index> pick(static_cast<std::size_t>(n));
    std::function<void(Index, Index)> choose = [&](Index start, Index depth) {
        if (depth == n)
        {
            Mat a(n, n);
            Vec b(n);
            for (Index k = 0; k < n; ++k)
            {
                a.row(k) = prog.constraints.row(pick[static_cast<std::size_t>(k)]);
                b(k) = prog.rhs(pick[static_cast<std::size_t>(k)]);
            }
            const auto x = solve_square(a, b);
            if (!x || !ordvec::lp::satisfies(prog, *x)) return;
            const Rational v = prog.objective.dot(*x);
            const bool better = !best.feasible
                || (prog.sense == ordvec::lp::Sense::Maximize && v > best.value)
                || (prog.sense == ordvec::lp::Sense::Minimize && v < best.value);
            best.feasible = true;
            if (better) best.value = v;
            return;
        }
        for (Index i = start; i < m; ++i)
        {
            pick[static_cast<std::size_t>(depth)] = i;
            choose(i + 1, depth + 1);
        }
    };
    choose(0, 0);
    return best;
}

/** Simplest rational (least denominator) in the closed interval [lo, hi], by Stern-Brocot descent. */
inline Rational simplest_between(Rational lo, Rational hi)
{
    using boost::multiprecision::numerator;
    using boost::multiprecision::denominator;
    if (lo > hi) std::swap(lo, hi);
    if (lo <= 0 && hi >= 0) return 0;
    if (hi < 0) return -simplest_between(-hi, -lo);
    // Continued-fraction recursion on lo > 0.
    const Integer fl = numerator(lo) / denominator(lo);
    if (Rational(fl) == lo) return lo;
    if (Rational(fl + 1) <= hi) return Rational(fl + 1);
    const Rational inner = simplest_between(Rational(1) / (hi - Rational(fl)), Rational(1) / (lo - Rational(fl)));
    return Rational(fl) + Rational(1) / inner;
}

/**
 * u-norm by bisection over the membership predicate of a (closed) cone,
 * followed by recovery of the exact value as the simplest rational in the
 * final bracket. `bits` halvings shrink the bracket below 2^-bits.
 */
template <typename Cone>
Rational bisect_unorm(const Cone& cone, const Vec& u, const Vec& x, int bits = 96)
{
    auto ok = [&](const Rational& l) { return cone.contains(Vec(l * u - x)) && cone.contains(Vec(l * u + x)); };
    if (ok(0)) return 0;
    Rational lo = 0, hi = 1;
    while (!ok(hi)) { lo = hi; hi *= 2; }
    for (int k = 0; k < bits; ++k)
    {
        const Rational mid = (lo + hi) / 2;
        (ok(mid) ? hi : lo) = mid;
    }
    return simplest_between(lo, hi);
}

/** Float u-norm on an ice cream cone by bisection on the raw inequality f.y >= eps ||y||. */
inline double bisect_unorm_ice(const ordvec::IceCreamCone<double>& cone, const Eigen::VectorXd& u, const Eigen::VectorXd& x)
{
    auto in = [&](const Eigen::VectorXd& y) { return cone.axis().dot(y) >= cone.eps() * y.norm(); };
    auto ok = [&](double l) { return in(l * u - x) && in(l * u + x); };
    if (ok(0)) return 0;
    double lo = 0, hi = 1;
    while (!ok(hi)) { lo = hi; hi *= 2; }
    while (true)
    {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (ok(mid) ? hi : lo) = mid;
    }
    return hi;
}

/**
 * V(U) membership for a planar U on the grid of step 1/16 in [-2, 2]^2: y is in
 * V(U) iff some grid x >= |y| has all four corners of the box [-x, x] in U.
 * The corner table is filled once and swept into a suffix-OR table, so every
 * candidate x is still examined.
 */
class GridV
{
    public:
        explicit GridV(const ordvec::Polytope& u)
        {
            for (int a = kSteps; a >= 0; --a)
                for (int b = kSteps; b >= 0; --b)
                {
                    bool here = true;
                    for (int sa : {-1, 1})
                        for (int sb : {-1, 1})
                        {
                            Vec c(2);
                            c << Rational(sa * a, 16), Rational(sb * b, 16);
                            here = here && u.contains(c);
                        }
                    reach_[a][b] = here || (a < kSteps && reach_[a + 1][b]) || (b < kSteps && reach_[a][b + 1]);
                }
        }

        /** y must be a grid point. */
        bool member(const Vec& y) const
        {
            const Rational a = abs(y(0)) * 16, b = abs(y(1)) * 16;
            if (a > kSteps || b > kSteps) return false;
            return reach_[static_cast<int>(a.convert_to<double>())][static_cast<int>(b.convert_to<double>())];
        }

    private:
        static constexpr int kSteps = 32;
        bool reach_[kSteps + 1][kSteps + 1]{};
};

inline std::vector<Vec> planar_grid()
{
    std::vector<Vec> out;
    for (int i = -32; i <= 32; ++i)
        for (int j = -32; j <= 32; ++j)
        {
            Vec y(2);
            y << Rational(i, 16), Rational(j, 16);
            out.push_back(y);
        }
    return out;
}

}   // namespace oracle
