#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "ordvec/core.hpp"
#include "ordvec/errors.hpp"
#include "ordvec/rational.hpp"

namespace ordvec {

enum class IceMembership { Interior, Boundary, Outside };

/**
 * Ice cream cone K = {x : f . x >= eps ||x||} in Euclidean space, with
 * ||f|| = 1 and 0 < eps < 1. Every predicate compares against `tol`.
 */
template <typename Scalar = double>
class IceCreamCone
{
    public:
        using element_type = VectorX<Scalar>;

        IceCreamCone(element_type axis, Scalar eps, Scalar tol = Scalar(1e-9))
            : axis_(std::move(axis)), eps_(eps), tol_(tol)
        {
            if (!(tol_ > 0)) throw InvalidArgument("IceCreamCone: tol must be positive");
            if (!(eps_ > 0 && eps_ < 1)) throw InvalidArgument("IceCreamCone: eps must lie in (0, 1)");
            if (axis_.size() == 0) throw InvalidArgument("IceCreamCone: empty axis");
            if (std::abs(axis_.norm() - Scalar(1)) > tol_)
                throw InvalidArgument("IceCreamCone: axis must have unit Euclidean norm");
        }

        Index dim() const { return axis_.size(); }
        const element_type& axis() const { return axis_; }
        Scalar eps() const { return eps_; }
        Scalar tol() const { return tol_; }
        /** Half-opening angle arccos(eps) between the axis and the boundary rays. */
        Scalar angle() const { return std::acos(eps_); }

        /** f . x - eps ||x||; nonnegative exactly on the cone. */
        Scalar excess(const element_type& x) const
        {
            check(x);
            return axis_.dot(x) - eps_ * x.norm();
        }

        bool compatible(const element_type& x) const { return x.size() == dim(); }
        /** Membership up to tolerance, so that the boundary belongs to the cone. */
        bool contains(const element_type& x) const { return excess(x) >= -tol_; }

        void check(const element_type& x) const
        {
            if (!compatible(x)) throw DimensionMismatch("IceCreamCone: dimension");
        }

    private:
        element_type axis_;
        Scalar eps_;
        Scalar tol_;
};

template <typename Scalar>
IceMembership member(const IceCreamCone<Scalar>& cone, const VectorX<Scalar>& x)
{
    const Scalar s = cone.excess(x);
    if (s > cone.tol()) return IceMembership::Interior;
    if (s >= -cone.tol()) return IceMembership::Boundary;
    return IceMembership::Outside;
}

/**
 * x lies on the base {x in K : f . x = 1}, tested as the slice of the ball of
 * radius 1/eps. Clear-cut cases are cross-checked against cone membership.
 */
template <typename Scalar>
bool base_contains(const IceCreamCone<Scalar>& cone, const VectorX<Scalar>& x)
{
    const Scalar fx = cone.axis().dot(x);
    if (std::abs(fx - Scalar(1)) > cone.tol()) return false;
    const bool in_ball = x.norm() <= Scalar(1) / cone.eps() + cone.tol();
    const Scalar s = cone.excess(x);
    if ((s > 2 * cone.tol() && !in_ball) || (s < -2 * cone.tol() && in_ball))
        throw TheoremViolation("base_contains: ball slice disagrees with cone membership");
    return in_ball;
}

/** kappa = (f . x - eps ||x||) / (1 + eps); the closed ball B_kappa(x) lies in K. */
template <typename Scalar>
Scalar inradius(const IceCreamCone<Scalar>& cone, const VectorX<Scalar>& x)
{
    if (member(cone, x) != IceMembership::Interior) throw NotInterior("inradius: point is not interior");
    return cone.excess(x) / (Scalar(1) + cone.eps());
}

/** lambda = 1 / (eps kappa); every base point b satisfies b <= lambda x. */
template <typename Scalar>
Scalar base_majorant(const IceCreamCone<Scalar>& cone, const VectorX<Scalar>& x)
{
    return Scalar(1) / (cone.eps() * inradius(cone, x));
}

namespace detail {

// Least lambda with lambda u - v in K. Squaring f(lambda u - v) >= eps ||lambda u - v||
// gives A l^2 - 2 B l + C >= 0 with A > 0. Its roots satisfy r1 <= f(v)/f(u) <= r2,
// so the larger root r2 is the unique admissible threshold.
template <typename Scalar>
Scalar one_sided_threshold(const IceCreamCone<Scalar>& cone, const VectorX<Scalar>& u, const VectorX<Scalar>& v)
{
    const Scalar e2 = cone.eps() * cone.eps();
    const Scalar fu = cone.axis().dot(u);
    const Scalar fv = cone.axis().dot(v);
    const Scalar a = fu * fu - e2 * u.squaredNorm();
    const Scalar b = fu * fv - e2 * u.dot(v);
    const Scalar c = fv * fv - e2 * v.squaredNorm();
    const Scalar root = std::sqrt(std::max(Scalar(0), b * b - a * c));
    Scalar lambda = b >= 0 ? (b + root) / a : c / (b - root);   // b - root < 0 in the second branch

    // g(l) = f(l u - v) - eps ||l u - v|| is concave with slope >= f(u) - eps ||u|| > 0,
    // so Newton steps repair the cancellation in the discriminant near double roots.
    for (int step = 0; step < 3; ++step)
    {
        const VectorX<Scalar> w = lambda * u - v;
        const Scalar norm = w.norm();
        if (norm == 0) break;
        const Scalar g = cone.axis().dot(w) - cone.eps() * norm;
        const Scalar slope = fu - cone.eps() * w.dot(u) / norm;
        if (!(slope > 0)) break;
        lambda -= g / slope;
    }
    return lambda;
}

}   // namespace detail

/** ||x||_u = smallest lambda >= 0 with lambda u - x and lambda u + x in K. */
template <typename Scalar>
Scalar unorm_ice(const IceCreamCone<Scalar>& cone, const VectorX<Scalar>& u, const VectorX<Scalar>& x)
{
    cone.check(x);
    if (member(cone, u) != IceMembership::Interior) throw NotInterior("unorm_ice: unit is not interior");
    const VectorX<Scalar> minus_x = -x;
    return std::max({Scalar(0), detail::one_sided_threshold(cone, u, x), detail::one_sided_threshold(cone, u, minus_x)});
}

/** Radii with B_kappa(0) inside [-x, x] inside B_lambda(0). */
template <typename Scalar = double>
struct EquivalenceCertificate
{
    VectorX<Scalar> center;
    Scalar kappa;
    Scalar lambda;
};

/** kappa = inradius(x), lambda = (2/eps) f . x + ||x||. */
template <typename Scalar>
EquivalenceCertificate<Scalar> equivalence_certificate(const IceCreamCone<Scalar>& cone, const VectorX<Scalar>& x)
{
    const Scalar kappa = inradius(cone, x);
    const Scalar lambda = Scalar(2) / cone.eps() * cone.axis().dot(x) + x.norm();
    return {x, kappa, lambda};
}

/**
 * For x in K \ {0}: the multiple N = floor(f(y)/f(x)) + 1 (at least 1) has
 * f(y - N x) < 0, so N x <= y is false.
 */
template <typename Scalar>
std::uint64_t archimedean_bound(const IceCreamCone<Scalar>& cone, const VectorX<Scalar>& x, const VectorX<Scalar>& y)
{
    cone.check(y);
    if (member(cone, x) == IceMembership::Outside) throw NotPositive("archimedean_bound: x is not positive");
    const Scalar fx = cone.axis().dot(x);
    if (!(fx > 0)) throw InvalidArgument("archimedean_bound: x must be nonzero");
    const Scalar ratio = cone.axis().dot(y) / fx;
    if (ratio < 0) return 1;
    return static_cast<std::uint64_t>(std::floor(ratio)) + 1;
}

/**
 * Least n with w/n <= u for positive w and interior u. Because w is positive,
 * w <= lambda u is the binding half of the u-norm, giving n = ceil(||w||_u).
 */
template <typename Scalar>
std::uint64_t canonical_catch_index(const IceCreamCone<Scalar>& cone, const VectorX<Scalar>& u, const VectorX<Scalar>& w)
{
    if (member(cone, w) == IceMembership::Outside) throw NotPositive("canonical_catch_index: w is not positive");
    const Scalar norm = unorm_ice(cone, u, w);
    return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(norm - cone.tol())));
}

}   // namespace ordvec
