#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ordvec/core.hpp"
#include "ordvec/rational.hpp"

namespace ordvec {

/** Largest ambient dimension accepted by the double-description conversions. */
inline constexpr Index kDoubleDescriptionCap = 6;

/**
 * Polyhedral cone in halfspace form K = {y : a_i . y >= 0 for all rows a_i}.
 * Closed by construction, so the induced order is Archimedean. An empty row
 * set describes the whole space.
 */
class HCone
{
    public:
        using element_type = Vec;

        HCone(Mat normals);
        /** R^d_+ (normals e_1..e_d). */
        static HCone orthant(Index dim);

        Index dim() const { return normals_.cols(); }
        const Mat& normals() const { return normals_; }
        Index num_normals() const { return normals_.rows(); }

        bool compatible(const Vec& x) const { return x.size() == dim(); }
        bool contains(const Vec& x) const;

    private:
        Mat normals_;
};

/** Finitely generated cone {sum_j lambda_j r_j : lambda >= 0}; one generator per row. */
class VCone
{
    public:
        using element_type = Vec;

        VCone(Mat generators, Index dim);
        explicit VCone(Mat generators) : VCone(generators, generators.cols()) {}

        Index dim() const { return dim_; }
        const Mat& generators() const { return generators_; }
        Index num_generators() const { return generators_.rows(); }

        bool compatible(const Vec& x) const { return x.size() == dim(); }
        /** Exact membership by LP over the generator multipliers. */
        bool contains(const Vec& x) const;

    private:
        Mat generators_;
        Index dim_;
};

/** a_i . x >= 0 for every row. Throws DimensionMismatch. */
bool member(const HCone& cone, const Vec& x);

/** a_i . x > 0 for every row: the norm interior, which in finite dimension is the order-topology interior. */
bool interior_member(const HCone& cone, const Vec& x);

/** Generators span the ambient space (rank test over Q). */
bool is_directed(const VCone& cone);

/** The cone has nonempty interior, equivalently X_+ - X_+ is the whole space. */
bool is_directed(const HCone& cone);

/** Some interior point of the cone, if one exists (found by strict LP feasibility). */
std::optional<Vec> interior_point(const HCone& cone);

/**
 * Definitional order-unit witnesses: for k = 0..d-1 the least n with e_k <= n u
 * and the least n with -e_k <= n u, computed from exact row ratios. Empty if u is
 * not positive or some direction is not dominated by any multiple of u.
 */
std::optional<std::vector<Integer>> order_unit_multipliers(const HCone& cone, const Vec& u);

/**
 * u is an order unit. Decided by interior membership and cross-checked against
 * the definitional multipliers; disagreement throws TheoremViolation.
 * Throws NotDirected for cones with empty interior.
 */
bool is_order_unit(const HCone& cone, const Vec& u);

/**
 * Least n with (1/n) w <= u, i.e. the index at which the canonical chain of w
 * falls below u. Throws NotPositive if w is outside the cone.
 */
std::optional<std::uint64_t> canonical_catch_index(const HCone& cone, const Vec& u, const Vec& w);

/**
 * A positive w whose canonical chain is never below u, when u is not an
 * interior point. Empty when u is interior or the cone has empty interior.
 */
std::optional<Vec> uncaught_chain_generator(const HCone& cone, const Vec& u);

/**
 * u is net catching. Equal to is_order_unit on closed directed cones; every
 * supplied probe (which must be positive) is checked to be caught when the
 * verdict is true.
 */
bool is_net_catching_fd(const HCone& cone, const Vec& u, std::span<const Vec> probes = {});

/**
 * ||x||_u = inf{lambda > 0 : -lambda u <= x <= lambda u}
 *         = max_i |a_i . x| / (a_i . u),
 * attained and exact. Throws NotInterior unless every a_i . u > 0.
 */
Rational unorm(const HCone& cone, const Vec& u, const Vec& x);

/** ||x||_u <= 1  <=>  -u <= x <= u for every sample. */
bool unorm_ball_is_interval(const HCone& cone, const Vec& u, std::span<const Vec> samples);

/** Constants with lower * ||x||_a <= ||x||_b <= upper * ||x||_a. */
struct NormEquivalence
{
    Rational lower;
    Rational upper;
};

/** Equivalence constants between the u-norm (a) and the v-norm (b); both u, v interior. */
NormEquivalence unorm_equivalence(const HCone& cone, const Vec& u, const Vec& v);

/**
 * Equivalence constants between the max norm (a) and the u-norm (b). The lower
 * constant comes from exact LPs over the faces of the max-norm unit sphere and
 * is zero exactly when the cone contains a line.
 */
NormEquivalence sup_norm_equivalence(const HCone& cone, const Vec& u);

/**
 * Nonempty, order bounded, order open set built around an interior point u:
 * U = int(K) intersected with 2u - int(K), the open order interval (0, 2u).
 */
class OpenOrderBoundedSet
{
    public:
        OpenOrderBoundedSet(HCone cone, Vec center);

        const HCone& cone() const { return cone_; }
        const Vec& center() const { return center_; }
        /** Strict inequalities a_i . y > 0 and a_i . (2u - y) > 0. */
        bool contains(const Vec& y) const;
        /** Order bounds: U is a subset of [lower(), upper()] = [0, 2u]. */
        Vec lower() const { return Vec::Zero(center_.size()); }
        Vec upper() const { return Vec(Rational(2) * center_); }

        /**
         * Least n with [y - w/n, y + w/n] inside U, for y in U and positive w.
         * Exact: one LP per facet gives the extent of the order interval [-w, w].
         */
        std::optional<std::uint64_t> catch_index(const Vec& y, const Vec& w) const;

    private:
        HCone cone_;
        Vec center_;
};

/** Throws NotInterior unless u is an interior point. */
OpenOrderBoundedSet order_open_bounded_set(const HCone& cone, const Vec& u);

/**
 * f with f . r_j >= 1 on every generator, hence strictly positive on the cone
 * minus the origin. Throws NoSuchFunctional if none exists, InvalidArgument for
 * a cone without generators.
 */
Vec strictly_positive_functional(const VCone& cone);

/** Base B_f = {x in K : f . x = 1}, represented by its normalized vertices r_j / (f . r_j). */
class BaseDescriptor
{
    public:
        const Vec& functional() const { return functional_; }
        const VCone& cone() const { return cone_; }
        /** One vertex per row. */
        const Mat& vertices() const { return vertices_; }

    private:
        friend BaseDescriptor base_of(const VCone& cone, const Vec& f);
        BaseDescriptor(Vec f, VCone cone, Mat vertices)
            : functional_(std::move(f)), cone_(std::move(cone)), vertices_(std::move(vertices)) {}

        Vec functional_;
        VCone cone_;
        Mat vertices_;
};

/** Throws NotStrictlyPositive unless f . r > 0 for every generator. */
BaseDescriptor base_of(const VCone& cone, const Vec& f);

/** The base is bounded: every coordinate has a finite max and min over it (exact LPs). */
bool base_bounded(const BaseDescriptor& base);

enum class BaseBoundVerdict { Confirmed, NotUpperBound, TheoremViolation };

/**
 * If u dominates every base vertex, u must be net catching; Confirmed when it
 * is. Throws NotDirected for cones that are not generating.
 */
BaseBoundVerdict upper_bound_of_base_is_net_catching(const BaseDescriptor& base, const Vec& u);

/** Facet normals of a finitely generated cone (double description, dim <= 6). */
HCone v_to_h(const VCone& cone);

/**
 * Extreme rays plus lineality generators of a halfspace cone (double
 * description, dim <= 6). Rays are primitive integer vectors in a canonical order.
 */
VCone h_to_v(const HCone& cone);

/** Sorted primitive directions of the rows, the canonical form of a ray set. */
std::vector<Vec> canonical_rays(const Mat& rows);

}   // namespace ordvec
