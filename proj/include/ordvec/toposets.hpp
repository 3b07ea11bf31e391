#pragma once

// Neighbourhoods of the order bound topology on spaces ordered by a simplicial
// cone. A simplicial cone K = {y : A y >= 0} (A square and invertible) becomes
// the positive orthant under z = A y, where order intervals are boxes and the
// containment of a box in a halfspace is linear in its corners. Every operation
// taking a cone argument works in those orthant coordinates internally; the
// overloads without one assume the orthant itself.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordvec/core.hpp"
#include "ordvec/polyhedral.hpp"

namespace ordvec {

/** Convex polytope U = {y : a_i . y <= b_i}. */
class Polytope
{
    public:
        Polytope(Mat normals, Vec offsets);
        /** Symmetric box {y : -h <= y <= h} for h >= 0. */
        static Polytope box(const Vec& half_widths);
        /** Box {y : lo <= y <= hi}. */
        static Polytope box(const Vec& lo, const Vec& hi);

        Index dim() const { return normals_.cols(); }
        Index num_rows() const { return normals_.rows(); }
        const Mat& normals() const { return normals_; }
        const Vec& offsets() const { return offsets_; }

        bool contains(const Vec& y) const;
        /** Every coordinate is bounded above and below on U (exact LPs); false for empty U too. */
        bool bounded() const;
        /** All b_i > 0, i.e. 0 is an interior point. */
        bool zero_in_interior() const;

    private:
        Mat normals_;
        Vec offsets_;
};

/** Coordinates z = A y turning a simplicial cone {y : A y >= 0} into the orthant. */
class SimplicialFrame
{
    public:
        /** Throws ConeNotSimplicial unless the normals form an invertible square matrix. */
        explicit SimplicialFrame(const HCone& cone);

        Vec to_orthant(const Vec& y) const { return Vec(a_ * y); }
        Vec from_orthant(const Vec& z) const { return Vec(a_inv_ * z); }
        /** The image {A y : y in U}. */
        Polytope to_orthant(const Polytope& u) const;
        /** The preimage {y : A y in V}. */
        Polytope from_orthant(const Polytope& v) const;

    private:
        Mat a_;
        Mat a_inv_;
};

/**
 * U = -U, decided from the vertices of U (double description on the
 * homogenized cone). For convex U containing 0 this is circledness.
 * Throws DimensionCap for dim > 5 and InvalidArgument unless U is bounded and contains 0.
 */
bool is_circled(const Polytope& u);

/** Largest mu with mu [lo, hi] inside U; `infinite` when every multiple fits. */
struct AbsorptionFactor
{
    Rational mu;
    bool infinite = false;

    bool absorbs() const { return infinite || mu > 0; }
};

/** Orthant coordinates: [lo, hi] is the box with those corners. */
AbsorptionFactor absorbs_box(const Polytope& u, const Vec& lo, const Vec& hi);

/** Throws ConeNotSimplicial when the interval's cone is not simplicial. */
AbsorptionFactor absorbs_interval(const Polytope& u, const OrderInterval<HCone>& iv);

/** Outcome of testing [-u, u] against the neighbourhood-base axioms. */
struct BobVerdict
{
    bool in_bob = false;
    bool convex = true;          // order intervals are convex
    bool circled = false;
    std::size_t intervals_checked = 0;
    std::string diagnosis;       // first failing axiom, empty on success
};

/**
 * [-u, u] is convex, circled and absorbs the degenerate intervals [+-e_k, +-e_k]
 * (orthant coordinates) plus `random_intervals` seeded random intervals.
 * Throws ConeNotSimplicial.
 */
BobVerdict interval_in_Bob(const HCone& cone, const Vec& u, std::uint64_t seed = 0, std::size_t random_intervals = 16);

/**
 * mu > 0 with u + mu [-e, e] inside K, where e is the order unit mapped to
 * (1, ..., 1) by the frame; empty when u is not in the order bound interior.
 */
std::optional<Rational> order_bound_interior_radius(const HCone& cone, const Vec& u);

/** I(U) = {x in U : [-x, x] inside U}, exactly {x >= 0, a_i.x <= b_i, |a_i|.x <= b_i} in orthant coordinates. */
Polytope I_of_U(const Polytope& u);
Polytope I_of_U(const Polytope& u, const HCone& cone);

/** y lies in V(U), the union of [-x, x] over x in I(U): LP feasibility of x >= |y|, x in I(U). */
bool V_of_U_member(const Polytope& u, const Vec& y);
bool V_of_U_member(const Polytope& u, const Vec& y, const HCone& cone);

/**
 * V(U) in halfspace form (orthant coordinates): sum_j |a_ij| s_j y_j <= b_i over
 * all sign patterns s. Rows grow as m 2^d.
 */
Polytope V_of_U_polytope(const Polytope& u);

/**
 * Least n <= depth with [-w/n, w/n] inside U for positive w (orthant
 * coordinates). Only the canonical chain family (1/n) w is examined.
 */
CatchOutcome catches_canonical_chain(const Polytope& u, const Vec& w, std::uint64_t depth = 1u << 20);
CatchOutcome catches_canonical_chain(const Polytope& u, const Vec& w, const HCone& cone, std::uint64_t depth = 1u << 20);

/** Label attached to every report derived from catches_canonical_chain. */
inline constexpr const char* kCanonicalFamilyLabel = "canonical-family only";

}   // namespace ordvec
