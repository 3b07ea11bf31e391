#pragma once

// Seeded instance generators. Everything here is a pure function of the
// sampler state, so a fixed seed reproduces every instance bit for bit.

#include <cstdint>
#include <random>
#include <string_view>

#include "ordvec/icecream.hpp"
#include "ordvec/lexseq.hpp"
#include "ordvec/polyhedral.hpp"
#include "ordvec/toposets.hpp"

namespace ordvec {

class Sampler
{
    public:
        explicit Sampler(std::uint64_t seed) : engine_(seed) {}

        /** Independent stream for one named property: the seed is mixed with a hash of the name. */
        static Sampler for_stream(std::uint64_t seed, std::string_view name);

        std::uint64_t bits() { return engine_(); }
        /** Uniform integer in [lo, hi]. */
        std::int64_t integer(std::int64_t lo, std::int64_t hi);
        /** Uniform real in [lo, hi). */
        double real(double lo, double hi);
        bool coin(double p = 0.5) { return real(0.0, 1.0) < p; }
        double gaussian();

        /** p/q with p uniform in [-bound*q, bound*q] and q uniform in [1, max_den]. */
        Rational rational(std::int64_t bound, std::int64_t max_den);
        Vec rational_vector(Index dim, std::int64_t bound, std::int64_t max_den);
        Vec integer_vector(Index dim, std::int64_t bound);
        Eigen::VectorXd gaussian_vector(Index dim);

    private:
        std::mt19937_64 engine_;
};

/** H-cone with integer normals in [-bound, bound] and nonempty interior. */
HCone random_hcone(Sampler& s, Index dim, Index rows, std::int64_t bound = 3);

/** Simplicial cone: square invertible integer normal matrix. */
HCone random_simplicial_cone(Sampler& s, Index dim, std::int64_t bound = 2);

/** Pointed generating V-cone: every generator has a positive first coordinate. */
VCone random_pointed_vcone(Sampler& s, Index dim, Index generators, std::int64_t bound = 3);

/** Point on the boundary of K: r - tau p with tau = min_i (a_i . r)/(a_i . p) for an interior point p. */
Vec random_boundary_point(Sampler& s, const HCone& cone, const Vec& interior);

/**
 * Mixed population for order-unit tests: interior points, boundary points and
 * generic (mostly exterior) points in roughly equal shares.
 */
Vec random_test_element(Sampler& s, const HCone& cone, const Vec& interior);

/** Ice cream cone with Gaussian unit axis and eps uniform in [0.1, 0.9]. */
IceCreamCone<double> random_icecream(Sampler& s, Index dim, double tol = 1e-9);

/**
 * Interior point t f + r d with d a unit vector orthogonal to f and
 * r < margin t sqrt(1/eps^2 - 1), margin in (0, 1).
 */
Eigen::VectorXd random_ice_interior(Sampler& s, const IceCreamCone<double>& cone, double margin = 0.9);

/** Base point f + r d with r <= sqrt(1/eps^2 - 1), i.e. f . b = 1 and ||b|| <= 1/eps. */
Eigen::VectorXd random_ice_base_point(Sampler& s, const IceCreamCone<double>& cone);

/** Eventually constant sequence with entries p/q in [lo, hi], support <= max_support. */
EvSeq random_evseq(Sampler& s, std::int64_t lo, std::int64_t hi, std::size_t max_support = 6);

/** Bounded 2-D polytope with 0 in its interior and every vertex inside [-2, 2]^2. */
Polytope random_planar_polytope(Sampler& s, Index rows);

/** Bounded polytope symmetric about 0 with 0 interior: rows +-a_i with offsets b_i > 0 plus a box. */
Polytope random_symmetric_polytope(Sampler& s, Index dim, Index pairs);

}   // namespace ordvec
