#include "ordvec/generators.hpp"

#include <cmath>

namespace ordvec {

Sampler Sampler::for_stream(std::uint64_t seed, std::string_view name)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;   // FNV-1a
    for (unsigned char c : name)
    {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
    Sampler s(0);
    s.engine_.seed(seq);
    return s;
}

std::int64_t Sampler::integer(std::int64_t lo, std::int64_t hi)
{
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
}

double Sampler::real(double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

double Sampler::gaussian()
{
    return std::normal_distribution<double>(0.0, 1.0)(engine_);
}

Rational Sampler::rational(std::int64_t bound, std::int64_t max_den)
{
    const std::int64_t q = integer(1, max_den);
    const std::int64_t p = integer(-bound * q, bound * q);
    return Rational(p, q);
}

Vec Sampler::rational_vector(Index dim, std::int64_t bound, std::int64_t max_den)
{
    Vec v(dim);
    for (Index i = 0; i < dim; ++i) v(i) = rational(bound, max_den);
    return v;
}

Vec Sampler::integer_vector(Index dim, std::int64_t bound)
{
    Vec v(dim);
    for (Index i = 0; i < dim; ++i) v(i) = Rational(integer(-bound, bound));
    return v;
}

Eigen::VectorXd Sampler::gaussian_vector(Index dim)
{
    Eigen::VectorXd v(dim);
    for (Index i = 0; i < dim; ++i) v(i) = gaussian();
    return v;
}

HCone random_hcone(Sampler& s, Index dim, Index rows, std::int64_t bound)
{
    while (true)
    {
        Mat normals(rows, dim);
        for (Index i = 0; i < rows; ++i)
        {
            Vec row;
            do row = s.integer_vector(dim, bound);
            while (is_zero(row));
            normals.row(i) = row.transpose();
        }
        HCone cone(std::move(normals));
        if (is_directed(cone)) return cone;
    }
}

HCone random_simplicial_cone(Sampler& s, Index dim, std::int64_t bound)
{
    while (true)
    {
        Mat a(dim, dim);
        for (Index i = 0; i < dim; ++i) a.row(i) = s.integer_vector(dim, bound).transpose();
        if (exact_rank(a) == dim) return HCone(std::move(a));
    }
}

VCone random_pointed_vcone(Sampler& s, Index dim, Index generators, std::int64_t bound)
{
    while (true)
    {
        Mat g(generators, dim);
        for (Index j = 0; j < generators; ++j)
        {
            Vec r = s.integer_vector(dim, bound);
            r(0) = Rational(s.integer(1, bound));
            g.row(j) = r.transpose();
        }
        VCone cone(std::move(g));
        if (is_directed(cone)) return cone;
    }
}

Vec random_boundary_point(Sampler& s, const HCone& cone, const Vec& interior)
{
    const Vec r = s.rational_vector(cone.dim(), 4, 4);
    std::optional<Rational> tau;
    for (Index i = 0; i < cone.num_normals(); ++i)
    {
        const Rational ratio = Rational(cone.normals().row(i).dot(r)) / Rational(cone.normals().row(i).dot(interior));
        if (!tau || ratio < *tau) tau = ratio;
    }
    if (!tau) return r;
    return Vec(r - *tau * interior);
}

Vec random_test_element(Sampler& s, const HCone& cone, const Vec& interior)
{
    switch (s.integer(0, 2))
    {
        case 0:
        {
            // boundary point plus a positive multiple of p: interior
            const Vec b = random_boundary_point(s, cone, interior);
            return Vec(b + Rational(s.integer(1, 4), s.integer(1, 4)) * interior);
        }
        case 1:
            return random_boundary_point(s, cone, interior);
        default:
            return s.rational_vector(cone.dim(), 4, 4);
    }
}

IceCreamCone<double> random_icecream(Sampler& s, Index dim, double tol)
{
    Eigen::VectorXd f;
    do f = s.gaussian_vector(dim);
    while (f.norm() < 1e-3);
    f.normalize();
    return IceCreamCone<double>(f, s.real(0.1, 0.9), tol);
}

namespace {

Eigen::VectorXd orthogonal_unit(Sampler& s, const Eigen::VectorXd& f)
{
    while (true)
    {
        Eigen::VectorXd d = s.gaussian_vector(f.size());
        d -= f.dot(d) * f;
        if (d.norm() > 1e-3) return d.normalized();
    }
}

}   // namespace

Eigen::VectorXd random_ice_interior(Sampler& s, const IceCreamCone<double>& cone, double margin)
{
    const Eigen::VectorXd& f = cone.axis();
    const double t = s.real(0.2, 3.0);
    const double rmax = t * std::sqrt(1.0 / (cone.eps() * cone.eps()) - 1.0);
    const double r = s.real(0.0, margin) * rmax;
    if (f.size() == 1) return t * f;
    return t * f + r * orthogonal_unit(s, f);
}

Eigen::VectorXd random_ice_base_point(Sampler& s, const IceCreamCone<double>& cone)
{
    const Eigen::VectorXd& f = cone.axis();
    const double rmax = std::sqrt(1.0 / (cone.eps() * cone.eps()) - 1.0);
    // Half the samples sit exactly on the relative boundary of the base.
    const double r = s.coin() ? rmax : s.real(0.0, rmax);
    if (f.size() == 1) return f;
    return f + r * orthogonal_unit(s, f);
}

EvSeq random_evseq(Sampler& s, std::int64_t lo, std::int64_t hi, std::size_t max_support)
{
    const auto support = static_cast<std::size_t>(s.integer(0, static_cast<std::int64_t>(max_support)));
    auto entry = [&] {
        const std::int64_t q = s.integer(1, 4);
        return Rational(s.integer(lo * q, hi * q), q);
    };
    std::vector<Rational> prefix;
    for (std::size_t k = 0; k < support; ++k) prefix.push_back(entry());
    return EvSeq(std::move(prefix), entry());
}

Polytope random_planar_polytope(Sampler& s, Index rows)
{
    // The box rows keep every vertex inside [-2, 2]^2; positive offsets keep 0 interior.
    while (true)
    {
        Mat normals(rows + 4, 2);
        Vec offsets(rows + 4);
        for (Index i = 0; i < rows; ++i)
        {
            Vec a;
            do a = s.integer_vector(2, 4);
            while (is_zero(a));
            normals.row(i) = a.transpose();
            offsets(i) = Rational(s.integer(1, 8), 4);
        }
        const Rational side = Rational(s.integer(4, 8), 4);
        for (Index k = 0; k < 2; ++k)
        {
            normals.row(rows + 2 * k) = unit_vector(2, k).transpose();
            normals.row(rows + 2 * k + 1) = (-unit_vector(2, k)).transpose();
            offsets(rows + 2 * k) = side;
            offsets(rows + 2 * k + 1) = side;
        }
        Polytope p(std::move(normals), std::move(offsets));
        if (p.zero_in_interior()) return p;
    }
}

Polytope random_symmetric_polytope(Sampler& s, Index dim, Index pairs)
{
    Mat normals(2 * pairs + 2 * dim, dim);
    Vec offsets(2 * pairs + 2 * dim);
    for (Index i = 0; i < pairs; ++i)
    {
        Vec a;
        do a = s.integer_vector(dim, 3);
        while (is_zero(a));
        const Rational b(s.integer(1, 8), 2);
        normals.row(2 * i) = a.transpose();
        normals.row(2 * i + 1) = (-a).transpose();
        offsets(2 * i) = b;
        offsets(2 * i + 1) = b;
    }
    const Rational side(s.integer(2, 8), 2);
    for (Index k = 0; k < dim; ++k)
    {
        normals.row(2 * pairs + 2 * k) = unit_vector(dim, k).transpose();
        normals.row(2 * pairs + 2 * k + 1) = (-unit_vector(dim, k)).transpose();
        offsets(2 * pairs + 2 * k) = side;
        offsets(2 * pairs + 2 * k + 1) = side;
    }
    return Polytope(std::move(normals), std::move(offsets));
}

}   // namespace ordvec
