// Double description (Motzkin) for small polyhedral cones.
//
// h_to_v first splits off the lineality space L = null(A), then runs the
// incremental method on the pointed cone K ∩ L^⊥, whose constraint system has
// full rank, starting from a simplicial cone and using the algebraic adjacency
// test. v_to_h is h_to_v on the dual cone.

#include <algorithm>

#include "ordvec/polyhedral.hpp"

namespace ordvec {

namespace {

Rational dot(const Vec& a, const Vec& b)
{
    Rational s = 0;
    for (Index i = 0; i < a.size(); ++i)
        if (a(i) != 0 && b(i) != 0) s += a(i) * b(i);
    return s;
}

Mat stack_rows(const std::vector<Vec>& rows, Index dim)
{
    Mat m(static_cast<Index>(rows.size()), dim);
    for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Index>(i)) = rows[i].transpose();
    return m;
}

// p and n are adjacent in the current cone iff the processed constraints
// active at both have rank d - 2.
bool adjacent(const Vec& p, const Vec& n, const std::vector<Vec>& processed, Index dim)
{
    std::vector<Vec> common;
    for (const Vec& s : processed)
        if (dot(s, p) == 0 && dot(s, n) == 0) common.push_back(s);
    if (static_cast<Index>(common.size()) < dim - 2) return false;
    return exact_rank(stack_rows(common, dim)) == dim - 2;
}

std::vector<Vec> pointed_extreme_rays(const std::vector<Vec>& system, Index dim)
{
    // Initial simplicial cone from d independent rows.
    std::vector<Vec> basis_rows;
    std::vector<bool> used(system.size(), false);
    for (std::size_t i = 0; i < system.size() && static_cast<Index>(basis_rows.size()) < dim; ++i)
    {
        basis_rows.push_back(system[i]);
        if (exact_rank(stack_rows(basis_rows, dim)) == static_cast<Index>(basis_rows.size()))
            used[i] = true;
        else
            basis_rows.pop_back();
    }
    if (static_cast<Index>(basis_rows.size()) != dim)
        throw TheoremViolation("double description: constraint system is not of full rank");

    const Mat b = stack_rows(basis_rows, dim);
    std::vector<Vec> rays;
    for (Index j = 0; j < dim; ++j)
    {
        Vec col = exact_solve(b, unit_vector(dim, j));   // column j of B^{-1}
        rays.push_back(primitive_direction(col));
    }
    std::vector<Vec> processed = basis_rows;

    for (std::size_t i = 0; i < system.size(); ++i)
    {
        if (used[i]) continue;
        const Vec& s = system[i];
        std::vector<Vec> plus, zero, minus;
        for (const Vec& r : rays)
        {
            const Rational v = dot(s, r);
            if (v > 0)
                plus.push_back(r);
            else if (v < 0)
                minus.push_back(r);
            else
                zero.push_back(r);
        }
        std::vector<Vec> next = plus;
        next.insert(next.end(), zero.begin(), zero.end());
        for (const Vec& p : plus)
        {
            for (const Vec& n : minus)
            {
                if (!adjacent(p, n, processed, dim)) continue;
                const Vec combo = dot(s, p) * n - dot(s, n) * p;
                next.push_back(primitive_direction(combo));
            }
        }
        rays = std::move(next);
        processed.push_back(s);
    }
    return rays;
}

Mat to_rows(const std::vector<Vec>& rays, Index dim)
{
    return stack_rows(rays, dim);
}

}   // namespace

VCone h_to_v(const HCone& cone)
{
    const Index d = cone.dim();
    if (d > kDoubleDescriptionCap) throw DimensionCap("h_to_v: dimension " + std::to_string(d) + " above cap");

    const Mat lineality = exact_null_space(cone.normals());
    std::vector<Vec> system;
    for (Index i = 0; i < cone.num_normals(); ++i) system.push_back(cone.normals().row(i).transpose());
    for (Index k = 0; k < lineality.rows(); ++k)
    {
        const Vec l = lineality.row(k).transpose();
        system.push_back(l);
        system.push_back(-l);
    }

    std::vector<Vec> gens = pointed_extreme_rays(system, d);
    for (Index k = 0; k < lineality.rows(); ++k)
    {
        const Vec l = lineality.row(k).transpose();
        gens.push_back(l);
        gens.push_back(-l);
    }
    return VCone(to_rows(canonical_rays(to_rows(gens, d)), d), d);
}

HCone v_to_h(const VCone& cone)
{
    const Index d = cone.dim();
    if (d > kDoubleDescriptionCap) throw DimensionCap("v_to_h: dimension " + std::to_string(d) + " above cap");
    if (cone.num_generators() == 0)
    {
        // {0} = {y : y_k >= 0 and -y_k >= 0}
        std::vector<Vec> normals;
        for (Index k = 0; k < d; ++k)
        {
            normals.push_back(unit_vector(d, k));
            normals.push_back(-unit_vector(d, k));
        }
        return HCone(to_rows(canonical_rays(to_rows(normals, d)), d));
    }
    // The dual cone {a : a . r_j >= 0} has the facet normals of K as generators.
    const VCone dual = h_to_v(HCone(cone.generators()));
    return HCone(dual.generators());
}

}   // namespace ordvec
