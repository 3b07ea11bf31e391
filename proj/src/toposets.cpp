#include "ordvec/toposets.hpp"

#include <algorithm>

#include "ordvec/exactlp.hpp"
#include "ordvec/generators.hpp"

namespace ordvec {

Polytope::Polytope(Mat normals, Vec offsets) : normals_(std::move(normals)), offsets_(std::move(offsets))
{
    if (normals_.rows() != offsets_.size()) throw DimensionMismatch("Polytope: one offset per normal row");
}

Polytope Polytope::box(const Vec& half_widths)
{
    return box(Vec(-half_widths), half_widths);
}

Polytope Polytope::box(const Vec& lo, const Vec& hi)
{
    if (lo.size() != hi.size()) throw DimensionMismatch("Polytope::box: corner dimensions differ");
    const Index d = lo.size();
    Mat normals(2 * d, d);
    Vec offsets(2 * d);
    for (Index k = 0; k < d; ++k)
    {
        if (lo(k) > hi(k)) throw EmptyInterval("Polytope::box: lo exceeds hi");
        normals.row(2 * k) = unit_vector(d, k).transpose();
        normals.row(2 * k + 1) = (-unit_vector(d, k)).transpose();
        offsets(2 * k) = hi(k);
        offsets(2 * k + 1) = -lo(k);
    }
    return Polytope(std::move(normals), std::move(offsets));
}

bool Polytope::contains(const Vec& y) const
{
    if (y.size() != dim()) throw DimensionMismatch("Polytope::contains: dimension");
    for (Index i = 0; i < num_rows(); ++i)
        if (Rational(normals_.row(i).dot(y)) > offsets_(i)) return false;
    return true;
}

bool Polytope::bounded() const
{
    for (Index k = 0; k < dim(); ++k)
    {
        for (const auto sense : {lp::Sense::Maximize, lp::Sense::Minimize})
        {
            lp::LinearProgram prog(dim(), sense);
            for (Index i = 0; i < num_rows(); ++i) prog.add(normals_.row(i).transpose(), lp::Relation::LessEqual, offsets_(i));
            prog.objective = unit_vector(dim(), k);
            if (lp::solve(prog).status != lp::Status::Optimal) return false;
        }
    }
    return true;
}

bool Polytope::zero_in_interior() const
{
    for (Index i = 0; i < num_rows(); ++i)
        if (offsets_(i) <= 0) return false;
    return true;
}

// ---------------------------------------------------------------------------

SimplicialFrame::SimplicialFrame(const HCone& cone) : a_(cone.normals())
{
    const Index d = cone.dim();
    if (a_.rows() != d || exact_rank(a_) != d) throw ConeNotSimplicial("cone normals do not form an invertible square matrix");
    a_inv_.resize(d, d);
    for (Index j = 0; j < d; ++j) a_inv_.col(j) = exact_solve(a_, unit_vector(d, j));
}

Polytope SimplicialFrame::to_orthant(const Polytope& u) const
{
    return Polytope(Mat(u.normals() * a_inv_), u.offsets());
}

Polytope SimplicialFrame::from_orthant(const Polytope& v) const
{
    return Polytope(Mat(v.normals() * a_), v.offsets());
}

bool is_circled(const Polytope& u)
{
    if (!u.contains(Vec::Zero(u.dim()))) throw InvalidArgument("is_circled: U must contain 0");
    const Index d = u.dim();
    // Vertices of U are the rays (y, t), t > 0, of {(y, t) : b t - A y >= 0, t >= 0}.
    Mat lifted(u.num_rows() + 1, d + 1);
    for (Index i = 0; i < u.num_rows(); ++i)
    {
        lifted.row(i).head(d) = -u.normals().row(i);
        lifted(i, d) = u.offsets()(i);
    }
    lifted.row(u.num_rows()) = unit_vector(d + 1, d).transpose();
    const VCone rays = h_to_v(HCone(std::move(lifted)));
    for (Index r = 0; r < rays.num_generators(); ++r)
    {
        const Rational t = rays.generators()(r, d);
        if (t == 0) throw InvalidArgument("is_circled: U is unbounded");
        const Vec vertex = rays.generators().row(r).head(d).transpose() / t;
        if (!u.contains(Vec(-vertex))) return false;
    }
    return true;
}

AbsorptionFactor absorbs_box(const Polytope& u, const Vec& lo, const Vec& hi)
{
    if (lo.size() != u.dim() || hi.size() != u.dim()) throw DimensionMismatch("absorbs_box: dimension");
    for (Index j = 0; j < lo.size(); ++j)
        if (lo(j) > hi(j)) throw EmptyInterval("absorbs_box: lo exceeds hi");

    AbsorptionFactor out{0, true};
    for (Index i = 0; i < u.num_rows(); ++i)
    {
        // Largest value of a_i over the box, attained at a corner.
        Rational peak = 0;
        for (Index j = 0; j < u.dim(); ++j)
        {
            const Rational& a = u.normals()(i, j);
            peak += std::max(a * lo(j), a * hi(j));
        }
        const Rational& b = u.offsets()(i);
        Rational limit;
        if (peak > 0)
            limit = b > 0 ? Rational(b / peak) : Rational(0);
        else if (b >= 0)
            continue;
        else
            limit = 0;
        if (out.infinite || limit < out.mu) out = {limit, false};
    }
    return out;
}

AbsorptionFactor absorbs_interval(const Polytope& u, const OrderInterval<HCone>& iv)
{
    const SimplicialFrame frame(iv.cone());
    return absorbs_box(frame.to_orthant(u), frame.to_orthant(iv.lo()), frame.to_orthant(iv.hi()));
}

BobVerdict interval_in_Bob(const HCone& cone, const Vec& u, std::uint64_t seed, std::size_t random_intervals)
{
    const SimplicialFrame frame(cone);
    if (!cone.compatible(u)) throw DimensionMismatch("interval_in_Bob: dimension");
    const Vec z = frame.to_orthant(u);
    const Index d = z.size();

    BobVerdict verdict;
    for (Index j = 0; j < d; ++j)
    {
        if (z(j) < 0)
        {
            verdict.diagnosis = "[-u,u] is empty because u is not positive";
            return verdict;
        }
    }
    const Polytope ball = Polytope::box(z);
    verdict.circled = d > kDoubleDescriptionCap - 1 || is_circled(ball);
    if (!verdict.circled) throw TheoremViolation("interval_in_Bob: a symmetric order interval is not circled");

    std::vector<std::pair<Vec, Vec>> family;
    for (Index k = 0; k < d; ++k)
    {
        const Vec e = unit_vector(d, k);
        family.emplace_back(e, e);
        family.emplace_back(Vec(-e), Vec(-e));
    }
    Sampler sampler = Sampler::for_stream(seed, "interval_in_Bob");
    for (std::size_t r = 0; r < random_intervals; ++r)
    {
        const Vec lo = sampler.rational_vector(d, 4, 4);
        Vec width = sampler.rational_vector(d, 2, 4);
        for (Index j = 0; j < d; ++j) width(j) = abs(width(j));
        family.emplace_back(lo, Vec(lo + width));
    }

    for (const auto& [lo, hi] : family)
    {
        ++verdict.intervals_checked;
        if (!absorbs_box(ball, lo, hi).absorbs())
        {
            verdict.diagnosis = "[-u,u] does not absorb [" + to_string(lo) + " ; " + to_string(hi) + "]";
            return verdict;
        }
    }
    verdict.in_bob = true;
    return verdict;
}

std::optional<Rational> order_bound_interior_radius(const HCone& cone, const Vec& u)
{
    const SimplicialFrame frame(cone);
    const Vec z = frame.to_orthant(u);
    Rational mu = z(0);
    for (Index j = 1; j < z.size(); ++j) mu = std::min(mu, z(j));
    if (mu > 0) return mu;
    return std::nullopt;
}

Polytope I_of_U(const Polytope& u)
{
    const Index d = u.dim();
    const Index m = u.num_rows();
    Mat normals(2 * m + d, d);
    Vec offsets(2 * m + d);
    for (Index i = 0; i < m; ++i)
    {
        normals.row(i) = u.normals().row(i);
        offsets(i) = u.offsets()(i);
        for (Index j = 0; j < d; ++j) normals(m + i, j) = abs(u.normals()(i, j));
        offsets(m + i) = u.offsets()(i);
    }
    for (Index j = 0; j < d; ++j)
    {
        normals.row(2 * m + j) = (-unit_vector(d, j)).transpose();
        offsets(2 * m + j) = 0;
    }
    return Polytope(std::move(normals), std::move(offsets));
}

Polytope I_of_U(const Polytope& u, const HCone& cone)
{
    const SimplicialFrame frame(cone);
    return frame.from_orthant(I_of_U(frame.to_orthant(u)));
}

bool V_of_U_member(const Polytope& u, const Vec& y)
{
    if (y.size() != u.dim()) throw DimensionMismatch("V_of_U_member: dimension");
    const Polytope i_of_u = I_of_U(u);
    lp::LinearProgram prog(u.dim());
    for (Index i = 0; i < i_of_u.num_rows(); ++i)
        prog.add(i_of_u.normals().row(i).transpose(), lp::Relation::LessEqual, i_of_u.offsets()(i));
    for (Index j = 0; j < u.dim(); ++j) prog.add(unit_vector(u.dim(), j), lp::Relation::GreaterEqual, abs(y(j)));
    return lp::solve(prog).status == lp::Status::Feasible;
}

bool V_of_U_member(const Polytope& u, const Vec& y, const HCone& cone)
{
    const SimplicialFrame frame(cone);
    return V_of_U_member(frame.to_orthant(u), frame.to_orthant(y));
}

Polytope V_of_U_polytope(const Polytope& u)
{
    const Index d = u.dim();
    const Index patterns = Index(1) << d;
    Mat normals(u.num_rows() * patterns, d);
    Vec offsets(u.num_rows() * patterns);
    Index r = 0;
    for (Index i = 0; i < u.num_rows(); ++i)
    {
        for (Index s = 0; s < patterns; ++s, ++r)
        {
            for (Index j = 0; j < d; ++j)
            {
                const Rational a = abs(u.normals()(i, j));
                normals(r, j) = (s >> j) & 1 ? Rational(-a) : a;
            }
            offsets(r) = u.offsets()(i);
        }
    }
    return Polytope(std::move(normals), std::move(offsets));
}

CatchOutcome catches_canonical_chain(const Polytope& u, const Vec& w, std::uint64_t depth)
{
    if (w.size() != u.dim()) throw DimensionMismatch("catches_canonical_chain: dimension");
    for (Index j = 0; j < w.size(); ++j)
        if (w(j) < 0) throw NotPositive("catches_canonical_chain: w must lie in the orthant");

    // [-w/n, w/n] inside {a_i . y <= b_i}  <=>  S_i / n <= b_i  with S_i = |a_i| . w.
    Integer needed = 1;
    for (Index i = 0; i < u.num_rows(); ++i)
    {
        Rational s = 0;
        for (Index j = 0; j < u.dim(); ++j) s += abs(u.normals()(i, j)) * w(j);
        const Rational& b = u.offsets()(i);
        if (s == 0)
        {
            if (b < 0) return CatchOutcome::not_caught_up_to(depth);
            continue;
        }
        if (b <= 0) return CatchOutcome::not_caught_up_to(depth);
        needed = std::max(needed, ceil_integer(s / b));
    }
    if (needed > Integer(depth)) return CatchOutcome::not_caught_up_to(depth);
    return CatchOutcome::at(static_cast<std::uint64_t>(needed));
}

CatchOutcome catches_canonical_chain(const Polytope& u, const Vec& w, const HCone& cone, std::uint64_t depth)
{
    const SimplicialFrame frame(cone);
    return catches_canonical_chain(frame.to_orthant(u), frame.to_orthant(w), depth);
}

}   // namespace ordvec
