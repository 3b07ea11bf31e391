#include "ordvec/polyhedral.hpp"

#include <algorithm>
#include <limits>

#include "ordvec/exactlp.hpp"

namespace ordvec {

namespace {

Rational row_dot(const Mat& a, Index i, const Vec& x)
{
    Rational s = 0;
    for (Index j = 0; j < a.cols(); ++j)
        if (a(i, j) != 0 && x(j) != 0) s += a(i, j) * x(j);
    return s;
}

void require_dim(const HCone& cone, const Vec& x, const char* what)
{
    if (x.size() != cone.dim()) throw DimensionMismatch(std::string(what) + ": dimension mismatch");
}

std::uint64_t to_index(const Integer& n)
{
    if (n < 1) return 1;
    if (n > std::numeric_limits<std::uint64_t>::max()) throw InvalidArgument("catch index overflows 64 bits");
    return n.convert_to<std::uint64_t>();
}

// Least n >= 1 with rhs_i <= n * scale_i for all rows, where scale_i >= 0.
std::optional<Integer> least_multiplier(const std::vector<Rational>& scale, const std::vector<Rational>& rhs)
{
    Rational need = 1;
    for (std::size_t i = 0; i < scale.size(); ++i)
    {
        if (scale[i] > 0)
            need = std::max(need, Rational(rhs[i] / scale[i]));
        else if (rhs[i] > 0)
            return std::nullopt;
    }
    return ceil_integer(need);
}

}   // namespace

// ---------------------------------------------------------------------------
// Cone types

HCone::HCone(Mat normals) : normals_(std::move(normals))
{
    for (Index i = 0; i < normals_.rows(); ++i)
        if (is_zero(normals_.row(i).transpose())) throw InvalidArgument("HCone: zero normal");
}

HCone HCone::orthant(Index dim)
{
    Mat id = Mat::Identity(dim, dim);
    return HCone(id);
}

bool HCone::contains(const Vec& x) const
{
    if (!compatible(x)) throw DimensionMismatch("HCone::contains: dimension mismatch");
    for (Index i = 0; i < normals_.rows(); ++i)
        if (row_dot(normals_, i, x) < 0) return false;
    return true;
}

VCone::VCone(Mat generators, Index dim) : generators_(std::move(generators)), dim_(dim)
{
    if (dim_ <= 0) throw InvalidArgument("VCone: dimension must be positive");
    if (generators_.rows() > 0 && generators_.cols() != dim_) throw DimensionMismatch("VCone: generator size");
    if (generators_.rows() == 0) generators_.resize(0, dim_);
    for (Index i = 0; i < generators_.rows(); ++i)
        if (is_zero(generators_.row(i).transpose())) throw InvalidArgument("VCone: zero generator");
}

bool VCone::contains(const Vec& x) const
{
    if (!compatible(x)) throw DimensionMismatch("VCone::contains: dimension mismatch");
    const Index k = num_generators();
    if (k == 0) return is_zero(x);
    lp::LinearProgram prog(k);
    for (Index c = 0; c < dim_; ++c)
        prog.add(generators_.col(c), lp::Relation::Equal, x(c));
    for (Index j = 0; j < k; ++j) prog.add(unit_vector(k, j), lp::Relation::GreaterEqual, 0);
    return lp::solve(prog).status == lp::Status::Feasible;
}

// ---------------------------------------------------------------------------
// Membership, directedness, order units

bool member(const HCone& cone, const Vec& x)
{
    require_dim(cone, x, "member");
    return cone.contains(x);
}

bool interior_member(const HCone& cone, const Vec& x)
{
    require_dim(cone, x, "interior_member");
    const Mat& a = cone.normals();
    for (Index i = 0; i < a.rows(); ++i)
        if (row_dot(a, i, x) <= 0) return false;
    return true;
}

bool is_directed(const VCone& cone)
{
    return exact_rank(cone.generators()) == cone.dim();
}

std::optional<Vec> interior_point(const HCone& cone)
{
    const Index d = cone.dim();
    if (cone.num_normals() == 0) return Vec(Vec::Zero(d));
    lp::LinearProgram prog(d);
    std::vector<Index> strict;
    for (Index i = 0; i < cone.num_normals(); ++i)
        strict.push_back(prog.add(cone.normals().row(i).transpose(), lp::Relation::GreaterEqual, 0));
    const auto out = lp::strict_feasible(prog, strict);
    if (out.status != lp::Status::Feasible) return std::nullopt;
    return *out.point;
}

bool is_directed(const HCone& cone)
{
    return interior_point(cone).has_value();
}

std::optional<std::vector<Integer>> order_unit_multipliers(const HCone& cone, const Vec& u)
{
    require_dim(cone, u, "order_unit_multipliers");
    if (!cone.contains(u)) return std::nullopt;
    const Mat& a = cone.normals();
    const Index m = a.rows();
    std::vector<Rational> scale(static_cast<std::size_t>(m));
    for (Index i = 0; i < m; ++i) scale[static_cast<std::size_t>(i)] = row_dot(a, i, u);

    std::vector<Integer> out;
    for (Index k = 0; k < cone.dim(); ++k)
    {
        for (int sign : {1, -1})
        {
            // sign * e_k <= n u  <=>  n (a_i . u) >= sign * a_ik for every row.
            std::vector<Rational> rhs(static_cast<std::size_t>(m));
            for (Index i = 0; i < m; ++i) rhs[static_cast<std::size_t>(i)] = sign * a(i, k);
            auto n = least_multiplier(scale, rhs);
            if (!n) return std::nullopt;
            out.push_back(*n);
        }
    }
    return out;
}

bool is_order_unit(const HCone& cone, const Vec& u)
{
    require_dim(cone, u, "is_order_unit");
    if (!is_directed(cone)) throw NotDirected("is_order_unit: cone has empty interior");
    const bool interior = interior_member(cone, u);
    const bool definitional = order_unit_multipliers(cone, u).has_value();
    if (interior != definitional)
        throw TheoremViolation("order unit: interior test and definitional multipliers disagree at u = " + to_string(u));
    return interior;
}

std::optional<std::uint64_t> canonical_catch_index(const HCone& cone, const Vec& u, const Vec& w)
{
    require_dim(cone, u, "canonical_catch_index");
    require_dim(cone, w, "canonical_catch_index");
    if (!cone.contains(w)) throw NotPositive("canonical_catch_index: chain generator is not positive");
    const Mat& a = cone.normals();
    std::vector<Rational> scale, rhs;
    for (Index i = 0; i < a.rows(); ++i)
    {
        const Rational au = row_dot(a, i, u);
        const Rational aw = row_dot(a, i, w);
        // (1/n) w <= u  <=>  n (a_i . u) >= a_i . w; a negative a_i . u rules out every n >= 1.
        if (au < 0) return std::nullopt;
        scale.push_back(au);
        rhs.push_back(aw);
    }
    auto n = least_multiplier(scale, rhs);
    if (!n) return std::nullopt;
    return to_index(*n);
}

std::optional<Vec> uncaught_chain_generator(const HCone& cone, const Vec& u)
{
    require_dim(cone, u, "uncaught_chain_generator");
    if (interior_member(cone, u)) return std::nullopt;
    auto p = interior_point(cone);
    if (!p) return std::nullopt;
    if (canonical_catch_index(cone, u, *p))
        throw TheoremViolation("interior point's chain caught by a non-interior element");
    return p;
}

bool is_net_catching_fd(const HCone& cone, const Vec& u, std::span<const Vec> probes)
{
    const bool verdict = is_order_unit(cone, u);
    for (const Vec& w : probes)
    {
        require_dim(cone, w, "is_net_catching_fd");
        if (!cone.contains(w)) throw NotPositive("is_net_catching_fd: probe is not positive");
        if (verdict && !canonical_catch_index(cone, u, w))
            throw TheoremViolation("order unit fails to catch the canonical chain of " + to_string(w));
    }
    if (!verdict && !uncaught_chain_generator(cone, u))
        throw TheoremViolation("no uncaught chain for the non-interior element " + to_string(u));
    return verdict;
}

// ---------------------------------------------------------------------------
// u-norm

Rational unorm(const HCone& cone, const Vec& u, const Vec& x)
{
    require_dim(cone, u, "unorm");
    require_dim(cone, x, "unorm");
    if (!interior_member(cone, u)) throw NotInterior("unorm: u is not an interior point");
    const Mat& a = cone.normals();
    Rational best = 0;
    for (Index i = 0; i < a.rows(); ++i)
    {
        const Rational ratio = abs(row_dot(a, i, x)) / row_dot(a, i, u);
        if (ratio > best) best = ratio;
    }
    return best;
}

bool unorm_ball_is_interval(const HCone& cone, const Vec& u, std::span<const Vec> samples)
{
    const Vec minus_u = -u;
    for (const Vec& x : samples)
    {
        const bool in_ball = unorm(cone, u, x) <= 1;
        const bool in_interval = cone_leq(cone, minus_u, x) && cone_leq(cone, x, u);
        if (in_ball != in_interval) return false;
    }
    return true;
}

NormEquivalence unorm_equivalence(const HCone& cone, const Vec& u, const Vec& v)
{
    if (cone.num_normals() == 0) throw InvalidArgument("unorm_equivalence: the u-norm of the whole space is zero");
    // ||x||_v <= ||u||_v ||x||_u  and  ||x||_u <= ||v||_u ||x||_v.
    const Rational upper = unorm(cone, v, u);
    const Rational lower = Rational(1) / unorm(cone, u, v);
    return {lower, upper};
}

NormEquivalence sup_norm_equivalence(const HCone& cone, const Vec& u)
{
    require_dim(cone, u, "sup_norm_equivalence");
    if (!interior_member(cone, u)) throw NotInterior("sup_norm_equivalence: u is not an interior point");
    const Mat& a = cone.normals();
    const Index d = cone.dim();

    Rational upper = 0;
    for (Index i = 0; i < a.rows(); ++i)
    {
        Rational l1 = 0;
        for (Index j = 0; j < d; ++j) l1 += abs(a(i, j));
        upper = std::max(upper, Rational(l1 / row_dot(a, i, u)));
    }

    // min ||x||_u over the facet {x_k = s, |x_j| <= 1}; variables (x, t).
    std::optional<Rational> lower;
    for (Index k = 0; k < d; ++k)
    {
        for (int s : {1, -1})
        {
            lp::LinearProgram prog(d + 1, lp::Sense::Minimize);
            for (Index i = 0; i < a.rows(); ++i)
            {
                Vec row(d + 1);
                row.head(d) = a.row(i).transpose();
                row(d) = row_dot(a, i, u);
                prog.add(row, lp::Relation::GreaterEqual, 0);          // t a.u + a.x >= 0
                row.head(d) = -row.head(d);
                prog.add(row, lp::Relation::GreaterEqual, 0);          // t a.u - a.x >= 0
            }
            for (Index j = 0; j < d; ++j)
            {
                if (j == k)
                {
                    prog.add(unit_vector(d + 1, j), lp::Relation::Equal, s);
                    continue;
                }
                prog.add(unit_vector(d + 1, j), lp::Relation::LessEqual, 1);
                prog.add(unit_vector(d + 1, j), lp::Relation::GreaterEqual, -1);
            }
            prog.add(unit_vector(d + 1, d), lp::Relation::GreaterEqual, 0);
            prog.objective = unit_vector(d + 1, d);
            const auto out = lp::solve(prog);
            if (out.status != lp::Status::Optimal) throw TheoremViolation("sup_norm_equivalence: facet LP not optimal");
            if (!lower || *out.value < *lower) lower = *out.value;
        }
    }
    return {*lower, upper};
}

// ---------------------------------------------------------------------------
// Order open, order bounded set around an interior point

OpenOrderBoundedSet::OpenOrderBoundedSet(HCone cone, Vec center) : cone_(std::move(cone)), center_(std::move(center))
{
    if (!interior_member(cone_, center_)) throw NotInterior("OpenOrderBoundedSet: center is not interior");
}

bool OpenOrderBoundedSet::contains(const Vec& y) const
{
    require_dim(cone_, y, "OpenOrderBoundedSet::contains");
    const Mat& a = cone_.normals();
    for (Index i = 0; i < a.rows(); ++i)
    {
        const Rational ay = row_dot(a, i, y);
        if (ay <= 0 || 2 * row_dot(a, i, center_) - ay <= 0) return false;
    }
    return true;
}

std::optional<std::uint64_t> OpenOrderBoundedSet::catch_index(const Vec& y, const Vec& w) const
{
    if (!contains(y)) throw InvalidArgument("catch_index: y is not in the set");
    require_dim(cone_, w, "catch_index");
    if (!cone_.contains(w)) throw NotPositive("catch_index: chain generator is not positive");
    const Mat& a = cone_.normals();
    const Index d = cone_.dim();

    // [-w, w] = {v : a_k.(w - v) >= 0, a_k.(w + v) >= 0}
    lp::LinearProgram box(d, lp::Sense::Maximize);
    for (Index k = 0; k < a.rows(); ++k)
    {
        const Rational aw = row_dot(a, k, w);
        box.add(a.row(k).transpose(), lp::Relation::LessEqual, aw);
        box.add(a.row(k).transpose(), lp::Relation::GreaterEqual, Rational(-aw));
    }

    Integer n = 1;
    for (Index i = 0; i < a.rows(); ++i)
    {
        box.objective = a.row(i).transpose();
        const auto out = lp::solve(box);
        if (out.status == lp::Status::Unbounded) return std::nullopt;
        if (out.status != lp::Status::Optimal) throw TheoremViolation("catch_index: order interval LP infeasible");
        const Rational extent = *out.value;   // max over [-w,w] of |a_i . v|, by symmetry
        const Rational ay = row_dot(a, i, y);
        const Rational slack = std::min(ay, Rational(2 * row_dot(a, i, center_) - ay));
        // need slack - extent / n > 0
        n = std::max(n, Integer(floor_integer(extent / slack) + 1));
    }
    return to_index(n);
}

OpenOrderBoundedSet order_open_bounded_set(const HCone& cone, const Vec& u)
{
    require_dim(cone, u, "order_open_bounded_set");
    return OpenOrderBoundedSet(cone, u);
}

// ---------------------------------------------------------------------------
// Bases and strictly positive functionals

Vec strictly_positive_functional(const VCone& cone)
{
    if (cone.num_generators() == 0) throw InvalidArgument("strictly_positive_functional: trivial cone");
    lp::LinearProgram prog(cone.dim());
    for (Index j = 0; j < cone.num_generators(); ++j)
        prog.add(cone.generators().row(j).transpose(), lp::Relation::GreaterEqual, 1);
    const auto out = lp::solve(prog);
    if (out.status != lp::Status::Feasible) throw NoSuchFunctional("no functional is strictly positive on the cone");
    return *out.point;
}

BaseDescriptor base_of(const VCone& cone, const Vec& f)
{
    if (f.size() != cone.dim()) throw DimensionMismatch("base_of: functional size");
    Mat vertices(cone.num_generators(), cone.dim());
    for (Index j = 0; j < cone.num_generators(); ++j)
    {
        const Vec r = cone.generators().row(j).transpose();
        const Rational fr = f.dot(r);
        if (fr <= 0) throw NotStrictlyPositive("base_of: f is not positive on generator " + to_string(r));
        vertices.row(j) = (r / fr).transpose();
    }
    return BaseDescriptor(f, cone, vertices);
}

bool base_bounded(const BaseDescriptor& base)
{
    const VCone& cone = base.cone();
    const Index k = cone.num_generators();
    if (k == 0) return false;
    lp::LinearProgram prog(k, lp::Sense::Maximize);
    Vec fr(k);
    for (Index j = 0; j < k; ++j) fr(j) = base.functional().dot(cone.generators().row(j).transpose());
    prog.add(fr, lp::Relation::Equal, 1);
    for (Index j = 0; j < k; ++j) prog.add(unit_vector(k, j), lp::Relation::GreaterEqual, 0);
    for (Index c = 0; c < cone.dim(); ++c)
    {
        for (int sign : {1, -1})
        {
            prog.objective = Vec(Rational(sign) * cone.generators().col(c));
            if (lp::solve(prog).status != lp::Status::Optimal) return false;
        }
    }
    return true;
}

BaseBoundVerdict upper_bound_of_base_is_net_catching(const BaseDescriptor& base, const Vec& u)
{
    const HCone h = v_to_h(base.cone());
    if (!is_directed(h)) throw NotDirected("upper_bound_of_base_is_net_catching: cone is not generating");
    for (Index j = 0; j < base.vertices().rows(); ++j)
        if (!cone_leq(h, Vec(base.vertices().row(j).transpose()), u)) return BaseBoundVerdict::NotUpperBound;
    return is_net_catching_fd(h, u) ? BaseBoundVerdict::Confirmed : BaseBoundVerdict::TheoremViolation;
}

std::vector<Vec> canonical_rays(const Mat& rows)
{
    std::vector<Vec> rays;
    for (Index i = 0; i < rows.rows(); ++i)
    {
        const Vec r = rows.row(i).transpose();
        if (!is_zero(r)) rays.push_back(primitive_direction(r));
    }
    std::sort(rays.begin(), rays.end(), lexicographically_less);
    rays.erase(std::unique(rays.begin(), rays.end(), [](const Vec& a, const Vec& b) { return a == b; }), rays.end());
    return rays;
}

}   // namespace ordvec
