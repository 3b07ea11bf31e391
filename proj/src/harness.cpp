#include "ordvec/harness.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ordvec/core.hpp"
#include "ordvec/exactlp.hpp"
#include "ordvec/generators.hpp"
#include "ordvec/icecream.hpp"
#include "ordvec/lexseq.hpp"
#include "ordvec/polyhedral.hpp"
#include "ordvec/toposets.hpp"

namespace ordvec {

namespace {

// ---------------------------------------------------------------------------
// Counterexample formatting. Every instance prints in the CLI's input syntax.

std::string show(const Vec& v) { return "(" + to_string(v) + ")"; }

std::string show(const Eigen::VectorXd& v)
{
    std::string out = "(";
    for (Index i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v(i));
    return out + ")";
}

std::string show(const Mat& m)
{
    std::string out = "[";
    for (Index i = 0; i < m.rows(); ++i) out += (i ? ";" : "") + to_string(Vec(m.row(i).transpose()));
    return out + "]";
}

std::string show(const HCone& c) { return "hcone" + show(c.normals()); }
std::string show(const VCone& c) { return "vcone" + show(c.generators()); }
std::string show(const Polytope& p) { return "polytope" + show(p.normals()) + "<=" + show(p.offsets()); }
std::string show(const IceCreamCone<double>& c)
{
    return "icecream(axis=" + show(c.axis()) + ",eps=" + to_string(c.eps()) + ")";
}

template <typename... Parts>
std::string cx(const Parts&... parts)
{
    std::ostringstream out;
    ((out << parts), ...);
    return out.str();
}

using Verdict = std::optional<std::string>;   // counterexample on failure
using Trial = std::function<Verdict(Sampler&, const SuiteConfig&)>;

Index pick_dim(Sampler& s, const SuiteConfig& cfg, Index lo = 1, Index hi = kDoubleDescriptionCap)
{
    const Index d = cfg.dims[static_cast<std::size_t>(s.integer(0, static_cast<std::int64_t>(cfg.dims.size()) - 1))];
    return std::clamp(d, lo, hi);
}

HCone sample_cone(Sampler& s, Index d)
{
    return random_hcone(s, d, d + s.integer(0, 3));
}

Vec positive_element(Sampler& s, const HCone& cone, const Vec& interior)
{
    return s.coin() ? random_boundary_point(s, cone, interior)
                    : Vec(random_boundary_point(s, cone, interior) + Rational(s.integer(1, 3), s.integer(1, 3)) * interior);
}

bool pointed(const HCone& cone) { return exact_null_space(cone.normals()).rows() == 0; }

Rational sup_norm(const Vec& x)
{
    Rational m = 0;
    for (Index i = 0; i < x.size(); ++i) m = std::max(m, abs(x(i)));
    return m;
}

// ---------------------------------------------------------------------------
// Core and engines

Verdict order_axioms(Sampler& s, const SuiteConfig& cfg)
{
    const HCone cone = sample_cone(s, pick_dim(s, cfg));
    const Vec p = *interior_point(cone);
    const Vec x = random_test_element(s, cone, p);
    const Vec z = random_test_element(s, cone, p);
    const Vec y = x + positive_element(s, cone, p);
    const Vec w = y + positive_element(s, cone, p);
    const Rational lambda(s.integer(0, 9), s.integer(1, 4));
    const std::string at = cx(show(cone), " x=", show(x), " y=", show(y));

    if (!cone_leq(cone, x, x)) return "reflexivity fails: " + at;
    if (!cone_leq(cone, x, y)) return "x <= x + positive fails: " + at;
    if (!cone_leq(cone, x, w)) return "transitivity fails: " + at + " w=" + show(w);
    if (!cone_leq(cone, Vec(x + z), Vec(y + z))) return "translation invariance fails: " + at + " z=" + show(z);
    if (!cone_leq(cone, Vec(lambda * x), Vec(lambda * y))) return "scaling fails: " + at + " lambda=" + to_string(lambda);
    if (pointed(cone) && cone_leq(cone, y, x) && x != y) return "antisymmetry fails: " + at;

    const Vec q = random_test_element(s, cone, p);
    bool built = true;
    try { (void)make_interval(x, q, cone); }
    catch (const EmptyInterval&) { built = false; }
    if (built != cone_leq(cone, x, q)) return "make_interval disagrees with cone_leq: " + at + " q=" + show(q);

    const Vec v = y - x;
    if (pointed(cone) && !is_zero(v))
    {
        const auto chain = canonical_chain(v, cone);
        for (std::uint64_t n = 1; n <= 6; ++n)
            if (chain.at(n) == chain.raw(n + 1)) return "canonical chain not strict: " + show(cone) + " w=" + show(v);
    }
    return std::nullopt;
}

Verdict lp_certificates(Sampler& s, const SuiteConfig&)
{
    const Index n = s.integer(1, 3);
    const Index m = s.integer(1, 6);
    const std::array senses{lp::Sense::Minimize, lp::Sense::Maximize, lp::Sense::FeasibilityOnly};
    lp::LinearProgram prog(n, senses[static_cast<std::size_t>(s.integer(0, 2))]);
    const std::array rels{lp::Relation::LessEqual, lp::Relation::Equal, lp::Relation::GreaterEqual};
    for (Index i = 0; i < m; ++i)
        prog.add(s.integer_vector(n, 3), rels[static_cast<std::size_t>(s.integer(0, 2))], Rational(s.integer(-4, 4)));
    // Box rows keep the optimum finite most of the time.
    if (s.coin(0.7))
        for (Index j = 0; j < n; ++j)
        {
            prog.add(unit_vector(n, j), lp::Relation::LessEqual, 5);
            prog.add(unit_vector(n, j), lp::Relation::GreaterEqual, -5);
        }
    prog.objective = s.integer_vector(n, 3);
    const std::string at = cx("lp rows=", show(prog.constraints), " rhs=", show(prog.rhs), " c=", show(prog.objective));

    const auto out = lp::solve(prog);
    if (out.point && !lp::satisfies(prog, *out.point)) return "returned point violates a constraint: " + at;
    if (out.status == lp::Status::Optimal)
    {
        if (*out.value != Rational(prog.objective.dot(*out.point))) return "value differs from objective at point: " + at;
        for (int k = 0; k < 40; ++k)
        {
            const Vec q = s.integer_vector(n, 5);
            if (!lp::satisfies(prog, q)) continue;
            const Rational cq = prog.objective.dot(q);
            if ((prog.sense == lp::Sense::Maximize && cq > *out.value) || (prog.sense == lp::Sense::Minimize && cq < *out.value))
                return "sampled feasible point beats the optimum: " + at + " q=" + show(q);
        }
    }
    if (out.status == lp::Status::Infeasible)
        for (int k = 0; k < 40; ++k)
            if (const Vec q = s.rational_vector(n, 5, 3); lp::satisfies(prog, q))
                return "infeasible LP has a feasible sample: " + at + " q=" + show(q);

    std::vector<Index> strict;
    for (Index i = 0; i < m; ++i)
        if (prog.relations[static_cast<std::size_t>(i)] != lp::Relation::Equal) strict.push_back(i);
    const auto sf = lp::strict_feasible(prog, strict);
    if (sf.status == lp::Status::Feasible)
        for (Index i : strict)
        {
            const Rational lhs = prog.constraints.row(i).dot(*sf.point);
            const bool ok = prog.relations[static_cast<std::size_t>(i)] == lp::Relation::LessEqual ? lhs < prog.rhs(i) : lhs > prog.rhs(i);
            if (!ok) return "strict witness is not strict: " + at;
        }
    return std::nullopt;
}

Verdict dd_round_trip(Sampler& s, const SuiteConfig& cfg)
{
    const Index d = pick_dim(s, cfg, 2, 4);
    const Index count = d + s.integer(0, 3);
    Mat gens(count, d);
    for (Index j = 0; j < count; ++j)
    {
        Vec r;
        do r = s.integer_vector(d, 2);
        while (is_zero(r));
        gens.row(j) = r.transpose();
    }
    const VCone v(gens);
    const HCone h = v_to_h(v);
    const VCone v2 = h_to_v(h);
    const HCone h2 = v_to_h(v2);
    const std::string at = show(v);

    for (Index j = 0; j < count; ++j)
        if (!h.contains(gens.row(j).transpose())) return "generator outside its H-representation: " + at;
    for (Index j = 0; j < v2.num_generators(); ++j)
        if (!v.contains(v2.generators().row(j).transpose())) return "converted ray outside the cone: " + at;
    if (canonical_rays(h.normals()) != canonical_rays(h2.normals())) return "facet set not stable under round trip: " + at;
    for (int k = 0; k < 8; ++k)
    {
        const Vec x = s.integer_vector(d, 3);
        if (v.contains(x) != h.contains(x)) return "membership differs: " + at + " x=" + show(x);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Polyhedral order units and u-norms

Verdict thm_2_6(Sampler& s, const SuiteConfig& cfg)
{
    const HCone cone = sample_cone(s, pick_dim(s, cfg));
    const Vec p = *interior_point(cone);
    std::vector<Vec> probes;
    for (int k = 0; k < 3; ++k) probes.push_back(positive_element(s, cone, p));
    for (int k = 0; k < 20; ++k)
    {
        const Vec u = random_test_element(s, cone, p);
        const bool a = interior_member(cone, u);
        const bool b = is_order_unit(cone, u);
        const bool c = is_net_catching_fd(cone, u, probes);
        if (a != b || b != c) return cx("interior/order-unit/net-catching disagree: ", show(cone), " u=", show(u));
    }
    return std::nullopt;
}

Verdict prop_2_1(Sampler& s, const SuiteConfig& cfg)
{
    const Index d = pick_dim(s, cfg);
    const HCone cone = sample_cone(s, d);
    const auto u = interior_point(cone);
    if (!u) return "generated cone has no interior point: " + show(cone);
    const OpenOrderBoundedSet set = order_open_bounded_set(cone, *u);
    const std::string at = cx(show(cone), " u=", show(*u));
    if (!set.contains(*u)) return "set does not contain its centre: " + at;

    for (int k = 0; k < 6; ++k)
    {
        const Vec y = *u + Rational(1, s.integer(2, 8)) * random_test_element(s, cone, *u);
        if (!set.contains(y)) continue;
        if (!cone_leq(cone, set.lower(), y) || !cone_leq(cone, y, set.upper())) return "set leaves [0,2u]: " + at + " y=" + show(y);
        const Vec w = positive_element(s, cone, *u);
        const auto n = set.catch_index(y, w);
        if (!n) return "set fails to catch a canonical chain: " + at + " y=" + show(y) + " w=" + show(w);
        const Vec step = w / Rational(*n);
        if (!set.contains(Vec(y + step)) || !set.contains(Vec(y - step))) return "catch index too small: " + at + " y=" + show(y) + " w=" + show(w);
    }

    // A flat cone (a normal and its negative) has no interior, so no such set is built.
    Mat flat(2, d);
    Vec a = s.integer_vector(d, 3);
    if (is_zero(a)) a(0) = 1;
    flat.row(0) = a.transpose();
    flat.row(1) = (-a).transpose();
    if (interior_point(HCone(flat))) return "flat cone reports an interior point: " + show(HCone(flat));
    return std::nullopt;
}

Verdict prop_3_1(Sampler& s, const SuiteConfig& cfg)
{
    const HCone cone = sample_cone(s, pick_dim(s, cfg));
    const Vec p = *interior_point(cone);
    if (!is_net_catching_fd(cone, p)) return "interior point is not net catching: " + show(cone);
    for (int k = 0; k < 5; ++k)
    {
        const Vec u = Vec(random_boundary_point(s, cone, p) + Rational(s.integer(1, 4), s.integer(1, 4)) * p);
        if (is_order_unit(cone, u) && !is_net_catching_fd(cone, u)) return cx("order unit not net catching: ", show(cone), " u=", show(u));
    }
    // Lexicographic space: the order units are net catching as well.
    const Index d = pick_dim(s, cfg, 2);
    Vec u = s.rational_vector(d, 3, 3);
    u(0) = abs(u(0)) + Rational(1, 2);
    if (!lex_is_order_unit(u) || !lex_is_net_catching(u)) return "lex order unit not net catching: " + show(u);
    return std::nullopt;
}

Verdict prop_5_1(Sampler& s, const SuiteConfig& cfg)
{
    const HCone cone = sample_cone(s, pick_dim(s, cfg));
    const Vec p = *interior_point(cone);
    const Vec w = positive_element(s, cone, p);
    const Vec u = Vec(random_boundary_point(s, cone, p) + Rational(s.integer(1, 4), s.integer(1, 6)) * p);
    const auto n = canonical_catch_index(cone, u, w);
    const std::string at = cx(show(cone), " u=", show(u), " w=", show(w));
    if (!n) return "order unit misses a canonical chain: " + at;
    if (!cone_leq(cone, Vec(w / Rational(*n)), u)) return "catch index does not catch: " + at;
    if (*n > 1 && cone_leq(cone, Vec(w / Rational(*n - 1)), u)) return "catch index is not least: " + at;

    const Vec b = random_boundary_point(s, cone, p);
    if (const auto g = uncaught_chain_generator(cone, b))
    {
        for (std::uint64_t k = 1; k <= 64; ++k)
            if (cone_leq(cone, Vec(*g / Rational(k)), b)) return cx("boundary point catches ", show(*g), " at ", k, ": ", show(cone), " b=", show(b));
    }
    else
        return "no uncaught chain for boundary point: " + show(cone) + " b=" + show(b);
    return std::nullopt;
}

Verdict thm_4_6(Sampler& s, const SuiteConfig& cfg)
{
    const Index d = pick_dim(s, cfg, 1, 4);
    const VCone cone = random_pointed_vcone(s, d, d + s.integer(0, 2));
    const Vec f = strictly_positive_functional(cone);
    for (Index j = 0; j < cone.num_generators(); ++j)
        if (Rational(f.dot(cone.generators().row(j).transpose())) < 1) return "functional below 1 on a generator: " + show(cone);
    const BaseDescriptor base = base_of(cone, f);
    if (!base_bounded(base)) return "finitely generated base reported unbounded: " + show(cone);

    Vec u = Vec::Zero(d);
    for (Index j = 0; j < base.vertices().rows(); ++j) u += base.vertices().row(j).transpose();
    for (Index j = 0; j < cone.num_generators(); ++j) u += Rational(s.integer(0, 2)) * cone.generators().row(j).transpose();
    const auto verdict = upper_bound_of_base_is_net_catching(base, u);
    if (verdict != BaseBoundVerdict::Confirmed) return cx("upper bound of the base not confirmed: ", show(cone), " f=", show(f), " u=", show(u));

    const Vec r = s.rational_vector(d, 3, 2);
    bool dominates = true;
    for (Index j = 0; j < base.vertices().rows(); ++j)
        if (!cone.contains(Vec(r - base.vertices().row(j).transpose()))) dominates = false;
    const auto v2 = upper_bound_of_base_is_net_catching(base, r);
    if (v2 == BaseBoundVerdict::TheoremViolation) return cx("theorem violation: ", show(cone), " u=", show(r));
    if ((v2 == BaseBoundVerdict::Confirmed) != dominates) return cx("upper-bound classification wrong: ", show(cone), " u=", show(r));
    return std::nullopt;
}

Verdict rem_7_4_i(Sampler& s, const SuiteConfig& cfg)
{
    const HCone cone = sample_cone(s, pick_dim(s, cfg));
    const Vec u = *interior_point(cone);
    std::vector<Vec> samples;
    for (int k = 0; k < 40; ++k)
    {
        Vec x = s.rational_vector(cone.dim(), 2, 4);
        if (k % 4 == 0) x = u * Rational(s.integer(-4, 4), 4);   // exercise the boundary of [-u,u]
        samples.push_back(x);
    }
    if (!unorm_ball_is_interval(cone, u, samples)) return cx("unit ball differs from [-u,u]: ", show(cone), " u=", show(u));
    return std::nullopt;
}

Verdict rem_7_4_ii(Sampler& s, const SuiteConfig& cfg)
{
    const HCone cone = sample_cone(s, pick_dim(s, cfg));
    const Vec p = *interior_point(cone);
    const Vec u = Vec(positive_element(s, cone, p) + p);
    const Vec v = Vec(positive_element(s, cone, p) + Rational(1, s.integer(1, 4)) * p);
    const auto eq = unorm_equivalence(cone, u, v);
    if (!(eq.lower > 0 && eq.upper > 0)) return cx("constants not positive: ", show(cone), " u=", show(u), " v=", show(v));
    for (int k = 0; k < 20; ++k)
    {
        const Vec x = s.rational_vector(cone.dim(), 3, 3);
        const Rational a = unorm(cone, u, x);
        const Rational b = unorm(cone, v, x);
        if (eq.lower * a > b || b > eq.upper * a)
            return cx("equivalence fails: ", show(cone), " u=", show(u), " v=", show(v), " x=", show(x));
    }
    return std::nullopt;
}

Verdict unorm_axioms(Sampler& s, const SuiteConfig& cfg)
{
    const HCone cone = sample_cone(s, pick_dim(s, cfg));
    const Vec u = *interior_point(cone);
    const Vec x = s.rational_vector(cone.dim(), 3, 3);
    const Vec y = s.rational_vector(cone.dim(), 3, 3);
    const Rational t = s.rational(3, 4);
    const std::string at = cx(show(cone), " u=", show(u), " x=", show(x), " y=", show(y));
    if (unorm(cone, u, Vec(t * x)) != abs(t) * unorm(cone, u, x)) return "homogeneity fails: " + at + " t=" + to_string(t);
    if (unorm(cone, u, Vec(x + y)) > unorm(cone, u, x) + unorm(cone, u, y)) return "triangle inequality fails: " + at;
    if (unorm(cone, u, Vec::Zero(cone.dim())) != 0) return "norm of zero is not zero: " + at;
    if (pointed(cone) && !is_zero(x) && unorm(cone, u, x) == 0) return "nonzero vector of norm zero in a pointed cone: " + at;
    return std::nullopt;
}

Verdict unorm_oracle(Sampler& s, const SuiteConfig& cfg)
{
    const HCone cone = sample_cone(s, pick_dim(s, cfg));
    const Vec u = *interior_point(cone);
    const Vec x = s.rational_vector(cone.dim(), 4, 4);
    const Rational c = unorm(cone, u, x);
    auto feasible = [&](const Rational& lambda) {
        return cone.contains(Vec(lambda * u - x)) && cone.contains(Vec(lambda * u + x));
    };
    const std::string at = cx(show(cone), " u=", show(u), " x=", show(x), " norm=", to_string(c));
    if (!feasible(c)) return "closed form not feasible: " + at;
    if (c > 0 && feasible(c * Rational((Integer(1) << 40) - 1, Integer(1) << 40))) return "closed form not minimal: " + at;

    // Bisection over membership must bracket the same value.
    Rational lo = 0, hi = 1;
    while (!feasible(hi)) hi *= 2;
    for (int k = 0; k < 40; ++k)
    {
        const Rational mid = (lo + hi) / 2;
        (feasible(mid) ? hi : lo) = mid;
    }
    if (!(lo <= c && c <= hi)) return "bisection bracket misses the closed form: " + at;
    return std::nullopt;
}

Verdict thm_8_2(Sampler& s, const SuiteConfig& cfg)
{
    const HCone cone = sample_cone(s, pick_dim(s, cfg, 1, 4));
    const Vec u = *interior_point(cone);
    const auto eq = sup_norm_equivalence(cone, u);
    const std::string at = cx(show(cone), " u=", show(u));
    if ((eq.lower > 0) != pointed(cone)) return "lower constant positive iff pointed fails: " + at;
    for (int k = 0; k < 20; ++k)
    {
        const Vec x = s.rational_vector(cone.dim(), 3, 4);
        const Rational n = unorm(cone, u, x);
        const Rational m = sup_norm(x);
        if (eq.lower * m > n || n > eq.upper * m) return "sup-norm equivalence fails: " + at + " x=" + show(x);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Ice cream cones

double bisect_unorm_ice(const IceCreamCone<double>& cone, const Eigen::VectorXd& u, const Eigen::VectorXd& x)
{
    auto ok = [&](double l) {
        const Eigen::VectorXd a = l * u - x, b = l * u + x;
        return cone.axis().dot(a) - cone.eps() * a.norm() >= 0 && cone.axis().dot(b) - cone.eps() * b.norm() >= 0;
    };
    double lo = 0, hi = 1;
    while (!ok(hi)) hi *= 2;
    for (int k = 0; k < 200 && hi - lo > 0; ++k)
    {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (ok(mid) ? hi : lo) = mid;
    }
    return hi;
}

Verdict prop_5_4(Sampler& s, const SuiteConfig& cfg)
{
    const Index d = pick_dim(s, cfg, 2);
    const auto cone = random_icecream(s, d, cfg.float_tol);
    const Eigen::VectorXd x = random_ice_interior(s, cone);
    const Eigen::VectorXd y = random_ice_interior(s, cone);
    const std::string at = cx(show(cone), " x=", show(x), " y=", show(y));
    if (member(cone, Eigen::VectorXd(x + y)) != IceMembership::Interior) return "sum of interior points not interior: " + at;
    if (member(cone, Eigen::VectorXd(s.real(0.1, 5.0) * x)) != IceMembership::Interior) return "positive multiple not interior: " + at;
    if (member(cone, Eigen::VectorXd(-x)) != IceMembership::Outside) return "negative of an interior point inside: " + at;
    if (member(cone, Eigen::VectorXd(Eigen::VectorXd::Zero(d))) != IceMembership::Boundary) return "origin not on the boundary: " + at;

    // t f + r d with r at the maximal radius lies on the boundary.
    const Eigen::VectorXd b = random_ice_base_point(s, cone);
    if (std::abs((b - cone.axis()).norm() - std::sqrt(1 / (cone.eps() * cone.eps()) - 1)) < 1e-12
        && member(cone, b) != IceMembership::Boundary)
        return "rim point not classified as boundary: " + at + " b=" + show(b);

    const Eigen::VectorXd z = s.gaussian_vector(d);
    const std::uint64_t n = archimedean_bound(cone, x, z);
    if (cone.excess(Eigen::VectorXd(z - double(n) * x)) >= 0) return cx("n x <= z at the Archimedean bound n=", n, ": ", at, " z=", show(z));
    return std::nullopt;
}

Verdict lem_5_5(Sampler& s, const SuiteConfig& cfg)
{
    const auto cone = random_icecream(s, pick_dim(s, cfg, 2), cfg.float_tol);
    for (int k = 0; k < 20; ++k)
    {
        const Eigen::VectorXd b = random_ice_base_point(s, cone);
        if (!base_contains(cone, b)) return cx("base point rejected: ", show(cone), " b=", show(b));
        if (base_contains(cone, Eigen::VectorXd(1.01 * b))) return cx("off-slice point accepted: ", show(cone), " b=", show(b));
        const Eigen::VectorXd radial = b - cone.axis();
        if (radial.norm() < 1e-6) continue;
        const double rim = std::sqrt(1 / (cone.eps() * cone.eps()) - 1);
        const Eigen::VectorXd far = cone.axis() + 1.01 * rim * radial.normalized();
        if (base_contains(cone, far)) return cx("point beyond the rim accepted: ", show(cone), " b=", show(far));
    }
    return std::nullopt;
}

Verdict lem_5_7(Sampler& s, const SuiteConfig& cfg)
{
    const Index d = pick_dim(s, cfg, 2);
    const auto cone = random_icecream(s, d, cfg.float_tol);
    const Eigen::VectorXd x = random_ice_interior(s, cone);
    const double kappa = inradius(cone, x);
    const double lambda = base_majorant(cone, x);
    const std::string at = cx(show(cone), " x=", show(x));
    for (int k = 0; k < 50; ++k)
    {
        const Eigen::VectorXd dir = s.gaussian_vector(d).normalized();
        if (member(cone, Eigen::VectorXd(x + kappa * dir)) == IceMembership::Outside) return "inradius ball leaves the cone: " + at;
        const Eigen::VectorXd b = random_ice_base_point(s, cone);
        if (member(cone, Eigen::VectorXd(lambda * x - b)) == IceMembership::Outside) return "base point above lambda x: " + at + " b=" + show(b);
    }
    return std::nullopt;
}

Verdict prop_5_8(Sampler& s, const SuiteConfig& cfg)
{
    const Index d = pick_dim(s, cfg, 2);
    const auto cone = random_icecream(s, d, cfg.float_tol);
    const Eigen::VectorXd u = random_ice_interior(s, cone);
    const Eigen::VectorXd w = s.coin() ? random_ice_interior(s, cone, 1.0) : Eigen::VectorXd(s.real(0.5, 20) * random_ice_base_point(s, cone));
    const std::uint64_t n = canonical_catch_index(cone, u, w);
    const std::string at = cx(show(cone), " u=", show(u), " w=", show(w), " n=", n);
    if (member(cone, Eigen::VectorXd(u - w / double(n))) == IceMembership::Outside) return "canonical chain not caught at n: " + at;
    if (n > 1 && member(cone, Eigen::VectorXd(u - w / double(n - 1))) == IceMembership::Interior) return "catch index not least: " + at;
    if (double(n) > std::ceil(unorm_ice(cone, u, w)) + 0.5) return "catch index exceeds ceil of the u-norm: " + at;
    return std::nullopt;
}

Verdict ice_unorm_oracle(Sampler& s, const SuiteConfig& cfg)
{
    const Index d = pick_dim(s, cfg, 2);
    const auto cone = random_icecream(s, d, cfg.float_tol);
    const Eigen::VectorXd u = random_ice_interior(s, cone);
    const Eigen::VectorXd x = s.coin(0.2) ? Eigen::VectorXd(s.real(0, 3) * u) : s.gaussian_vector(d);
    const double fast = unorm_ice(cone, u, x);
    const double slow = bisect_unorm_ice(cone, u, x);
    if (std::abs(fast - slow) > 10 * cfg.float_tol)
        return cx("closed form ", to_string(fast), " vs bisection ", to_string(slow), ": ", show(cone), " u=", show(u), " x=", show(x));
    return std::nullopt;
}

Verdict sec_9(Sampler& s, const SuiteConfig& cfg)
{
    const Index d = pick_dim(s, cfg, 2);
    const auto cone = random_icecream(s, d, cfg.float_tol);
    const Eigen::VectorXd x = random_ice_interior(s, cone);
    auto cert = equivalence_certificate(cone, x);
    if (cfg.mutation == Mutation::BrokenCertificateLambda) cert.lambda = cert.kappa;
    const double tol = cfg.float_tol;
    const std::string at = cx(show(cone), " x=", show(x), " kappa=", to_string(cert.kappa), " lambda=", to_string(cert.lambda));
    if (!(cert.kappa > 0 && cert.lambda >= cert.kappa)) return "radii out of order: " + at;

    std::vector<Eigen::VectorXd> in_interval{x, Eigen::VectorXd(-x)};
    for (int k = 0; k < 100; ++k)
    {
        const Eigen::VectorXd dir = s.gaussian_vector(d).normalized();
        // ||y|| <= kappa  =>  -x <= y <= x
        const Eigen::VectorXd y = s.real(0, 1) * cert.kappa * dir;
        if (member(cone, Eigen::VectorXd(x - y)) == IceMembership::Outside || member(cone, Eigen::VectorXd(x + y)) == IceMembership::Outside)
            return "small ball leaves [-x,x]: " + at + " y=" + show(y);
        // points of [-x, x], including its boundary
        in_interval.push_back(Eigen::VectorXd(s.real(0.5, 1) * dir / unorm_ice(cone, x, dir)));
    }
    for (const auto& y : in_interval)
        if (y.norm() > cert.lambda + tol) return "[-x,x] leaves the lambda ball: " + at + " y=" + show(y);
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Lexicographic and sequence spaces

Verdict ex_3_6(Sampler& s, const SuiteConfig& cfg)
{
    const Index d = pick_dim(s, cfg, 2);
    for (int k = 0; k < 50; ++k)
    {
        Vec a = s.integer_vector(d, 2), b = s.integer_vector(d, 2);
        if (s.coin()) b = a;
        const int relations = int(lexicographically_less(a, b)) + int(a == b) + int(lexicographically_less(b, a));
        if (relations != 1) return "lex trichotomy fails: " + show(a) + " " + show(b);
        const LexCone lex(d);
        if (lex.contains(Vec(b - a)) != (lexicographically_less(a, b) || a == b)) return "lex cone disagrees with lex order: " + show(a) + " " + show(b);
    }

    Vec x = Vec::Zero(d);
    x(1) = Rational(s.integer(1, 5), s.integer(1, 3));
    if (!lex_is_net_catching(x) || lex_is_order_unit(x)) return "net catching non-unit not separated: " + show(x);
    const auto [small, big] = lex_non_archimedean_witness(d);
    const LexCone lex(d);
    const std::uint64_t n = static_cast<std::uint64_t>(s.integer(1, 1000000));
    if (!cone_leq(lex, Vec(Rational(n) * small), big) || cone_leq(lex, small, Vec(Vec::Zero(d))))
        return cx("non-Archimedean witness fails at n=", n);

    // The chain (1/n) e_1 claims infimum 0; e_2 refutes the claim.
    const auto chain = canonical_chain(big, lex);
    if (!validate_chain_infimum(chain, {small}, 32).refuted()) return "lex chain infimum not refuted";

    // Catch index of x for n -> (0, b/n, 0, ...) against a direct count.
    const Rational step(s.integer(1, 9), s.integer(1, 3));
    Vec y = Vec::Zero(d);
    y(1) = step;
    const DecreasingChain<LexCone> ch(lex, [y](std::uint64_t m) { return Vec(y / Rational(m)); }, Vec(Vec::Zero(d)));
    const auto caught = lex_catch_index(x, ch, 1000);
    const auto expected = ceil_integer(step / x(1));
    if (!caught.caught() || Integer(*caught.index) != std::max(Integer(1), expected)) return "lex catch index wrong for " + show(x);
    return std::nullopt;
}

Verdict ex_3_3(Sampler& s, const SuiteConfig&)
{
    const EvSeq a = random_evseq(s, -3, 3), b = random_evseq(s, -3, 3), c = random_evseq(s, -3, 3);
    const std::string at = "a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string();
    if (ev_min(a, ev_max(a, b)) != a || ev_max(a, ev_min(a, b)) != a) return "absorption fails: " + at;
    if (ev_min(a, ev_max(b, c)) != ev_max(ev_min(a, b), ev_min(a, c))) return "distributivity fails: " + at;
    if (!ev_leq(ev_min(a, b), a) || !ev_leq(a, ev_max(a, b))) return "min/max are not bounds: " + at;

    const EvSeq e = EvSeq::constant(1);
    const auto w = non_netcatching_witness(e, 16);
    if (w.c != 2) return "witness level for e is not 2";
    for (std::uint64_t n = 1; n <= 16; ++n)
    {
        const EvSeq expected(std::vector<Rational>(n - 1, Rational(0)), 2);
        if (w.chain.raw(n) != expected) return cx("witness differs from e^(n) at n=", n);
        if (ev_leq(w.chain.raw(n), e)) return cx("e^(n) <= e at n=", n);
    }

    if (a.max_entry() > 0)
    {
        const std::uint64_t n = ev_archimedean_bound(a, b);
        if (ev_leq(a * Rational(n), b)) return cx("n a <= b at the Archimedean bound n=", n, ": ", at);
    }
    return std::nullopt;
}

EvSeq random_order_unit(Sampler& s)
{
    EvSeq u;
    do u = random_evseq(s, 0, 5);
    while (!ev_is_order_unit(u));
    return u;
}

Verdict thm_6_5(Sampler& s, const SuiteConfig&)
{
    EvSeq u = random_order_unit(s);
    if (s.coin(0.25))
    {
        // positive but not an order unit
        std::vector<Rational> prefix = u.prefix();
        prefix.push_back(0);
        u = EvSeq(std::move(prefix), u.tail());
    }
    const auto w = non_netcatching_witness(u, 24);
    if (!w.certified()) return "witness not certified for u=" + u.to_string();
    if (ev_is_net_catching(u)) return "net catching element reported: " + u.to_string();
    for (std::uint64_t n = 1; n <= 24; ++n)
        if (ev_leq(w.chain.raw(n), u)) return cx("chain caught at n=", n, " for u=", u.to_string());
    return std::nullopt;
}

Verdict thm_10_2(Sampler& s, const SuiteConfig&)
{
    const EvSeq e = EvSeq::constant(1);
    const EvSeq u = s.coin() ? e : random_order_unit(s);
    const auto w = non_netcatching_witness(u, 32);
    if (!w.decreasing || !w.infimum_zero) return "witness chain does not decrease to 0 for u=" + u.to_string();
    const std::vector<EvSeq> candidates{EvSeq::constant(Rational(1, 8)), EvSeq({0}, Rational(1, 8)), EvSeq({Rational(-1)}, 0)};
    if (validate_chain_infimum(w.chain, candidates, 32).refuted()) return "infimum 0 refuted for u=" + u.to_string();
    for (std::uint64_t n = 1; n <= 32; ++n)
    {
        const EvSeq x = w.chain.raw(n);
        if (ev_leq(x, u) && ev_leq(-u, x)) return cx("x^(n) inside [-u,u] at n=", n, " for u=", u.to_string());
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Order bound neighbourhoods

Vec sample_simplicial_element(Sampler& s, const SimplicialFrame& frame, Index d)
{
    Vec z = s.rational_vector(d, 3, 3);
    switch (s.integer(0, 2))
    {
        case 0: for (Index j = 0; j < d; ++j) z(j) = abs(z(j)) + Rational(1, 4); break;   // interior
        case 1: for (Index j = 0; j < d; ++j) z(j) = abs(z(j));
                z(s.integer(0, d - 1)) = 0; break;                                         // boundary
        default: break;                                                                   // generic
    }
    return frame.from_orthant(z);
}

Verdict prop_7_5(Sampler& s, const SuiteConfig& cfg)
{
    const Index d = pick_dim(s, cfg, 1, 5);
    const HCone cone = random_simplicial_cone(s, d);
    const SimplicialFrame frame(cone);
    const Vec u = sample_simplicial_element(s, frame, d);
    const auto verdict = interval_in_Bob(cone, u, s.bits(), 8);
    if (verdict.in_bob != is_order_unit(cone, u))
        return cx("[-u,u] in B_ob differs from order unit: ", show(cone), " u=", show(u), " (", verdict.diagnosis, ")");
    return std::nullopt;
}

Verdict prop_7_6(Sampler& s, const SuiteConfig& cfg)
{
    const Index d = pick_dim(s, cfg, 1, 5);
    const HCone cone = random_simplicial_cone(s, d);
    const SimplicialFrame frame(cone);
    const Vec u = sample_simplicial_element(s, frame, d);
    const auto mu = order_bound_interior_radius(cone, u);
    const std::string at = cx(show(cone), " u=", show(u));
    if (mu.has_value() != is_order_unit(cone, u)) return "order bound interior differs from order units: " + at;
    if (mu.has_value() != interval_in_Bob(cone, u, s.bits(), 4).in_bob) return "order bound interior differs from [-u,u] in B_ob: " + at;
    if (mu)
        for (Index pattern = 0; pattern < (Index(1) << d); ++pattern)
        {
            Vec corner(d);
            for (Index j = 0; j < d; ++j) corner(j) = (pattern >> j) & 1 ? Rational(-*mu) : *mu;
            if (!cone.contains(Vec(u + frame.from_orthant(corner)))) return "box around u leaves the cone: " + at;
        }
    return std::nullopt;
}

Polytope sample_neighbourhood(Sampler& s, const SuiteConfig& cfg)
{
    if (s.coin()) return random_planar_polytope(s, s.integer(1, 4));
    return random_symmetric_polytope(s, pick_dim(s, cfg, 1, 4), s.integer(1, 3));
}

Vec positive_box_vector(Sampler& s, Index d)
{
    Vec w = s.rational_vector(d, 4, 4);
    for (Index j = 0; j < d; ++j) w(j) = abs(w(j));
    return w;
}

Verdict lem_7_7(Sampler& s, const SuiteConfig& cfg)
{
    const Polytope u = sample_neighbourhood(s, cfg);
    const Polytope v = V_of_U_polytope(u);
    const Index d = u.dim();
    for (int k = 0; k < 12; ++k)
    {
        const Vec y = s.rational_vector(d, 2, 8);
        const bool in_v = V_of_U_member(u, y);
        const std::string at = show(u) + " y=" + show(y);
        if (in_v != v.contains(y)) return "LP membership and H-form of V(U) disagree: " + at;
        if (in_v && !u.contains(y)) return "V(U) not inside U: " + at;
        const Rational t = s.rational(1, 8);
        if (in_v && !V_of_U_member(u, Vec(t * y))) return "V(U) not circled: " + at + " t=" + to_string(t);
    }
    const Vec w = positive_box_vector(s, d);
    if (catches_canonical_chain(u, w).caught() && !catches_canonical_chain(v, w).caught())
        return "V(U) misses a chain U catches: " + show(u) + " w=" + show(w);
    return std::nullopt;
}

Verdict lem_7_10(Sampler& s, const SuiteConfig& cfg)
{
    const Polytope u = random_symmetric_polytope(s, pick_dim(s, cfg, 1, 4), s.integer(1, 3));
    if (!is_circled(u)) return "symmetric polytope not circled: " + show(u);
    const Polytope v = V_of_U_polytope(u);
    const Index d = u.dim();
    if (!catches_canonical_chain(u, positive_box_vector(s, d)).caught()) return "neighbourhood misses a canonical chain: " + show(u);
    for (int k = 0; k < 10; ++k)
    {
        const Vec lo = s.rational_vector(d, 4, 3);
        const Vec hi = lo + positive_box_vector(s, d);
        if (!absorbs_box(u, lo, hi).absorbs() || !absorbs_box(v, lo, hi).absorbs())
            return "interval not absorbed: " + show(u) + " [" + show(lo) + "," + show(hi) + "]";
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

struct Registered
{
    TraceRow row;
    std::string_view scope;
    Trial trial;
};

constexpr std::string_view kCanonical = kCanonicalFamilyLabel;

const std::vector<Registered>& registry()
{
    static const std::vector<Registered> table{
        {{"Order.Axioms", "core", "Cone order is a preorder, antisymmetric on pointed cones, translation and scale invariant; intervals exist iff endpoints compare; canonical chains strictly decrease"}, {}, order_axioms},
        {{"LP.Certificates", "exactlp", "Returned points satisfy every row exactly, optima beat sampled feasible points, infeasibility survives sampling, strict witnesses are strict"}, {}, lp_certificates},
        {{"DD.RoundTrip", "polyhedral", "V to H to V to H conversion keeps facets and membership"}, {}, dd_round_trip},
        {{"Thm2.6", "polyhedral", "Interior points, order units and net-catching elements coincide on closed generating cones"}, {}, thm_2_6},
        {{"Prop2.1", "polyhedral", "An interior point yields a nonempty order-bounded set that catches canonical chains at each of its points; flat cones have no interior"}, kCanonical, prop_2_1},
        {{"Prop3.1", "polyhedral, lexseq", "Once one element is net catching, every order unit is"}, {}, prop_3_1},
        {{"Prop5.1", "polyhedral", "Order units catch canonical chains at the least exact index; boundary points miss a chain"}, kCanonical, prop_5_1},
        {{"Thm4.6", "polyhedral", "Upper bounds of a finitely generated base are net catching"}, {}, thm_4_6},
        {{"Prop5.4", "icecream", "Ice cream cones are convex cones with the stated interior and boundary, and are Archimedean with an explicit bound"}, {}, prop_5_4},
        {{"Lem5.5", "icecream", "The base is the slice f = 1 of the ball of radius 1/eps"}, {}, lem_5_5},
        {{"Lem5.7", "icecream", "The inradius ball stays in the cone and 1/(eps kappa) x dominates the base"}, {}, lem_5_7},
        {{"Prop5.8", "icecream", "Interior points catch canonical chains at index ceil of the u-norm"}, kCanonical, prop_5_8},
        {{"IceCream.UNorm", "icecream", "Quadratic-root u-norm matches bisection over membership within 10 tol"}, {}, ice_unorm_oracle},
        {{"Sec9", "icecream", "B_kappa(0) lies in [-x,x], which lies in B_lambda(0)"}, {}, sec_9},
        {{"Ex3.6", "lexseq", "Lexicographic order is total and non-Archimedean; (0,1,0)-type elements are net catching without being order units"}, kCanonical, ex_3_6},
        {{"Ex3.3", "lexseq", "Eventually constant sequences form an Archimedean distributive lattice; e^(n) is never below e"}, {}, ex_3_3},
        {{"Thm6.5", "lexseq", "Every positive sequence has a certified decreasing chain it never catches"}, {}, thm_6_5},
        {{"Thm10.2", "lexseq", "The witness chain decreases to 0 yet never enters [-u,u]"}, {}, thm_10_2},
        {{"Rem7.4i", "polyhedral", "The closed u-norm unit ball is [-u,u]"}, {}, rem_7_4_i},
        {{"Rem7.4ii", "polyhedral", "u-norms for different interior points are equivalent with exact constants"}, {}, rem_7_4_ii},
        {{"UNorm.Axioms", "polyhedral", "The u-norm is absolutely homogeneous, subadditive and definite on pointed cones"}, {}, unorm_axioms},
        {{"UNorm.Oracle", "polyhedral", "Row-ratio u-norm is feasible, minimal and bracketed by rational bisection"}, {}, unorm_oracle},
        {{"Thm8.2", "polyhedral", "The u-norm is equivalent to the max norm exactly when the cone is pointed"}, {}, thm_8_2},
        {{"Prop7.5", "toposets", "[-u,u] is an order-bound neighbourhood iff u is an order unit"}, {}, prop_7_5},
        {{"Prop7.6", "toposets", "Order-bound interior of the cone equals the set of order units"}, {}, prop_7_6},
        {{"Lem7.7", "toposets", "V(U) lies in U, is circled, and catches every canonical chain U catches"}, kCanonical, lem_7_7},
        {{"Lem7.10", "toposets", "Circled sets catching canonical chains absorb order intervals"}, kCanonical, lem_7_10},
    };
    return table;
}

}   // namespace

std::span<const TraceRow> traceability_matrix()
{
    static const std::vector<TraceRow> rows = [] {
        std::vector<TraceRow> out;
        for (const auto& r : registry()) out.push_back(r.row);
        return out;
    }();
    return rows;
}

std::vector<std::string> registered_properties()
{
    std::vector<std::string> ids;
    for (const auto& r : registry()) ids.emplace_back(r.row.property_id);
    return ids;
}

void check_traceability()
{
    std::map<std::string_view, int> seen;
    for (const auto& r : registry())
    {
        if (!r.trial) throw std::logic_error("traceability: no check registered for " + std::string(r.row.property_id));
        if (++seen[r.row.property_id] > 1) throw std::logic_error("traceability: duplicate id " + std::string(r.row.property_id));
    }
    for (const auto& row : traceability_matrix())
        if (!seen.count(row.property_id)) throw std::logic_error("traceability: orphan matrix row " + std::string(row.property_id));
}

PropertyReport run_one(std::string_view property_id, const SuiteConfig& config)
{
    check_traceability();
    const auto& table = registry();
    const auto it = std::find_if(table.begin(), table.end(), [&](const Registered& r) { return r.row.property_id == property_id; });
    if (it == table.end()) throw UnknownProperty("unknown property id '" + std::string(property_id) + "'");
    if (config.dims.empty()) throw InvalidArgument("SuiteConfig: dims must not be empty");

    PropertyReport report{std::string(property_id), PropertyStatus::Pass, std::nullopt, 0, std::string(it->scope)};
    if (config.trials_per_property == 0)
    {
        report.status = PropertyStatus::Skipped;
        return report;
    }
    Sampler sampler = Sampler::for_stream(config.seed, property_id);
    for (std::uint64_t t = 0; t < config.trials_per_property; ++t)
    {
        ++report.trials;
        Verdict failure;
        try
        {
            failure = it->trial(sampler, config);
        }
        catch (const std::exception& e)
        {
            failure = cx("trial ", t, " raised: ", e.what());
        }
        if (failure)
        {
            report.status = PropertyStatus::Fail;
            report.counterexample = std::move(failure);
            break;
        }
    }
    return report;
}

std::vector<PropertyReport> run_all(const SuiteConfig& config)
{
    check_traceability();
    std::vector<PropertyReport> out;
    for (const auto& r : registry()) out.push_back(run_one(r.row.property_id, config));
    return out;
}

bool all_passed(std::span<const PropertyReport> reports)
{
    return std::all_of(reports.begin(), reports.end(), [](const PropertyReport& r) { return r.status != PropertyStatus::Fail; });
}

std::string_view to_string(PropertyStatus status)
{
    switch (status)
    {
        case PropertyStatus::Pass:    return "pass";
        case PropertyStatus::Fail:    return "fail";
        case PropertyStatus::Skipped: return "skipped";
    }
    return "unknown";
}

namespace {

std::string csv_field(std::string_view text)
{
    if (text.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(text);
    std::string out = "\"";
    for (char c : text)
    {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

const char* mutation_name(Mutation m)
{
    return m == Mutation::BrokenCertificateLambda ? "broken-certificate-lambda" : "none";
}

}   // namespace

std::string to_csv(std::span<const PropertyReport> reports)
{
    std::string out = "property_id,status,trials,counterexample\n";
    for (const auto& r : reports)
    {
        out += csv_field(r.property_id) + ',' + std::string(to_string(r.status)) + ',' + std::to_string(r.trials) + ',';
        out += csv_field(r.counterexample.value_or("")) + '\n';
    }
    return out;
}

std::string to_json(std::span<const PropertyReport> reports, const SuiteConfig& config)
{
    nlohmann::ordered_json doc;
    doc["seed"] = config.seed;
    doc["dims"] = config.dims;
    doc["trials_per_property"] = config.trials_per_property;
    doc["float_tol"] = config.float_tol;
    doc["mutation"] = mutation_name(config.mutation);
    doc["reports"] = nlohmann::ordered_json::array();
    for (const auto& r : reports)
    {
        nlohmann::ordered_json row;
        row["property_id"] = r.property_id;
        row["status"] = std::string(to_string(r.status));
        row["trials"] = r.trials;
        row["counterexample"] = r.counterexample ? nlohmann::ordered_json(*r.counterexample) : nlohmann::ordered_json(nullptr);
        row["scope"] = r.scope;
        doc["reports"].push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
}

SuiteConfig parse_config(std::string_view json_text)
{
    nlohmann::json doc;
    try
    {
        doc = nlohmann::json::parse(json_text);
    }
    catch (const nlohmann::json::exception& e)
    {
        throw ParseError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("config must be a JSON object");

    SuiteConfig cfg;
    for (const auto& [key, value] : doc.items())
    {
        if (key == "seed")
        {
            if (!value.is_number_unsigned()) throw ParseError("config: seed must be a non-negative integer");
            cfg.seed = value.get<std::uint64_t>();
        }
        else if (key == "trials_per_property")
        {
            if (!value.is_number_unsigned()) throw ParseError("config: trials_per_property must be a non-negative integer");
            cfg.trials_per_property = value.get<std::uint64_t>();
        }
        else if (key == "float_tol")
        {
            if (!value.is_number() || !(value.get<double>() > 0)) throw ParseError("config: float_tol must be a positive number");
            cfg.float_tol = value.get<double>();
        }
        else if (key == "dims")
        {
            if (!value.is_array() || value.empty()) throw ParseError("config: dims must be a nonempty array");
            cfg.dims.clear();
            for (const auto& d : value)
            {
                if (!d.is_number_unsigned() || d.get<std::uint64_t>() < 1 || d.get<std::uint64_t>() > std::uint64_t(kDoubleDescriptionCap))
                    throw ParseError("config: dims entries must be integers in [1, 6]");
                cfg.dims.push_back(static_cast<Index>(d.get<std::uint64_t>()));
            }
        }
        else if (key == "mutation")
        {
            if (!value.is_string()) throw ParseError("config: mutation must be a string");
            const auto m = value.get<std::string>();
            if (m == "none") cfg.mutation = Mutation::None;
            else if (m == "broken-certificate-lambda") cfg.mutation = Mutation::BrokenCertificateLambda;
            else throw ParseError("config: unknown mutation '" + m + "'");
        }
        else
            throw ParseError("config: unknown key '" + key + "'");
    }
    return cfg;
}

}   // namespace ordvec
