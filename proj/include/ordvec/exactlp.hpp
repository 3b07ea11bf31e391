#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ordvec/rational.hpp"

namespace ordvec::lp {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class Sense { Minimize, Maximize, FeasibilityOnly };
enum class Status { Optimal, Infeasible, Unbounded, Feasible };

/**
 * Linear program over free (sign-unrestricted) variables:
 *
 *     optimize  objective . x   subject to   row_i . x  (rel_i)  rhs_i.
 *
 * Sign constraints must be stated as explicit rows.
 */
struct LinearProgram
{
    Mat constraints;                  // one row per constraint
    Vec rhs;
    std::vector<Relation> relations;
    Vec objective;
    Sense sense = Sense::FeasibilityOnly;

    LinearProgram() = default;
    explicit LinearProgram(Index num_variables, Sense s = Sense::FeasibilityOnly)
        : constraints(0, num_variables), rhs(0), objective(Vec::Zero(num_variables)), sense(s) {}

    Index num_variables() const { return constraints.cols(); }
    Index num_constraints() const { return constraints.rows(); }

    /** Appends `row . x (rel) value`; returns the new row's index. */
    Index add(const Vec& row, Relation rel, const Rational& value);
};

struct Outcome
{
    Status status = Status::Infeasible;
    std::optional<Vec> point;
    std::optional<Rational> value;
};

/** Exact substitution check of every constraint at x. */
bool satisfies(const LinearProgram& lp, const Vec& x);

/**
 * Two-phase primal simplex on exact rationals with Bland's least-index rule.
 * Throws DimensionMismatch on inconsistent shapes.
 */
Outcome solve(const LinearProgram& lp);

/**
 * Decides whether some x satisfies all rows with the rows in `strict_rows`
 * holding strictly. Maximizes a shared slack t in [0, 1] added to the strict
 * rows; Feasible (with a witness satisfying the strict rows strictly) iff the
 * optimum has t > 0.
 */
Outcome strict_feasible(const LinearProgram& lp, std::span<const Index> strict_rows);

}   // namespace ordvec::lp
