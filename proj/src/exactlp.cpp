#include "ordvec/exactlp.hpp"

#include <limits>

namespace ordvec::lp {

Index LinearProgram::add(const Vec& row, Relation rel, const Rational& value)
{
    if (row.size() != num_variables()) throw DimensionMismatch("LinearProgram::add: row size");
    const Index m = constraints.rows();
    constraints.conservativeResize(m + 1, Eigen::NoChange);
    constraints.row(m) = row.transpose();
    rhs.conservativeResize(m + 1);
    rhs(m) = value;
    relations.push_back(rel);
    return m;
}

bool satisfies(const LinearProgram& lp, const Vec& x)
{
    if (x.size() != lp.num_variables()) return false;
    for (Index i = 0; i < lp.num_constraints(); ++i)
    {
        Rational lhs = 0;
        for (Index j = 0; j < x.size(); ++j)
            if (lp.constraints(i, j) != 0) lhs += lp.constraints(i, j) * x(j);
        switch (lp.relations[static_cast<std::size_t>(i)])
        {
            case Relation::LessEqual:    if (lhs > lp.rhs(i)) return false; break;
            case Relation::Equal:        if (lhs != lp.rhs(i)) return false; break;
            case Relation::GreaterEqual: if (lhs < lp.rhs(i)) return false; break;
        }
    }
    return true;
}

namespace {

void check_shapes(const LinearProgram& lp)
{
    const Index m = lp.num_constraints();
    if (lp.rhs.size() != m || static_cast<Index>(lp.relations.size()) != m)
        throw DimensionMismatch("LinearProgram: rhs/relations do not match the constraint rows");
    if (lp.sense != Sense::FeasibilityOnly && lp.objective.size() != lp.num_variables())
        throw DimensionMismatch("LinearProgram: objective size");
}

/**
 * Dense simplex tableau in canonical form. Rows 0..m-1 are constraints, row m
 * holds reduced costs; the last column is the right-hand side (negated
 * objective value in row m).
 */
class Tableau
{
    public:
        Tableau(Index rows, Index cols) : t_(Mat::Zero(rows + 1, cols + 1)), basis_(static_cast<std::size_t>(rows), -1) {}

        Rational& operator()(Index i, Index j) { return t_(i, j); }
        const Rational& operator()(Index i, Index j) const { return t_(i, j); }
        Index rows() const { return t_.rows() - 1; }
        Index cols() const { return t_.cols() - 1; }
        Index rhs_col() const { return t_.cols() - 1; }
        Index cost_row() const { return t_.rows() - 1; }
        std::vector<Index>& basis() { return basis_; }
        const std::vector<Index>& basis() const { return basis_; }

        void pivot(Index r, Index c)
        {
            const Rational inv = Rational(1) / t_(r, c);
            std::vector<Index> nz;
            for (Index j = 0; j < t_.cols(); ++j)
                if (t_(r, j) != 0)
                {
                    t_(r, j) *= inv;
                    nz.push_back(j);
                }
            for (Index i = 0; i < t_.rows(); ++i)
            {
                if (i == r || t_(i, c) == 0) continue;
                const Rational f = t_(i, c);
                for (Index j : nz) t_(i, j) -= f * t_(r, j);
            }
            basis_[static_cast<std::size_t>(r)] = c;
        }

        /** Recomputes the cost row for costs `c` (size cols()) given the current basis. */
        void price(const Vec& c)
        {
            for (Index j = 0; j < cols(); ++j) t_(cost_row(), j) = c(j);
            t_(cost_row(), rhs_col()) = 0;
            for (Index i = 0; i < rows(); ++i)
            {
                const Rational cb = c(basis_[static_cast<std::size_t>(i)]);
                if (cb == 0) continue;
                for (Index j = 0; j < t_.cols(); ++j)
                    if (t_(i, j) != 0) t_(cost_row(), j) -= cb * t_(i, j);
            }
        }

        enum class Result { Optimal, Unbounded };

        /** Minimizes with Bland's rule over the columns flagged in `allowed`. */
        Result minimize(const std::vector<bool>& allowed)
        {
            while (true)
            {
                Index enter = -1;
                for (Index j = 0; j < cols(); ++j)
                    if (allowed[static_cast<std::size_t>(j)] && t_(cost_row(), j) < 0) { enter = j; break; }
                if (enter < 0) return Result::Optimal;

                Index leave = -1;
                Rational best;
                for (Index i = 0; i < rows(); ++i)
                {
                    if (t_(i, enter) <= 0) continue;
                    const Rational ratio = t_(i, rhs_col()) / t_(i, enter);
                    if (leave < 0 || ratio < best ||
                        (ratio == best && basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave)]))
                    {
                        leave = i;
                        best = ratio;
                    }
                }
                if (leave < 0) return Result::Unbounded;
                pivot(leave, enter);
            }
        }

        Rational basic_value(Index col) const
        {
            for (Index i = 0; i < rows(); ++i)
                if (basis_[static_cast<std::size_t>(i)] == col) return t_(i, rhs_col());
            return 0;
        }

    private:
        Mat t_;
        std::vector<Index> basis_;
};

}   // namespace

Outcome solve(const LinearProgram& lp)
{
    check_shapes(lp);
    const Index n = lp.num_variables();
    const Index m = lp.num_constraints();

    // Columns: [x+ (n) | x- (n) | slacks (one per inequality) | artificials (m)]
    Index num_slack = 0;
    for (auto rel : lp.relations)
        if (rel != Relation::Equal) ++num_slack;
    const Index slack0 = 2 * n;
    const Index art0 = slack0 + num_slack;
    const Index cols = art0 + m;

    Tableau tab(m, cols);
    Index s = 0;
    for (Index i = 0; i < m; ++i)
    {
        for (Index j = 0; j < n; ++j)
        {
            tab(i, j) = lp.constraints(i, j);
            tab(i, n + j) = -lp.constraints(i, j);
        }
        switch (lp.relations[static_cast<std::size_t>(i)])
        {
            case Relation::LessEqual:    tab(i, slack0 + s++) = 1; break;
            case Relation::GreaterEqual: tab(i, slack0 + s++) = -1; break;
            case Relation::Equal:        break;
        }
        tab(i, tab.rhs_col()) = lp.rhs(i);
        if (lp.rhs(i) < 0)
            for (Index j = 0; j <= cols; ++j) tab(i, j) = -tab(i, j);
        tab(i, art0 + i) = 1;
        tab.basis()[static_cast<std::size_t>(i)] = art0 + i;
    }

    // Phase I: minimize the sum of artificials.
    Vec phase1 = Vec::Zero(cols);
    for (Index i = 0; i < m; ++i) phase1(art0 + i) = 1;
    tab.price(phase1);
    std::vector<bool> all(static_cast<std::size_t>(cols), true);
    tab.minimize(all);
    if (tab(tab.cost_row(), tab.rhs_col()) != 0) return {Status::Infeasible, std::nullopt, std::nullopt};

    // Drive artificials out of the basis where possible; rows where this is
    // impossible are redundant and keep their artificial at zero.
    for (Index i = 0; i < m; ++i)
    {
        if (tab.basis()[static_cast<std::size_t>(i)] < art0) continue;
        for (Index j = 0; j < art0; ++j)
            if (tab(i, j) != 0) { tab.pivot(i, j); break; }
    }

    std::vector<bool> structural(static_cast<std::size_t>(cols), false);
    for (Index j = 0; j < art0; ++j) structural[static_cast<std::size_t>(j)] = true;

    auto extract = [&]() {
        Vec x(n);
        for (Index j = 0; j < n; ++j) x(j) = tab.basic_value(j) - tab.basic_value(n + j);
        return x;
    };

    if (lp.sense == Sense::FeasibilityOnly) return {Status::Feasible, extract(), std::nullopt};

    Vec phase2 = Vec::Zero(cols);
    for (Index j = 0; j < n; ++j)
    {
        const Rational c = lp.sense == Sense::Maximize ? Rational(-lp.objective(j)) : lp.objective(j);
        phase2(j) = c;
        phase2(n + j) = -c;
    }
    tab.price(phase2);
    if (tab.minimize(structural) == Tableau::Result::Unbounded)
        return {Status::Unbounded, std::nullopt, std::nullopt};

    Vec x = extract();
    Rational value = 0;
    for (Index j = 0; j < n; ++j) value += lp.objective(j) * x(j);
    return {Status::Optimal, std::move(x), std::move(value)};
}

Outcome strict_feasible(const LinearProgram& lp, std::span<const Index> strict_rows)
{
    check_shapes(lp);
    const Index n = lp.num_variables();
    LinearProgram ext(n + 1, Sense::Maximize);
    std::vector<bool> strict(static_cast<std::size_t>(lp.num_constraints()), false);
    for (Index r : strict_rows)
    {
        if (r < 0 || r >= lp.num_constraints()) throw DimensionMismatch("strict_feasible: row index out of range");
        if (lp.relations[static_cast<std::size_t>(r)] == Relation::Equal)
            throw InvalidArgument("strict_feasible: equality rows cannot be strict");
        strict[static_cast<std::size_t>(r)] = true;
    }
    for (Index i = 0; i < lp.num_constraints(); ++i)
    {
        Vec row = Vec::Zero(n + 1);
        row.head(n) = lp.constraints.row(i).transpose();
        const auto rel = lp.relations[static_cast<std::size_t>(i)];
        if (strict[static_cast<std::size_t>(i)]) row(n) = rel == Relation::GreaterEqual ? Rational(-1) : Rational(1);
        ext.add(row, rel, lp.rhs(i));
    }
    ext.add(unit_vector(n + 1, n), Relation::LessEqual, 1);
    ext.add(unit_vector(n + 1, n), Relation::GreaterEqual, 0);
    ext.objective = unit_vector(n + 1, n);

    const Outcome out = solve(ext);
    if (out.status != Status::Optimal || *out.value <= 0) return {Status::Infeasible, std::nullopt, std::nullopt};
    Vec x = out.point->head(n);
    return {Status::Feasible, std::move(x), std::nullopt};
}

}   // namespace ordvec::lp
