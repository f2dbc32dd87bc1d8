#include <pea/lp.hpp>
#include <pea/error.hpp>

#include <optional>

namespace pea::lp {

namespace {

class Tableau {
public:
    Tableau(std::size_t rows, std::size_t columns)
        : cells_(rows, RationalVector(columns + 1, Rational(0))), basis_(rows, 0), columns_(columns) {}

    Rational& at(std::size_t r, std::size_t c) { return cells_[r][c]; }
    Rational& rhs(std::size_t r) { return cells_[r][columns_]; }
    std::size_t rows() const { return cells_.size(); }
    std::size_t columns() const { return columns_; }
    std::vector<std::size_t>& basis() { return basis_; }

    void remove_row(std::size_t r) {
        cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    }

    void pivot(std::size_t row, std::size_t col, RationalVector& reduced) {
        RationalVector& p = cells_[row];
        const Rational lead = p[col];
        for (auto& v : p) v /= lead;
        for (std::size_t r = 0; r < cells_.size(); ++r) {
            if (r == row || cells_[r][col] == 0) continue;
            const Rational factor = cells_[r][col];
            for (std::size_t c = 0; c <= columns_; ++c)
                if (p[c] != 0) cells_[r][c] -= factor * p[c];
        }
        if (reduced[col] != 0) {
            const Rational factor = reduced[col];
            for (std::size_t c = 0; c < columns_; ++c)
                if (p[c] != 0) reduced[c] -= factor * p[c];
        }
        basis_[row] = col;
    }

    // Optimizes `cost` over the allowed columns. Returns false if unbounded.
    bool optimize(const RationalVector& cost, const std::vector<bool>& allowed, std::size_t& pivots) {
        RationalVector reduced = cost;
        for (std::size_t r = 0; r < rows(); ++r) {
            const Rational& cb = cost[basis_[r]];
            if (cb == 0) continue;
            for (std::size_t c = 0; c < columns_; ++c)
                if (cells_[r][c] != 0) reduced[c] -= cb * cells_[r][c];
        }
        for (;;) {
            std::optional<std::size_t> entering;
            for (std::size_t c = 0; c < columns_; ++c)
                if (allowed[c] && reduced[c] > 0) {
                    entering = c;
                    break;
                }
            if (!entering) return true;
            std::optional<std::size_t> leaving;
            Rational best;
            for (std::size_t r = 0; r < rows(); ++r) {
                if (cells_[r][*entering] <= 0) continue;
                Rational ratio = rhs(r) / cells_[r][*entering];
                if (!leaving || ratio < best || (ratio == best && basis_[r] < basis_[*leaving])) {
                    leaving = r;
                    best = ratio;
                }
            }
            if (!leaving) return false;
            pivot(*leaving, *entering, reduced);
            ++pivots;
        }
    }

    Rational value(const RationalVector& cost) {
        Rational v = 0;
        for (std::size_t r = 0; r < rows(); ++r) v += cost[basis_[r]] * rhs(r);
        return v;
    }

private:
    std::vector<RationalVector> cells_;
    std::vector<std::size_t> basis_;
    std::size_t columns_;
};

}  // namespace

Result maximize(const Program& program) {
    const std::size_t n = program.objective.size();
    const std::size_t m = program.constraints.size();

    std::vector<Constraint> rows = program.constraints;
    std::size_t slacks = 0;
    std::size_t artificials = 0;
    for (auto& row : rows) {
        if (row.coefficients.size() != n) internal_error("lp: constraint width mismatch");
        if (row.rhs < 0) {
            for (auto& a : row.coefficients) a = -a;
            row.rhs = -row.rhs;
            if (row.relation == Relation::LessEqual) row.relation = Relation::GreaterEqual;
            else if (row.relation == Relation::GreaterEqual) row.relation = Relation::LessEqual;
        }
        if (row.relation != Relation::Equal) ++slacks;
        if (row.relation != Relation::LessEqual) ++artificials;
    }

    const std::size_t columns = n + slacks + artificials;
    const std::size_t first_artificial = n + slacks;
    Tableau t(m, columns);
    std::size_t next_slack = n;
    std::size_t next_artificial = first_artificial;
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c) t.at(r, c) = rows[r].coefficients[c];
        t.rhs(r) = rows[r].rhs;
        switch (rows[r].relation) {
        case Relation::LessEqual:
            t.at(r, next_slack) = 1;
            t.basis()[r] = next_slack++;
            break;
        case Relation::GreaterEqual:
            t.at(r, next_slack++) = -1;
            t.at(r, next_artificial) = 1;
            t.basis()[r] = next_artificial++;
            break;
        case Relation::Equal:
            t.at(r, next_artificial) = 1;
            t.basis()[r] = next_artificial++;
            break;
        }
    }

    Result result;
    if (artificials > 0) {
        RationalVector phase1(columns, Rational(0));
        for (std::size_t c = first_artificial; c < columns; ++c) phase1[c] = -1;
        std::vector<bool> all(columns, true);
        t.optimize(phase1, all, result.pivots);
        if (t.value(phase1) < 0) {
            result.status = Status::Infeasible;
            return result;
        }
        // drive remaining (zero-valued) artificials out of the basis
        for (std::size_t r = 0; r < t.rows();) {
            if (t.basis()[r] < first_artificial) {
                ++r;
                continue;
            }
            std::optional<std::size_t> col;
            for (std::size_t c = 0; c < first_artificial; ++c)
                if (t.at(r, c) != 0) {
                    col = c;
                    break;
                }
            if (col) {
                RationalVector scratch(columns, Rational(0));
                t.pivot(r, *col, scratch);
                ++result.pivots;
                ++r;
            } else {
                t.remove_row(r);
            }
        }
    }

    RationalVector cost(columns, Rational(0));
    for (std::size_t c = 0; c < n; ++c) cost[c] = program.objective[c];
    std::vector<bool> allowed(columns, false);
    for (std::size_t c = 0; c < first_artificial; ++c) allowed[c] = true;
    if (!t.optimize(cost, allowed, result.pivots)) {
        result.status = Status::Unbounded;
        return result;
    }
    result.status = Status::Optimal;
    result.optimum = t.value(cost);
    result.solution.assign(n, Rational(0));
    for (std::size_t r = 0; r < t.rows(); ++r)
        if (t.basis()[r] < n) result.solution[t.basis()[r]] = t.rhs(r);
    return result;
}

}  // namespace pea::lp
