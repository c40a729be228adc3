#include "simplex.hpp"

#include <cstddef>

namespace rex::detail {

namespace {

class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols)
        : cols_(cols), cells_(rows, std::vector<mpq_class>(cols + 1)), basis_(rows), objective_(cols + 1)
    {
    }

    mpq_class& at(std::size_t r, std::size_t c) { return cells_[r][c]; }
    mpq_class& rhs(std::size_t r) { return cells_[r][cols_]; }
    std::size_t& basis(std::size_t r) { return basis_[r]; }
    std::size_t rows() const { return cells_.size(); }

    /// Installs cost vector `c` and prices out the current basis.
    void set_objective(const std::vector<mpq_class>& c)
    {
        for (std::size_t j = 0; j <= cols_; ++j)
            objective_[j] = j < c.size() ? c[j] : mpq_class(0);
        for (std::size_t r = 0; r < rows(); ++r) {
            mpq_class cb = objective_[basis_[r]];
            if (cb == 0)
                continue;
            for (std::size_t j = 0; j <= cols_; ++j)
                if (cells_[r][j] != 0)
                    objective_[j] -= cb * cells_[r][j];
        }
    }

    mpq_class value() const { return -objective_[cols_]; }

    /// Bland's rule over columns below `allowed`; false if unbounded.
    bool optimize(std::size_t allowed)
    {
        for (;;) {
            std::size_t entering = allowed;
            for (std::size_t j = 0; j < allowed; ++j)
                if (objective_[j] < 0) {
                    entering = j;
                    break;
                }
            if (entering == allowed)
                return true;
            std::size_t leaving = rows();
            mpq_class best;
            for (std::size_t r = 0; r < rows(); ++r) {
                if (cells_[r][entering] <= 0)
                    continue;
                mpq_class ratio = cells_[r][cols_] / cells_[r][entering];
                if (leaving == rows() || ratio < best || (ratio == best && basis_[r] < basis_[leaving])) {
                    leaving = r;
                    best = ratio;
                }
            }
            if (leaving == rows())
                return false;
            pivot(leaving, entering);
        }
    }

    void pivot(std::size_t r, std::size_t c)
    {
        auto& row = cells_[r];
        mpq_class scale = row[c];
        for (auto& cell : row)
            if (cell != 0)
                cell /= scale;
        auto eliminate = [&](std::vector<mpq_class>& target) {
            mpq_class factor = target[c];
            if (factor == 0)
                return;
            for (std::size_t j = 0; j <= cols_; ++j)
                if (row[j] != 0)
                    target[j] -= factor * row[j];
        };
        for (std::size_t i = 0; i < rows(); ++i)
            if (i != r)
                eliminate(cells_[i]);
        eliminate(objective_);
        basis_[r] = c;
    }

private:
    std::size_t cols_;
    std::vector<std::vector<mpq_class>> cells_;
    std::vector<std::size_t> basis_;
    std::vector<mpq_class> objective_;
};

} // namespace

LpResult solve_lp(const LpProblem& p)
{
    const std::size_t n = p.objective.size();
    const std::size_t m = p.rows.size();
    std::size_t artificial = 0;
    for (const auto& b : p.bounds)
        if (b < 0)
            ++artificial;
    const std::size_t cols = n + m + artificial;
    Tableau t(m, cols);
    std::size_t next_artificial = n + m;
    for (std::size_t r = 0; r < m; ++r) {
        bool flip = p.bounds[r] < 0;
        for (std::size_t j = 0; j < n; ++j)
            t.at(r, j) = flip ? mpq_class(-p.rows[r][j]) : p.rows[r][j];
        t.at(r, n + r) = flip ? -1 : 1;
        t.rhs(r) = flip ? mpq_class(-p.bounds[r]) : p.bounds[r];
        if (flip) {
            t.at(r, next_artificial) = 1;
            t.basis(r) = next_artificial++;
        } else {
            t.basis(r) = n + r;
        }
    }

    if (artificial > 0) {
        std::vector<mpq_class> phase_one(cols, 0);
        for (std::size_t j = n + m; j < cols; ++j)
            phase_one[j] = 1;
        t.set_objective(phase_one);
        t.optimize(cols);
        if (t.value() > 0)
            return {LpStatus::Infeasible, {}, 0};
        for (std::size_t r = 0; r < m; ++r) {
            if (t.basis(r) < n + m)
                continue;
            for (std::size_t j = 0; j < n + m; ++j)
                if (t.at(r, j) != 0) {
                    t.pivot(r, j);
                    break;
                }
        }
    }

    t.set_objective(p.objective);
    if (!t.optimize(n + m))
        return {LpStatus::Unbounded, {}, 0};
    LpResult result;
    result.status = LpStatus::Optimal;
    result.point.assign(n, 0);
    for (std::size_t r = 0; r < m; ++r)
        if (t.basis(r) < n)
            result.point[t.basis(r)] = t.rhs(r);
    result.value = t.value();
    return result;
}

} // namespace rex::detail
