#include "integer_program.hpp"

#include <algorithm>

#include "simplex.hpp"

namespace rex::detail {

void SearchBudget::charge_node()
{
    if (stats_)
        ++stats_->nodes;
    if (++used_ > limit_)
        throw ArithBudgetExceeded("branch-and-bound node budget of " + std::to_string(limit_) + " exhausted");
}

void SearchBudget::charge_lp()
{
    if (stats_)
        ++stats_->lp_solves;
}

mpz_class ball_radius(const IntegerProgram& p)
{
    std::size_t bits = 0;
    auto add = [&](const mpz_class& v) { bits += mpz_sizeinbase(v.get_mpz_t(), 2) + 1; };
    for (const auto* rows : {&p.equalities, &p.inequalities})
        for (const auto& row : *rows) {
            for (const auto& a : row.coeffs)
                add(a);
            add(row.rhs);
        }
    mpz_class radius = 1;
    std::size_t exponent = (p.vars + p.equalities.size() + p.inequalities.size()) * std::max<std::size_t>(bits, 1);
    mpz_mul_2exp(radius.get_mpz_t(), radius.get_mpz_t(), exponent);
    return radius;
}

namespace {

mpz_class floor_div(const mpz_class& a, const mpz_class& b)
{
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

mpz_class dot(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b)
{
    mpz_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

/// x = offset + basis * z, with z ranging over all integer vectors.
struct AffineLattice {
    std::vector<mpz_class> offset;
    std::vector<std::vector<mpz_class>> basis; // n rows, k columns

    std::size_t dims() const { return basis.empty() ? 0 : basis.front().size(); }

    std::vector<mpz_class> row_times_basis(const std::vector<mpz_class>& a) const
    {
        std::vector<mpz_class> out(dims(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0)
                continue;
            for (std::size_t j = 0; j < dims(); ++j)
                out[j] += a[i] * basis[i][j];
        }
        return out;
    }

    void drop_column(std::size_t k)
    {
        for (auto& row : basis)
            row.erase(row.begin() + static_cast<std::ptrdiff_t>(k));
    }
};

/// Solves the equalities over the integers by unimodular column operations.
std::optional<AffineLattice> integer_solutions(const IntegerProgram& p)
{
    AffineLattice lat;
    lat.offset.assign(p.vars, 0);
    lat.basis.assign(p.vars, std::vector<mpz_class>(p.vars, 0));
    for (std::size_t i = 0; i < p.vars; ++i)
        lat.basis[i][i] = 1;
    for (const auto& eq : p.equalities) {
        for (;;) {
            auto c = lat.row_times_basis(eq.coeffs);
            mpz_class d = eq.rhs - dot(eq.coeffs, lat.offset);
            std::size_t pivot = c.size();
            for (std::size_t j = 0; j < c.size(); ++j)
                if (c[j] != 0 && (pivot == c.size() || abs(c[j]) < abs(c[pivot])))
                    pivot = j;
            if (pivot == c.size()) {
                if (d != 0)
                    return std::nullopt;
                break;
            }
            mpz_class g = 0;
            for (const auto& v : c)
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
            if (d % g != 0)
                return std::nullopt;
            if (abs(c[pivot]) == g) {
                // z_pivot = (d - sum_{j != pivot} c_j z_j) / c_pivot, exact since c_pivot = +-g divides all.
                mpz_class cp = c[pivot];
                for (std::size_t i = 0; i < p.vars; ++i) {
                    mpz_class m = lat.basis[i][pivot];
                    if (m == 0)
                        continue;
                    lat.offset[i] += m * (d / cp);
                    for (std::size_t j = 0; j < c.size(); ++j)
                        if (j != pivot && c[j] != 0)
                            lat.basis[i][j] -= m * (c[j] / cp);
                }
                lat.drop_column(pivot);
                break;
            }
            // z_pivot := z_pivot - sum q_j z_j reduces every other coefficient modulo c_pivot.
            for (std::size_t j = 0; j < c.size(); ++j) {
                if (j == pivot || c[j] == 0)
                    continue;
                mpz_class q = floor_div(c[j], c[pivot]);
                for (std::size_t i = 0; i < p.vars; ++i)
                    lat.basis[i][j] -= q * lat.basis[i][pivot];
            }
        }
    }
    return lat;
}

struct ZRow {
    std::vector<mpz_class> coeffs;
    mpz_class rhs;
};

/// Divides by the coefficient gcd and floors the bound; false if trivially violated.
bool tighten(ZRow& row, std::vector<ZRow>& out)
{
    mpz_class g = 0;
    for (const auto& v : row.coeffs)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 0)
        return row.rhs >= 0;
    if (g != 1) {
        for (auto& v : row.coeffs)
            v /= g;
        row.rhs = floor_div(row.rhs, g);
    }
    out.push_back(std::move(row));
    return true;
}

class BranchAndBound {
public:
    BranchAndBound(std::size_t dims, std::vector<ZRow> rows, SearchBudget& budget)
        : dims_(dims), rows_(std::move(rows)), budget_(budget)
    {
    }

    void add_row(ZRow row) { rows_.push_back(std::move(row)); }
    const std::vector<ZRow>& rows() const { return rows_; }

    /// Integer minimum of objective . z, or nullopt if no integer point exists.
    /// With `first_hit` the first integral point is returned instead.
    std::optional<std::pair<mpz_class, std::vector<mpz_class>>> minimize(const std::vector<mpz_class>& objective,
                                                                         bool first_hit)
    {
        struct Bound {
            std::size_t var;
            bool upper;
            mpz_class value;
        };
        std::vector<std::vector<Bound>> stack{{}};
        std::optional<std::pair<mpz_class, std::vector<mpz_class>>> best;
        while (!stack.empty()) {
            auto bounds = std::move(stack.back());
            stack.pop_back();
            budget_.charge_node();

            LpProblem lp;
            auto push = [&](const std::vector<mpz_class>& a, const mpz_class& b) {
                std::vector<mpq_class> row(2 * dims_);
                for (std::size_t j = 0; j < dims_; ++j) {
                    row[j] = a[j];
                    row[dims_ + j] = -a[j];
                }
                lp.rows.push_back(std::move(row));
                lp.bounds.emplace_back(b);
            };
            for (const auto& r : rows_)
                push(r.coeffs, r.rhs);
            for (const auto& b : bounds) {
                std::vector<mpz_class> a(dims_, 0);
                a[b.var] = b.upper ? 1 : -1;
                push(a, b.upper ? b.value : mpz_class(-b.value));
            }
            lp.objective.resize(2 * dims_);
            for (std::size_t j = 0; j < dims_; ++j) {
                if (first_hit) {
                    lp.objective[j] = 1;
                    lp.objective[dims_ + j] = 1;
                } else {
                    lp.objective[j] = objective[j];
                    lp.objective[dims_ + j] = -objective[j];
                }
            }
            budget_.charge_lp();
            auto result = solve_lp(lp);
            if (result.status != LpStatus::Optimal)
                continue;
            if (!first_hit && best) {
                mpz_class bound;
                mpz_cdiv_q(bound.get_mpz_t(), result.value.get_num_mpz_t(), result.value.get_den_mpz_t());
                if (bound >= best->first)
                    continue;
            }
            std::size_t fractional = dims_;
            std::vector<mpq_class> z(dims_);
            for (std::size_t j = 0; j < dims_; ++j) {
                z[j] = result.point[j] - result.point[dims_ + j];
                if (fractional == dims_ && z[j].get_den() != 1)
                    fractional = j;
            }
            if (fractional == dims_) {
                std::vector<mpz_class> point(dims_);
                for (std::size_t j = 0; j < dims_; ++j)
                    point[j] = z[j].get_num();
                mpz_class value = 0;
                for (std::size_t j = 0; j < dims_; ++j)
                    value += objective[j] * point[j];
                if (!best || value < best->first)
                    best = std::make_pair(value, std::move(point));
                if (first_hit)
                    return best;
                continue;
            }
            mpz_class down;
            mpz_fdiv_q(down.get_mpz_t(), z[fractional].get_num_mpz_t(), z[fractional].get_den_mpz_t());
            auto up_bounds = bounds;
            up_bounds.push_back({fractional, false, down + 1});
            bounds.push_back({fractional, true, down});
            stack.push_back(std::move(up_bounds));
            stack.push_back(std::move(bounds));
        }
        return best;
    }

private:
    std::size_t dims_;
    std::vector<ZRow> rows_;
    SearchBudget& budget_;
};

} // namespace

bool relaxation_feasible(const IntegerProgram& p, SearchBudget& budget)
{
    LpProblem lp;
    auto push = [&](const IntRow& r, bool negate) {
        std::vector<mpq_class> row(2 * p.vars);
        for (std::size_t j = 0; j < p.vars; ++j) {
            mpq_class a = negate ? mpq_class(-r.coeffs[j]) : mpq_class(r.coeffs[j]);
            row[j] = a;
            row[p.vars + j] = -a;
        }
        lp.rows.push_back(std::move(row));
        lp.bounds.emplace_back(negate ? mpz_class(-r.rhs) : r.rhs);
    };
    for (const auto& r : p.inequalities)
        push(r, false);
    for (const auto& r : p.equalities) {
        push(r, false);
        push(r, true);
    }
    lp.objective.assign(2 * p.vars, 0);
    budget.charge_lp();
    return solve_lp(lp).status != LpStatus::Infeasible;
}

std::optional<std::vector<mpz_class>> lexmin_integer_point(const IntegerProgram& p, const std::vector<LexTarget>& order,
                                                           SearchBudget& budget)
{
    auto lattice = integer_solutions(p);
    if (!lattice)
        return std::nullopt;
    const std::size_t dims = lattice->dims();
    auto to_x = [&](const std::vector<mpz_class>& z) {
        std::vector<mpz_class> x = lattice->offset;
        for (std::size_t i = 0; i < p.vars; ++i)
            for (std::size_t j = 0; j < dims; ++j)
                x[i] += lattice->basis[i][j] * z[j];
        return x;
    };
    if (dims == 0) {
        auto x = lattice->offset;
        for (const auto& r : p.inequalities)
            if (dot(r.coeffs, x) > r.rhs)
                return std::nullopt;
        return x;
    }

    std::vector<ZRow> rows;
    for (const auto& r : p.inequalities) {
        ZRow z{lattice->row_times_basis(r.coeffs), r.rhs - dot(r.coeffs, lattice->offset)};
        if (!tighten(z, rows))
            return std::nullopt;
    }
    const mpz_class radius = ball_radius(p);
    for (std::size_t i = 0; i < p.vars; ++i) {
        const auto& m = lattice->basis[i];
        if (std::all_of(m.begin(), m.end(), [](const mpz_class& v) { return v == 0; }))
            continue;
        std::vector<mpz_class> neg(m.size());
        for (std::size_t j = 0; j < m.size(); ++j)
            neg[j] = -m[j];
        rows.push_back({m, radius - lattice->offset[i]});
        rows.push_back({neg, radius + lattice->offset[i]});
    }

    BranchAndBound bb(dims, std::move(rows), budget);
    auto fix = [&](const std::vector<mpz_class>& f, const mpz_class& value) {
        std::vector<mpz_class> neg(f.size());
        for (std::size_t j = 0; j < f.size(); ++j)
            neg[j] = -f[j];
        bb.add_row({f, value});
        bb.add_row({neg, -value});
    };
    for (const auto& target : order) {
        const auto& f = lattice->basis[target.var];
        const mpz_class& c = lattice->offset[target.var];
        if (std::all_of(f.begin(), f.end(), [](const mpz_class& v) { return v == 0; }))
            continue;
        if (target.natural) {
            auto best = bb.minimize(f, false);
            if (!best)
                return std::nullopt;
            fix(f, best->first);
            continue;
        }
        std::vector<mpz_class> neg(f.size());
        for (std::size_t j = 0; j < f.size(); ++j)
            neg[j] = -f[j];
        // Nonnegative side: f.z + c >= 0, minimize it.
        BranchAndBound up = bb;
        up.add_row({neg, c});
        auto above = up.minimize(f, false);
        // Nonpositive side: f.z + c <= 0, minimize its negation.
        BranchAndBound down = bb;
        down.add_row({f, -c});
        auto below = down.minimize(neg, false);
        if (!above && !below)
            return std::nullopt;
        bool take_above = above && (!below || above->first + c <= below->first - c);
        if (take_above) {
            fix(f, above->first);
        } else {
            fix(neg, below->first);
        }
    }
    auto last = bb.minimize(std::vector<mpz_class>(dims, 0), true);
    if (!last)
        return std::nullopt;
    return to_x(last->second);
}

} // namespace rex::detail
