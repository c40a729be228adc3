#include "rex/arith/linear_system.hpp"

#include <limits>

#include "integer_program.hpp"
#include "simplex.hpp"

namespace rex {

std::size_t LinearSystem::add_variable(std::string name, VarDomain domain)
{
    names_.push_back(std::move(name));
    domains_.push_back(domain);
    lengths_.emplace_back();
    return names_.size() - 1;
}

void LinearSystem::set_lengths(std::size_t var, ProgressionSet lengths)
{
    if (domains_.at(var) != VarDomain::Natural)
        throw std::invalid_argument("length sets apply to natural variables only");
    lengths_[var] = std::move(lengths);
}

void LinearSystem::add(LinearConstraint c)
{
    for (const auto& [v, _] : c.coeffs)
        if (v >= names_.size())
            throw std::invalid_argument("constraint references an undeclared variable");
    constraints_.push_back(std::move(c));
}

std::optional<std::size_t> LinearSystem::find(const std::string& name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return i;
    return std::nullopt;
}

namespace {

using detail::IntegerProgram;
using detail::IntRow;

IntRow make_row(std::size_t vars, const std::map<std::size_t, std::int64_t>& coeffs, std::int64_t rhs, bool negate)
{
    IntRow row;
    row.coeffs.assign(vars, 0);
    for (const auto& [v, c] : coeffs)
        row.coeffs[v] = negate ? -c : c;
    row.rhs = negate ? -rhs : rhs;
    return row;
}

std::size_t add_var(IntegerProgram& p)
{
    for (auto* rows : {&p.equalities, &p.inequalities})
        for (auto& r : *rows)
            r.coeffs.emplace_back(0);
    return p.vars++;
}

class ProgressionSearch {
public:
    ProgressionSearch(const LinearSystem& sys, detail::SearchBudget& budget, ArithStats* stats)
        : sys_(sys), budget_(budget), stats_(stats)
    {
        for (std::size_t v = 0; v < sys.variable_count(); ++v)
            if (sys.lengths(v))
                length_vars_.push_back(v);
        for (std::size_t i = 0; i < sys.constraints().size(); ++i)
            if (sys.constraints()[i].cmp == Comparison::Ne)
                disequalities_.push_back(i);
        for (std::size_t v = 0; v < sys.variable_count(); ++v)
            order_.push_back({v, sys.domain(v) == VarDomain::Natural});
    }

    std::optional<std::vector<mpz_class>> run()
    {
        for (auto v : length_vars_)
            if (sys_.lengths(v)->empty())
                return std::nullopt;
        IntegerProgram base;
        base.vars = sys_.variable_count();
        for (const auto& c : sys_.constraints()) {
            switch (c.cmp) {
            case Comparison::Le:
                base.inequalities.push_back(make_row(base.vars, c.coeffs, c.rhs, false));
                break;
            case Comparison::Ge:
                base.inequalities.push_back(make_row(base.vars, c.coeffs, c.rhs, true));
                break;
            case Comparison::Eq:
                base.equalities.push_back(make_row(base.vars, c.coeffs, c.rhs, false));
                break;
            case Comparison::Ne:
                break;
            }
        }
        for (std::size_t v = 0; v < base.vars; ++v)
            if (sys_.domain(v) == VarDomain::Natural)
                base.inequalities.push_back(make_row(base.vars, {{v, 1}}, 0, true));
        search(std::move(base), 0);
        return best_;
    }

private:
    const LinearSystem& sys_;
    detail::SearchBudget& budget_;
    ArithStats* stats_;
    std::vector<std::size_t> length_vars_;
    std::vector<std::size_t> disequalities_;
    std::vector<detail::LexTarget> order_;

    std::optional<std::vector<mpz_class>> best_;

    /// Lexicographic order: naturals ascending, integers by magnitude with nonnegative first.
    bool better(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) const
    {
        for (const auto& t : order_) {
            const auto& x = a[t.var];
            const auto& y = b[t.var];
            if (x == y)
                continue;
            if (t.natural)
                return x < y;
            mpz_class ax = abs(x);
            mpz_class ay = abs(y);
            if (ax != ay)
                return ax < ay;
            return x > y;
        }
        return false;
    }

    /// Any improvement must not exceed the incumbent on the first variable.
    void bound_by_incumbent(IntegerProgram& p) const
    {
        if (!best_ || order_.empty())
            return;
        const auto& t = order_.front();
        mpz_class limit = t.natural ? (*best_)[t.var] : mpz_class(abs((*best_)[t.var]));
        if (!limit.fits_slong_p())
            return;
        p.inequalities.push_back(make_row(p.vars, {{t.var, 1}}, limit.get_si(), false));
        if (!t.natural)
            p.inequalities.push_back(make_row(p.vars, {{t.var, 1}}, -limit.get_si(), true));
    }

    void search(IntegerProgram p, std::size_t depth)
    {
        bound_by_incumbent(p);
        if (!detail::relaxation_feasible(p, budget_))
            return;
        if (depth < disequalities_.size()) {
            const auto& c = sys_.constraints()[disequalities_[depth]];
            for (bool below : {true, false}) {
                IntegerProgram branch = p;
                auto row = make_row(p.vars, c.coeffs, below ? c.rhs - 1 : c.rhs + 1, !below);
                branch.inequalities.push_back(std::move(row));
                search(std::move(branch), depth + 1);
            }
            return;
        }
        std::size_t k = depth - disequalities_.size();
        if (k < length_vars_.size()) {
            std::size_t v = length_vars_[k];
            for (const auto& prog : sys_.lengths(v)->progressions()) {
                if (stats_)
                    ++stats_->progression_branches;
                IntegerProgram branch = p;
                IntRow row;
                if (prog.period == 0) {
                    row = make_row(branch.vars, {{v, 1}}, 0, false);
                } else {
                    std::size_t r = add_var(branch);
                    row = make_row(branch.vars, {{v, 1}}, 0, false);
                    row.coeffs[r] = -static_cast<long>(prog.period);
                    branch.inequalities.push_back(make_row(branch.vars, {{r, 1}}, 0, true));
                }
                row.rhs = static_cast<unsigned long>(prog.offset);
                branch.equalities.push_back(std::move(row));
                search(std::move(branch), depth + 1);
            }
            return;
        }
        if (auto found = detail::lexmin_integer_point(p, order_, budget_)) {
            found->resize(sys_.variable_count());
            if (!best_ || better(*found, *best_))
                best_ = std::move(found);
        }
    }
};

} // namespace

std::optional<std::vector<std::int64_t>> solve_linear_system(const LinearSystem& sys, const ArithConfig& cfg,
                                                            ArithStats* stats)
{
    detail::SearchBudget budget(cfg.node_budget, stats);
    auto point = ProgressionSearch(sys, budget, stats).run();
    if (!point)
        return std::nullopt;
    std::vector<std::int64_t> out;
    for (std::size_t v = 0; v < sys.variable_count(); ++v) {
        const auto& value = (*point)[v];
        if (!value.fits_slong_p())
            throw OverflowError("value of '" + sys.name(v) + "' does not fit in 64 bits");
        out.push_back(value.get_si());
    }
    return out;
}

RelaxationBound relaxation_maximum(const LinearSystem& sys, std::size_t var)
{
    // Columns: one per natural, a (plus, minus) pair per integer.
    std::vector<std::size_t> column(sys.variable_count());
    std::size_t columns = 0;
    for (std::size_t v = 0; v < sys.variable_count(); ++v) {
        column[v] = columns;
        columns += sys.domain(v) == VarDomain::Natural ? 1 : 2;
    }
    detail::LpProblem lp;
    auto add_row = [&](const std::map<std::size_t, std::int64_t>& coeffs, std::int64_t rhs, bool negate) {
        std::vector<mpq_class> row(columns, 0);
        for (const auto& [v, a] : coeffs) {
            mpq_class c = negate ? -mpq_class(static_cast<long>(a)) : mpq_class(static_cast<long>(a));
            row[column[v]] += c;
            if (sys.domain(v) == VarDomain::Integer)
                row[column[v] + 1] -= c;
        }
        lp.rows.push_back(std::move(row));
        lp.bounds.push_back(negate ? -mpq_class(static_cast<long>(rhs)) : mpq_class(static_cast<long>(rhs)));
    };
    for (const auto& c : sys.constraints()) {
        if (c.cmp == Comparison::Le || c.cmp == Comparison::Eq)
            add_row(c.coeffs, c.rhs, false);
        if (c.cmp == Comparison::Ge || c.cmp == Comparison::Eq)
            add_row(c.coeffs, c.rhs, true);
    }
    lp.objective.assign(columns, 0);
    lp.objective[column[var]] = -1;
    if (sys.domain(var) == VarDomain::Integer)
        lp.objective[column[var] + 1] = 1;
    auto result = detail::solve_lp(lp);
    RelaxationBound out;
    out.feasible = result.status != detail::LpStatus::Infeasible;
    if (result.status == detail::LpStatus::Optimal) {
        mpq_class best = -result.value;
        mpz_class floor_value;
        mpz_fdiv_q(floor_value.get_mpz_t(), best.get_num_mpz_t(), best.get_den_mpz_t());
        out.maximum = floor_value.fits_slong_p() ? floor_value.get_si() : std::numeric_limits<std::int64_t>::max();
    }
    return out;
}

bool satisfies(const LinearSystem& sys, const std::vector<std::int64_t>& values)
{
    if (values.size() != sys.variable_count())
        return false;
    for (std::size_t v = 0; v < values.size(); ++v) {
        if (sys.domain(v) == VarDomain::Natural && values[v] < 0)
            return false;
        if (sys.lengths(v) && !sys.lengths(v)->contains(static_cast<std::uint64_t>(values[v])))
            return false;
    }
    for (const auto& c : sys.constraints()) {
        __int128 lhs = 0;
        for (const auto& [v, a] : c.coeffs)
            lhs += static_cast<__int128>(a) * values[v];
        bool ok = false;
        switch (c.cmp) {
        case Comparison::Le:
            ok = lhs <= c.rhs;
            break;
        case Comparison::Eq:
            ok = lhs == c.rhs;
            break;
        case Comparison::Ge:
            ok = lhs >= c.rhs;
            break;
        case Comparison::Ne:
            ok = lhs != c.rhs;
            break;
        }
        if (!ok)
            return false;
    }
    return true;
}

} // namespace rex
