#include "rex/solver/solver.hpp"

#include <numeric>
#include <set>

#include "rex/arith/linear_system.hpp"
#include "rex/frontend/eval.hpp"
#include "rex/frontend/nnf.hpp"
#include "rex/lengths/progression.hpp"
#include "rex/numstr/binary.hpp"
#include "rex/numstr/rewrite.hpp"
#include "rex/numstr/value_range.hpp"
#include "rex/solver/plan.hpp"
#include "rex/solver/skeleton.hpp"

namespace rex {

std::string_view to_string(UnknownReason r)
{
    switch (r) {
    case UnknownReason::UndecidableFragment:
        return "undecidable-fragment";
    case UnknownReason::WordEquationsUnsupported:
        return "word-equations-unsupported";
    case UnknownReason::BudgetExceeded:
        return "budget-exceeded";
    case UnknownReason::OpenFragment:
        return "open-fragment";
    }
    return "unknown";
}

namespace {

using Products = std::map<std::string, std::shared_ptr<LazyProduct>>;

class UnionFind {
public:
    std::string find(const std::string& k)
    {
        auto it = parent_.find(k);
        if (it == parent_.end()) {
            parent_.emplace(k, k);
            return k;
        }
        if (it->second == k)
            return k;
        auto root = find(it->second);
        parent_[k] = root;
        return root;
    }

    void unite(const std::string& a, const std::string& b) { parent_[find(a)] = find(b); }

private:
    std::map<std::string, std::string> parent_;
};

std::string int_node(const std::string& v) { return "i:" + v; }
std::string len_node(const std::string& x) { return "l:" + x; }

std::vector<std::string> nodes_of(const IntLiteral& l)
{
    std::vector<std::string> out;
    for (const auto& [v, _] : l.ints)
        out.push_back(int_node(v));
    for (const auto& [x, _] : l.lens)
        out.push_back(len_node(x));
    return out;
}

class Pipeline {
public:
    Pipeline(const Formula& g, const SolverConfig& cfg, SolveStats& stats)
        : g_(g), cfg_(cfg), stats_(stats), cache_(g.alphabet, cfg.state_budget, cfg.dump_automata_dir)
    {
    }

    std::optional<Model> run()
    {
        std::optional<Model> found;
        for_each_partial_skeleton(g_, [&](const Skeleton& s) {
            ++stats_.skeletons;
            found = branch_links(split_literals(g_, s), 0);
            return !found;
        });
        return found;
    }

    bool incomplete() const { return incomplete_; }

private:
    const Formula& g_;
    const SolverConfig& cfg_;
    SolveStats& stats_;
    AutomatonCache cache_;
    bool incomplete_ = false;
    std::size_t fresh_ = 0;

    std::string fresh_value()
    {
        for (;;) {
            auto name = "ns!v" + std::to_string(++fresh_);
            if (!g_.sort_of(name))
                return name;
        }
    }

    /// numstr(j, x) false: either x is not a binary word, or it is one whose
    /// value v differs from j.
    std::optional<Model> branch_links(AtomLists lists, std::size_t k)
    {
        if (k == lists.links.size())
            return solve_positive(std::move(lists));
        if (lists.links[k].positive)
            return branch_links(std::move(lists), k + 1);
        const auto link = lists.links[k];
        {
            AtomLists other = lists;
            other.links.erase(other.links.begin() + static_cast<std::ptrdiff_t>(k));
            other.regular.push_back({Pattern::variable(link.word), link.representation, false});
            if (auto m = branch_links(std::move(other), k))
                return m;
        }
        auto v = fresh_value();
        lists.links[k] = {v, link.word, true, link.representation};
        lists.arithmetic.push_back({{{link.number, 1}, {v, -1}}, {}, Comparison::Ne, 0});
        return branch_links(std::move(lists), k + 1);
    }

    std::optional<Model> solve_positive(AtomLists lists)
    {
        for (const auto& l : lists.links)
            lists.regular.push_back({Pattern::variable(l.word), l.representation, true});
        std::optional<Model> found;
        try {
            std::vector<CompiledAtom> compiled;
            for (const auto& m : lists.regular)
                compiled.push_back(cache_.atom(m));
            for_each_plan(lists, compiled, PlanPruning::Product, cfg_.state_budget, [&](const OccurrencePlan& plan) {
                ++stats_.plans;
                found = solve_plan(lists, compiled, plan);
                return !found;
            });
        } catch (const BlowupLimitExceeded&) {
            incomplete_ = true;
        }
        return found;
    }

    std::optional<Model> solve_plan(const AtomLists& lists, const std::vector<CompiledAtom>& compiled,
                                    const OccurrencePlan& plan)
    {
        Products products;
        for (const auto& x : g_.string_vars())
            products[x] = build_var_automaton(x, plan, compiled, cache_);
        std::optional<Model> found;
        try {
            auto relaxed = solve_arith(lists.arithmetic, products, {});
            if (relaxed && !lists.links.empty() && !links_hold(*relaxed, lists.links))
                found = solve_linked(lists, products);
            else
                found = std::move(relaxed);
        } catch (const BlowupLimitExceeded&) {
            incomplete_ = true;
        } catch (const ArithBudgetExceeded&) {
            incomplete_ = true;
        } catch (const OverflowError&) {
            incomplete_ = true;
        } catch (const ColumnBudgetExceeded&) {
            incomplete_ = true;
        }
        for (const auto& [_, p] : products)
            stats_.tuples_expanded += p->tuples_expanded();
        if (found) {
            for (const auto& d : g_.declarations) {
                if (d.sort == Sort::Int)
                    found->ints.try_emplace(d.name, 0);
                else
                    found->strings.try_emplace(d.name, "");
            }
        }
        return found;
    }

    bool links_hold(const Model& m, const std::vector<NumstrLink>& links) const
    {
        for (const auto& l : links) {
            auto i = m.ints.find(l.number);
            auto s = m.strings.find(l.word);
            std::int64_t n = i == m.ints.end() ? 0 : i->second;
            if (s == m.strings.end() || !numstr_holds(n, s->second, g_.strict_numstr))
                return false;
        }
        return true;
    }

    /// Integer literals over integers and lengths; every string outside
    /// `elsewhere` gets a word. Lengths come from the progression sets.
    std::optional<Model> solve_arith(const std::vector<IntLiteral>& literals, Products& products,
                                     const std::set<std::string>& elsewhere)
    {
        LinearSystem sys;
        std::map<std::string, std::size_t> ints;
        std::map<std::string, std::size_t> lens;
        for (const auto& l : literals) {
            for (const auto& [v, _] : l.ints)
                if (!ints.contains(v))
                    ints[v] = sys.add_variable(v, VarDomain::Integer);
            for (const auto& [x, _] : l.lens)
                if (!lens.contains(x)) {
                    lens[x] = sys.add_variable("len " + x, VarDomain::Natural);
                    auto set = length_abstraction(*products.at(x));
                    if (set.empty())
                        return std::nullopt;
                    sys.set_lengths(lens[x], std::move(set));
                }
        }
        Model m;
        for (const auto& [x, p] : products) {
            if (elsewhere.contains(x) || lens.contains(x))
                continue;
            auto r = is_empty(*p);
            if (r.empty)
                return std::nullopt;
            m.strings[x] = *r.witness;
        }
        for (const auto& l : literals) {
            LinearConstraint c;
            for (const auto& [v, a] : l.ints)
                c.coeffs[ints[v]] += a;
            for (const auto& [x, a] : l.lens)
                c.coeffs[lens[x]] += a;
            c.cmp = l.cmp;
            c.rhs = l.rhs;
            sys.add(std::move(c));
        }
        if (sys.variable_count() == 0)
            return m;
        auto values = solve_linear_system(sys, {cfg_.arith_node_budget});
        if (!values)
            return std::nullopt;
        for (const auto& [v, i] : ints)
            m.ints[v] = (*values)[i];
        for (const auto& [x, i] : lens)
            m.strings[x] = reconstruct_word(*products.at(x), static_cast<std::uint64_t>((*values)[i]));
        return m;
    }

    std::optional<Model> solve_linked(const AtomLists& lists, Products& products)
    {
        UnionFind uf;
        std::set<std::string> linked;
        for (const auto& l : lists.links) {
            uf.unite(int_node(l.number), len_node(l.word));
            linked.insert(l.word);
        }
        for (const auto& lit : lists.arithmetic) {
            auto nodes = nodes_of(lit);
            for (std::size_t i = 1; i < nodes.size(); ++i)
                uf.unite(nodes[0], nodes[i]);
        }
        std::set<std::string> roots;
        for (const auto& l : lists.links)
            roots.insert(uf.find(int_node(l.number)));
        std::vector<IntLiteral> column_literals;
        std::vector<IntLiteral> arith_literals;
        for (const auto& lit : lists.arithmetic) {
            auto nodes = nodes_of(lit);
            bool column = !nodes.empty() && roots.contains(uf.find(nodes.front()));
            (column ? column_literals : arith_literals).push_back(lit);
        }

        // Tapes: one per linked word, per free integer, per length of an unlinked word.
        ColumnAutomaton spec;
        std::map<std::string, std::size_t> word_tape;
        std::map<std::string, std::size_t> int_tape;
        std::map<std::string, std::size_t> len_tape;
        std::vector<std::string> mixed;
        for (const auto& l : lists.links) {
            if (!word_tape.contains(l.word)) {
                word_tape[l.word] = spec.tapes.size();
                spec.tapes.push_back({l.word, TapeKind::Word, products.at(l.word), g_.strict_numstr, {}, {}});
            }
            auto tape = word_tape[l.word];
            auto [it, fresh] = int_tape.try_emplace(l.number, tape);
            if (!fresh && it->second != tape)
                spec.constraints.push_back({{{it->second, 1}, {tape, -1}}, Comparison::Eq, 0});
        }
        for (const auto& lit : column_literals) {
            for (const auto& [v, _] : lit.ints)
                if (!int_tape.contains(v)) {
                    int_tape[v] = spec.tapes.size();
                    spec.tapes.push_back({v, TapeKind::Integer, nullptr, false, {}, {}});
                }
            for (const auto& [x, _] : lit.lens) {
                if (linked.contains(x)) {
                    if (std::find(mixed.begin(), mixed.end(), x) == mixed.end())
                        mixed.push_back(x);
                } else if (!len_tape.contains(x)) {
                    auto set = length_abstraction(*products.at(x));
                    if (set.empty())
                        return std::nullopt;
                    len_tape[x] = spec.tapes.size();
                    spec.tapes.push_back({"len " + x, TapeKind::Natural, nullptr, false, {}, std::move(set)});
                }
            }
        }

        std::set<std::string> elsewhere = linked;
        for (const auto& [x, _] : len_tape)
            elsewhere.insert(x);
        auto rest = solve_arith(arith_literals, products, elsewhere);
        if (!rest)
            return std::nullopt;

        // Integer relaxation of the column part: links become value bounds and
        // equalities between numbers sharing a word.
        LinearSystem relaxed;
        std::map<std::string, std::size_t> ids;
        auto id_of = [&](const std::string& key, VarDomain d) {
            auto [it, fresh] = ids.try_emplace(key, 0);
            if (fresh) {
                it->second = relaxed.add_variable(key, d);
                if (d == VarDomain::Natural) {
                    auto set = length_abstraction(*products.at(key.substr(2)));
                    relaxed.set_lengths(it->second, std::move(set));
                }
            }
            return it->second;
        };
        for (const auto& lit : column_literals) {
            LinearConstraint c;
            for (const auto& [v, a] : lit.ints)
                c.coeffs[id_of(int_node(v), VarDomain::Integer)] += a;
            for (const auto& [x, a] : lit.lens)
                c.coeffs[id_of(len_node(x), VarDomain::Natural)] += a;
            c.cmp = lit.cmp;
            c.rhs = lit.rhs;
            relaxed.add(std::move(c));
        }
        std::map<std::string, std::string> first_number;
        for (const auto& l : lists.links) {
            auto range = binary_value_range(*products.at(l.word));
            if (range.empty)
                return std::nullopt;
            auto j = id_of(int_node(l.number), VarDomain::Integer);
            relaxed.add({{{j, 1}}, Comparison::Ge, range.minimum});
            if (range.maximum)
                relaxed.add({{{j, 1}}, Comparison::Le, *range.maximum});
            auto [it, fresh] = first_number.try_emplace(l.word, l.number);
            if (!fresh && it->second != l.number)
                relaxed.add({{{j, 1}, {id_of(int_node(it->second), VarDomain::Integer), -1}}, Comparison::Eq, 0});
        }
        if (!solve_linear_system(relaxed, {cfg_.arith_node_budget}))
            return std::nullopt;

        // Lengths of linked words that also occur in arithmetic are enumerated.
        std::vector<std::vector<std::uint64_t>> candidates;
        bool bounded = true;
        for (const auto& x : mixed) {
            auto bound = relaxation_maximum(relaxed, ids.at(len_node(x)));
            if (!bound.feasible)
                return std::nullopt;
            auto set = length_abstraction(*products.at(x));
            std::optional<std::int64_t> maximum = bound.maximum;
            if (set.is_finite()) {
                std::int64_t top = 0;
                for (const auto& part : set.progressions())
                    top = std::max(top, static_cast<std::int64_t>(part.offset));
                maximum = maximum ? std::min(*maximum, top) : top;
            }
            // Exact when the length is bounded; otherwise fall back to the configured cap.
            const auto cap = static_cast<std::int64_t>(cfg_.mixed_length_bound);
            const bool exact = maximum && *maximum <= cap;
            const std::int64_t limit = exact ? *maximum : cap;
            bounded = bounded && exact;
            std::vector<std::uint64_t> values;
            for (std::int64_t n = 0; n <= limit; ++n)
                if (set.contains(static_cast<std::uint64_t>(n)))
                    values.push_back(static_cast<std::uint64_t>(n));
            if (values.empty())
                return exact ? std::nullopt : give_up();
            candidates.push_back(std::move(values));
        }

        std::vector<std::size_t> choice(mixed.size(), 0);
        for (;;) {
            auto attempt = spec;
            std::map<std::string, std::uint64_t> fixed;
            for (std::size_t i = 0; i < mixed.size(); ++i) {
                fixed[mixed[i]] = candidates[i][choice[i]];
                attempt.tapes[word_tape.at(mixed[i])].exact_length = candidates[i][choice[i]];
            }
            if (auto m = run_columns(attempt, column_literals, int_tape, len_tape, fixed, word_tape, products)) {
                for (auto& [k, v] : m->strings)
                    rest->strings[k] = v;
                for (auto& [k, v] : m->ints)
                    rest->ints[k] = v;
                return rest;
            }
            std::size_t i = choice.size();
            while (i-- > 0) {
                if (++choice[i] < candidates[i].size())
                    break;
                choice[i] = 0;
            }
            if (i == static_cast<std::size_t>(-1))
                break;
        }
        return bounded ? std::nullopt : give_up();
    }

    std::optional<Model> give_up()
    {
        incomplete_ = true;
        return std::nullopt;
    }

    std::optional<Model> run_columns(ColumnAutomaton& spec, const std::vector<IntLiteral>& literals,
                                     const std::map<std::string, std::size_t>& int_tape,
                                     const std::map<std::string, std::size_t>& len_tape,
                                     const std::map<std::string, std::uint64_t>& fixed,
                                     const std::map<std::string, std::size_t>& word_tape, Products& products)
    {
        for (const auto& lit : literals) {
            LinearConstraint c;
            __int128 rhs = lit.rhs;
            for (const auto& [v, a] : lit.ints)
                c.coeffs[int_tape.at(v)] += a;
            for (const auto& [x, a] : lit.lens) {
                if (auto it = fixed.find(x); it != fixed.end())
                    rhs -= static_cast<__int128>(a) * static_cast<__int128>(it->second);
                else
                    c.coeffs[len_tape.at(x)] += a;
            }
            if (rhs > std::numeric_limits<std::int64_t>::max() || rhs < std::numeric_limits<std::int64_t>::min())
                throw OverflowError("length constant out of range");
            c.cmp = lit.cmp;
            c.rhs = static_cast<std::int64_t>(rhs);
            spec.constraints.push_back(std::move(c));
        }
        ColumnStats stats;
        auto witness = multitape_emptiness(spec, {cfg_.column_budget, &stats, cfg_.frontier});
        stats_.column_configurations += stats.configurations;
        if (!witness)
            return std::nullopt;
        Model m;
        for (const auto& [x, t] : word_tape)
            m.strings[x] = witness->words[t];
        for (const auto& [v, t] : int_tape)
            m.ints[v] = witness->values[t];
        for (const auto& [x, t] : len_tape)
            m.strings[x] = reconstruct_word(*products.at(x), static_cast<std::uint64_t>(witness->values[t]));
        return m;
    }
};

Model project(const Model& m, const Formula& f)
{
    Model out;
    for (const auto& d : f.declarations) {
        if (d.sort == Sort::Int) {
            auto it = m.ints.find(d.name);
            out.ints[d.name] = it == m.ints.end() ? 0 : it->second;
        } else {
            auto it = m.strings.find(d.name);
            out.strings[d.name] = it == m.strings.end() ? std::string() : it->second;
        }
    }
    return out;
}

} // namespace

Verdict solve(const Formula& f, const SolverConfig& cfg, SolveStats* stats_out)
{
    SolveStats stats;
    stats.theory = classify_theory(f);
    auto finish = [&](Verdict v) {
        if (stats_out)
            *stats_out = stats;
        return v;
    };
    if (stats.theory.flags.word_equations)
        return finish(Verdict::unknown(UnknownReason::WordEquationsUnsupported));
    const auto decidability = stats.theory.decidability;

    std::optional<Model> model;
    bool incomplete = false;
    try {
        auto rewritten = rewrite_numstr(to_nnf(f));
        Pipeline pipeline(rewritten.first, cfg, stats);
        model = pipeline.run();
        incomplete = pipeline.incomplete();
    } catch (const UnsupportedPattern&) {
        incomplete = true;
    }
    if (model) {
        auto m = project(*model, f);
        if (!verify_model(f, m))
            throw InternalInconsistency("solver model rejected by the evaluator");
        return finish(Verdict::sat(std::move(m)));
    }
    if (!incomplete && decidability != Decidability::Undecidable)
        return finish(Verdict::unsat());

    stats.used_fallback = true;
    try {
        auto r = brute_force_solve(f, cfg.fallback);
        if (r.status == OracleStatus::Sat && r.model && verify_model(f, *r.model))
            return finish(Verdict::sat(*r.model));
    } catch (const OracleBudgetExceeded&) {
    }
    switch (decidability) {
    case Decidability::Undecidable:
        return finish(Verdict::unknown(UnknownReason::UndecidableFragment));
    case Decidability::Open:
        return finish(Verdict::unknown(UnknownReason::OpenFragment));
    default:
        return finish(Verdict::unknown(UnknownReason::BudgetExceeded));
    }
}

} // namespace rex
