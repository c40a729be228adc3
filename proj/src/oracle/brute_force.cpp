#include "rex/oracle/brute_force.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rex/frontend/eval.hpp"
#include "rex/numstr/binary.hpp"

namespace rex {

namespace {

std::vector<std::string> shortlex_words(const Alphabet& alphabet, std::size_t max_len)
{
    std::vector<std::string> out{""};
    std::size_t layer_start = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::size_t layer_end = out.size();
        for (std::size_t i = layer_start; i < layer_end; ++i)
            for (char c : alphabet.symbols())
                out.push_back(out[i] + c);
        layer_start = layer_end;
    }
    return out;
}

std::vector<std::int64_t> integer_order(std::int64_t max_int)
{
    std::vector<std::int64_t> out{0};
    for (std::int64_t k = 1; k <= max_int; ++k) {
        out.push_back(k);
        out.push_back(-k);
    }
    return out;
}

class Enumerator {
public:
    Enumerator(const Formula& f, const OracleBounds& bounds)
        : f_(f), bounds_(bounds), words_(shortlex_words(f.alphabet, bounds.max_len)),
          ints_(integer_order(bounds.max_int))
    {
        if (f.root.kind == NodeKind::And)
            for (const auto& c : f.root.children)
                collect_top_level(c);
        else
            collect_top_level(f.root);
        atom_value_.resize(f.atoms.size());
        for (std::size_t a = 0; a < f.atoms.size(); ++a) {
            auto vars = atom_vars(f.atoms[a]);
            if (vars.strings.empty() && vars.ints.empty())
                atom_value_[a] = evaluate_atom(f, f.atoms[a], model_);
            for (const auto* group : {&vars.strings, &vars.ints})
                for (const auto& v : *group)
                    touching_[v].push_back(a);
        }
    }

    OracleResult run()
    {
        OracleResult result;
        auto initial = evaluate_node(f_.root);
        bool found = false;
        if (initial && *initial) {
            fill_from(0);
            found = true;
        } else if (!initial) {
            found = assign(0);
        }
        if (found) {
            result.status = OracleStatus::Sat;
            result.model = model_;
        }
        result.nodes = nodes_;
        return result;
    }

private:
    const Formula& f_;
    const OracleBounds& bounds_;
    std::vector<std::string> words_;
    std::vector<std::int64_t> ints_;
    std::vector<const Atom*> top_level_;
    /// Atom truth values under the current partial model.
    std::vector<std::optional<bool>> atom_value_;
    std::map<std::string, std::vector<std::size_t>> touching_;
    Model model_;
    std::size_t nodes_ = 0;

    void collect_top_level(const Node& n)
    {
        if (n.kind == NodeKind::Atom)
            top_level_.push_back(&f_.atoms[n.atom]);
        else if (n.kind == NodeKind::And)
            for (const auto& c : n.children)
                collect_top_level(c);
    }

    std::optional<std::string> instantiate(const Pattern& p) const
    {
        std::string out;
        for (const auto& item : p.items) {
            if (!item.is_var) {
                out += item.text;
                continue;
            }
            auto it = model_.strings.find(item.text);
            if (it == model_.strings.end())
                return std::nullopt;
            out += it->second;
        }
        return out;
    }

    /// Value of `var` implied by a top-level atom once everything else is known.
    /// nullopt: not forced; a value outside the bounds means no candidate at all.
    std::optional<std::optional<std::int64_t>> forced_value(const std::string& var) const
    {
        for (const auto* atom : top_level_) {
            if (const auto* n = std::get_if<NumstrAtom>(atom)) {
                if (!n->positive || n->number.single_int_var() != var)
                    continue;
                auto w = instantiate(n->word);
                if (!w)
                    continue;
                if ((f_.strict_numstr && w->empty()) || std::any_of(w->begin(), w->end(), [](char c) { return c != '0' && c != '1'; }))
                    return std::optional<std::int64_t>{};
                auto first_one = w->find('1');
                if (first_one == std::string::npos)
                    return std::optional<std::int64_t>{0};
                if (w->size() - first_one > 62)
                    return std::optional<std::int64_t>{};
                return std::optional<std::int64_t>{static_cast<std::int64_t>(bin_value(w->substr(first_one)))};
            }
            if (const auto* lin = std::get_if<LinearAtom>(atom)) {
                if (lin->relation != Relation::Eq)
                    continue;
                auto diff = lin->lhs - lin->rhs;
                auto it = diff.ints.find(var);
                if (it == diff.ints.end())
                    continue;
                __int128 rest = diff.constant;
                bool known = true;
                for (const auto& [v, c] : diff.ints) {
                    if (v == var)
                        continue;
                    auto value = model_.ints.find(v);
                    if (value == model_.ints.end()) {
                        known = false;
                        break;
                    }
                    rest += static_cast<__int128>(c) * value->second;
                }
                for (const auto& [x, c] : diff.lens) {
                    auto value = model_.strings.find(x);
                    if (value == model_.strings.end()) {
                        known = false;
                        break;
                    }
                    rest += static_cast<__int128>(c) * static_cast<__int128>(value->second.size());
                }
                if (!known)
                    continue;
                __int128 coeff = it->second;
                if (rest % coeff != 0)
                    return std::optional<std::int64_t>{};
                __int128 value = -rest / coeff;
                if (value > INT64_MAX || value < INT64_MIN)
                    return std::optional<std::int64_t>{};
                return std::optional<std::int64_t>{static_cast<std::int64_t>(value)};
            }
        }
        return std::nullopt;
    }

    std::optional<bool> evaluate_node(const Node& n) const
    {
        switch (n.kind) {
        case NodeKind::True:
            return true;
        case NodeKind::False:
            return false;
        case NodeKind::Atom:
            return atom_value_[n.atom];
        case NodeKind::Not: {
            auto v = evaluate_node(n.children.front());
            return v ? std::optional<bool>(!*v) : std::nullopt;
        }
        case NodeKind::And:
        case NodeKind::Or: {
            const bool absorbing = n.kind == NodeKind::Or;
            bool unknown = false;
            for (const auto& c : n.children) {
                auto v = evaluate_node(c);
                if (!v)
                    unknown = true;
                else if (*v == absorbing)
                    return absorbing;
            }
            return unknown ? std::nullopt : std::optional<bool>(!absorbing);
        }
        }
        return std::nullopt;
    }

    /// Re-evaluates the atoms that mention `var` after it changed.
    void refresh(const std::string& var)
    {
        auto it = touching_.find(var);
        if (it == touching_.end())
            return;
        for (auto a : it->second)
            atom_value_[a] = evaluate_atom(f_, f_.atoms[a], model_);
    }

    /// Completes the model with the first candidate of every remaining variable.
    void fill_from(std::size_t index)
    {
        for (std::size_t i = index; i < f_.declarations.size(); ++i) {
            const auto& d = f_.declarations[i];
            if (d.sort == Sort::String)
                model_.strings[d.name] = "";
            else
                model_.ints[d.name] = 0;
        }
    }

    bool try_value(std::size_t index)
    {
        if (++nodes_ > bounds_.node_budget)
            throw OracleBudgetExceeded("oracle node budget exhausted");
        refresh(f_.declarations[index].name);
        auto v = evaluate_node(f_.root);
        if (v && !*v)
            return false;
        if (v && *v) {
            fill_from(index + 1);
            return true;
        }
        return assign(index + 1);
    }

    bool assign(std::size_t index)
    {
        if (index == f_.declarations.size())
            return false;
        const auto& d = f_.declarations[index];
        if (d.sort == Sort::String) {
            for (const auto& w : words_) {
                model_.strings[d.name] = w;
                if (try_value(index))
                    return true;
            }
            model_.strings.erase(d.name);
            refresh(d.name);
            return false;
        }
        if (auto forced = forced_value(d.name)) {
            bool found = false;
            if (*forced && **forced >= -bounds_.max_int && **forced <= bounds_.max_int) {
                model_.ints[d.name] = **forced;
                found = try_value(index);
            }
            if (!found) {
                model_.ints.erase(d.name);
                refresh(d.name);
            }
            return found;
        }
        for (auto value : ints_) {
            model_.ints[d.name] = value;
            if (try_value(index))
                return true;
        }
        model_.ints.erase(d.name);
        refresh(d.name);
        return false;
    }
};

template <typename Step>
std::set<std::size_t> layered_lengths(std::size_t states, std::size_t initial, std::size_t max_len, Step step,
                                      const std::function<bool(std::size_t)>& final)
{
    std::set<std::size_t> out;
    std::vector<bool> current(states, false);
    if (states == 0)
        return out;
    current[initial] = true;
    for (std::size_t len = 0; len <= max_len; ++len) {
        std::vector<bool> next(states, false);
        bool any = false;
        for (std::size_t q = 0; q < current.size(); ++q) {
            if (!current[q])
                continue;
            any = true;
            if (final(q))
                out.insert(len);
            step(q, next);
        }
        if (!any)
            break;
        current = std::move(next);
    }
    return out;
}

} // namespace

OracleResult brute_force_solve(const Formula& f, const OracleBounds& bounds) { return Enumerator(f, bounds).run(); }

std::set<std::size_t> nfa_length_set(const Nfa& m, std::size_t max_len)
{
    return layered_lengths(
        m.state_count(), m.initial(), max_len,
        [&](std::size_t q, std::vector<bool>& next) {
            for (Symbol s = 0; s < m.alphabet().size(); ++s)
                for (State p : m.successors(static_cast<State>(q), s))
                    next[p] = true;
        },
        [&](std::size_t q) { return m.is_final(static_cast<State>(q)); });
}

std::set<std::size_t> nfa_length_set(LazyProduct& p, std::size_t max_len)
{
    // Tuple ids grow while exploring, so track the frontier as id sets.
    std::set<std::size_t> out;
    std::set<LazyProduct::TupleId> current{p.initial()};
    for (std::size_t len = 0; len <= max_len && !current.empty(); ++len) {
        std::set<LazyProduct::TupleId> next;
        for (auto t : current) {
            if (p.is_final(t))
                out.insert(len);
            for (Symbol s = 0; s < p.alphabet().size(); ++s)
                for (auto u : p.successors(t, s))
                    next.insert(u);
        }
        current = std::move(next);
    }
    return out;
}

} // namespace rex
