#include "rex/solver/plan.hpp"

#include <fstream>

namespace rex {

AutomatonCache::AutomatonCache(Alphabet alphabet, std::size_t state_budget, std::string dump_dir)
    : alphabet_(std::move(alphabet)), budget_(state_budget), dump_dir_(std::move(dump_dir))
{
}

std::shared_ptr<const Nfa> AutomatonCache::compiled(const RegexPtr& r)
{
    auto it = plain_.find(r);
    if (it != plain_.end())
        return it->second;
    auto m = std::make_shared<const Nfa>(compile_regex(*r, alphabet_, budget_));
    if (!dump_dir_.empty()) {
        auto name = "regex" + std::to_string(plain_.size() + 1);
        std::ofstream(dump_dir_ + "/" + name + ".dot") << "// " << to_smtlib(*r) << '\n' << to_dot(*m, name);
    }
    plain_.emplace(r, m);
    return m;
}

std::shared_ptr<const Nfa> AutomatonCache::complemented(const RegexPtr& r)
{
    auto it = negated_.find(r);
    if (it != negated_.end())
        return it->second;
    auto m = std::make_shared<const Nfa>(determinize_complement(*compiled(r), budget_));
    negated_.emplace(r, m);
    return m;
}

CompiledAtom AutomatonCache::atom(const MembershipAtom& m)
{
    if (m.positive)
        return {compiled(m.regex), MemberMode::AsIs};
    if (m.pattern.normalized().is_single_var())
        return {compiled(m.regex), MemberMode::Complemented};
    return {complemented(m.regex), MemberMode::AsIs};
}

std::shared_ptr<const Nfa> AutomatonCache::universal()
{
    if (!universal_) {
        Nfa m(alphabet_, 1);
        m.set_final(0);
        for (Symbol s = 0; s < alphabet_.size(); ++s)
            m.add_transition(0, s, 0);
        universal_ = std::make_shared<const Nfa>(std::move(m));
    }
    return universal_;
}

namespace {

class PlanSearch {
public:
    PlanSearch(const AtomLists& lists, const std::vector<CompiledAtom>& compiled, PlanPruning pruning,
               std::size_t budget, const std::function<bool(const OccurrencePlan&)>& visit)
        : lists_(lists), compiled_(compiled), pruning_(pruning), budget_(budget), visit_(visit)
    {
        plan_.atoms.resize(lists.regular.size());
        for (const auto& c : compiled) {
            std::vector<std::vector<bool>> reach;
            for (State q = 0; q < c.nfa->state_count(); ++q)
                reach.push_back(reachable_from(*c.nfa, q));
            reach_.push_back(std::move(reach));
            coreach_.push_back(coreachable(*c.nfa));
        }
    }

    void run() { next_atom(0); }

private:
    const AtomLists& lists_;
    const std::vector<CompiledAtom>& compiled_;
    PlanPruning pruning_;
    std::size_t budget_;
    const std::function<bool(const OccurrencePlan&)>& visit_;
    std::vector<std::vector<std::vector<bool>>> reach_;
    std::vector<std::vector<bool>> coreach_;
    OccurrencePlan plan_;
    std::map<std::string, std::vector<ProductMember>> members_;
    bool stopped_ = false;

    /// False when the product for `var` has become empty.
    bool consistent(const std::string& var)
    {
        if (pruning_ != PlanPruning::Product)
            return true;
        LazyProduct p(members_.at(var), budget_);
        return !is_empty(p).empty;
    }

    void push(std::size_t atom, Segment s)
    {
        members_[s.var].push_back({compiled_[atom].nfa, s.mode, s.start, s.end});
        plan_.atoms[atom].segments.push_back(std::move(s));
    }

    void pop(std::size_t atom)
    {
        auto& segs = plan_.atoms[atom].segments;
        auto& m = members_[segs.back().var];
        m.pop_back();
        if (m.empty())
            members_.erase(segs.back().var);
        segs.pop_back();
    }

    void next_atom(std::size_t atom)
    {
        if (stopped_)
            return;
        if (atom == lists_.regular.size()) {
            if (!visit_(plan_))
                stopped_ = true;
            return;
        }
        const auto& c = compiled_[atom];
        auto pattern = lists_.regular[atom].pattern.normalized();
        if (c.mode == MemberMode::Complemented) {
            push(atom, {pattern.items.front().text, std::nullopt, std::nullopt, MemberMode::Complemented});
            if (consistent(pattern.items.front().text))
                next_atom(atom + 1);
            pop(atom);
            return;
        }
        next_item(atom, pattern, 0, c.nfa->initial());
    }

    void next_item(std::size_t atom, const Pattern& pattern, std::size_t item, State q)
    {
        if (stopped_)
            return;
        const Nfa& m = *compiled_[atom].nfa;
        if (item == pattern.items.size()) {
            if (m.is_final(q))
                next_atom(atom + 1);
            return;
        }
        const auto& it = pattern.items[item];
        if (!it.is_var) {
            std::vector<bool> current(m.state_count(), false);
            current[q] = true;
            for (char ch : it.text) {
                auto s = m.alphabet().index_of(ch);
                std::vector<bool> next(m.state_count(), false);
                for (State p = 0; p < m.state_count() && s; ++p)
                    if (current[p])
                        for (State r : m.successors(p, *s))
                            next[r] = true;
                current = std::move(next);
            }
            for (State p = 0; p < m.state_count(); ++p)
                if (current[p] && coreach_[atom][p])
                    next_item(atom, pattern, item + 1, p);
            return;
        }
        const bool first = item == 0;
        std::optional<State> start = first ? std::nullopt : std::optional<State>(q);
        if (item + 1 == pattern.items.size()) {
            if (!coreach_[atom][q])
                return;
            push(atom, {it.text, start, std::nullopt, MemberMode::AsIs});
            if (consistent(it.text))
                next_atom(atom + 1);
            pop(atom);
            return;
        }
        for (State e = 0; e < m.state_count(); ++e) {
            if (!reach_[atom][q][e] || !coreach_[atom][e])
                continue;
            push(atom, {it.text, start, e, MemberMode::AsIs});
            if (consistent(it.text))
                next_item(atom, pattern, item + 1, e);
            pop(atom);
            if (stopped_)
                return;
        }
    }
};

} // namespace

void for_each_plan(const AtomLists& lists, const std::vector<CompiledAtom>& compiled, PlanPruning pruning,
                   std::size_t state_budget, const std::function<bool(const OccurrencePlan&)>& visit)
{
    PlanSearch(lists, compiled, pruning, state_budget, visit).run();
}

std::vector<OccurrencePlan> plan_occurrences(const AtomLists& lists, const std::vector<CompiledAtom>& compiled,
                                             PlanPruning pruning, std::size_t state_budget)
{
    std::vector<OccurrencePlan> out;
    for_each_plan(lists, compiled, pruning, state_budget, [&](const OccurrencePlan& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

std::shared_ptr<LazyProduct> build_var_automaton(const std::string& var, const OccurrencePlan& plan,
                                                 const std::vector<CompiledAtom>& compiled, AutomatonCache& cache)
{
    std::vector<ProductMember> members;
    for (std::size_t a = 0; a < plan.atoms.size(); ++a)
        for (const auto& s : plan.atoms[a].segments)
            if (s.var == var)
                members.push_back({compiled[a].nfa, s.mode, s.start, s.end});
    if (members.empty())
        members.push_back({cache.universal(), MemberMode::AsIs, std::nullopt, std::nullopt});
    return std::make_shared<LazyProduct>(std::move(members), cache.state_budget());
}

std::string reconstruct_word(LazyProduct& product, std::uint64_t length)
{
    auto word = word_of_length(product.materialize(), static_cast<std::size_t>(length));
    if (!word)
        throw InternalInconsistency("no accepted word of length " + std::to_string(length));
    return *word;
}

} // namespace rex
