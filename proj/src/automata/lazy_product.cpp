#include "rex/automata/lazy_product.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace rex {

LazyProduct::LazyProduct(std::vector<ProductMember> members, std::size_t state_budget)
    : members_(std::move(members)), subsets_(members_.size()), budget_(state_budget)
{
    if (members_.empty())
        throw std::invalid_argument("lazy product needs at least one member");
    alphabet_ = members_.front().nfa->alphabet();
    for (const auto& m : members_)
        if (!(m.nfa->alphabet() == alphabet_))
            throw std::invalid_argument("lazy product members disagree on the alphabet");

    std::vector<std::uint32_t> start(members_.size());
    for (std::size_t i = 0; i < members_.size(); ++i) {
        const auto& m = members_[i];
        std::vector<State> init;
        if (m.nfa->state_count() > 0)
            init.push_back(m.start.value_or(m.nfa->initial()));
        if (m.mode == MemberMode::AsIs) {
            if (init.empty())
                throw std::invalid_argument("as-is member without states");
            start[i] = init.front();
        } else {
            start[i] = intern_subset(i, std::move(init));
        }
    }
    intern(std::move(start));
}

std::uint32_t LazyProduct::intern_subset(std::size_t member, std::vector<State> subset)
{
    auto& table = subsets_[member];
    auto it = table.ids.find(subset);
    if (it != table.ids.end())
        return it->second;
    auto id = static_cast<std::uint32_t>(table.sets.size());
    if (id >= budget_)
        throw BlowupLimitExceeded(budget_);
    table.ids.emplace(subset, id);
    table.sets.push_back(std::move(subset));
    table.next.emplace_back(alphabet_.size(), UINT32_MAX);
    return id;
}

std::uint32_t LazyProduct::subset_step(std::size_t member, std::uint32_t subset, Symbol s)
{
    if (auto cached = subsets_[member].next[subset][s]; cached != UINT32_MAX)
        return cached;
    const Nfa& nfa = *members_[member].nfa;
    std::vector<State> next;
    for (State q : subsets_[member].sets[subset])
        for (State p : nfa.successors(q, s))
            next.push_back(p);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    auto id = intern_subset(member, std::move(next));
    subsets_[member].next[subset][s] = id;
    return id;
}

bool LazyProduct::component_final(std::size_t member, std::uint32_t component) const
{
    const auto& m = members_[member];
    auto accepting = [&](State q) { return m.end ? q == *m.end : m.nfa->is_final(q); };
    if (m.mode == MemberMode::AsIs)
        return accepting(component);
    const auto& set = subsets_[member].sets[component];
    bool hit = std::any_of(set.begin(), set.end(), accepting);
    return m.mode == MemberMode::Determinized ? hit : !hit;
}

LazyProduct::TupleId LazyProduct::intern(std::vector<std::uint32_t> tuple)
{
    auto it = ids_.find(tuple);
    if (it != ids_.end())
        return it->second;
    if (tuples_.size() >= budget_)
        throw BlowupLimitExceeded(budget_);
    auto id = static_cast<TupleId>(tuples_.size());
    bool final = true;
    for (std::size_t i = 0; i < members_.size() && final; ++i)
        final = component_final(i, tuple[i]);
    ids_.emplace(tuple, id);
    tuples_.push_back(std::move(tuple));
    finals_.push_back(final);
    delta_.emplace_back(alphabet_.size());
    return id;
}

const std::vector<LazyProduct::TupleId>& LazyProduct::successors(TupleId t, Symbol s)
{
    if (delta_[t][s])
        return *delta_[t][s];
    // Per member, the possible next components; an empty choice kills the move.
    std::vector<std::vector<std::uint32_t>> choices(members_.size());
    bool dead = false;
    for (std::size_t i = 0; i < members_.size() && !dead; ++i) {
        const auto& m = members_[i];
        auto component = tuples_[t][i];
        if (m.mode == MemberMode::AsIs) {
            const auto& next = m.nfa->successors(component, s);
            choices[i].assign(next.begin(), next.end());
        } else {
            auto next = subset_step(i, component, s);
            bool sink = subsets_[i].sets[next].empty();
            if (!(sink && m.mode == MemberMode::Determinized))
                choices[i].push_back(next);
        }
        dead = choices[i].empty();
    }
    std::vector<TupleId> out;
    if (!dead) {
        std::vector<std::size_t> cursor(members_.size(), 0);
        for (;;) {
            std::vector<std::uint32_t> tuple(members_.size());
            for (std::size_t i = 0; i < members_.size(); ++i)
                tuple[i] = choices[i][cursor[i]];
            out.push_back(intern(std::move(tuple)));
            std::size_t i = members_.size();
            while (i-- > 0) {
                if (++cursor[i] < choices[i].size())
                    break;
                cursor[i] = 0;
            }
            if (i == SIZE_MAX)
                break;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    delta_[t][s] = std::move(out);
    return *delta_[t][s];
}

Nfa LazyProduct::materialize()
{
    std::vector<bool> seen{true};
    std::deque<TupleId> work{initial()};
    while (!work.empty()) {
        TupleId t = work.front();
        work.pop_front();
        for (Symbol s = 0; s < alphabet_.size(); ++s)
            for (TupleId u : successors(t, s)) {
                if (u >= seen.size())
                    seen.resize(u + 1, false);
                if (!seen[u]) {
                    seen[u] = true;
                    work.push_back(u);
                }
            }
    }
    Nfa out(alphabet_, tuples_.size());
    out.set_initial(initial());
    for (TupleId t = 0; t < tuples_.size(); ++t) {
        out.set_final(t, finals_[t]);
        for (Symbol s = 0; s < alphabet_.size(); ++s)
            for (TupleId u : successors(t, s))
                out.add_transition(t, s, u);
    }
    return out;
}

EmptinessResult is_empty(LazyProduct& p)
{
    // Breadth-first layers by distance; the first final tuple fixes the shortest length.
    std::vector<std::size_t> dist;
    auto visit = [&](LazyProduct::TupleId t, std::size_t d) {
        if (t >= dist.size())
            dist.resize(t + 1, SIZE_MAX);
        if (dist[t] != SIZE_MAX)
            return false;
        dist[t] = d;
        return true;
    };
    std::vector<std::vector<LazyProduct::TupleId>> layers{{p.initial()}};
    visit(p.initial(), 0);
    std::optional<std::size_t> shortest;
    for (std::size_t d = 0; d < layers.size() && !shortest; ++d) {
        std::vector<LazyProduct::TupleId> next;
        for (auto t : layers[d]) {
            if (p.is_final(t)) {
                shortest = d;
                break;
            }
            for (Symbol s = 0; s < p.alphabet().size(); ++s)
                for (auto u : p.successors(t, s))
                    if (visit(u, d + 1))
                        next.push_back(u);
        }
        if (!shortest && !next.empty())
            layers.push_back(std::move(next));
    }
    if (!shortest)
        return {true, std::nullopt};

    // Tuples on some shortest accepting path, then the lexicographically least such path.
    auto length = *shortest;
    std::vector<std::set<LazyProduct::TupleId>> good(length + 1);
    for (auto t : layers[length])
        if (p.is_final(t))
            good[length].insert(t);
    for (std::size_t d = length; d-- > 0;)
        for (auto t : layers[d])
            for (Symbol s = 0; s < p.alphabet().size() && !good[d].contains(t); ++s)
                for (auto u : p.successors(t, s))
                    if (good[d + 1].contains(u)) {
                        good[d].insert(t);
                        break;
                    }
    std::string word;
    std::set<LazyProduct::TupleId> current{p.initial()};
    for (std::size_t d = 0; d < length; ++d) {
        for (Symbol s = 0; s < p.alphabet().size(); ++s) {
            std::set<LazyProduct::TupleId> next;
            for (auto t : current)
                for (auto u : p.successors(t, s))
                    if (good[d + 1].contains(u))
                        next.insert(u);
            if (!next.empty()) {
                word += p.alphabet()[s];
                current = std::move(next);
                break;
            }
        }
    }
    return {false, word};
}

} // namespace rex
