#include "rex/automata/compile.hpp"

#include <deque>
#include <map>
#include <set>

namespace rex {

namespace {

struct PositionInfo {
    bool nullable = false;
    std::set<std::size_t> first;
    std::set<std::size_t> last;
};

class Glushkov {
public:
    explicit Glushkov(const Alphabet& alphabet) : alphabet_(alphabet) {}

    Nfa build(const Regex& r)
    {
        auto info = visit(r);
        Nfa out(alphabet_, symbols_.size() + 1);
        out.set_initial(0);
        out.set_final(0, info.nullable);
        for (auto p : info.last)
            out.set_final(static_cast<State>(p + 1));
        for (auto p : info.first)
            out.add_transition(0, symbols_[p], static_cast<State>(p + 1));
        for (const auto& [from, targets] : follow_)
            for (auto to : targets)
                out.add_transition(static_cast<State>(from + 1), symbols_[to], static_cast<State>(to + 1));
        return out;
    }

private:
    const Alphabet& alphabet_;
    std::vector<Symbol> symbols_;
    std::map<std::size_t, std::set<std::size_t>> follow_;

    void link(const std::set<std::size_t>& from, const std::set<std::size_t>& to)
    {
        for (auto p : from)
            follow_[p].insert(to.begin(), to.end());
    }

    PositionInfo visit(const Regex& r)
    {
        PositionInfo info;
        switch (r.kind) {
        case RegexKind::Empty:
            break;
        case RegexKind::Epsilon:
            info.nullable = true;
            break;
        case RegexKind::Literal: {
            // A symbol outside the alphabet matches nothing.
            if (!alphabet_.contains(r.symbol))
                break;
            auto p = symbols_.size();
            symbols_.push_back(alphabet_.require(r.symbol));
            info.first = {p};
            info.last = {p};
            break;
        }
        case RegexKind::Concat: {
            auto a = visit(*r.left);
            auto b = visit(*r.right);
            link(a.last, b.first);
            info.nullable = a.nullable && b.nullable;
            info.first = a.first;
            if (a.nullable)
                info.first.insert(b.first.begin(), b.first.end());
            info.last = b.last;
            if (b.nullable)
                info.last.insert(a.last.begin(), a.last.end());
            break;
        }
        case RegexKind::Union: {
            auto a = visit(*r.left);
            auto b = visit(*r.right);
            info.nullable = a.nullable || b.nullable;
            info.first = a.first;
            info.first.insert(b.first.begin(), b.first.end());
            info.last = a.last;
            info.last.insert(b.last.begin(), b.last.end());
            break;
        }
        case RegexKind::Star: {
            info = visit(*r.left);
            link(info.last, info.first);
            info.nullable = true;
            break;
        }
        case RegexKind::Complement:
            throw std::logic_error("position automaton requires a complement-free regex");
        }
        return info;
    }
};

/// Copies `src` into `dst` and returns the state offset.
State append(Nfa& dst, const Nfa& src)
{
    auto offset = static_cast<State>(dst.state_count());
    for (State q = 0; q < src.state_count(); ++q)
        dst.add_state(src.is_final(q));
    for (State q = 0; q < src.state_count(); ++q)
        for (Symbol s = 0; s < src.alphabet().size(); ++s)
            for (State p : src.successors(q, s))
                dst.add_transition(q + offset, s, p + offset);
    return offset;
}

/// Adds to `from` a copy of every transition leaving `source`.
void copy_outgoing(Nfa& m, State source, State from)
{
    for (Symbol s = 0; s < m.alphabet().size(); ++s) {
        auto targets = m.successors(source, s);
        for (State p : targets)
            m.add_transition(from, s, p);
    }
}

template <typename Accepts>
Nfa subset_construction(const Nfa& m, std::size_t budget, Accepts accepts)
{
    Nfa out(m.alphabet());
    std::map<std::vector<State>, State> ids;
    std::deque<std::vector<State>> work;
    auto intern = [&](std::vector<State> subset) {
        auto it = ids.find(subset);
        if (it != ids.end())
            return it->second;
        if (ids.size() >= budget)
            throw BlowupLimitExceeded(budget);
        State id = out.add_state(accepts(subset));
        ids.emplace(subset, id);
        work.push_back(std::move(subset));
        return id;
    };
    std::vector<State> start;
    if (m.state_count() > 0)
        start.push_back(m.initial());
    out.set_initial(intern(start));
    while (!work.empty()) {
        auto subset = std::move(work.front());
        work.pop_front();
        State from = ids.at(subset);
        for (Symbol s = 0; s < m.alphabet().size(); ++s) {
            std::set<State> next;
            for (State q : subset)
                for (State p : m.successors(q, s))
                    next.insert(p);
            State to = intern(std::vector<State>(next.begin(), next.end()));
            out.add_transition(from, s, to);
        }
    }
    return out;
}

} // namespace

Nfa glushkov(const Regex& r, const Alphabet& alphabet) { return Glushkov(alphabet).build(r); }

Nfa concat_nfa(const Nfa& a, const Nfa& b)
{
    Nfa out(a.alphabet());
    append(out, a);
    State offset = append(out, b);
    State b_init = b.initial() + offset;
    for (State f : a.finals()) {
        copy_outgoing(out, b_init, f);
        out.set_final(f, b.is_final(b.initial()));
    }
    out.set_initial(a.initial());
    return trim(out);
}

Nfa union_nfa(const Nfa& a, const Nfa& b)
{
    Nfa out(a.alphabet());
    State init = out.add_state(a.is_final(a.initial()) || b.is_final(b.initial()));
    State oa = append(out, a);
    State ob = append(out, b);
    copy_outgoing(out, a.initial() + oa, init);
    copy_outgoing(out, b.initial() + ob, init);
    out.set_initial(init);
    return trim(out);
}

Nfa star_nfa(const Nfa& a)
{
    Nfa out(a.alphabet());
    State init = out.add_state(true);
    State offset = append(out, a);
    State a_init = a.initial() + offset;
    copy_outgoing(out, a_init, init);
    for (State f : a.finals())
        copy_outgoing(out, a_init, f + offset);
    out.set_initial(init);
    return trim(out);
}

Nfa determinize(const Nfa& m, std::size_t state_budget)
{
    return subset_construction(m, state_budget, [&](const std::vector<State>& subset) {
        for (State q : subset)
            if (m.is_final(q))
                return true;
        return false;
    });
}

Nfa determinize_complement(const Nfa& m, std::size_t state_budget)
{
    return subset_construction(m, state_budget, [&](const std::vector<State>& subset) {
        for (State q : subset)
            if (m.is_final(q))
                return false;
        return true;
    });
}

namespace {

Nfa compile_node(const Regex& r, const Alphabet& alphabet, std::size_t state_budget)
{
    if (!has_complement(r))
        return trim(glushkov(r, alphabet));
    switch (r.kind) {
    case RegexKind::Concat:
        return concat_nfa(compile_node(*r.left, alphabet, state_budget), compile_node(*r.right, alphabet, state_budget));
    case RegexKind::Union:
        return union_nfa(compile_node(*r.left, alphabet, state_budget), compile_node(*r.right, alphabet, state_budget));
    case RegexKind::Star:
        return star_nfa(compile_node(*r.left, alphabet, state_budget));
    case RegexKind::Complement:
        return trim(determinize_complement(compile_node(*r.left, alphabet, state_budget), state_budget));
    default:
        return trim(glushkov(r, alphabet));
    }
}

} // namespace

Nfa compile_regex(const Regex& r, const Alphabet& alphabet, std::size_t state_budget)
{
    return merge_bisimilar(compile_node(r, alphabet, state_budget));
}

} // namespace rex
