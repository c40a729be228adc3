#include "rex/automata/nfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace rex {

Nfa::Nfa(Alphabet alphabet, std::size_t states) : alphabet_(std::move(alphabet))
{
    for (std::size_t i = 0; i < states; ++i)
        add_state();
}

std::vector<State> Nfa::finals() const
{
    std::vector<State> out;
    for (State q = 0; q < state_count(); ++q)
        if (finals_[q])
            out.push_back(q);
    return out;
}

State Nfa::add_state(bool final)
{
    finals_.push_back(final);
    delta_.resize(finals_.size() * alphabet_.size());
    return static_cast<State>(finals_.size() - 1);
}

void Nfa::add_transition(State from, Symbol s, State to)
{
    auto& targets = delta_[index(from, s)];
    auto it = std::lower_bound(targets.begin(), targets.end(), to);
    if (it == targets.end() || *it != to)
        targets.insert(it, to);
}

std::size_t Nfa::transition_count() const
{
    std::size_t n = 0;
    for (const auto& t : delta_)
        n += t.size();
    return n;
}

bool Nfa::is_deterministic() const
{
    return std::all_of(delta_.begin(), delta_.end(), [](const auto& t) { return t.size() <= 1; });
}

bool Nfa::is_complete() const
{
    return std::all_of(delta_.begin(), delta_.end(), [](const auto& t) { return t.size() == 1; });
}

bool nfa_membership(const Nfa& m, std::string_view w)
{
    if (m.state_count() == 0)
        return false;
    std::vector<bool> current(m.state_count(), false);
    current[m.initial()] = true;
    for (char c : w) {
        Symbol s = m.alphabet().require(c);
        std::vector<bool> next(m.state_count(), false);
        for (State q = 0; q < m.state_count(); ++q)
            if (current[q])
                for (State p : m.successors(q, s))
                    next[p] = true;
        current = std::move(next);
    }
    for (State q = 0; q < m.state_count(); ++q)
        if (current[q] && m.is_final(q))
            return true;
    return false;
}

std::vector<bool> reachable_from(const Nfa& m, State from)
{
    std::vector<bool> seen(m.state_count(), false);
    std::vector<State> work{from};
    seen[from] = true;
    while (!work.empty()) {
        State q = work.back();
        work.pop_back();
        for (Symbol s = 0; s < m.alphabet().size(); ++s)
            for (State p : m.successors(q, s))
                if (!seen[p]) {
                    seen[p] = true;
                    work.push_back(p);
                }
    }
    return seen;
}

std::vector<bool> coreachable(const Nfa& m, std::optional<State> target)
{
    std::vector<std::vector<State>> reverse(m.state_count());
    for (State q = 0; q < m.state_count(); ++q)
        for (Symbol s = 0; s < m.alphabet().size(); ++s)
            for (State p : m.successors(q, s))
                reverse[p].push_back(q);
    std::vector<bool> seen(m.state_count(), false);
    std::vector<State> work;
    for (State q = 0; q < m.state_count(); ++q)
        if (target ? q == *target : m.is_final(q)) {
            seen[q] = true;
            work.push_back(q);
        }
    while (!work.empty()) {
        State q = work.back();
        work.pop_back();
        for (State p : reverse[q])
            if (!seen[p]) {
                seen[p] = true;
                work.push_back(p);
            }
    }
    return seen;
}

Nfa trim(const Nfa& m)
{
    if (m.state_count() == 0)
        return m;
    auto reach = reachable_from(m, m.initial());
    auto coreach = coreachable(m);
    std::vector<State> rename(m.state_count(), 0);
    std::vector<bool> keep(m.state_count(), false);
    Nfa out(m.alphabet());
    for (State q = 0; q < m.state_count(); ++q) {
        keep[q] = q == m.initial() || (reach[q] && coreach[q]);
        if (keep[q])
            rename[q] = out.add_state(m.is_final(q));
    }
    out.set_initial(rename[m.initial()]);
    for (State q = 0; q < m.state_count(); ++q) {
        if (!keep[q])
            continue;
        for (Symbol s = 0; s < m.alphabet().size(); ++s)
            for (State p : m.successors(q, s))
                if (keep[p])
                    out.add_transition(rename[q], s, rename[p]);
    }
    return out;
}

Nfa merge_bisimilar(const Nfa& m)
{
    if (m.state_count() == 0)
        return m;
    std::vector<std::size_t> block(m.state_count());
    for (State q = 0; q < m.state_count(); ++q)
        block[q] = m.is_final(q) ? 1 : 0;
    std::size_t blocks = 0;
    for (;;) {
        using Signature = std::pair<std::size_t, std::vector<std::set<std::size_t>>>;
        std::map<Signature, std::size_t> ids;
        std::vector<std::size_t> refined(m.state_count());
        for (State q = 0; q < m.state_count(); ++q) {
            Signature sig{block[q], {}};
            for (Symbol s = 0; s < m.alphabet().size(); ++s) {
                std::set<std::size_t> targets;
                for (State p : m.successors(q, s))
                    targets.insert(block[p]);
                sig.second.push_back(std::move(targets));
            }
            refined[q] = ids.try_emplace(std::move(sig), ids.size()).first->second;
        }
        block = std::move(refined);
        if (ids.size() == blocks)
            break;
        blocks = ids.size();
    }
    // Number blocks so the initial state stays first.
    std::vector<State> rename(blocks, 0);
    std::vector<bool> named(blocks, false);
    Nfa out(m.alphabet());
    auto name = [&](State q) {
        if (!named[block[q]]) {
            rename[block[q]] = out.add_state(m.is_final(q));
            named[block[q]] = true;
        }
        return rename[block[q]];
    };
    out.set_initial(name(m.initial()));
    for (State q = 0; q < m.state_count(); ++q)
        name(q);
    for (State q = 0; q < m.state_count(); ++q)
        for (Symbol s = 0; s < m.alphabet().size(); ++s)
            for (State p : m.successors(q, s))
                out.add_transition(rename[block[q]], s, rename[block[p]]);
    return out;
}

std::optional<std::string> word_of_length(const Nfa& m, std::size_t length)
{
    if (m.state_count() == 0)
        return std::nullopt;
    // good[k][q]: some final state is reachable from q in exactly k steps.
    std::vector<std::vector<bool>> good(length + 1, std::vector<bool>(m.state_count(), false));
    for (State q = 0; q < m.state_count(); ++q)
        good[0][q] = m.is_final(q);
    for (std::size_t k = 1; k <= length; ++k)
        for (State q = 0; q < m.state_count(); ++q)
            for (Symbol s = 0; s < m.alphabet().size() && !good[k][q]; ++s)
                for (State p : m.successors(q, s))
                    if (good[k - 1][p]) {
                        good[k][q] = true;
                        break;
                    }
    if (!good[length][m.initial()])
        return std::nullopt;
    std::string word;
    std::vector<State> current{m.initial()};
    for (std::size_t remaining = length; remaining > 0; --remaining) {
        for (Symbol s = 0; s < m.alphabet().size(); ++s) {
            std::vector<State> next;
            for (State q : current)
                for (State p : m.successors(q, s))
                    if (good[remaining - 1][p])
                        next.push_back(p);
            if (!next.empty()) {
                std::sort(next.begin(), next.end());
                next.erase(std::unique(next.begin(), next.end()), next.end());
                word += m.alphabet()[s];
                current = std::move(next);
                break;
            }
        }
    }
    return word;
}

std::string to_dot(const Nfa& m, std::string_view name)
{
    std::ostringstream out;
    out << "digraph " << name << " {\n  rankdir=LR;\n  start [shape=point];\n";
    for (State q = 0; q < m.state_count(); ++q)
        out << "  q" << q << " [shape=" << (m.is_final(q) ? "doublecircle" : "circle") << "];\n";
    if (m.state_count() > 0)
        out << "  start -> q" << m.initial() << ";\n";
    for (State q = 0; q < m.state_count(); ++q)
        for (Symbol s = 0; s < m.alphabet().size(); ++s)
            for (State p : m.successors(q, s))
                out << "  q" << q << " -> q" << p << " [label=\"" << m.alphabet()[s] << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace rex
