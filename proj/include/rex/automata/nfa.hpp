#ifndef REX_AUTOMATA_NFA_HPP
#define REX_AUTOMATA_NFA_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rex/frontend/alphabet.hpp"

namespace rex {

using State = std::uint32_t;

/// Epsilon-free automaton with a single initial state.
class Nfa {
public:
    Nfa() = default;
    explicit Nfa(Alphabet alphabet, std::size_t states = 0);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t state_count() const { return finals_.size(); }
    State initial() const { return initial_; }
    bool is_final(State q) const { return finals_[q]; }
    std::vector<State> finals() const;

    /// Sorted, duplicate-free.
    const std::vector<State>& successors(State q, Symbol s) const { return delta_[index(q, s)]; }

    State add_state(bool final = false);
    void set_initial(State q) { initial_ = q; }
    void set_final(State q, bool final = true) { finals_[q] = final; }
    void add_transition(State from, Symbol s, State to);

    std::size_t transition_count() const;
    bool is_deterministic() const;
    /// Deterministic and every (state, symbol) has a successor.
    bool is_complete() const;

private:
    Alphabet alphabet_;
    State initial_ = 0;
    std::vector<bool> finals_;
    std::vector<std::vector<State>> delta_;

    std::size_t index(State q, Symbol s) const { return static_cast<std::size_t>(q) * alphabet_.size() + s; }
};

/// Subset simulation. Throws ForeignSymbol.
bool nfa_membership(const Nfa& m, std::string_view w);

/// States reachable from `from` (inclusive).
std::vector<bool> reachable_from(const Nfa& m, State from);
/// States from which some final state, or `target` if given, is reachable (inclusive).
std::vector<bool> coreachable(const Nfa& m, std::optional<State> target = std::nullopt);

/// Keeps the initial state plus every state that is both reachable and co-reachable.
Nfa trim(const Nfa& m);

/// Merges states with identical finality and identical successor blocks (forward bisimulation).
Nfa merge_bisimilar(const Nfa& m);

/// Lexicographically least word of exactly `length` symbols, using alphabet order.
std::optional<std::string> word_of_length(const Nfa& m, std::size_t length);

/// Graphviz rendering for debugging.
std::string to_dot(const Nfa& m, std::string_view name = "nfa");

} // namespace rex

#endif
