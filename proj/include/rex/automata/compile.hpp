#ifndef REX_AUTOMATA_COMPILE_HPP
#define REX_AUTOMATA_COMPILE_HPP

#include <cstddef>
#include <stdexcept>

#include "rex/automata/nfa.hpp"
#include "rex/frontend/regex.hpp"

namespace rex {

inline constexpr std::size_t default_state_budget = std::size_t{1} << 18;

/// Determinization produced more states than allowed.
class BlowupLimitExceeded : public std::runtime_error {
public:
    explicit BlowupLimitExceeded(std::size_t states)
        : std::runtime_error("determinization exceeded " + std::to_string(states) + " states"), states_(states) {}
    std::size_t states() const { return states_; }

private:
    std::size_t states_;
};

/// Position automaton with one state per literal plus an initial state.
Nfa glushkov(const Regex& r, const Alphabet& alphabet);

/// Complement-free subtrees use the position automaton; complements are
/// determinized and flipped, then combined by epsilon-free concatenation,
/// union and star.
Nfa compile_regex(const Regex& r, const Alphabet& alphabet, std::size_t state_budget = default_state_budget);

/// Complete DFA for alphabet* minus L(m).
Nfa determinize_complement(const Nfa& m, std::size_t state_budget = default_state_budget);

/// Complete DFA for L(m).
Nfa determinize(const Nfa& m, std::size_t state_budget = default_state_budget);

Nfa concat_nfa(const Nfa& a, const Nfa& b);
Nfa union_nfa(const Nfa& a, const Nfa& b);
Nfa star_nfa(const Nfa& a);

} // namespace rex

#endif
