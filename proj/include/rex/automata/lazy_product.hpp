#ifndef REX_AUTOMATA_LAZY_PRODUCT_HPP
#define REX_AUTOMATA_LAZY_PRODUCT_HPP

#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rex/automata/compile.hpp"
#include "rex/automata/nfa.hpp"

namespace rex {

enum class MemberMode { AsIs, Determinized, Complemented };

/// One factor of a product. Overrides replace the initial state and, when
/// `end` is set, the accepting condition becomes "in state `end`".
struct ProductMember {
    std::shared_ptr<const Nfa> nfa;
    MemberMode mode = MemberMode::AsIs;
    std::optional<State> start;
    std::optional<State> end;
};

/// Intersection whose tuple states are created only when reached.
/// Determinized members contribute subsets simulated on the fly.
class LazyProduct {
public:
    using TupleId = std::uint32_t;

    explicit LazyProduct(std::vector<ProductMember> members, std::size_t state_budget = default_state_budget);

    const Alphabet& alphabet() const { return alphabet_; }
    TupleId initial() const { return 0; }
    bool is_final(TupleId t) const { return finals_[t]; }
    /// Successor tuples on `s`; computed on first request and cached.
    const std::vector<TupleId>& successors(TupleId t, Symbol s);

    /// Number of tuple states allocated so far; all of them are reachable.
    std::size_t tuples_expanded() const { return tuples_.size(); }

    /// Reachable part as an explicit automaton (tuple ids become state numbers).
    Nfa materialize();

private:
    struct Subsets {
        std::vector<std::vector<State>> sets;
        std::map<std::vector<State>, std::uint32_t> ids;
        std::vector<std::vector<std::uint32_t>> next;
    };

    std::vector<ProductMember> members_;
    std::vector<Subsets> subsets_;
    Alphabet alphabet_;
    std::size_t budget_;
    std::vector<std::vector<std::uint32_t>> tuples_;
    std::vector<bool> finals_;
    std::deque<std::vector<std::optional<std::vector<TupleId>>>> delta_;
    std::map<std::vector<std::uint32_t>, TupleId> ids_;

    TupleId intern(std::vector<std::uint32_t> tuple);
    std::uint32_t intern_subset(std::size_t member, std::vector<State> subset);
    std::uint32_t subset_step(std::size_t member, std::uint32_t subset, Symbol s);
    bool component_final(std::size_t member, std::uint32_t component) const;
};

struct EmptinessResult {
    bool empty = true;
    /// Shortest accepted word, least in alphabet order among the shortest.
    std::optional<std::string> witness;
};

EmptinessResult is_empty(LazyProduct& p);

} // namespace rex

#endif
