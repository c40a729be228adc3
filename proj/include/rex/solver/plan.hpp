#ifndef REX_SOLVER_PLAN_HPP
#define REX_SOLVER_PLAN_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rex/automata/compile.hpp"
#include "rex/automata/lazy_product.hpp"
#include "rex/solver/skeleton.hpp"

namespace rex {

/// A model failed its own re-check; always a bug.
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Automaton used for one membership literal. Negative literals over a single
/// variable keep the original automaton in Complemented mode; other negative
/// literals use the complete complement automaton as-is.
struct CompiledAtom {
    std::shared_ptr<const Nfa> nfa;
    MemberMode mode = MemberMode::AsIs;
};

/// Compiles each regex once; complements are cached separately.
class AutomatonCache {
public:
    AutomatonCache(Alphabet alphabet, std::size_t state_budget, std::string dump_dir = {});

    std::shared_ptr<const Nfa> compiled(const RegexPtr& r);
    std::shared_ptr<const Nfa> complemented(const RegexPtr& r);
    CompiledAtom atom(const MembershipAtom& m);
    /// Accepts every word.
    std::shared_ptr<const Nfa> universal();
    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t state_budget() const { return budget_; }

private:
    Alphabet alphabet_;
    std::size_t budget_;
    std::string dump_dir_;
    std::map<RegexPtr, std::shared_ptr<const Nfa>> plain_;
    std::map<RegexPtr, std::shared_ptr<const Nfa>> negated_;
    std::shared_ptr<const Nfa> universal_;
};

/// One variable occurrence: the run between `start` and `end`. An unset
/// start means the initial state, an unset end means any final state.
struct Segment {
    std::string var;
    std::optional<State> start;
    std::optional<State> end;
    MemberMode mode = MemberMode::AsIs;
    friend bool operator==(const Segment&, const Segment&) = default;
};

/// Segments for every variable occurrence of one membership literal.
struct AtomPlan {
    std::vector<Segment> segments;
    friend bool operator==(const AtomPlan&, const AtomPlan&) = default;
};

/// One AtomPlan per entry of AtomLists::regular.
struct OccurrencePlan {
    std::vector<AtomPlan> atoms;
    friend bool operator==(const OccurrencePlan&, const OccurrencePlan&) = default;
};

enum class PlanPruning {
    /// Keep state pairs connected by some path.
    Reachability,
    /// Also drop plans under which some variable's product is empty.
    Product,
};

/// Enumerates chained state choices depth-first, literal by literal and
/// occurrence by occurrence, in increasing state order. Constant segments are
/// simulated directly. `visit` returns false to stop.
void for_each_plan(const AtomLists& lists, const std::vector<CompiledAtom>& compiled, PlanPruning pruning,
                   std::size_t state_budget, const std::function<bool(const OccurrencePlan&)>& visit);

std::vector<OccurrencePlan> plan_occurrences(const AtomLists& lists, const std::vector<CompiledAtom>& compiled,
                                             PlanPruning pruning, std::size_t state_budget = default_state_budget);

/// Product of one member per occurrence of `var`; the universal automaton when
/// `var` does not occur.
std::shared_ptr<LazyProduct> build_var_automaton(const std::string& var, const OccurrencePlan& plan,
                                                 const std::vector<CompiledAtom>& compiled, AutomatonCache& cache);

/// Lexicographically least accepted word of exactly `length` letters.
/// Throws InternalInconsistency when there is none.
std::string reconstruct_word(LazyProduct& product, std::uint64_t length);

} // namespace rex

#endif
