#ifndef REX_SOLVER_SOLVER_HPP
#define REX_SOLVER_SOLVER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "rex/automata/compile.hpp"
#include "rex/frontend/classify.hpp"
#include "rex/frontend/formula.hpp"
#include "rex/frontend/model.hpp"
#include "rex/numstr/column_automaton.hpp"
#include "rex/oracle/brute_force.hpp"

namespace rex {

enum class UnknownReason { UndecidableFragment, WordEquationsUnsupported, BudgetExceeded, OpenFragment };

/// "undecidable-fragment", "word-equations-unsupported", ...
std::string_view to_string(UnknownReason r);

enum class VerdictKind { Sat, Unsat, Unknown };

struct Verdict {
    VerdictKind kind = VerdictKind::Unknown;
    std::optional<Model> model;
    std::optional<UnknownReason> reason;

    static Verdict sat(Model m) { return {VerdictKind::Sat, std::move(m), std::nullopt}; }
    static Verdict unsat() { return {VerdictKind::Unsat, std::nullopt, std::nullopt}; }
    static Verdict unknown(UnknownReason r) { return {VerdictKind::Unknown, std::nullopt, r}; }
};

struct SolverConfig {
    /// Cap on determinized subsets and on product tuples, per automaton.
    std::size_t state_budget = default_state_budget;
    std::size_t arith_node_budget = 200000;
    std::size_t column_budget = std::size_t{1} << 20;
    /// Largest length tried for a numstr-linked word whose length also occurs
    /// in arithmetic, when the constraints give no bound of their own.
    std::size_t mixed_length_bound = 24;
    /// Bounded search used when the pipeline cannot conclude.
    OracleBounds fallback{5, 16, 2000000};
    /// Writes one Graphviz file per compiled regex when set.
    std::string dump_automata_dir;
    /// Receives the column search frontier, one JSON object per layer.
    FrontierSink frontier;
};

struct SolveStats {
    TheoryTag theory;
    std::size_t skeletons = 0;
    std::size_t plans = 0;
    std::size_t tuples_expanded = 0;
    std::size_t column_configurations = 0;
    bool used_fallback = false;
};

/// Sat models always pass verify_model; a failure throws InternalInconsistency.
/// Unsat is never returned for word equations or undecidable fragments.
Verdict solve(const Formula& f, const SolverConfig& cfg = {}, SolveStats* stats = nullptr);

} // namespace rex

#endif
