#ifndef REX_NUMSTR_COLUMN_AUTOMATON_HPP
#define REX_NUMSTR_COLUMN_AUTOMATON_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rex/arith/linear_system.hpp"
#include "rex/automata/lazy_product.hpp"
#include "rex/lengths/progression.hpp"

namespace rex {

enum class TapeKind {
    /// Two's complement; the first column is the sign bit.
    Integer,
    /// Plain binary with leading zeros.
    Natural,
    /// A string variable over {0,1}: blanks first, then its letters.
    Word,
};

struct Tape {
    std::string name;
    TapeKind kind = TapeKind::Natural;
    /// Word tapes: the letters after the blank prefix must be accepted here.
    /// Null accepts every bit string.
    std::shared_ptr<LazyProduct> language;
    /// Word tapes: reject the empty word.
    bool nonempty = false;
    /// Word tapes: number of letters, when fixed.
    std::optional<std::size_t> exact_length;
    /// Natural tapes: admissible values.
    std::optional<ProgressionSet> values;
};

/// Tapes read in lockstep, most significant column first, with linear
/// constraints over tape values (coefficients keyed by tape index).
struct ColumnAutomaton {
    std::vector<Tape> tapes;
    std::vector<LinearConstraint> constraints;
};

struct ColumnWitness {
    std::size_t columns = 0;
    /// Tape value (for Word tapes, the binary value of the word).
    std::vector<std::int64_t> values;
    /// Word tapes: the word with blanks removed; other tapes: the raw bits.
    std::vector<std::string> words;
};

struct ColumnStats {
    std::size_t configurations = 0;
    std::size_t transitions = 0;
};

class ColumnBudgetExceeded : public std::runtime_error {
public:
    explicit ColumnBudgetExceeded(std::size_t configurations);
};

/// Receives one JSON object per search layer.
using FrontierSink = std::function<void(const std::string& json)>;

struct ColumnSearch {
    std::size_t budget = std::size_t{1} << 20;
    ColumnStats* stats = nullptr;
    FrontierSink frontier;
};

/// Saturation bound for a partial sum: |rhs| + sum of |coefficients|.
/// Once the running value 2s + (column) leaves [-bound, bound] it can never
/// return, since 2(bound+1) - sum|a| > bound, and its side of rhs is fixed.
std::int64_t saturation_bound(const LinearConstraint& c);

/// Breadth-first search over columns with memoized configurations
/// (partial sums, per-tape automaton states, blank flags). Returns a witness
/// with the fewest columns, or nullopt when every configuration is exhausted.
std::optional<ColumnWitness> multitape_emptiness(const ColumnAutomaton& spec, const ColumnSearch& search = {});

} // namespace rex

#endif
