#ifndef REX_ARITH_LINEAR_SYSTEM_HPP
#define REX_ARITH_LINEAR_SYSTEM_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rex/lengths/progression.hpp"

namespace rex {

enum class Comparison { Le, Eq, Ge, Ne };

/// sum(coeffs[v] * v) cmp rhs
struct LinearConstraint {
    std::map<std::size_t, std::int64_t> coeffs;
    Comparison cmp = Comparison::Le;
    std::int64_t rhs = 0;
};

enum class VarDomain { Integer, Natural };

/// Integer constraints plus, per natural variable, an optional set of
/// admissible values given as progressions (string lengths).
class LinearSystem {
public:
    std::size_t add_variable(std::string name, VarDomain domain);
    /// Restricts a natural variable to the members of `lengths`.
    void set_lengths(std::size_t var, ProgressionSet lengths);
    void add(LinearConstraint c);

    std::size_t variable_count() const { return names_.size(); }
    const std::string& name(std::size_t var) const { return names_[var]; }
    VarDomain domain(std::size_t var) const { return domains_[var]; }
    const std::optional<ProgressionSet>& lengths(std::size_t var) const { return lengths_[var]; }
    const std::vector<LinearConstraint>& constraints() const { return constraints_; }
    std::optional<std::size_t> find(const std::string& name) const;

private:
    std::vector<std::string> names_;
    std::vector<VarDomain> domains_;
    std::vector<std::optional<ProgressionSet>> lengths_;
    std::vector<LinearConstraint> constraints_;
};

/// A witness value does not fit in 64 bits.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// The branch-and-bound node budget ran out before a verdict.
class ArithBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ArithConfig {
    std::size_t node_budget = 200000;
};

struct ArithStats {
    std::size_t lp_solves = 0;
    std::size_t nodes = 0;
    std::size_t progression_branches = 0;
};

/// Returns an assignment in variable order, or nullopt when none exists.
/// The witness is lexicographically least in variable order: naturals
/// minimized, integers minimized in absolute value with ties going to the
/// nonnegative value.
std::optional<std::vector<std::int64_t>> solve_linear_system(const LinearSystem& sys, const ArithConfig& cfg = {},
                                                            ArithStats* stats = nullptr);

/// Maximum of one variable over the rational relaxation (length sets and
/// disequalities dropped), rounded down.
struct RelaxationBound {
    bool feasible = false;
    /// Unset when the relaxation is unbounded in that direction.
    std::optional<std::int64_t> maximum;
};
RelaxationBound relaxation_maximum(const LinearSystem& sys, std::size_t var);

/// Exact re-check of every constraint, domain and progression set.
bool satisfies(const LinearSystem& sys, const std::vector<std::int64_t>& values);

} // namespace rex

#endif
