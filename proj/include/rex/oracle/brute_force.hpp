#ifndef REX_ORACLE_BRUTE_FORCE_HPP
#define REX_ORACLE_BRUTE_FORCE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>

#include "rex/automata/lazy_product.hpp"
#include "rex/automata/nfa.hpp"
#include "rex/frontend/formula.hpp"
#include "rex/frontend/model.hpp"

namespace rex {

class OracleBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleBounds {
    std::size_t max_len = 6;
    std::int64_t max_int = 32;
    std::size_t node_budget = 50'000'000;
};

enum class OracleStatus { Sat, BoundedUnsat };

struct OracleResult {
    OracleStatus status = OracleStatus::BoundedUnsat;
    std::optional<Model> model;
    std::size_t nodes = 0;
};

/// Enumerates strings up to max_len (shortlex, alphabet order) and integers in
/// [-max_int, max_int] (0, 1, -1, 2, -2, ...) in declaration order, pruning with
/// three-valued evaluation. The first satisfying model in that order is returned.
OracleResult brute_force_solve(const Formula& f, const OracleBounds& bounds);

/// Exactly the accepted lengths up to max_len.
std::set<std::size_t> nfa_length_set(const Nfa& m, std::size_t max_len);
std::set<std::size_t> nfa_length_set(LazyProduct& p, std::size_t max_len);

} // namespace rex

#endif
