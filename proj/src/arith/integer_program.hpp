#ifndef REX_SRC_ARITH_INTEGER_PROGRAM_HPP
#define REX_SRC_ARITH_INTEGER_PROGRAM_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "rex/arith/linear_system.hpp"

namespace rex::detail {

/// coeffs . x (= or <=) rhs
struct IntRow {
    std::vector<mpz_class> coeffs;
    mpz_class rhs;
};

struct IntegerProgram {
    std::size_t vars = 0;
    std::vector<IntRow> equalities;
    std::vector<IntRow> inequalities;
};

/// How the witness value of one variable is chosen, in priority order.
struct LexTarget {
    std::size_t var = 0;
    /// Minimize the value itself rather than its absolute value.
    bool natural = true;
};

class SearchBudget {
public:
    SearchBudget(std::size_t limit, ArithStats* stats) : limit_(limit), stats_(stats) {}
    void charge_node();
    void charge_lp();

private:
    std::size_t limit_;
    std::size_t used_ = 0;
    ArithStats* stats_;
};

/// Radius 2^((vars + rows) * L) where L is the total bit-length of the
/// coefficient matrix with its right-hand side. If an integer solution
/// exists, one lies within this distance of the origin in every coordinate.
mpz_class ball_radius(const IntegerProgram& p);

/// Rational relaxation feasibility.
bool relaxation_feasible(const IntegerProgram& p, SearchBudget& budget);

/// Lexicographically least integer point by `order`, or nullopt if the
/// program has no integer solution.
std::optional<std::vector<mpz_class>> lexmin_integer_point(const IntegerProgram& p, const std::vector<LexTarget>& order,
                                                           SearchBudget& budget);

} // namespace rex::detail

#endif
