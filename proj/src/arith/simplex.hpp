#ifndef REX_SRC_ARITH_SIMPLEX_HPP
#define REX_SRC_ARITH_SIMPLEX_HPP

#include <vector>

#include <gmpxx.h>

namespace rex::detail {

/// minimize objective . u  subject to  rows . u <= bounds,  u >= 0
struct LpProblem {
    std::vector<std::vector<mpq_class>> rows;
    std::vector<mpq_class> bounds;
    std::vector<mpq_class> objective;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    std::vector<mpq_class> point;
    mpq_class value;
};

/// Dense two-phase simplex with Bland's rule, exact rational arithmetic.
LpResult solve_lp(const LpProblem& p);

} // namespace rex::detail

#endif
