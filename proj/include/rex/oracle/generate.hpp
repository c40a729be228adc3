#ifndef REX_ORACLE_GENERATE_HPP
#define REX_ORACLE_GENERATE_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "rex/automata/nfa.hpp"
#include "rex/frontend/formula.hpp"
#include "rex/frontend/regex.hpp"

namespace rex {

using Rng = std::mt19937_64;

/// Random regex with exactly `size` nodes whose complement depth is at most `max_cdepth`.
RegexPtr random_regex(Rng& rng, const Alphabet& alphabet, std::size_t size, std::size_t max_cdepth = 0);

/// Random regex with exactly `literals` literal leaves, no complement.
RegexPtr random_regex_with_literals(Rng& rng, const Alphabet& alphabet, std::size_t literals);

/// Random automaton on `states` states; each (q, a, p) is present with probability `density`.
Nfa random_nfa(Rng& rng, const Alphabet& alphabet, std::size_t states, double density = 0.25, double final_share = 0.3);

struct FormulaShape {
    std::size_t max_string_vars = 3;
    std::size_t max_atoms = 4;
    std::size_t max_regex_size = 12;
    std::int64_t max_length_constant = 6;
    /// Share of membership atoms among all atoms.
    double membership_share = 0.6;
};

/// Random formula over regex membership, length comparisons and concatenation.
Formula random_slc_formula(Rng& rng, const Alphabet& alphabet, const FormulaShape& shape = {});

struct NumstrShape {
    std::size_t max_string_vars = 2;
    std::size_t max_int_vars = 2;
    std::size_t max_atoms = 4;
    std::size_t max_regex_size = 8;
    std::size_t max_cdepth = 0;
    std::int64_t max_constant = 12;
    /// Allow len(x) inside integer terms.
    bool lengths = false;
};

/// Random formula over {0,1} with single-variable memberships, numstr atoms
/// and integer comparisons.
Formula random_numstr_formula(Rng& rng, const NumstrShape& shape = {});

/// x in R_1 and ... and x in R_k, each R_i with `literals` literals.
Formula intersection_family(Rng& rng, const Alphabet& alphabet, std::size_t k, std::size_t literals);

/// Number of tuples reachable in the explicit product of `members`, by plain BFS.
std::size_t explicit_product_reachable(const std::vector<Nfa>& members);

} // namespace rex

#endif
