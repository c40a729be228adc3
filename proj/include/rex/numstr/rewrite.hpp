#ifndef REX_NUMSTR_REWRITE_HPP
#define REX_NUMSTR_REWRITE_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rex/frontend/formula.hpp"

namespace rex {

/// numstr over a concatenation of several items.
class UnsupportedPattern : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Ties an integer variable to the binary reading of a string variable.
struct NumstrLink {
    std::string number;
    std::string word;
    bool positive = true;
    /// Shape every linked word must have: (0|1)*, or (0|1)+ in strict mode.
    RegexPtr representation;
};

/// The regex every linked word must match.
RegexPtr binary_words(bool strict);

/// Eliminates numstr atoms whose arguments are not an integer variable and
/// a string variable:
///   numstr(n, x)   becomes  x in 0*bin(n)   (0* for n = 0 outside strict mode)
///   numstr(t, w)   becomes  t = bin(w)
///   numstr(t, x)   becomes  j = t and numstr(j, x) for a fresh j
/// Remaining numstr atoms are returned as links, one per atom, in atom order.
/// Requires an NNF formula; throws UnsupportedPattern on concatenations.
std::pair<Formula, std::vector<NumstrLink>> rewrite_numstr(const Formula& f);

} // namespace rex

#endif
