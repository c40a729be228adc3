#ifndef REX_ENCODINGS_ENCODINGS_HPP
#define REX_ENCODINGS_ENCODINGS_HPP

#include <string>
#include <vector>

#include "rex/frontend/classify.hpp"
#include "rex/frontend/formula.hpp"

namespace rex {

/// A pattern constant uses letters other than 0 and 1, so the numstr
/// atoms of the encoding cannot hold for it.
struct AlphabetWarning {
    std::string constant;
    std::string message() const;
};

struct Encoding {
    Formula formula;
    /// Classification of `formula`.
    TheoryTag tag;
    std::vector<AlphabetWarning> warnings;
};

/// Satisfiable by an extension of an assignment h iff |h(a)| = |h(b)|.
/// Constant letters outside {0,1} are replaced by 0, which keeps lengths;
/// variables must take binary values.
Encoding encode_eq_len(const Pattern& a, const Pattern& b);

/// Satisfiable by an extension of h iff h(a) = h(b), for binary patterns.
Encoding encode_eq(const Pattern& a, const Pattern& b);

/// Satisfiable by an extension of h iff |h(a)| <= |h(b)|.
Encoding encode_leq_len(const Pattern& a, const Pattern& b);

} // namespace rex

#endif
