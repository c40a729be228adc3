#ifndef REX_FRONTEND_CLASSIFY_HPP
#define REX_FRONTEND_CLASSIFY_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "rex/frontend/formula.hpp"

namespace rex {

enum class Decidability { PSpaceComplete, Decidable, Undecidable, Open };

std::string_view to_string(Decidability d);

struct TheoryFlags {
    bool length = false;
    bool numstr = false;
    bool concat = false;
    bool word_equations = false;
    friend bool operator==(const TheoryFlags&, const TheoryFlags&) = default;
};

struct TheoryTag {
    /// 'e' iff some regex contains a complement, 's' otherwise.
    char base = 's';
    TheoryFlags flags;
    std::size_t complement_depth = 0;
    Decidability decidability = Decidability::PSpaceComplete;

    /// "A_sln", "A_elc", or "A=_sl" when word equations are present.
    std::string theory_name() const;
};

/// Pure function of (base, flags).
Decidability decidability_of(char base, const TheoryFlags& flags);

TheoryTag classify_theory(const Formula& f);

/// Maximum complement depth over every regex in the formula.
std::size_t formula_cdepth(const Formula& f);

/// One-line JSON object {file, base, flags, cdepth, theory_name, decidability}.
std::string classification_json(std::string_view file, const TheoryTag& tag);

} // namespace rex

#endif
