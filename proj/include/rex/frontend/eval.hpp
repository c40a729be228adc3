#ifndef REX_FRONTEND_EVAL_HPP
#define REX_FRONTEND_EVAL_HPP

#include <optional>
#include <string_view>

#include "rex/frontend/formula.hpp"
#include "rex/frontend/model.hpp"

namespace rex {

/// Direct recursive matcher; complement is taken relative to alphabet*.
/// Words with foreign symbols never match.
bool regex_matches(const Regex& r, std::string_view w, const Alphabet& alphabet);

/// Truth value of an atom, or nullopt when some variable it uses is unassigned.
std::optional<bool> evaluate_atom(const Formula& f, const Atom& a, const Model& m);

/// Three-valued evaluation under a partial model.
std::optional<bool> evaluate_partial(const Formula& f, const Model& m);

/// True iff `m` is total over the declarations, uses only alphabet symbols and satisfies `f`.
bool verify_model(const Formula& f, const Model& m);

} // namespace rex

#endif
