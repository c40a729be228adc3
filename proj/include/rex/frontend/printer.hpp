#ifndef REX_FRONTEND_PRINTER_HPP
#define REX_FRONTEND_PRINTER_HPP

#include <string>
#include <string_view>

#include "rex/frontend/formula.hpp"
#include "rex/frontend/model.hpp"

namespace rex {

std::string quote_literal(std::string_view s);
std::string print_pattern(const Pattern& p);
std::string print_term(const LinearTerm& t);
std::string print_atom(const Atom& a);

/// Full script with alphabet, declarations and one assert; parse_script reads it back.
std::string print_script(const Formula& f);

/// `(model (define-fun x () String "...") ...)` over the formula's declaration order.
std::string print_model(const Formula& f, const Model& m);

} // namespace rex

#endif
