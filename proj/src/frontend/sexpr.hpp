#ifndef REX_SRC_FRONTEND_SEXPR_HPP
#define REX_SRC_FRONTEND_SEXPR_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace rex::detail {

struct SExpr {
    enum class Kind { Symbol, Keyword, String, Numeral, List };
    Kind kind = Kind::Symbol;
    std::string text;
    std::vector<SExpr> items;
    std::size_t line = 1;
    std::size_t col = 1;

    bool is_list() const { return kind == Kind::List; }
    bool is_symbol(std::string_view s) const { return kind == Kind::Symbol && text == s; }
    /// Head symbol of a non-empty list, or "" otherwise.
    std::string_view head() const;
};

/// Throws SyntaxError on unbalanced parentheses or unterminated literals.
std::vector<SExpr> read_sexprs(std::string_view text);

} // namespace rex::detail

#endif
