#ifndef REX_FRONTEND_PARSER_HPP
#define REX_FRONTEND_PARSER_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rex/frontend/formula.hpp"
#include "rex/frontend/model.hpp"

namespace rex {

enum class ParseErrorKind { Syntax, Sort, UnknownSymbol };

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, std::size_t line, std::size_t col, const std::string& what);
    ParseErrorKind kind() const { return kind_; }
    std::size_t line() const { return line_; }
    std::size_t col() const { return col_; }

private:
    ParseErrorKind kind_;
    std::size_t line_;
    std::size_t col_;
};

class SyntaxError : public ParseError {
public:
    SyntaxError(std::size_t line, std::size_t col, const std::string& what)
        : ParseError(ParseErrorKind::Syntax, line, col, what) {}
};

class SortError : public ParseError {
public:
    SortError(std::size_t line, std::size_t col, const std::string& what)
        : ParseError(ParseErrorKind::Sort, line, col, what) {}
};

class UnknownSymbol : public ParseError {
public:
    UnknownSymbol(std::size_t line, std::size_t col, const std::string& what)
        : ParseError(ParseErrorKind::UnknownSymbol, line, col, what) {}
};

/// Parses the supported SMT-LIB subset. Multiple asserts are conjoined.
Formula parse_script(std::string_view text);

/// Reads `define-fun` entries, optionally wrapped in `(model ...)`; other
/// top-level tokens such as a leading `sat` are skipped.
Model parse_model(std::string_view text);

} // namespace rex

#endif
