#include "sexpr.hpp"

#include <cctype>

#include "rex/frontend/parser.hpp"

namespace rex::detail {

std::string_view SExpr::head() const
{
    if (kind != Kind::List || items.empty() || items.front().kind != Kind::Symbol)
        return {};
    return items.front().text;
}

namespace {

class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    std::vector<SExpr> read_all()
    {
        std::vector<SExpr> out;
        skip_space();
        while (pos_ < text_.size()) {
            out.push_back(read());
            skip_space();
        }
        return out;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;

    char peek() const { return text_[pos_]; }

    void advance()
    {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space()
    {
        while (pos_ < text_.size()) {
            char c = peek();
            if (c == ';') {
                while (pos_ < text_.size() && peek() != '\n')
                    advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                return;
            }
        }
    }

    static bool is_delimiter(char c)
    {
        return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '"' || c == ';';
    }

    SExpr read()
    {
        SExpr e;
        e.line = line_;
        e.col = col_;
        char c = peek();
        if (c == '(') {
            advance();
            e.kind = SExpr::Kind::List;
            skip_space();
            while (pos_ < text_.size() && peek() != ')') {
                e.items.push_back(read());
                skip_space();
            }
            if (pos_ >= text_.size())
                throw SyntaxError(e.line, e.col, "unbalanced '('");
            advance();
            return e;
        }
        if (c == ')')
            throw SyntaxError(line_, col_, "unexpected ')'");
        if (c == '"') {
            advance();
            e.kind = SExpr::Kind::String;
            for (;;) {
                if (pos_ >= text_.size())
                    throw SyntaxError(e.line, e.col, "unterminated string literal");
                char d = peek();
                advance();
                if (d == '"') {
                    if (pos_ < text_.size() && peek() == '"') {
                        e.text += '"';
                        advance();
                        continue;
                    }
                    break;
                }
                e.text += d;
            }
            return e;
        }
        if (c == '|') {
            advance();
            e.kind = SExpr::Kind::Symbol;
            while (pos_ < text_.size() && peek() != '|') {
                e.text += peek();
                advance();
            }
            if (pos_ >= text_.size())
                throw SyntaxError(e.line, e.col, "unterminated quoted symbol");
            advance();
            return e;
        }
        while (pos_ < text_.size() && !is_delimiter(peek())) {
            e.text += peek();
            advance();
        }
        bool numeral = !e.text.empty();
        for (char d : e.text)
            numeral = numeral && std::isdigit(static_cast<unsigned char>(d));
        if (numeral)
            e.kind = SExpr::Kind::Numeral;
        else if (e.text.front() == ':')
            e.kind = SExpr::Kind::Keyword;
        else
            e.kind = SExpr::Kind::Symbol;
        return e;
    }
};

} // namespace

std::vector<SExpr> read_sexprs(std::string_view text) { return Reader(text).read_all(); }

} // namespace rex::detail
