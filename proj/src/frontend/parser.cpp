#include "rex/frontend/parser.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>

#include "sexpr.hpp"

namespace rex {

ParseError::ParseError(ParseErrorKind kind, std::size_t line, std::size_t col, const std::string& what)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + what),
      kind_(kind), line_(line), col_(col)
{
}

namespace {

using detail::SExpr;

[[noreturn]] void syntax(const SExpr& at, const std::string& what) { throw SyntaxError(at.line, at.col, what); }
[[noreturn]] void sort_error(const SExpr& at, const std::string& what) { throw SortError(at.line, at.col, what); }
[[noreturn]] void unknown(const SExpr& at, const std::string& what) { throw UnknownSymbol(at.line, at.col, what); }

std::int64_t numeral_value(const SExpr& e)
{
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(e.text.data(), e.text.data() + e.text.size(), value);
    if (ec != std::errc() || ptr != e.text.data() + e.text.size())
        syntax(e, "numeral out of range: " + e.text);
    return value;
}

void require_arity(const SExpr& e, std::size_t args)
{
    if (e.items.size() != args + 1)
        syntax(e, "'" + std::string(e.head()) + "' expects " + std::to_string(args) + " argument(s)");
}

void require_min_arity(const SExpr& e, std::size_t args)
{
    if (e.items.size() < args + 1)
        syntax(e, "'" + std::string(e.head()) + "' expects at least " + std::to_string(args) + " argument(s)");
}

void collect_literals(const SExpr& e, std::string& chars, bool& has_numstr)
{
    if (e.kind == SExpr::Kind::String)
        chars += e.text;
    if (e.is_symbol("numstr"))
        has_numstr = true;
    for (const auto& child : e.items)
        collect_literals(child, chars, has_numstr);
}

class ScriptParser {
public:
    Formula run(const std::vector<SExpr>& script)
    {
        formula_.alphabet = infer_alphabet(script);
        std::vector<Node> asserted;
        for (const auto& command : script) {
            if (!command.is_list() || command.items.empty())
                syntax(command, "expected a command");
            auto head = command.head();
            if (head == "declare-fun") {
                require_arity(command, 3);
                if (!command.items[2].is_list() || !command.items[2].items.empty())
                    sort_error(command.items[2], "only nullary functions are supported");
                declare(command.items[1], command.items[3]);
            } else if (head == "declare-const") {
                require_arity(command, 2);
                declare(command.items[1], command.items[2]);
            } else if (head == "assert") {
                require_arity(command, 1);
                asserted.push_back(boolean(command.items[1]));
            } else if (head == "set-info" || head == "set-logic" || head == "set-option" || head == "check-sat"
                       || head == "get-model" || head == "exit") {
                continue;
            } else {
                unknown(command, "unsupported command '" + std::string(head) + "'");
            }
        }
        if (asserted.empty())
            formula_.root = Node::constant(true);
        else
            formula_.root = Node::conjunction(std::move(asserted));
        return std::move(formula_);
    }

private:
    Formula formula_;

    static Alphabet infer_alphabet(const std::vector<SExpr>& script)
    {
        for (const auto& command : script) {
            if (command.head() != "set-info" || command.items.size() != 3)
                continue;
            if (command.items[1].kind == SExpr::Kind::Keyword && command.items[1].text == ":alphabet") {
                if (command.items[2].kind != SExpr::Kind::String)
                    syntax(command.items[2], ":alphabet expects a string literal");
                return Alphabet(command.items[2].text);
            }
        }
        std::string chars;
        bool has_numstr = false;
        for (const auto& command : script)
            if (command.head() != "set-info")
                collect_literals(command, chars, has_numstr);
        if (has_numstr)
            chars += "01";
        std::sort(chars.begin(), chars.end());
        chars.erase(std::unique(chars.begin(), chars.end()), chars.end());
        return Alphabet(chars);
    }

    void declare(const SExpr& name, const SExpr& sort)
    {
        if (name.kind != SExpr::Kind::Symbol)
            syntax(name, "expected a variable name");
        if (formula_.sort_of(name.text))
            sort_error(name, "redeclaration of '" + name.text + "'");
        Sort s;
        if (sort.is_symbol("String"))
            s = Sort::String;
        else if (sort.is_symbol("Int"))
            s = Sort::Int;
        else
            sort_error(sort, "unsupported sort");
        formula_.declarations.push_back({name.text, s});
    }

    std::string checked_literal(const SExpr& e) const
    {
        for (char c : e.text)
            if (!formula_.alphabet.contains(c))
                sort_error(e, std::string("symbol '") + c + "' is not in the alphabet");
        return e.text;
    }

    Sort variable_sort(const SExpr& e) const
    {
        auto s = formula_.sort_of(e.text);
        if (!s)
            unknown(e, "undeclared symbol '" + e.text + "'");
        return *s;
    }

    Sort term_sort(const SExpr& e) const
    {
        switch (e.kind) {
        case SExpr::Kind::String:
            return Sort::String;
        case SExpr::Kind::Numeral:
            return Sort::Int;
        case SExpr::Kind::Symbol:
            return variable_sort(e);
        case SExpr::Kind::Keyword:
            syntax(e, "unexpected keyword");
        case SExpr::Kind::List:
            break;
        }
        auto head = e.head();
        if (head == "str.++")
            return Sort::String;
        if (head == "+" || head == "-" || head == "*" || head == "str.len")
            return Sort::Int;
        unknown(e, "unknown term '" + std::string(head) + "'");
    }

    Node atom(Atom a) { return Node::leaf(formula_.add_atom(std::move(a))); }

    Node boolean(const SExpr& e)
    {
        if (e.is_symbol("true"))
            return Node::constant(true);
        if (e.is_symbol("false"))
            return Node::constant(false);
        if (!e.is_list() || e.items.empty())
            sort_error(e, "expected a Boolean term");
        auto head = e.head();
        if (head == "not") {
            require_arity(e, 1);
            return Node::negation(boolean(e.items[1]));
        }
        if (head == "and" || head == "or") {
            require_min_arity(e, 1);
            std::vector<Node> parts;
            for (std::size_t i = 1; i < e.items.size(); ++i)
                parts.push_back(boolean(e.items[i]));
            return head == "and" ? Node::conjunction(std::move(parts)) : Node::disjunction(std::move(parts));
        }
        if (head == "=>") {
            require_arity(e, 2);
            std::vector<Node> parts;
            parts.push_back(Node::negation(boolean(e.items[1])));
            parts.push_back(boolean(e.items[2]));
            return Node::disjunction(std::move(parts));
        }
        if (head == "str.in_re") {
            require_arity(e, 2);
            return atom(MembershipAtom{pattern(e.items[1]), regex(e.items[2]), true});
        }
        if (head == "numstr") {
            require_arity(e, 2);
            return atom(NumstrAtom{integer(e.items[1]), pattern(e.items[2]), true});
        }
        if (head == "=") {
            require_arity(e, 2);
            auto left = term_sort(e.items[1]);
            auto right = term_sort(e.items[2]);
            if (left != right)
                sort_error(e, "'=' between different sorts");
            if (left == Sort::String)
                return atom(WordEqAtom{pattern(e.items[1]), pattern(e.items[2]), true});
            return atom(LinearAtom{integer(e.items[1]), Relation::Eq, integer(e.items[2])});
        }
        if (head == "<=" || head == "<" || head == ">=" || head == ">") {
            require_arity(e, 2);
            auto lhs = integer(e.items[1]);
            auto rhs = integer(e.items[2]);
            if (head == "<")
                rhs.constant -= 1;
            if (head == ">")
                rhs.constant += 1;
            auto rel = (head == "<=" || head == "<") ? Relation::Le : Relation::Ge;
            return atom(LinearAtom{std::move(lhs), rel, std::move(rhs)});
        }
        if (head.empty())
            syntax(e, "expected a function application");
        unknown(e, "unknown predicate '" + std::string(head) + "'");
    }

    Pattern pattern(const SExpr& e)
    {
        if (e.kind == SExpr::Kind::String)
            return Pattern::word(checked_literal(e));
        if (e.kind == SExpr::Kind::Symbol) {
            if (variable_sort(e) != Sort::String)
                sort_error(e, "'" + e.text + "' is not a string variable");
            return Pattern::variable(e.text);
        }
        if (e.head() == "str.++") {
            Pattern out;
            for (std::size_t i = 1; i < e.items.size(); ++i)
                out = out + pattern(e.items[i]);
            return out;
        }
        sort_error(e, "expected a string term");
    }

    LinearTerm integer(const SExpr& e)
    {
        if (e.kind == SExpr::Kind::Numeral)
            return LinearTerm::of_constant(numeral_value(e));
        if (e.kind == SExpr::Kind::Symbol) {
            if (variable_sort(e) != Sort::Int)
                sort_error(e, "'" + e.text + "' is not an integer variable");
            return LinearTerm::of_int(e.text);
        }
        auto head = e.head();
        if (head == "str.len") {
            require_arity(e, 1);
            return LinearTerm::of_pattern_length(pattern(e.items[1]));
        }
        if (head == "+") {
            require_min_arity(e, 1);
            LinearTerm sum;
            for (std::size_t i = 1; i < e.items.size(); ++i)
                sum += integer(e.items[i]);
            return sum;
        }
        if (head == "-") {
            require_min_arity(e, 1);
            if (e.items.size() == 2)
                return integer(e.items[1]) * -1;
            LinearTerm diff = integer(e.items[1]);
            for (std::size_t i = 2; i < e.items.size(); ++i)
                diff -= integer(e.items[i]);
            return diff;
        }
        if (head == "*") {
            require_min_arity(e, 2);
            LinearTerm product = LinearTerm::of_constant(1);
            for (std::size_t i = 1; i < e.items.size(); ++i) {
                auto factor = integer(e.items[i]);
                if (factor.is_constant())
                    product *= factor.constant;
                else if (product.is_constant())
                    product = factor * product.constant;
                else
                    sort_error(e, "non-linear multiplication");
            }
            return product;
        }
        sort_error(e, "expected an integer term");
    }

    RegexPtr regex(const SExpr& e)
    {
        if (e.is_symbol("re.none"))
            return re_empty();
        if (e.is_symbol("re.allchar"))
            return re_any_of(formula_.alphabet.symbols());
        auto head = e.head();
        if (head == "str.to_re") {
            require_arity(e, 1);
            if (e.items[1].kind != SExpr::Kind::String)
                sort_error(e.items[1], "regex terms must be ground");
            return re_word(checked_literal(e.items[1]));
        }
        if (head == "re.++" || head == "re.union") {
            require_min_arity(e, 1);
            RegexPtr out = regex(e.items[1]);
            for (std::size_t i = 2; i < e.items.size(); ++i)
                out = head == "re.++" ? re_concat(out, regex(e.items[i])) : re_union(out, regex(e.items[i]));
            return out;
        }
        if (head == "re.*") {
            require_arity(e, 1);
            return re_star(regex(e.items[1]));
        }
        if (head == "re.comp") {
            require_arity(e, 1);
            return re_complement(regex(e.items[1]));
        }
        if (e.kind == SExpr::Kind::Symbol)
            unknown(e, "unknown regex constant '" + e.text + "'");
        if (head.empty())
            sort_error(e, "expected a regex term");
        unknown(e, "unknown regex operator '" + std::string(head) + "'");
    }
};

std::int64_t model_integer(const SExpr& e)
{
    if (e.kind == SExpr::Kind::Numeral)
        return numeral_value(e);
    if (e.head() == "-" && e.items.size() == 2 && e.items[1].kind == SExpr::Kind::Numeral)
        return -numeral_value(e.items[1]);
    syntax(e, "expected an integer value");
}

void read_model_entries(const SExpr& e, Model& out)
{
    if (e.head() == "model") {
        for (std::size_t i = 1; i < e.items.size(); ++i)
            read_model_entries(e.items[i], out);
        return;
    }
    if (e.head() != "define-fun")
        return;
    require_arity(e, 4);
    const auto& name = e.items[1];
    const auto& sort = e.items[3];
    const auto& value = e.items[4];
    if (sort.is_symbol("String")) {
        if (value.kind != SExpr::Kind::String)
            syntax(value, "expected a string value");
        out.strings[name.text] = value.text;
    } else if (sort.is_symbol("Int")) {
        out.ints[name.text] = model_integer(value);
    } else {
        sort_error(sort, "unsupported sort");
    }
}

} // namespace

Formula parse_script(std::string_view text) { return ScriptParser{}.run(detail::read_sexprs(text)); }

Model parse_model(std::string_view text)
{
    Model out;
    for (const auto& e : detail::read_sexprs(text))
        read_model_entries(e, out);
    return out;
}

} // namespace rex
