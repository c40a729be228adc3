#include "rex/frontend/regex.hpp"

#include <sstream>

namespace rex {

namespace {

RegexPtr make(RegexKind kind, char symbol = 0, RegexPtr left = nullptr, RegexPtr right = nullptr)
{
    auto r = std::make_shared<Regex>();
    r->kind = kind;
    r->symbol = symbol;
    r->left = std::move(left);
    r->right = std::move(right);
    return r;
}

std::string quote(std::string_view s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += "\"\"";
        else
            out += c;
    }
    out += '"';
    return out;
}

void render(const Regex& r, std::ostringstream& out)
{
    switch (r.kind) {
    case RegexKind::Empty:
        out << "re.none";
        break;
    case RegexKind::Epsilon:
        out << "(str.to_re \"\")";
        break;
    case RegexKind::Literal:
        out << "(str.to_re " << quote(std::string_view(&r.symbol, 1)) << ")";
        break;
    case RegexKind::Concat:
        out << "(re.++ ";
        render(*r.left, out);
        out << ' ';
        render(*r.right, out);
        out << ')';
        break;
    case RegexKind::Union:
        out << "(re.union ";
        render(*r.left, out);
        out << ' ';
        render(*r.right, out);
        out << ')';
        break;
    case RegexKind::Star:
        out << "(re.* ";
        render(*r.left, out);
        out << ')';
        break;
    case RegexKind::Complement:
        out << "(re.comp ";
        render(*r.left, out);
        out << ')';
        break;
    }
}

} // namespace

RegexPtr re_empty() { return make(RegexKind::Empty); }
RegexPtr re_epsilon() { return make(RegexKind::Epsilon); }
RegexPtr re_literal(char c) { return make(RegexKind::Literal, c); }
RegexPtr re_concat(RegexPtr a, RegexPtr b) { return make(RegexKind::Concat, 0, std::move(a), std::move(b)); }
RegexPtr re_union(RegexPtr a, RegexPtr b) { return make(RegexKind::Union, 0, std::move(a), std::move(b)); }
RegexPtr re_star(RegexPtr a) { return make(RegexKind::Star, 0, std::move(a)); }
RegexPtr re_complement(RegexPtr a) { return make(RegexKind::Complement, 0, std::move(a)); }

RegexPtr re_word(std::string_view w)
{
    if (w.empty())
        return re_epsilon();
    RegexPtr r = re_literal(w.back());
    for (auto i = w.size() - 1; i-- > 0;)
        r = re_concat(re_literal(w[i]), r);
    return r;
}

RegexPtr re_any_of(std::string_view symbols)
{
    if (symbols.empty())
        return re_empty();
    RegexPtr r = re_literal(symbols.front());
    for (std::size_t i = 1; i < symbols.size(); ++i)
        r = re_union(r, re_literal(symbols[i]));
    return r;
}

std::size_t regex_size(const Regex& r)
{
    std::size_t n = 1;
    if (r.left)
        n += regex_size(*r.left);
    if (r.right)
        n += regex_size(*r.right);
    return n;
}

bool has_complement(const Regex& r)
{
    if (r.kind == RegexKind::Complement)
        return true;
    return (r.left && has_complement(*r.left)) || (r.right && has_complement(*r.right));
}

std::size_t cdepth(const Regex& r)
{
    switch (r.kind) {
    case RegexKind::Empty:
    case RegexKind::Epsilon:
    case RegexKind::Literal:
        return 0;
    case RegexKind::Concat:
    case RegexKind::Union:
        return cdepth(*r.left) + cdepth(*r.right);
    case RegexKind::Star:
        return cdepth(*r.left);
    case RegexKind::Complement:
        return 1 + cdepth(*r.left);
    }
    return 0;
}

std::string to_smtlib(const Regex& r)
{
    std::ostringstream out;
    render(r, out);
    return out.str();
}

} // namespace rex
