#include "rex/frontend/printer.hpp"

#include <sstream>
#include <vector>

namespace rex {

namespace {

std::string integer(std::int64_t v) { return v < 0 ? "(- " + std::to_string(-v) + ")" : std::to_string(v); }

std::string scaled(std::int64_t coeff, const std::string& base)
{
    if (coeff == 1)
        return base;
    if (coeff == -1)
        return "(- " + base + ")";
    return "(* " + integer(coeff) + " " + base + ")";
}

std::string positive_atom(const Atom& a)
{
    return std::visit(
        [](const auto& atom) -> std::string {
            using T = std::decay_t<decltype(atom)>;
            if constexpr (std::is_same_v<T, MembershipAtom>) {
                return "(str.in_re " + print_pattern(atom.pattern) + " " + to_smtlib(*atom.regex) + ")";
            } else if constexpr (std::is_same_v<T, LinearAtom>) {
                const char* op = atom.relation == Relation::Le ? "<=" : atom.relation == Relation::Eq ? "=" : ">=";
                return std::string("(") + op + " " + print_term(atom.lhs) + " " + print_term(atom.rhs) + ")";
            } else if constexpr (std::is_same_v<T, NumstrAtom>) {
                return "(numstr " + print_term(atom.number) + " " + print_pattern(atom.word) + ")";
            } else {
                return "(= " + print_pattern(atom.lhs) + " " + print_pattern(atom.rhs) + ")";
            }
        },
        a);
}

bool is_positive(const Atom& a)
{
    return std::visit(
        [](const auto& atom) {
            if constexpr (std::is_same_v<std::decay_t<decltype(atom)>, LinearAtom>)
                return true;
            else
                return atom.positive;
        },
        a);
}

void print_node(const Formula& f, const Node& n, std::ostringstream& out)
{
    switch (n.kind) {
    case NodeKind::True:
        out << "true";
        return;
    case NodeKind::False:
        out << "false";
        return;
    case NodeKind::Atom:
        out << print_atom(f.atoms[n.atom]);
        return;
    case NodeKind::Not:
        out << "(not ";
        print_node(f, n.children.front(), out);
        out << ')';
        return;
    case NodeKind::And:
    case NodeKind::Or:
        if (n.children.empty()) {
            out << (n.kind == NodeKind::And ? "true" : "false");
            return;
        }
        out << (n.kind == NodeKind::And ? "(and" : "(or");
        for (const auto& c : n.children) {
            out << ' ';
            print_node(f, c, out);
        }
        out << ')';
        return;
    }
}

} // namespace

std::string quote_literal(std::string_view s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += "\"\"";
        else
            out += c;
    }
    return out + "\"";
}

std::string print_pattern(const Pattern& p)
{
    auto item = [](const PatternItem& i) { return i.is_var ? i.text : quote_literal(i.text); };
    if (p.items.empty())
        return "\"\"";
    if (p.items.size() == 1)
        return item(p.items.front());
    std::string out = "(str.++";
    for (const auto& i : p.items)
        out += " " + item(i);
    return out + ")";
}

std::string print_term(const LinearTerm& t)
{
    std::vector<std::string> parts;
    for (const auto& [v, c] : t.ints)
        parts.push_back(scaled(c, v));
    for (const auto& [x, c] : t.lens)
        parts.push_back(scaled(c, "(str.len " + x + ")"));
    if (t.constant != 0 || parts.empty())
        parts.push_back(integer(t.constant));
    if (parts.size() == 1)
        return parts.front();
    std::string out = "(+";
    for (const auto& p : parts)
        out += " " + p;
    return out + ")";
}

std::string print_atom(const Atom& a)
{
    auto text = positive_atom(a);
    return is_positive(a) ? text : "(not " + text + ")";
}

std::string print_script(const Formula& f)
{
    std::ostringstream out;
    out << "(set-info :alphabet " << quote_literal(f.alphabet.symbols()) << ")\n";
    for (const auto& d : f.declarations)
        out << "(declare-fun " << d.name << " () " << (d.sort == Sort::String ? "String" : "Int") << ")\n";
    out << "(assert ";
    print_node(f, f.root, out);
    out << ")\n(check-sat)\n";
    return out.str();
}

std::string print_model(const Formula& f, const Model& m)
{
    std::ostringstream out;
    out << "(model";
    for (const auto& d : f.declarations) {
        if (d.sort == Sort::String) {
            auto it = m.strings.find(d.name);
            if (it != m.strings.end())
                out << "\n  (define-fun " << d.name << " () String " << quote_literal(it->second) << ")";
        } else {
            auto it = m.ints.find(d.name);
            if (it != m.ints.end())
                out << "\n  (define-fun " << d.name << " () Int " << integer(it->second) << ")";
        }
    }
    out << ")";
    return out.str();
}

} // namespace rex
