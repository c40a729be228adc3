#include "rex/frontend/formula.hpp"

#include <algorithm>

namespace rex {

Pattern Pattern::word(std::string w)
{
    if (w.empty())
        return Pattern{};
    return Pattern{{PatternItem{false, std::move(w)}}};
}

bool Pattern::is_ground() const
{
    return std::none_of(items.begin(), items.end(), [](const PatternItem& i) { return i.is_var; });
}

std::vector<std::string> Pattern::vars() const
{
    std::vector<std::string> out;
    for (const auto& item : items)
        if (item.is_var)
            out.push_back(item.text);
    return out;
}

std::string Pattern::constant_text() const
{
    std::string out;
    for (const auto& item : items)
        if (!item.is_var)
            out += item.text;
    return out;
}

Pattern Pattern::normalized() const
{
    Pattern out;
    for (const auto& item : items) {
        if (!item.is_var && item.text.empty())
            continue;
        if (!item.is_var && !out.items.empty() && !out.items.back().is_var)
            out.items.back().text += item.text;
        else
            out.items.push_back(item);
    }
    return out;
}

Pattern Pattern::operator+(const Pattern& rhs) const
{
    Pattern out = *this;
    out.items.insert(out.items.end(), rhs.items.begin(), rhs.items.end());
    return out.normalized();
}

LinearTerm LinearTerm::of_constant(std::int64_t c)
{
    LinearTerm t;
    t.constant = c;
    return t;
}

LinearTerm LinearTerm::of_int(const std::string& v, std::int64_t coeff)
{
    LinearTerm t;
    if (coeff != 0)
        t.ints[v] = coeff;
    return t;
}

LinearTerm LinearTerm::of_len(const std::string& x, std::int64_t coeff)
{
    LinearTerm t;
    if (coeff != 0)
        t.lens[x] = coeff;
    return t;
}

LinearTerm LinearTerm::of_pattern_length(const Pattern& p)
{
    LinearTerm t;
    for (const auto& item : p.items) {
        if (item.is_var)
            t += of_len(item.text);
        else
            t.constant += static_cast<std::int64_t>(item.text.size());
    }
    return t;
}

std::optional<std::string> LinearTerm::single_int_var() const
{
    if (lens.empty() && constant == 0 && ints.size() == 1 && ints.begin()->second == 1)
        return ints.begin()->first;
    return std::nullopt;
}

namespace {

void merge(std::map<std::string, std::int64_t>& into, const std::map<std::string, std::int64_t>& from, std::int64_t sign)
{
    for (const auto& [name, coeff] : from) {
        auto& slot = into[name];
        slot += sign * coeff;
        if (slot == 0)
            into.erase(name);
    }
}

} // namespace

LinearTerm& LinearTerm::operator+=(const LinearTerm& rhs)
{
    merge(ints, rhs.ints, 1);
    merge(lens, rhs.lens, 1);
    constant += rhs.constant;
    return *this;
}

LinearTerm& LinearTerm::operator-=(const LinearTerm& rhs)
{
    merge(ints, rhs.ints, -1);
    merge(lens, rhs.lens, -1);
    constant -= rhs.constant;
    return *this;
}

LinearTerm& LinearTerm::operator*=(std::int64_t k)
{
    if (k == 0) {
        *this = LinearTerm{};
        return *this;
    }
    for (auto& [_, c] : ints)
        c *= k;
    for (auto& [_, c] : lens)
        c *= k;
    constant *= k;
    return *this;
}

Node Node::negation(Node inner)
{
    Node n{NodeKind::Not, 0, {}};
    n.children.push_back(std::move(inner));
    return n;
}

Node Node::conjunction(std::vector<Node> parts)
{
    if (parts.size() == 1)
        return std::move(parts.front());
    return Node{NodeKind::And, 0, std::move(parts)};
}

Node Node::disjunction(std::vector<Node> parts)
{
    if (parts.size() == 1)
        return std::move(parts.front());
    return Node{NodeKind::Or, 0, std::move(parts)};
}

std::optional<Sort> Formula::sort_of(const std::string& name) const
{
    for (const auto& d : declarations)
        if (d.name == name)
            return d.sort;
    return std::nullopt;
}

std::vector<std::string> Formula::string_vars() const
{
    std::vector<std::string> out;
    for (const auto& d : declarations)
        if (d.sort == Sort::String)
            out.push_back(d.name);
    return out;
}

std::vector<std::string> Formula::int_vars() const
{
    std::vector<std::string> out;
    for (const auto& d : declarations)
        if (d.sort == Sort::Int)
            out.push_back(d.name);
    return out;
}

std::size_t Formula::add_atom(Atom a)
{
    atoms.push_back(std::move(a));
    return atoms.size() - 1;
}

void Formula::conjoin(Node extra)
{
    if (root.kind == NodeKind::True) {
        root = std::move(extra);
        return;
    }
    if (root.kind == NodeKind::And) {
        root.children.push_back(std::move(extra));
        return;
    }
    std::vector<Node> parts;
    parts.push_back(std::move(root));
    parts.push_back(std::move(extra));
    root = Node::conjunction(std::move(parts));
}

std::string Formula::fresh(const std::string& prefix, Sort sort)
{
    for (std::size_t k = 1;; ++k) {
        std::string name = prefix + std::to_string(k);
        if (!sort_of(name)) {
            declarations.push_back({name, sort});
            return name;
        }
    }
}

AtomVars atom_vars(const Atom& a)
{
    AtomVars out;
    auto add_pattern = [&](const Pattern& p) {
        for (const auto& v : p.vars())
            out.strings.insert(v);
    };
    auto add_term = [&](const LinearTerm& t) {
        for (const auto& [v, _] : t.ints)
            out.ints.insert(v);
        for (const auto& [x, _] : t.lens)
            out.strings.insert(x);
    };
    std::visit(
        [&](const auto& atom) {
            using T = std::decay_t<decltype(atom)>;
            if constexpr (std::is_same_v<T, MembershipAtom>) {
                add_pattern(atom.pattern);
            } else if constexpr (std::is_same_v<T, LinearAtom>) {
                add_term(atom.lhs);
                add_term(atom.rhs);
            } else if constexpr (std::is_same_v<T, NumstrAtom>) {
                add_term(atom.number);
                add_pattern(atom.word);
            } else {
                add_pattern(atom.lhs);
                add_pattern(atom.rhs);
            }
        },
        a);
    return out;
}

} // namespace rex
