#include "rex/frontend/classify.hpp"

#include <algorithm>

#include <json.hpp>

namespace rex {

std::string_view to_string(Decidability d)
{
    switch (d) {
    case Decidability::PSpaceComplete:
        return "PSpaceComplete";
    case Decidability::Decidable:
        return "Decidable";
    case Decidability::Undecidable:
        return "Undecidable";
    case Decidability::Open:
        return "Open";
    }
    return "Open";
}

std::string TheoryTag::theory_name() const
{
    std::string name = flags.word_equations ? "A=_" : "A_";
    name += base;
    if (flags.length)
        name += 'l';
    if (flags.numstr)
        name += 'n';
    if (flags.concat)
        name += 'c';
    return name;
}

Decidability decidability_of(char base, const TheoryFlags& flags)
{
    const bool l = flags.length, n = flags.numstr, c = flags.concat;
    if (l && n && c)
        return Decidability::Undecidable;
    if (flags.word_equations)
        return (!l && !n) ? Decidability::Decidable : Decidability::Open;
    if (base == 's')
        return (n && c) ? Decidability::Open : Decidability::PSpaceComplete;
    if ((n && c) || (l && n))
        return Decidability::Open;
    return Decidability::Decidable;
}

namespace {

void note_pattern(const Pattern& p, TheoryFlags& flags)
{
    if (p.items.size() > 1)
        flags.concat = true;
}

void note_term(const LinearTerm& t, TheoryFlags& flags)
{
    if (!t.lens.empty())
        flags.length = true;
}

} // namespace

std::size_t formula_cdepth(const Formula& f)
{
    std::size_t depth = 0;
    for (const auto& a : f.atoms)
        if (const auto* m = std::get_if<MembershipAtom>(&a))
            depth = std::max(depth, cdepth(*m->regex));
    return depth;
}

TheoryTag classify_theory(const Formula& f)
{
    TheoryTag tag;
    bool complemented = false;
    for (const auto& a : f.atoms) {
        std::visit(
            [&](const auto& atom) {
                using T = std::decay_t<decltype(atom)>;
                if constexpr (std::is_same_v<T, MembershipAtom>) {
                    note_pattern(atom.pattern, tag.flags);
                    complemented = complemented || has_complement(*atom.regex);
                } else if constexpr (std::is_same_v<T, LinearAtom>) {
                    tag.flags.length = true;
                } else if constexpr (std::is_same_v<T, NumstrAtom>) {
                    tag.flags.numstr = true;
                    note_term(atom.number, tag.flags);
                    note_pattern(atom.word, tag.flags);
                } else {
                    tag.flags.word_equations = true;
                    note_pattern(atom.lhs, tag.flags);
                    note_pattern(atom.rhs, tag.flags);
                }
            },
            a);
    }
    tag.base = complemented ? 'e' : 's';
    tag.complement_depth = formula_cdepth(f);
    tag.decidability = decidability_of(tag.base, tag.flags);
    return tag;
}

std::string classification_json(std::string_view file, const TheoryTag& tag)
{
    nlohmann::ordered_json flags = nlohmann::ordered_json::array();
    if (tag.flags.length)
        flags.push_back("length");
    if (tag.flags.numstr)
        flags.push_back("numstr");
    if (tag.flags.concat)
        flags.push_back("concat");
    if (tag.flags.word_equations)
        flags.push_back("word_equations");
    nlohmann::ordered_json j;
    j["file"] = std::string(file);
    j["base"] = std::string(1, tag.base);
    j["flags"] = flags;
    j["cdepth"] = tag.complement_depth;
    j["theory_name"] = tag.theory_name();
    j["decidability"] = std::string(to_string(tag.decidability));
    return j.dump();
}

} // namespace rex
