#include "rex/oracle/generate.hpp"

#include <deque>
#include <map>

namespace rex {

namespace {

std::size_t pick(Rng& rng, std::size_t bound) { return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng); }

bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

RegexPtr literal(Rng& rng, const Alphabet& alphabet) { return re_literal(alphabet[static_cast<Symbol>(pick(rng, alphabet.size()))]); }

} // namespace

RegexPtr random_regex(Rng& rng, const Alphabet& alphabet, std::size_t size, std::size_t max_cdepth)
{
    if (size <= 1) {
        auto roll = pick(rng, 10);
        if (roll == 0)
            return re_epsilon();
        if (roll == 1)
            return re_empty();
        return literal(rng, alphabet);
    }
    if (size == 2) {
        if (max_cdepth > 0 && chance(rng, 0.3))
            return re_complement(random_regex(rng, alphabet, 1, max_cdepth - 1));
        return re_star(random_regex(rng, alphabet, 1, max_cdepth));
    }
    auto roll = pick(rng, 10);
    if (max_cdepth > 0 && roll < 2)
        return re_complement(random_regex(rng, alphabet, size - 1, max_cdepth - 1));
    if (roll < 4)
        return re_star(random_regex(rng, alphabet, size - 1, max_cdepth));
    std::size_t left = 1 + pick(rng, size - 2);
    std::size_t left_depth = max_cdepth == 0 ? 0 : pick(rng, max_cdepth + 1);
    auto a = random_regex(rng, alphabet, left, left_depth);
    auto b = random_regex(rng, alphabet, size - 1 - left, max_cdepth - left_depth);
    return roll < 7 ? re_concat(a, b) : re_union(a, b);
}

RegexPtr random_regex_with_literals(Rng& rng, const Alphabet& alphabet, std::size_t literals)
{
    RegexPtr r;
    if (literals <= 1) {
        r = literal(rng, alphabet);
    } else {
        std::size_t left = 1 + pick(rng, literals - 1);
        auto a = random_regex_with_literals(rng, alphabet, left);
        auto b = random_regex_with_literals(rng, alphabet, literals - left);
        r = chance(rng, 0.6) ? re_concat(a, b) : re_union(a, b);
    }
    return chance(rng, 0.3) ? re_star(r) : r;
}

Nfa random_nfa(Rng& rng, const Alphabet& alphabet, std::size_t states, double density, double final_share)
{
    Nfa m(alphabet, states);
    m.set_initial(0);
    for (State q = 0; q < states; ++q) {
        m.set_final(q, chance(rng, final_share));
        for (Symbol s = 0; s < alphabet.size(); ++s)
            for (State p = 0; p < states; ++p)
                if (chance(rng, density))
                    m.add_transition(q, s, p);
    }
    return m;
}

namespace {

Pattern random_pattern(Rng& rng, const Alphabet& alphabet, const std::vector<std::string>& vars)
{
    Pattern p;
    std::size_t items = 1 + pick(rng, 3);
    for (std::size_t i = 0; i < items; ++i) {
        if (chance(rng, 0.75)) {
            p.items.push_back({true, vars[pick(rng, vars.size())]});
        } else {
            std::string w;
            for (std::size_t k = 0, n = 1 + pick(rng, 2); k < n; ++k)
                w += alphabet[static_cast<Symbol>(pick(rng, alphabet.size()))];
            p.items.push_back({false, w});
        }
    }
    p = p.normalized();
    if (p.vars().empty())
        p = p + Pattern::variable(vars[pick(rng, vars.size())]);
    return p;
}

Atom random_length_atom(Rng& rng, const std::vector<std::string>& vars, std::int64_t max_constant)
{
    LinearAtom a;
    a.lhs = LinearTerm::of_len(vars[pick(rng, vars.size())]);
    if (vars.size() > 1 && chance(rng, 0.35)) {
        const auto& other = vars[pick(rng, vars.size())];
        a.lhs += LinearTerm::of_len(other, chance(rng, 0.5) ? 1 : -1);
    }
    a.relation = static_cast<Relation>(pick(rng, 3));
    a.rhs = LinearTerm::of_constant(static_cast<std::int64_t>(pick(rng, static_cast<std::size_t>(max_constant) + 1)));
    return a;
}

Node random_tree(Rng& rng, std::vector<std::size_t> leaves)
{
    if (leaves.size() == 1) {
        auto n = Node::leaf(leaves.front());
        return chance(rng, 0.15) ? Node::negation(std::move(n)) : n;
    }
    std::size_t split = 1 + pick(rng, leaves.size() - 1);
    std::vector<std::size_t> left(leaves.begin(), leaves.begin() + static_cast<std::ptrdiff_t>(split));
    std::vector<std::size_t> right(leaves.begin() + static_cast<std::ptrdiff_t>(split), leaves.end());
    std::vector<Node> parts;
    parts.push_back(random_tree(rng, left));
    parts.push_back(random_tree(rng, right));
    Node n = chance(rng, 0.7) ? Node::conjunction(std::move(parts)) : Node::disjunction(std::move(parts));
    return chance(rng, 0.1) ? Node::negation(std::move(n)) : n;
}

} // namespace

Formula random_slc_formula(Rng& rng, const Alphabet& alphabet, const FormulaShape& shape)
{
    Formula f;
    f.alphabet = alphabet;
    std::vector<std::string> vars;
    for (std::size_t i = 0, n = 1 + pick(rng, shape.max_string_vars); i < n; ++i) {
        vars.push_back("x" + std::to_string(i + 1));
        f.declarations.push_back({vars.back(), Sort::String});
    }
    std::vector<std::size_t> leaves;
    for (std::size_t i = 0, n = 1 + pick(rng, shape.max_atoms); i < n; ++i) {
        if (chance(rng, shape.membership_share)) {
            auto size = 1 + pick(rng, shape.max_regex_size);
            MembershipAtom m{random_pattern(rng, alphabet, vars), random_regex(rng, alphabet, size), !chance(rng, 0.25)};
            leaves.push_back(f.add_atom(std::move(m)));
        } else {
            leaves.push_back(f.add_atom(random_length_atom(rng, vars, shape.max_length_constant)));
        }
    }
    f.root = random_tree(rng, leaves);
    return f;
}

Formula random_numstr_formula(Rng& rng, const NumstrShape& shape)
{
    Formula f;
    f.alphabet = Alphabet("01");
    std::vector<std::string> strings;
    std::vector<std::string> ints;
    for (std::size_t i = 0, n = 1 + pick(rng, shape.max_string_vars); i < n; ++i) {
        strings.push_back("x" + std::to_string(i + 1));
        f.declarations.push_back({strings.back(), Sort::String});
    }
    for (std::size_t i = 0, n = 1 + pick(rng, shape.max_int_vars); i < n; ++i) {
        ints.push_back("i" + std::to_string(i + 1));
        f.declarations.push_back({ints.back(), Sort::Int});
    }
    auto constant = [&] { return static_cast<std::int64_t>(pick(rng, static_cast<std::size_t>(shape.max_constant) + 1)); };
    auto int_term = [&] {
        auto t = LinearTerm::of_int(ints[pick(rng, ints.size())]);
        if (chance(rng, 0.3))
            t += LinearTerm::of_int(ints[pick(rng, ints.size())], chance(rng, 0.5) ? 1 : -1);
        if (shape.lengths && chance(rng, 0.3))
            t += LinearTerm::of_len(strings[pick(rng, strings.size())], chance(rng, 0.5) ? 1 : -1);
        return t;
    };
    std::vector<std::size_t> leaves;
    for (std::size_t i = 0, n = 1 + pick(rng, shape.max_atoms); i < n; ++i) {
        auto kind = pick(rng, 3);
        if (kind == 0) {
            auto size = 1 + pick(rng, shape.max_regex_size);
            auto r = random_regex(rng, f.alphabet, size, shape.max_cdepth);
            leaves.push_back(f.add_atom(MembershipAtom{Pattern::variable(strings[pick(rng, strings.size())]), r,
                                                       !chance(rng, 0.25)}));
        } else if (kind == 1) {
            NumstrAtom a;
            switch (pick(rng, shape.lengths ? 4 : 3)) {
            case 0:
                a.number = LinearTerm::of_constant(constant());
                break;
            case 1:
                a.number = LinearTerm::of_int(ints[pick(rng, ints.size())]);
                break;
            case 2:
                a.number = LinearTerm::of_int(ints[pick(rng, ints.size())]) + LinearTerm::of_constant(constant() - 3);
                break;
            default:
                a.number = LinearTerm::of_len(strings[pick(rng, strings.size())]);
                break;
            }
            if (chance(rng, 0.85)) {
                a.word = Pattern::variable(strings[pick(rng, strings.size())]);
            } else {
                std::string w;
                for (std::size_t k = 0, len = pick(rng, 4); k < len; ++k)
                    w += chance(rng, 0.5) ? '1' : '0';
                a.word = Pattern::word(w);
            }
            a.positive = !chance(rng, 0.25);
            leaves.push_back(f.add_atom(std::move(a)));
        } else {
            LinearAtom a;
            a.lhs = int_term();
            a.relation = static_cast<Relation>(pick(rng, 3));
            a.rhs = LinearTerm::of_constant(constant());
            leaves.push_back(f.add_atom(std::move(a)));
        }
    }
    f.root = random_tree(rng, leaves);
    return f;
}

Formula intersection_family(Rng& rng, const Alphabet& alphabet, std::size_t k, std::size_t literals)
{
    Formula f;
    f.alphabet = alphabet;
    f.declarations.push_back({"x", Sort::String});
    std::vector<Node> parts;
    for (std::size_t i = 0; i < k; ++i)
        parts.push_back(Node::leaf(
            f.add_atom(MembershipAtom{Pattern::variable("x"), random_regex_with_literals(rng, alphabet, literals), true})));
    f.root = Node::conjunction(std::move(parts));
    return f;
}

std::size_t explicit_product_reachable(const std::vector<Nfa>& members)
{
    using Tuple = std::vector<State>;
    std::map<Tuple, bool> seen;
    Tuple start;
    for (const auto& m : members)
        start.push_back(m.initial());
    std::deque<Tuple> work{start};
    seen[start] = true;
    const auto& alphabet = members.front().alphabet();
    while (!work.empty()) {
        Tuple t = work.front();
        work.pop_front();
        for (Symbol s = 0; s < alphabet.size(); ++s) {
            std::vector<Tuple> frontier{Tuple{}};
            for (std::size_t i = 0; i < members.size(); ++i) {
                std::vector<Tuple> grown;
                for (const auto& partial : frontier)
                    for (State p : members[i].successors(t[i], s)) {
                        auto next = partial;
                        next.push_back(p);
                        grown.push_back(std::move(next));
                    }
                frontier = std::move(grown);
            }
            for (auto& u : frontier)
                if (seen.emplace(u, true).second)
                    work.push_back(std::move(u));
        }
    }
    return seen.size();
}

} // namespace rex
