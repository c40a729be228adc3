#include "rex/frontend/nnf.hpp"

namespace rex {

namespace {

class NnfBuilder {
public:
    NnfBuilder(const Formula& source, Formula& target) : source_(source), target_(target) {}

    Node build(const Node& n, bool negated)
    {
        switch (n.kind) {
        case NodeKind::True:
        case NodeKind::False:
            return Node::constant((n.kind == NodeKind::True) != negated);
        case NodeKind::Not:
            return build(n.children.front(), !negated);
        case NodeKind::And:
        case NodeKind::Or: {
            std::vector<Node> parts;
            for (const auto& c : n.children)
                parts.push_back(build(c, negated));
            bool conjunctive = (n.kind == NodeKind::And) != negated;
            if (parts.empty())
                return Node::constant(conjunctive);
            return conjunctive ? Node::conjunction(std::move(parts)) : Node::disjunction(std::move(parts));
        }
        case NodeKind::Atom:
            return atom(source_.atoms[n.atom], negated);
        }
        return Node::constant(true);
    }

private:
    const Formula& source_;
    Formula& target_;

    Node leaf(Atom a) { return Node::leaf(target_.add_atom(std::move(a))); }

    Node atom(const Atom& a, bool negated)
    {
        if (const auto* lin = std::get_if<LinearAtom>(&a)) {
            if (!negated)
                return leaf(*lin);
            auto shifted = [&](Relation rel, std::int64_t delta) {
                LinearAtom out{lin->lhs, rel, lin->rhs};
                out.rhs.constant += delta;
                return out;
            };
            switch (lin->relation) {
            case Relation::Le:
                return leaf(shifted(Relation::Ge, 1));
            case Relation::Ge:
                return leaf(shifted(Relation::Le, -1));
            case Relation::Eq: {
                std::vector<Node> parts;
                parts.push_back(leaf(shifted(Relation::Le, -1)));
                parts.push_back(leaf(shifted(Relation::Ge, 1)));
                return Node::disjunction(std::move(parts));
            }
            }
        }
        Atom copy = a;
        std::visit(
            [&](auto& atom) {
                if constexpr (!std::is_same_v<std::decay_t<decltype(atom)>, LinearAtom>)
                    atom.positive = atom.positive != negated;
            },
            copy);
        return leaf(std::move(copy));
    }
};

} // namespace

Formula to_nnf(const Formula& f)
{
    Formula out;
    out.alphabet = f.alphabet;
    out.declarations = f.declarations;
    out.strict_numstr = f.strict_numstr;
    out.root = NnfBuilder(f, out).build(f.root, false);
    return out;
}

bool is_nnf(const Node& n)
{
    if (n.kind == NodeKind::Not)
        return false;
    for (const auto& c : n.children)
        if (!is_nnf(c))
            return false;
    return true;
}

} // namespace rex
