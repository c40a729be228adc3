#include "rex/solver/skeleton.hpp"

#include <limits>
#include <optional>
#include <stdexcept>

#include "rex/frontend/eval.hpp"

namespace rex {

namespace {

/// -1 unassigned, 0 false, 1 true.
using Assignment = std::vector<int>;

std::optional<bool> value_of(const Node& n, const Assignment& a)
{
    switch (n.kind) {
    case NodeKind::True:
        return true;
    case NodeKind::False:
        return false;
    case NodeKind::Atom:
        if (a[n.atom] < 0)
            return std::nullopt;
        return a[n.atom] == 1;
    case NodeKind::Not: {
        auto v = value_of(n.children.front(), a);
        if (!v)
            return std::nullopt;
        return !*v;
    }
    case NodeKind::And:
    case NodeKind::Or: {
        const bool conj = n.kind == NodeKind::And;
        bool open = false;
        for (const auto& c : n.children) {
            auto v = value_of(c, a);
            if (!v)
                open = true;
            else if (*v != conj)
                return !conj;
        }
        if (open)
            return std::nullopt;
        return conj;
    }
    }
    return std::nullopt;
}

void collect_atoms(const Node& n, std::vector<std::size_t>& order, std::vector<bool>& seen)
{
    if (n.kind == NodeKind::Atom) {
        if (!seen[n.atom]) {
            seen[n.atom] = true;
            order.push_back(n.atom);
        }
        return;
    }
    for (const auto& c : n.children)
        collect_atoms(c, order, seen);
}

class SkeletonSearch {
public:
    SkeletonSearch(const Formula& f, bool partial, const std::function<bool(const Skeleton&)>& visit)
        : f_(f), partial_(partial), visit_(visit), assignment_(f.atoms.size(), -1), fixed_(f.atoms.size())
    {
        std::vector<bool> seen(f.atoms.size(), false);
        collect_atoms(f.root, order_, seen);
        if (partial)
            for (auto a : order_)
                fixed_[a] = evaluate_atom(f, f.atoms[a], Model{});
    }

    void run() { go(0); }

private:
    const Formula& f_;
    bool partial_;
    const std::function<bool(const Skeleton&)>& visit_;
    std::vector<std::size_t> order_;
    Assignment assignment_;
    std::vector<std::optional<bool>> fixed_;
    bool stopped_ = false;

    Skeleton current() const
    {
        Skeleton s;
        for (std::size_t a = 0; a < assignment_.size(); ++a)
            if (assignment_[a] >= 0)
                s.push_back({a, assignment_[a] == 1});
        return s;
    }

    void go(std::size_t depth)
    {
        if (stopped_)
            return;
        auto v = value_of(f_.root, assignment_);
        if (v == false)
            return;
        if (v == true && (partial_ || depth == order_.size())) {
            if (!visit_(current()))
                stopped_ = true;
            return;
        }
        if (depth == order_.size())
            return;
        auto atom = order_[depth];
        for (bool value : {true, false}) {
            if (fixed_[atom] && *fixed_[atom] != value)
                continue;
            assignment_[atom] = value ? 1 : 0;
            go(depth + 1);
            assignment_[atom] = -1;
            if (stopped_)
                return;
        }
    }
};

IntLiteral int_literal(const LinearAtom& a, bool value)
{
    auto t = a.lhs - a.rhs;
    IntLiteral out;
    out.ints = t.ints;
    out.lens = t.lens;
    std::int64_t rhs = -t.constant;
    switch (a.relation) {
    case Relation::Le:
        out.cmp = value ? Comparison::Le : Comparison::Ge;
        out.rhs = value ? rhs : rhs + 1;
        break;
    case Relation::Ge:
        out.cmp = value ? Comparison::Ge : Comparison::Le;
        out.rhs = value ? rhs : rhs - 1;
        break;
    case Relation::Eq:
        out.cmp = value ? Comparison::Eq : Comparison::Ne;
        out.rhs = rhs;
        break;
    }
    return out;
}

} // namespace

std::vector<Skeleton> enumerate_boolean_skeletons(const Formula& f)
{
    std::vector<Skeleton> out;
    std::function<bool(const Skeleton&)> keep = [&](const Skeleton& s) {
        out.push_back(s);
        return true;
    };
    SkeletonSearch(f, false, keep).run();
    return out;
}

void for_each_partial_skeleton(const Formula& f, const std::function<bool(const Skeleton&)>& visit)
{
    SkeletonSearch(f, true, visit).run();
}

AtomLists split_literals(const Formula& f, const Skeleton& s)
{
    AtomLists out;
    for (const auto& lit : s) {
        const auto& atom = f.atoms[lit.atom];
        if (const auto* m = std::get_if<MembershipAtom>(&atom)) {
            auto copy = *m;
            copy.positive = m->positive == lit.value;
            out.regular.push_back(std::move(copy));
        } else if (const auto* l = std::get_if<LinearAtom>(&atom)) {
            out.arithmetic.push_back(int_literal(*l, lit.value));
        } else if (const auto* n = std::get_if<NumstrAtom>(&atom)) {
            auto number = n->number.single_int_var();
            if (!number || !n->word.is_single_var())
                throw std::invalid_argument("numstr literal is not of the form numstr(i, x)");
            out.links.push_back({*number, n->word.items.front().text, n->positive == lit.value, binary_words(f.strict_numstr)});
        } else {
            throw std::invalid_argument("word equations have no literal form");
        }
    }
    return out;
}

} // namespace rex
