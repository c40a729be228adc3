#include "rex/numstr/rewrite.hpp"

#include <limits>

#include "rex/frontend/nnf.hpp"
#include "rex/numstr/binary.hpp"

namespace rex {

RegexPtr binary_words(bool strict)
{
    auto bit = re_any_of("01");
    auto all = re_star(bit);
    return strict ? re_concat(bit, all) : all;
}

namespace {

bool is_binary(const std::string& w) { return w.find_first_not_of("01") == std::string::npos; }

/// Regex of the words whose binary value is n.
RegexPtr value_regex(std::int64_t n, bool strict)
{
    auto zeros = re_star(re_literal('0'));
    if (n == 0)
        return strict ? re_concat(zeros, re_literal('0')) : zeros;
    return re_concat(zeros, re_word(min_bin(static_cast<std::uint64_t>(n))));
}

class Rewriter {
public:
    Rewriter(const Formula& in, Formula& out) : in_(in), out_(out) {}

    Node rewrite(const Node& n)
    {
        switch (n.kind) {
        case NodeKind::True:
        case NodeKind::False:
            return n;
        case NodeKind::Not:
            throw std::invalid_argument("numstr rewriting requires negation normal form");
        case NodeKind::And:
        case NodeKind::Or: {
            std::vector<Node> parts;
            for (const auto& c : n.children)
                parts.push_back(rewrite(c));
            return n.kind == NodeKind::And ? Node::conjunction(std::move(parts)) : Node::disjunction(std::move(parts));
        }
        case NodeKind::Atom:
            break;
        }
        const auto& atom = in_.atoms[n.atom];
        if (const auto* a = std::get_if<NumstrAtom>(&atom))
            return numstr(*a);
        return Node::leaf(out_.add_atom(atom));
    }

    std::vector<NumstrLink> links;

private:
    const Formula& in_;
    Formula& out_;

    Node membership(const std::string& x, RegexPtr r, bool positive)
    {
        return Node::leaf(out_.add_atom(MembershipAtom{Pattern::variable(x), std::move(r), positive}));
    }

    Node linear(LinearTerm lhs, Relation rel, std::int64_t rhs)
    {
        return Node::leaf(out_.add_atom(LinearAtom{std::move(lhs), rel, LinearTerm::of_constant(rhs)}));
    }

    /// t = v, or its complement t <= v-1 or t >= v+1.
    Node equals(const LinearTerm& t, std::int64_t v, bool positive)
    {
        if (positive)
            return linear(t, Relation::Eq, v);
        std::vector<Node> parts;
        if (v > std::numeric_limits<std::int64_t>::min())
            parts.push_back(linear(t, Relation::Le, v - 1));
        if (v < std::numeric_limits<std::int64_t>::max())
            parts.push_back(linear(t, Relation::Ge, v + 1));
        return Node::disjunction(std::move(parts));
    }

    Node numstr(const NumstrAtom& a)
    {
        const bool strict = in_.strict_numstr;
        auto word = a.word.normalized();
        if (word.is_ground()) {
            auto w = word.constant_text();
            if (a.number.is_constant())
                return Node::constant(numstr_holds(a.number.constant, w, strict) == a.positive);
            if (!is_binary(w) || (strict && w.empty()))
                return Node::constant(!a.positive);
            std::uint64_t value = 0;
            try {
                value = bin_value(w);
            } catch (const std::overflow_error&) {
                return Node::constant(!a.positive);
            }
            if (value > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
                return Node::constant(!a.positive);
            return equals(a.number, static_cast<std::int64_t>(value), a.positive);
        }
        if (!word.is_single_var())
            throw UnsupportedPattern("numstr over a concatenation is not supported");
        const auto& x = word.items.front().text;
        if (a.number.is_constant()) {
            if (a.number.constant < 0)
                return Node::constant(!a.positive);
            return membership(x, value_regex(a.number.constant, strict), a.positive);
        }
        if (auto j = a.number.single_int_var())
            return link(*j, x, a.positive);
        auto j = out_.fresh("ns!j", Sort::Int);
        auto definition = Node::leaf(out_.add_atom(LinearAtom{LinearTerm::of_int(j), Relation::Eq, a.number}));
        return Node::conjunction({std::move(definition), link(j, x, a.positive)});
    }

    Node link(const std::string& j, const std::string& x, bool positive)
    {
        links.push_back({j, x, positive, binary_words(in_.strict_numstr)});
        return Node::leaf(out_.add_atom(NumstrAtom{LinearTerm::of_int(j), Pattern::variable(x), positive}));
    }
};

} // namespace

std::pair<Formula, std::vector<NumstrLink>> rewrite_numstr(const Formula& f)
{
    if (!is_nnf(f.root))
        throw std::invalid_argument("numstr rewriting requires negation normal form");
    Formula out;
    out.alphabet = f.alphabet;
    out.declarations = f.declarations;
    out.strict_numstr = f.strict_numstr;
    Rewriter r(f, out);
    out.root = r.rewrite(f.root);
    return {std::move(out), std::move(r.links)};
}

} // namespace rex
