#include "rex/encodings/encodings.hpp"

#include <algorithm>
#include <set>

namespace rex {

namespace {

bool is_bit(char c) { return c == '0' || c == '1'; }

Pattern bits_only(const Pattern& p)
{
    Pattern out = p;
    for (auto& item : out.items)
        if (!item.is_var)
            std::replace_if(item.text.begin(), item.text.end(), [](char c) { return !is_bit(c); }, '0');
    return out;
}

class Builder {
public:
    Builder(const Pattern& a, const Pattern& b)
    {
        std::set<char> letters{'0', '1'};
        for (const auto* p : {&a, &b})
            for (const auto& item : p->items) {
                if (item.is_var) {
                    if (!f.sort_of(item.text))
                        f.declarations.push_back({item.text, Sort::String});
                } else {
                    letters.insert(item.text.begin(), item.text.end());
                }
            }
        f.alphabet = Alphabet(std::string(letters.begin(), letters.end()));
    }

    Formula f;
    std::vector<Node> parts;

    void member(const Pattern& p, RegexPtr r)
    {
        parts.push_back(Node::leaf(f.add_atom(MembershipAtom{p, std::move(r), true})));
    }

    void numstr(const std::string& n, const Pattern& w)
    {
        parts.push_back(Node::leaf(f.add_atom(NumstrAtom{LinearTerm::of_int(n), w, true})));
    }

    void less_eq(LinearTerm lhs, LinearTerm rhs)
    {
        parts.push_back(Node::leaf(f.add_atom(LinearAtom{std::move(lhs), Relation::Le, std::move(rhs)})));
    }

    void equal(LinearTerm lhs, LinearTerm rhs)
    {
        parts.push_back(Node::leaf(f.add_atom(LinearAtom{std::move(lhs), Relation::Eq, std::move(rhs)})));
    }

    /// 1·0^k for z pins i = 2^k and j = 2^(k+1); 1·a then lies in [i, j)
    /// exactly when |a| = k.
    void eq_len(const Pattern& a, const Pattern& b, const std::string& z)
    {
        auto i = f.fresh("enc!i", Sort::Int);
        auto j = f.fresh("enc!j", Sort::Int);
        auto na = f.fresh("enc!na", Sort::Int);
        auto nb = f.fresh("enc!nb", Sort::Int);
        auto zv = Pattern::variable(z);
        member(zv, re_concat(re_literal('1'), re_star(re_literal('0'))));
        numstr(i, zv);
        numstr(j, (zv + Pattern::word("0")).normalized());
        numstr(na, (Pattern::word("1") + a).normalized());
        numstr(nb, (Pattern::word("1") + b).normalized());
        auto one = LinearTerm::of_constant(1);
        less_eq(LinearTerm::of_int(i), LinearTerm::of_int(na));
        less_eq(LinearTerm::of_int(na) + one, LinearTerm::of_int(j));
        less_eq(LinearTerm::of_int(i), LinearTerm::of_int(nb));
        less_eq(LinearTerm::of_int(nb) + one, LinearTerm::of_int(j));
    }

    Encoding finish(std::vector<AlphabetWarning> warnings = {})
    {
        f.root = Node::conjunction(std::move(parts));
        auto tag = classify_theory(f);
        return {std::move(f), tag, std::move(warnings)};
    }
};

} // namespace

std::string AlphabetWarning::message() const
{
    return "constant \"" + constant + "\" has letters outside {0,1}; its numstr atoms cannot hold";
}

Encoding encode_eq_len(const Pattern& a, const Pattern& b)
{
    Builder out(a, b);
    auto z = out.f.fresh("enc!z", Sort::String);
    out.eq_len(bits_only(a), bits_only(b), z);
    return out.finish();
}

Encoding encode_eq(const Pattern& a, const Pattern& b)
{
    std::vector<AlphabetWarning> warnings;
    for (const auto* p : {&a, &b})
        for (const auto& item : p->items)
            if (!item.is_var && !std::all_of(item.text.begin(), item.text.end(), is_bit))
                warnings.push_back({item.text});
    Builder out(a, b);
    auto z = out.f.fresh("enc!z", Sort::String);
    out.eq_len(a, b, z);
    // Equal lengths make 1a1b and 1b1a align, so equal values force a = b.
    auto i = out.f.fresh("enc!i", Sort::Int);
    auto j = out.f.fresh("enc!j", Sort::Int);
    auto one = Pattern::word("1");
    out.numstr(i, (one + a + one + b).normalized());
    out.numstr(j, (one + b + one + a).normalized());
    out.equal(LinearTerm::of_int(i), LinearTerm::of_int(j));
    return out.finish(std::move(warnings));
}

Encoding encode_leq_len(const Pattern& a, const Pattern& b)
{
    Builder out(a, b);
    auto z = out.f.fresh("enc!z", Sort::String);
    auto pad = out.f.fresh("enc!pad", Sort::String);
    out.member(Pattern::variable(pad), re_star(re_union(re_literal('0'), re_literal('1'))));
    out.eq_len((bits_only(a) + Pattern::variable(pad)).normalized(), bits_only(b), z);
    return out.finish();
}

} // namespace rex
