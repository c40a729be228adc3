#include "rex/frontend/eval.hpp"

#include <map>
#include <utility>
#include <vector>

#include "rex/numstr/binary.hpp"

namespace rex {

namespace {

class Matcher {
public:
    Matcher(std::string_view w) : word_(w) {}

    /// ends[j] is true iff r matches word_[i, j).
    const std::vector<bool>& ends(const Regex& r, std::size_t i)
    {
        auto key = std::make_pair(&r, i);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        std::vector<bool> out(word_.size() + 1, false);
        switch (r.kind) {
        case RegexKind::Empty:
            break;
        case RegexKind::Epsilon:
            out[i] = true;
            break;
        case RegexKind::Literal:
            if (i < word_.size() && word_[i] == r.symbol)
                out[i + 1] = true;
            break;
        case RegexKind::Concat: {
            auto mid = ends(*r.left, i);
            for (std::size_t j = i; j <= word_.size(); ++j) {
                if (!mid[j])
                    continue;
                const auto& tail = ends(*r.right, j);
                for (std::size_t k = j; k <= word_.size(); ++k)
                    if (tail[k])
                        out[k] = true;
            }
            break;
        }
        case RegexKind::Union: {
            auto a = ends(*r.left, i);
            const auto& b = ends(*r.right, i);
            for (std::size_t j = i; j <= word_.size(); ++j)
                out[j] = a[j] || b[j];
            break;
        }
        case RegexKind::Star: {
            out[i] = true;
            std::vector<std::size_t> work{i};
            while (!work.empty()) {
                auto j = work.back();
                work.pop_back();
                const auto& step = ends(*r.left, j);
                for (std::size_t k = j + 1; k <= word_.size(); ++k) {
                    if (step[k] && !out[k]) {
                        out[k] = true;
                        work.push_back(k);
                    }
                }
            }
            break;
        }
        case RegexKind::Complement: {
            const auto& inner = ends(*r.left, i);
            for (std::size_t j = i; j <= word_.size(); ++j)
                out[j] = !inner[j];
            break;
        }
        }
        return memo_.emplace(key, std::move(out)).first->second;
    }

private:
    std::string_view word_;
    std::map<std::pair<const Regex*, std::size_t>, std::vector<bool>> memo_;
};

std::optional<std::string> instantiate(const Pattern& p, const Model& m)
{
    std::string out;
    for (const auto& item : p.items) {
        if (!item.is_var) {
            out += item.text;
            continue;
        }
        auto it = m.strings.find(item.text);
        if (it == m.strings.end())
            return std::nullopt;
        out += it->second;
    }
    return out;
}

std::optional<__int128> value_of(const LinearTerm& t, const Model& m)
{
    __int128 sum = t.constant;
    for (const auto& [v, c] : t.ints) {
        auto it = m.ints.find(v);
        if (it == m.ints.end())
            return std::nullopt;
        sum += static_cast<__int128>(c) * it->second;
    }
    for (const auto& [x, c] : t.lens) {
        auto it = m.strings.find(x);
        if (it == m.strings.end())
            return std::nullopt;
        sum += static_cast<__int128>(c) * static_cast<__int128>(it->second.size());
    }
    return sum;
}

std::optional<bool> evaluate_node(const Formula& f, const Node& n, const Model& m)
{
    switch (n.kind) {
    case NodeKind::True:
        return true;
    case NodeKind::False:
        return false;
    case NodeKind::Atom:
        return evaluate_atom(f, f.atoms[n.atom], m);
    case NodeKind::Not: {
        auto inner = evaluate_node(f, n.children.front(), m);
        if (!inner)
            return std::nullopt;
        return !*inner;
    }
    case NodeKind::And:
    case NodeKind::Or: {
        bool absorbing = n.kind == NodeKind::Or;
        bool unknown = false;
        for (const auto& c : n.children) {
            auto v = evaluate_node(f, c, m);
            if (!v)
                unknown = true;
            else if (*v == absorbing)
                return absorbing;
        }
        if (unknown)
            return std::nullopt;
        return !absorbing;
    }
    }
    return std::nullopt;
}

} // namespace

bool regex_matches(const Regex& r, std::string_view w, const Alphabet& alphabet)
{
    if (!alphabet.covers(w))
        return false;
    Matcher matcher(w);
    return matcher.ends(r, 0)[w.size()];
}

std::optional<bool> evaluate_atom(const Formula& f, const Atom& a, const Model& m)
{
    return std::visit(
        [&](const auto& atom) -> std::optional<bool> {
            using T = std::decay_t<decltype(atom)>;
            if constexpr (std::is_same_v<T, MembershipAtom>) {
                auto w = instantiate(atom.pattern, m);
                if (!w)
                    return std::nullopt;
                return regex_matches(*atom.regex, *w, f.alphabet) == atom.positive;
            } else if constexpr (std::is_same_v<T, LinearAtom>) {
                auto lhs = value_of(atom.lhs, m);
                auto rhs = value_of(atom.rhs, m);
                if (!lhs || !rhs)
                    return std::nullopt;
                switch (atom.relation) {
                case Relation::Le:
                    return *lhs <= *rhs;
                case Relation::Eq:
                    return *lhs == *rhs;
                case Relation::Ge:
                    return *lhs >= *rhs;
                }
                return std::nullopt;
            } else if constexpr (std::is_same_v<T, NumstrAtom>) {
                auto n = value_of(atom.number, m);
                auto w = instantiate(atom.word, m);
                if (!n || !w)
                    return std::nullopt;
                bool holds = *n >= 0 && *n <= INT64_MAX && numstr_holds(static_cast<std::int64_t>(*n), *w, f.strict_numstr);
                return holds == atom.positive;
            } else {
                auto lhs = instantiate(atom.lhs, m);
                auto rhs = instantiate(atom.rhs, m);
                if (!lhs || !rhs)
                    return std::nullopt;
                return (*lhs == *rhs) == atom.positive;
            }
        },
        a);
}

std::optional<bool> evaluate_partial(const Formula& f, const Model& m) { return evaluate_node(f, f.root, m); }

bool verify_model(const Formula& f, const Model& m)
{
    for (const auto& d : f.declarations) {
        if (d.sort == Sort::String) {
            auto it = m.strings.find(d.name);
            if (it == m.strings.end() || !f.alphabet.covers(it->second))
                return false;
        } else if (!m.ints.contains(d.name)) {
            return false;
        }
    }
    auto v = evaluate_partial(f, m);
    return v && *v;
}

} // namespace rex
