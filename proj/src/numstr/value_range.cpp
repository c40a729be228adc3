#include "rex/numstr/value_range.hpp"

#include <functional>

namespace rex {

namespace {

constexpr std::size_t max_bits = 62;

using StateSet = std::vector<bool>;

bool any(const StateSet& s)
{
    for (bool b : s)
        if (b)
            return true;
    return false;
}

class BinaryView {
public:
    explicit BinaryView(const Nfa& m) : m_(m)
    {
        const auto& ab = m.alphabet();
        if (auto s = ab.index_of('0'))
            bits_.push_back(*s);
        else
            bits_.push_back(std::nullopt);
        if (auto s = ab.index_of('1'))
            bits_.push_back(*s);
        else
            bits_.push_back(std::nullopt);
    }

    std::size_t size() const { return m_.state_count(); }

    StateSet step(const StateSet& from, int bit) const
    {
        StateSet out(size(), false);
        if (!bits_[bit])
            return out;
        for (State q = 0; q < size(); ++q)
            if (from[q])
                for (State p : m_.successors(q, *bits_[bit]))
                    out[p] = true;
        return out;
    }

    /// States with a path of exactly one bit into `target`.
    StateSet pre(const StateSet& target) const
    {
        StateSet out(size(), false);
        for (State q = 0; q < size(); ++q)
            for (const auto& s : bits_)
                if (s)
                    for (State p : m_.successors(q, *s))
                        if (target[p])
                            out[q] = true;
        return out;
    }

    bool has_cycle(const StateSet& within) const
    {
        std::vector<int> colour(size(), 0);
        std::function<bool(State)> dfs = [&](State q) {
            colour[q] = 1;
            for (const auto& s : bits_) {
                if (!s)
                    continue;
                for (State p : m_.successors(q, *s)) {
                    if (!within[p])
                        continue;
                    if (colour[p] == 1 || (colour[p] == 0 && dfs(p)))
                        return true;
                }
            }
            colour[q] = 2;
            return false;
        };
        for (State q = 0; q < size(); ++q)
            if (within[q] && colour[q] == 0 && dfs(q))
                return true;
        return false;
    }

    StateSet closure(StateSet s) const
    {
        for (bool grew = true; grew;) {
            grew = false;
            for (int bit : {0, 1}) {
                auto next = step(s, bit);
                for (State q = 0; q < size(); ++q)
                    if (next[q] && !s[q])
                        s[q] = grew = true;
            }
        }
        return s;
    }

private:
    const Nfa& m_;
    std::vector<std::optional<Symbol>> bits_;
};

StateSet intersect(StateSet a, const StateSet& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] = a[i] && b[i];
    return a;
}

/// Value of the word "1w" where w is chosen greedily over `good` layers.
std::int64_t greedy_value(const BinaryView& v, StateSet cur, const std::vector<StateSet>& good, std::size_t length,
                          int preferred)
{
    cur = intersect(std::move(cur), good[length]);
    std::int64_t value = 1;
    for (std::size_t r = length; r > 0; --r) {
        auto next = intersect(v.step(cur, preferred), good[r - 1]);
        int bit = preferred;
        if (!any(next)) {
            bit = 1 - preferred;
            next = intersect(v.step(cur, bit), good[r - 1]);
        }
        value = value * 2 + bit;
        cur = std::move(next);
    }
    return value;
}

} // namespace

ValueRange binary_value_range(LazyProduct& p)
{
    Nfa m = p.materialize();
    ValueRange out;
    if (m.state_count() == 0)
        return out;
    BinaryView v(m);

    StateSet finals(v.size(), false);
    for (State q : m.finals())
        finals[q] = true;
    StateSet zeros(v.size(), false);
    zeros[m.initial()] = true;
    for (bool grew = true; grew;) {
        grew = false;
        auto next = v.step(zeros, 0);
        for (State q = 0; q < v.size(); ++q)
            if (next[q] && !zeros[q])
                zeros[q] = grew = true;
    }
    const bool zero_value = any(intersect(zeros, finals));
    auto after_one = v.step(zeros, 1);

    // good[r]: states with an accepting bit path of exactly r symbols.
    std::vector<StateSet> good{finals};
    std::optional<std::size_t> shortest;
    for (std::size_t r = 0; r <= max_bits; ++r) {
        if (r > 0)
            good.push_back(v.pre(good.back()));
        if (any(intersect(after_one, good[r]))) {
            shortest = r;
            break;
        }
    }

    auto live = v.closure(after_one);
    StateSet co = finals;
    for (bool grew = true; grew;) {
        grew = false;
        auto back = v.pre(co);
        for (State q = 0; q < v.size(); ++q)
            if (back[q] && !co[q])
                co[q] = grew = true;
    }
    const auto useful = intersect(live, co);
    const bool significant = any(intersect(after_one, co));

    out.empty = !zero_value && !significant;
    if (out.empty)
        return out;
    if (zero_value)
        out.minimum = 0;
    else if (shortest)
        out.minimum = greedy_value(v, after_one, good, *shortest, 0);
    else
        out.minimum = std::int64_t{1} << max_bits;

    if (!significant) {
        out.maximum = 0;
        return out;
    }
    if (v.has_cycle(useful))
        return out;
    // Acyclic: the longest significant word is shorter than the state count.
    while (good.size() < v.size() + 1)
        good.push_back(v.pre(good.back()));
    std::optional<std::size_t> longest;
    for (std::size_t r = good.size(); r-- > 0;)
        if (any(intersect(after_one, good[r]))) {
            longest = r;
            break;
        }
    if (longest && *longest < max_bits)
        out.maximum = greedy_value(v, after_one, good, *longest, 1);
    return out;
}

} // namespace rex
