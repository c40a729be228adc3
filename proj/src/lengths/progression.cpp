#include "rex/lengths/progression.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

#include <json.hpp>

namespace rex {

bool Progression::subset_of(const Progression& other) const
{
    if (period == 0)
        return other.contains(offset);
    if (other.period == 0)
        return false;
    return offset >= other.offset && period % other.period == 0 && (offset - other.offset) % other.period == 0;
}

ProgressionSet::ProgressionSet(std::vector<Progression> parts)
{
    auto member = [&](std::uint64_t n) {
        return std::any_of(parts.begin(), parts.end(), [&](const Progression& p) { return p.contains(n); });
    };
    // Pull each infinite progression down while the set still covers the step.
    for (auto& p : parts)
        if (p.period != 0)
            while (p.offset >= p.period && member(p.offset - p.period))
                p.offset -= p.period;
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        bool subsumed = false;
        for (std::size_t j = 0; j < parts.size() && !subsumed; ++j)
            subsumed = j != i && parts[i].subset_of(parts[j]);
        if (!subsumed)
            parts_.push_back(parts[i]);
    }
}

bool ProgressionSet::contains(std::uint64_t n) const
{
    return std::any_of(parts_.begin(), parts_.end(), [&](const Progression& p) { return p.contains(n); });
}

bool ProgressionSet::is_finite() const
{
    return std::all_of(parts_.begin(), parts_.end(), [](const Progression& p) { return p.period == 0; });
}

std::optional<std::uint64_t> ProgressionSet::minimum() const
{
    if (parts_.empty())
        return std::nullopt;
    std::uint64_t best = parts_.front().offset;
    for (const auto& p : parts_)
        best = std::min(best, p.offset);
    return best;
}

std::string ProgressionSet::to_json() const
{
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& p : parts_)
        out.push_back({{"offset", p.offset}, {"period", p.period}});
    return out.dump();
}

bool progression_member(const ProgressionSet& set, std::uint64_t n) { return set.contains(n); }

std::uint64_t exactness_threshold(std::uint64_t reachable_states)
{
    return reachable_states * reachable_states + 2 * reachable_states;
}

namespace {

constexpr std::uint64_t unreachable = std::numeric_limits<std::uint64_t>::max();

/// Unary view of the useful part of an automaton.
struct UnaryGraph {
    std::size_t size = 0;
    std::size_t initial = 0;
    std::vector<bool> final;
    std::vector<std::vector<std::size_t>> next;
};

UnaryGraph useful_part(const Nfa& m, std::size_t& reachable_count)
{
    UnaryGraph g;
    reachable_count = 0;
    if (m.state_count() == 0)
        return g;
    auto reach = reachable_from(m, m.initial());
    auto coreach = coreachable(m);
    reachable_count = static_cast<std::size_t>(std::count(reach.begin(), reach.end(), true));
    if (!coreach[m.initial()])
        return g;
    std::vector<std::size_t> rename(m.state_count(), SIZE_MAX);
    for (State q = 0; q < m.state_count(); ++q)
        if (reach[q] && coreach[q])
            rename[q] = g.size++;
    g.initial = rename[m.initial()];
    g.final.assign(g.size, false);
    g.next.resize(g.size);
    for (State q = 0; q < m.state_count(); ++q) {
        if (rename[q] == SIZE_MAX)
            continue;
        g.final[rename[q]] = m.is_final(q);
        for (Symbol s = 0; s < m.alphabet().size(); ++s)
            for (State p : m.successors(q, s))
                if (rename[p] != SIZE_MAX)
                    g.next[rename[q]].push_back(rename[p]);
        auto& n = g.next[rename[q]];
        std::sort(n.begin(), n.end());
        n.erase(std::unique(n.begin(), n.end()), n.end());
    }
    return g;
}

/// Length of the shortest cycle through q, or 0 when q lies on none.
std::uint64_t shortest_cycle(const UnaryGraph& g, std::size_t q)
{
    std::vector<std::uint64_t> dist(g.size, unreachable);
    std::deque<std::size_t> work;
    for (auto p : g.next[q]) {
        if (p == q)
            return 1;
        if (dist[p] == unreachable) {
            dist[p] = 1;
            work.push_back(p);
        }
    }
    while (!work.empty()) {
        auto u = work.front();
        work.pop_front();
        for (auto p : g.next[u]) {
            if (p == q)
                return dist[u] + 1;
            if (dist[p] == unreachable) {
                dist[p] = dist[u] + 1;
                work.push_back(p);
            }
        }
    }
    return 0;
}

/// dist[v * period + r]: least length of a path from `source` to v with length = r (mod period).
std::vector<std::uint64_t> residue_distances(const UnaryGraph& g, std::size_t source, std::uint64_t period)
{
    std::vector<std::uint64_t> dist(g.size * period, unreachable);
    std::deque<std::pair<std::size_t, std::uint64_t>> work;
    dist[source * period] = 0;
    work.emplace_back(source, 0);
    while (!work.empty()) {
        auto [u, r] = work.front();
        work.pop_front();
        auto d = dist[u * period + r];
        auto r2 = (r + 1) % period;
        for (auto p : g.next[u]) {
            if (dist[p * period + r2] == unreachable) {
                dist[p * period + r2] = d + 1;
                work.emplace_back(p, r2);
            }
        }
    }
    return dist;
}

/// Least accepting length through q in each residue class modulo `period`.
std::vector<std::uint64_t> through_state(const UnaryGraph& g, std::size_t q, std::uint64_t period,
                                         const std::vector<std::uint64_t>& from_init)
{
    auto from_q = residue_distances(g, q, period);
    std::vector<std::uint64_t> to_final(period, unreachable);
    for (std::size_t f = 0; f < g.size; ++f)
        if (g.final[f])
            for (std::uint64_t r = 0; r < period; ++r)
                to_final[r] = std::min(to_final[r], from_q[f * period + r]);
    std::vector<std::uint64_t> best(period, unreachable);
    for (std::uint64_t a = 0; a < period; ++a) {
        auto head = from_init[q * period + a];
        if (head == unreachable)
            continue;
        for (std::uint64_t b = 0; b < period; ++b)
            if (to_final[b] != unreachable)
                best[(a + b) % period] = std::min(best[(a + b) % period], head + to_final[b]);
    }
    return best;
}

} // namespace

ProgressionSet length_abstraction(const Nfa& m)
{
    std::size_t reachable = 0;
    auto g = useful_part(m, reachable);
    if (g.size == 0)
        return {};
    std::vector<Progression> parts;

    // Every path of length >= g.size repeats a state, so it runs through a
    // state on a cycle; the residue-class progressions of those states cover
    // all such lengths. Shorter lengths are tabulated directly.
    std::vector<bool> current(g.size, false);
    current[g.initial] = true;
    for (std::uint64_t n = 0; n < g.size; ++n) {
        bool accepted = false;
        std::vector<bool> next(g.size, false);
        for (std::size_t q = 0; q < g.size; ++q) {
            if (!current[q])
                continue;
            accepted = accepted || g.final[q];
            for (auto p : g.next[q])
                next[p] = true;
        }
        if (accepted)
            parts.push_back({n, 0});
        current = std::move(next);
    }

    std::map<std::uint64_t, std::vector<std::uint64_t>> from_init;
    for (std::size_t q = 0; q < g.size; ++q) {
        auto period = shortest_cycle(g, q);
        if (period == 0)
            continue;
        auto it = from_init.find(period);
        if (it == from_init.end())
            it = from_init.emplace(period, residue_distances(g, g.initial, period)).first;
        auto best = through_state(g, q, period, it->second);
        for (auto offset : best)
            if (offset != unreachable)
                parts.push_back({offset, period});
    }
    return ProgressionSet(std::move(parts));
}

ProgressionSet length_abstraction(LazyProduct& p) { return length_abstraction(p.materialize()); }

} // namespace rex
