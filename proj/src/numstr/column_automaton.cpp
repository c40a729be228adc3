#include "rex/numstr/column_automaton.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace rex {

ColumnBudgetExceeded::ColumnBudgetExceeded(std::size_t configurations)
    : std::runtime_error("column search exceeded " + std::to_string(configurations) + " configurations")
{
}

std::int64_t saturation_bound(const LinearConstraint& c)
{
    __int128 bound = c.rhs < 0 ? -static_cast<__int128>(c.rhs) : c.rhs;
    for (const auto& [_, a] : c.coeffs)
        bound += a < 0 ? -static_cast<__int128>(a) : a;
    if (bound > std::numeric_limits<std::int64_t>::max() / 4)
        throw OverflowError("linear constraint too large for the column search");
    return static_cast<std::int64_t>(bound);
}

namespace {

constexpr std::int64_t above = std::numeric_limits<std::int64_t>::max();
constexpr std::int64_t below = std::numeric_limits<std::int64_t>::min();

/// Cell contents: blank (Word tapes only), bit 0, bit 1.
enum Cell : std::uint8_t { Blank = 0, Zero = 1, One = 2 };

using Config = std::vector<std::int64_t>;

struct ConfigHash {
    std::size_t operator()(const Config& c) const
    {
        std::size_t h = c.size();
        for (auto v : c)
            h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

/// Residue tracking for a natural tape restricted to a progression set:
/// exact values up to the largest offset, then value mod the lcm of periods.
struct ValueTracker {
    std::int64_t cap = 0;
    std::int64_t modulus = 0;

    explicit ValueTracker(const ProgressionSet& set)
    {
        for (const auto& p : set.progressions()) {
            cap = std::max<std::int64_t>(cap, static_cast<std::int64_t>(p.offset));
            if (p.period > 0) {
                auto m = std::lcm<std::int64_t>(modulus == 0 ? 1 : modulus, static_cast<std::int64_t>(p.period));
                if (m > (std::int64_t{1} << 24))
                    throw OverflowError("progression periods too large for the column search");
                modulus = m;
            }
        }
    }

    /// -1 marks a dead state (value beyond every finite member).
    std::int64_t step(std::int64_t state, int bit) const
    {
        if (state <= cap) {
            std::int64_t v = 2 * state + bit;
            if (v <= cap)
                return v;
            return modulus == 0 ? -1 : cap + 1 + v % modulus;
        }
        return cap + 1 + (2 * (state - cap - 1) + bit) % modulus;
    }

    bool accepts(const ProgressionSet& set, std::int64_t state) const
    {
        if (state < 0)
            return false;
        if (state <= cap)
            return set.contains(static_cast<std::uint64_t>(state));
        auto residue = state - cap - 1;
        for (const auto& p : set.progressions())
            if (p.period > 0 && residue % static_cast<std::int64_t>(p.period) ==
                                    static_cast<std::int64_t>(p.offset % p.period))
                return true;
        return false;
    }
};

class Search {
public:
    Search(const ColumnAutomaton& spec, const ColumnSearch& options) : spec_(spec), options_(options)
    {
        for (const auto& c : spec.constraints)
            bounds_.push_back(saturation_bound(c));
        for (const auto& t : spec.tapes) {
            radix_.push_back(t.kind == TapeKind::Word ? 3 : 2);
            trackers_.push_back(t.values ? std::optional<ValueTracker>(ValueTracker(*t.values)) : std::nullopt);
            if (t.kind == TapeKind::Word && t.language) {
                const auto& a = t.language->alphabet();
                zero_.push_back(a.index_of('0'));
                one_.push_back(a.index_of('1'));
            } else {
                zero_.push_back(std::nullopt);
                one_.push_back(std::nullopt);
            }
        }
        // Layout: [started, partial sums..., per tape: (flag, state, count)].
        tape_base_ = 1 + spec.constraints.size();
    }

    std::optional<ColumnWitness> run()
    {
        Config start(tape_base_ + 3 * spec_.tapes.size(), 0);
        for (std::size_t t = 0; t < spec_.tapes.size(); ++t)
            if (spec_.tapes[t].language)
                slot(start, t, 1) = static_cast<std::int64_t>(spec_.tapes[t].language->initial());
        intern(start, npos, {});
        std::size_t layer_begin = 0;
        std::size_t columns = 0;
        while (layer_begin < configs_.size()) {
            std::size_t layer_end = configs_.size();
            if (options_.frontier)
                options_.frontier(layer_json(columns, layer_begin, layer_end));
            for (std::size_t id = layer_begin; id < layer_end; ++id) {
                if (configs_[id][0] == 1 && accepting(configs_[id]))
                    return witness(id);
            }
            for (std::size_t id = layer_begin; id < layer_end; ++id)
                expand(id);
            layer_begin = layer_end;
            ++columns;
        }
        return std::nullopt;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    const ColumnAutomaton& spec_;
    const ColumnSearch& options_;
    std::vector<std::int64_t> bounds_;
    std::vector<int> radix_;
    std::vector<std::optional<ValueTracker>> trackers_;
    std::vector<std::optional<Symbol>> zero_;
    std::vector<std::optional<Symbol>> one_;
    std::size_t tape_base_ = 0;

    std::vector<Config> configs_;
    std::vector<std::pair<std::size_t, std::vector<std::uint8_t>>> parent_;
    std::unordered_map<Config, std::size_t, ConfigHash> ids_;

    std::int64_t& slot(Config& c, std::size_t tape, std::size_t field) const { return c[tape_base_ + 3 * tape + field]; }
    std::int64_t slot(const Config& c, std::size_t tape, std::size_t field) const
    {
        return c[tape_base_ + 3 * tape + field];
    }

    void intern(Config c, std::size_t parent, const std::vector<std::uint8_t>& column)
    {
        if (ids_.contains(c))
            return;
        if (configs_.size() >= options_.budget)
            throw ColumnBudgetExceeded(options_.budget);
        ids_.emplace(c, configs_.size());
        configs_.push_back(std::move(c));
        parent_.emplace_back(parent, column);
        if (options_.stats)
            options_.stats->configurations = configs_.size();
    }

    bool accepting(const Config& c) const
    {
        for (std::size_t k = 0; k < spec_.constraints.size(); ++k) {
            auto s = c[1 + k];
            auto rhs = spec_.constraints[k].rhs;
            bool ok = false;
            switch (spec_.constraints[k].cmp) {
            case Comparison::Le:
                ok = s != above && (s == below || s <= rhs);
                break;
            case Comparison::Ge:
                ok = s != below && (s == above || s >= rhs);
                break;
            case Comparison::Eq:
                ok = s != above && s != below && s == rhs;
                break;
            case Comparison::Ne:
                ok = s == above || s == below || s != rhs;
                break;
            }
            if (!ok)
                return false;
        }
        for (std::size_t t = 0; t < spec_.tapes.size(); ++t) {
            const auto& tape = spec_.tapes[t];
            if (tape.kind == TapeKind::Word) {
                bool started = slot(c, t, 0) == 1;
                if (tape.nonempty && !started)
                    return false;
                if (tape.language && !tape.language->is_final(static_cast<LazyProduct::TupleId>(slot(c, t, 1))))
                    return false;
                if (tape.exact_length && static_cast<std::size_t>(slot(c, t, 2)) != *tape.exact_length)
                    return false;
            } else if (trackers_[t] && !trackers_[t]->accepts(*tape.values, slot(c, t, 1))) {
                return false;
            }
        }
        return true;
    }

    /// Advances one tape by one cell; returns the possible successor configurations.
    void step_tape(const Config& from, std::size_t t, std::uint8_t cell, std::vector<Config>& out) const
    {
        const auto& tape = spec_.tapes[t];
        std::vector<Config> next;
        for (auto c : out) {
            if (tape.kind == TapeKind::Word) {
                bool started = slot(from, t, 0) == 1;
                if (cell == Blank) {
                    if (started)
                        continue;
                    next.push_back(std::move(c));
                    continue;
                }
                slot(c, t, 0) = 1;
                if (tape.exact_length) {
                    auto count = slot(from, t, 2) + 1;
                    if (static_cast<std::size_t>(count) > *tape.exact_length)
                        continue;
                    slot(c, t, 2) = count;
                }
                if (!tape.language) {
                    next.push_back(std::move(c));
                    continue;
                }
                auto symbol = cell == One ? one_[t] : zero_[t];
                if (!symbol)
                    continue;
                auto state = static_cast<LazyProduct::TupleId>(slot(from, t, 1));
                for (auto succ : tape.language->successors(state, *symbol)) {
                    auto copy = c;
                    slot(copy, t, 1) = static_cast<std::int64_t>(succ);
                    next.push_back(std::move(copy));
                }
            } else if (trackers_[t]) {
                auto state = trackers_[t]->step(slot(from, t, 1), cell == One ? 1 : 0);
                if (state < 0)
                    continue;
                slot(c, t, 1) = state;
                next.push_back(std::move(c));
            } else {
                next.push_back(std::move(c));
            }
        }
        out = std::move(next);
    }

    void expand(std::size_t id)
    {
        const Config from = configs_[id];
        const bool first = from[0] == 0;
        std::vector<std::uint8_t> column(spec_.tapes.size(), 0);
        for (std::size_t t = 0; t < column.size(); ++t)
            column[t] = radix_[t] == 3 ? Blank : Zero;
        for (;;) {
            if (options_.stats)
                ++options_.stats->transitions;
            Config base = from;
            base[0] = 1;
            bool alive = true;
            for (std::size_t k = 0; k < spec_.constraints.size() && alive; ++k) {
                auto s = from[1 + k];
                if (s == above || s == below)
                    continue;
                __int128 v = 2 * static_cast<__int128>(s);
                for (const auto& [t, a] : spec_.constraints[k].coeffs) {
                    if (column[t] != One)
                        continue;
                    bool sign = first && spec_.tapes[t].kind == TapeKind::Integer;
                    v += sign ? -static_cast<__int128>(a) : a;
                }
                base[1 + k] = v > bounds_[k] ? above : v < -bounds_[k] ? below : static_cast<std::int64_t>(v);
            }
            std::vector<Config> configs{std::move(base)};
            for (std::size_t t = 0; t < column.size() && !configs.empty(); ++t)
                step_tape(from, t, column[t], configs);
            for (auto& c : configs)
                intern(std::move(c), id, column);
            // Odometer over columns, first tape most significant.
            std::size_t t = column.size();
            while (t-- > 0) {
                if (column[t] < One) {
                    ++column[t];
                    break;
                }
                column[t] = radix_[t] == 3 ? Blank : Zero;
            }
            if (t == npos)
                return;
        }
    }

    ColumnWitness witness(std::size_t id) const
    {
        std::vector<std::vector<std::uint8_t>> columns;
        for (auto at = id; parent_[at].first != npos; at = parent_[at].first)
            columns.push_back(parent_[at].second);
        std::reverse(columns.begin(), columns.end());
        ColumnWitness w;
        w.columns = columns.size();
        for (std::size_t t = 0; t < spec_.tapes.size(); ++t) {
            __int128 value = 0;
            std::string word;
            for (std::size_t i = 0; i < columns.size(); ++i) {
                auto cell = columns[i][t];
                if (cell == Blank)
                    continue;
                int bit = cell == One ? 1 : 0;
                word += cell == One ? '1' : '0';
                bool sign = i == 0 && spec_.tapes[t].kind == TapeKind::Integer;
                value = 2 * value + (sign ? -bit : bit);
                if (value > std::numeric_limits<std::int64_t>::max() || value < std::numeric_limits<std::int64_t>::min())
                    throw OverflowError("tape '" + spec_.tapes[t].name + "' value does not fit in 64 bits");
            }
            w.values.push_back(static_cast<std::int64_t>(value));
            w.words.push_back(std::move(word));
        }
        return w;
    }

    std::string layer_json(std::size_t columns, std::size_t begin, std::size_t end) const
    {
        std::ostringstream out;
        out << "{\"columns\":" << columns << ",\"configurations\":" << end - begin << ",\"sample\":[";
        for (std::size_t id = begin; id < end && id < begin + 8; ++id) {
            out << (id == begin ? "" : ",") << '[';
            for (std::size_t k = 0; k < configs_[id].size(); ++k) {
                auto v = configs_[id][k];
                out << (k ? "," : "");
                if (v == above)
                    out << "\"above\"";
                else if (v == below)
                    out << "\"below\"";
                else
                    out << v;
            }
            out << ']';
        }
        out << "]}";
        return out.str();
    }
};

} // namespace

std::optional<ColumnWitness> multitape_emptiness(const ColumnAutomaton& spec, const ColumnSearch& search)
{
    return Search(spec, search).run();
}

} // namespace rex
