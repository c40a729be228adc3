#ifndef REX_LENGTHS_PROGRESSION_HPP
#define REX_LENGTHS_PROGRESSION_HPP

#include <compare>
#include <optional>
#include <cstdint>
#include <string>
#include <vector>

#include "rex/automata/lazy_product.hpp"
#include "rex/automata/nfa.hpp"

namespace rex {

/// {offset + r * period : r >= 0}; period 0 is the singleton {offset}.
struct Progression {
    std::uint64_t offset = 0;
    std::uint64_t period = 0;

    bool contains(std::uint64_t n) const
    {
        if (period == 0)
            return n == offset;
        return n >= offset && (n - offset) % period == 0;
    }
    /// Every member of *this is a member of `other`.
    bool subset_of(const Progression& other) const;

    friend auto operator<=>(const Progression&, const Progression&) = default;
};

/// Finite union of progressions, kept normalized: sorted, no member
/// subsumed by another, each offset pushed as low as the set allows.
class ProgressionSet {
public:
    ProgressionSet() = default;
    explicit ProgressionSet(std::vector<Progression> parts);

    const std::vector<Progression>& progressions() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    bool contains(std::uint64_t n) const;
    bool is_finite() const;
    /// Least member, if any.
    std::optional<std::uint64_t> minimum() const;

    std::string to_json() const;

    friend bool operator==(const ProgressionSet&, const ProgressionSet&) = default;

private:
    std::vector<Progression> parts_;
};

bool progression_member(const ProgressionSet& set, std::uint64_t n);

/// Threshold m^2 + 2m below which lengths are tabulated exactly; m is the
/// number of reachable states.
std::uint64_t exactness_threshold(std::uint64_t reachable_states);

/// Exactly { |w| : w in L(m) }.
ProgressionSet length_abstraction(const Nfa& m);
/// Same, over the reachable part of the product.
ProgressionSet length_abstraction(LazyProduct& p);

} // namespace rex

#endif
