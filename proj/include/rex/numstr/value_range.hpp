#ifndef REX_NUMSTR_VALUE_RANGE_HPP
#define REX_NUMSTR_VALUE_RANGE_HPP

#include <cstdint>
#include <optional>

#include "rex/automata/lazy_product.hpp"

namespace rex {

/// Bounds on bin_value over the binary words of a language.
struct ValueRange {
    bool empty = true;
    std::int64_t minimum = 0;
    /// Absent when the values are unbounded or exceed 62 bits.
    std::optional<std::int64_t> maximum;
};

/// Words containing a non-bit are ignored.
ValueRange binary_value_range(LazyProduct& p);

} // namespace rex

#endif
