#ifndef REX_NUMSTR_BINARY_HPP
#define REX_NUMSTR_BINARY_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace rex {

/// Value of a binary word, leading zeros allowed; bin_value("") = 0.
/// Throws ForeignSymbol on a non-bit and std::overflow_error past 64 bits.
std::uint64_t bin_value(std::string_view w);

/// Shortest binary representation; min_bin(0) = "0".
std::string min_bin(std::uint64_t n);

/// numstr(n, w) without overflow for arbitrarily long w.
/// `strict` rejects the empty word.
bool numstr_holds(std::int64_t n, std::string_view w, bool strict = false);

} // namespace rex

#endif
