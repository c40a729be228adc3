#include "rex/numstr/binary.hpp"

#include <stdexcept>

#include "rex/frontend/alphabet.hpp"

namespace rex {

std::uint64_t bin_value(std::string_view w)
{
    std::uint64_t value = 0;
    for (char c : w) {
        if (c != '0' && c != '1')
            throw ForeignSymbol(c);
        if (value >> 63)
            throw std::overflow_error("binary word exceeds 64 bits");
        value = (value << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return value;
}

std::string min_bin(std::uint64_t n)
{
    if (n == 0)
        return "0";
    std::string out;
    for (; n != 0; n >>= 1)
        out.insert(out.begin(), static_cast<char>('0' + (n & 1)));
    return out;
}

bool numstr_holds(std::int64_t n, std::string_view w, bool strict)
{
    if (n < 0 || (strict && w.empty()))
        return false;
    for (char c : w)
        if (c != '0' && c != '1')
            return false;
    auto first_one = w.find('1');
    if (first_one == std::string_view::npos)
        return n == 0;
    auto significant = w.substr(first_one);
    if (significant.size() > 63)
        return false;
    return bin_value(significant) == static_cast<std::uint64_t>(n);
}

} // namespace rex
