#include "rex/frontend/alphabet.hpp"

namespace rex {

Alphabet::Alphabet(std::string_view symbols) { extend(symbols); }

std::optional<Symbol> Alphabet::index_of(char c) const
{
    auto pos = symbols_.find(c);
    if (pos == std::string::npos)
        return std::nullopt;
    return static_cast<Symbol>(pos);
}

Symbol Alphabet::require(char c) const
{
    auto idx = index_of(c);
    if (!idx)
        throw ForeignSymbol(c);
    return *idx;
}

bool Alphabet::covers(std::string_view word) const
{
    for (char c : word)
        if (!contains(c))
            return false;
    return true;
}

void Alphabet::extend(std::string_view more)
{
    for (char c : more)
        if (!contains(c))
            symbols_.push_back(c);
}

} // namespace rex
