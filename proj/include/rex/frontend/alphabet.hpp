#ifndef REX_FRONTEND_ALPHABET_HPP
#define REX_FRONTEND_ALPHABET_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rex {

/// Index of a symbol inside an Alphabet.
using Symbol = std::uint16_t;

/// Raised when a word or literal uses a character outside the declared alphabet.
class ForeignSymbol : public std::invalid_argument {
public:
    explicit ForeignSymbol(char c)
        : std::invalid_argument(std::string("symbol '") + c + "' is not in the alphabet"), symbol_(c) {}
    char symbol() const { return symbol_; }

private:
    char symbol_;
};

/// Finite ordered alphabet. Symbol order is the declaration order and drives
/// every deterministic tie-break (BFS witnesses, oracle enumeration).
class Alphabet {
public:
    Alphabet() = default;
    /// Duplicates are dropped, first occurrence wins.
    explicit Alphabet(std::string_view symbols);

    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    char operator[](Symbol s) const { return symbols_[s]; }
    const std::string& symbols() const { return symbols_; }

    std::optional<Symbol> index_of(char c) const;
    bool contains(char c) const { return index_of(c).has_value(); }
    /// Throws ForeignSymbol.
    Symbol require(char c) const;
    bool covers(std::string_view word) const;

    /// Appends characters that are not present yet.
    void extend(std::string_view more);

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::string symbols_;
};

} // namespace rex

#endif
