#ifndef REX_FRONTEND_REGEX_HPP
#define REX_FRONTEND_REGEX_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

namespace rex {

enum class RegexKind { Empty, Epsilon, Literal, Concat, Union, Star, Complement };

struct Regex;
using RegexPtr = std::shared_ptr<const Regex>;

/// Immutable regex syntax tree. Star and Complement keep their operand in `left`.
struct Regex {
    RegexKind kind = RegexKind::Empty;
    char symbol = 0;
    RegexPtr left;
    RegexPtr right;
};

RegexPtr re_empty();
RegexPtr re_epsilon();
RegexPtr re_literal(char c);
RegexPtr re_concat(RegexPtr a, RegexPtr b);
RegexPtr re_union(RegexPtr a, RegexPtr b);
RegexPtr re_star(RegexPtr a);
RegexPtr re_complement(RegexPtr a);
/// Concatenation of the literals of `w`; epsilon for the empty word.
RegexPtr re_word(std::string_view w);
/// Union of all literals in `symbols`; the empty language if there are none.
RegexPtr re_any_of(std::string_view symbols);

std::size_t regex_size(const Regex& r);
bool has_complement(const Regex& r);

/// Complement depth: literals and constants count 0, union and concatenation
/// add up their operands, star is transparent, each complement adds one.
std::size_t cdepth(const Regex& r);

/// SMT-LIB rendering (re.++, re.union, re.*, re.comp, str.to_re, re.none).
std::string to_smtlib(const Regex& r);

} // namespace rex

#endif
