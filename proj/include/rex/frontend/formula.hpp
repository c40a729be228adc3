#ifndef REX_FRONTEND_FORMULA_HPP
#define REX_FRONTEND_FORMULA_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "rex/frontend/alphabet.hpp"
#include "rex/frontend/regex.hpp"

namespace rex {

enum class Sort { String, Int };

struct Declaration {
    std::string name;
    Sort sort = Sort::String;
    friend bool operator==(const Declaration&, const Declaration&) = default;
};

/// A string variable or a constant word.
struct PatternItem {
    bool is_var = false;
    std::string text;
    friend bool operator==(const PatternItem&, const PatternItem&) = default;
};

struct Pattern {
    std::vector<PatternItem> items;

    static Pattern variable(std::string name) { return Pattern{{PatternItem{true, std::move(name)}}}; }
    static Pattern word(std::string w);

    bool is_ground() const;
    bool is_single_var() const { return items.size() == 1 && items.front().is_var; }
    std::vector<std::string> vars() const;
    /// Concatenation of the constant items; only meaningful when ground.
    std::string constant_text() const;
    /// Merges adjacent constants and drops empty ones.
    Pattern normalized() const;
    Pattern operator+(const Pattern& rhs) const;

    friend bool operator==(const Pattern&, const Pattern&) = default;
};

/// Integer-coefficient sum over integer variables, len(x) terms and a constant.
struct LinearTerm {
    std::map<std::string, std::int64_t> ints;
    std::map<std::string, std::int64_t> lens;
    std::int64_t constant = 0;

    static LinearTerm of_constant(std::int64_t c);
    static LinearTerm of_int(const std::string& v, std::int64_t coeff = 1);
    static LinearTerm of_len(const std::string& x, std::int64_t coeff = 1);
    /// len of every item of the pattern.
    static LinearTerm of_pattern_length(const Pattern& p);

    bool is_constant() const { return ints.empty() && lens.empty(); }
    std::optional<std::string> single_int_var() const;

    LinearTerm& operator+=(const LinearTerm& rhs);
    LinearTerm& operator-=(const LinearTerm& rhs);
    LinearTerm& operator*=(std::int64_t k);
    friend LinearTerm operator+(LinearTerm a, const LinearTerm& b) { return a += b; }
    friend LinearTerm operator-(LinearTerm a, const LinearTerm& b) { return a -= b; }
    friend LinearTerm operator*(LinearTerm a, std::int64_t k) { return a *= k; }
    friend bool operator==(const LinearTerm&, const LinearTerm&) = default;
};

enum class Relation { Le, Eq, Ge };

struct MembershipAtom {
    Pattern pattern;
    RegexPtr regex;
    bool positive = true;
};

struct LinearAtom {
    LinearTerm lhs;
    Relation relation = Relation::Le;
    LinearTerm rhs;
};

struct NumstrAtom {
    LinearTerm number;
    Pattern word;
    bool positive = true;
};

/// Parsed and classified, never solved.
struct WordEqAtom {
    Pattern lhs;
    Pattern rhs;
    bool positive = true;
};

using Atom = std::variant<MembershipAtom, LinearAtom, NumstrAtom, WordEqAtom>;

enum class NodeKind { True, False, Atom, Not, And, Or };

/// Boolean structure; atom leaves index Formula::atoms.
struct Node {
    NodeKind kind = NodeKind::True;
    std::size_t atom = 0;
    std::vector<Node> children;

    static Node leaf(std::size_t atom_index) { return Node{NodeKind::Atom, atom_index, {}}; }
    static Node constant(bool value) { return Node{value ? NodeKind::True : NodeKind::False, 0, {}}; }
    static Node negation(Node inner);
    static Node conjunction(std::vector<Node> parts);
    static Node disjunction(std::vector<Node> parts);
};

struct Formula {
    Alphabet alphabet;
    std::vector<Declaration> declarations;
    std::vector<Atom> atoms;
    Node root;
    /// When set, numstr(n, w) additionally requires w to be non-empty.
    bool strict_numstr = false;

    std::optional<Sort> sort_of(const std::string& name) const;
    std::vector<std::string> string_vars() const;
    std::vector<std::string> int_vars() const;
    std::size_t add_atom(Atom a);
    /// Conjoins `extra` with the current root.
    void conjoin(Node extra);
    /// Declares a variable with a name that does not occur yet, built from `prefix`.
    std::string fresh(const std::string& prefix, Sort sort);
};

/// Variables occurring in an atom, split by sort.
struct AtomVars {
    std::set<std::string> strings;
    std::set<std::string> ints;
};
AtomVars atom_vars(const Atom& a);

} // namespace rex

#endif
