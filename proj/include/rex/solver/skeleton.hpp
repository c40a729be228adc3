#ifndef REX_SOLVER_SKELETON_HPP
#define REX_SOLVER_SKELETON_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rex/arith/linear_system.hpp"
#include "rex/frontend/formula.hpp"
#include "rex/numstr/rewrite.hpp"

namespace rex {

/// Truth value chosen for one atom.
struct Literal {
    std::size_t atom = 0;
    bool value = true;
    friend bool operator==(const Literal&, const Literal&) = default;
};

/// Literals in atom order.
using Skeleton = std::vector<Literal>;

/// Every total assignment to the atoms under which the tree of an NNF
/// formula is true, in truth-table order (true before false).
std::vector<Skeleton> enumerate_boolean_skeletons(const Formula& f);

/// Depth-first search that stops at the first point where the tree is
/// already true, so unassigned atoms are irrelevant. Ground atoms take only
/// their actual value. `visit` returns false to stop.
void for_each_partial_skeleton(const Formula& f, const std::function<bool(const Skeleton&)>& visit);

/// sum ints + sum lens  cmp  rhs
struct IntLiteral {
    std::map<std::string, std::int64_t> ints;
    std::map<std::string, std::int64_t> lens;
    Comparison cmp = Comparison::Le;
    std::int64_t rhs = 0;
};

/// Literals of a skeleton sorted by kind. Atoms assigned false appear with
/// flipped polarity; a false comparison becomes the complementary one.
struct AtomLists {
    std::vector<MembershipAtom> regular;
    std::vector<IntLiteral> arithmetic;
    std::vector<NumstrLink> links;
};

/// Requires numstr atoms of the form numstr(i, x), as left by rewrite_numstr.
AtomLists split_literals(const Formula& f, const Skeleton& s);

} // namespace rex

#endif
