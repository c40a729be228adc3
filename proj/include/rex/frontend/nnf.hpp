#ifndef REX_FRONTEND_NNF_HPP
#define REX_FRONTEND_NNF_HPP

#include "rex/frontend/formula.hpp"

namespace rex {

/// Equivalent formula whose tree holds only And, Or, constants and atoms.
/// Negations are absorbed into atom polarity; a negated linear comparison
/// becomes the complementary integer comparison (a disjunction for `=`).
Formula to_nnf(const Formula& f);

/// True iff the tree contains no Not node.
bool is_nnf(const Node& n);

} // namespace rex

#endif
