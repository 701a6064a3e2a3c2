#ifndef PLK_PRELIE_HPP
#define PLK_PRELIE_HPP

#include <map>
#include <vector>

#include "plk/rooted_tree.hpp"
#include "plk/span.hpp"
#include "plk/tree_tensor.hpp"

namespace plk {

// Left-normed bracket monomials [[..[m, x1], x2], ..] on a label set, m the
// least label, one per permutation of the remaining labels; (k-1)! of them,
// listed in serialization order.
const std::vector<TreeTensor>& left_normed_monomials(const std::vector<Label>& labels);

// Their evaluations in the rooted-tree model. Verified linearly independent
// ((k-1)! of them); a rank drop throws std::logic_error.
const std::vector<SpeciesVector>& lie_basis(const std::vector<Label>& labels);

// Span of eval(l <| l' + l' <| l) in PL(n) over Lie basis elements l, l' on
// the blocks of all 2-block splittings of {1..n}.
Span y_span(int n);

// Spans P(2), ..., P(n_max) of the suboperad generated by the symmetrized
// products: P(n) is spanned by the y-generators of arity n together with
// all graft compositions P(k) o P(m), k+m-1 = n, over every distribution of
// labels. The construction is S_n-stable split by split.
std::map<int, Span> suboperad_closure(int n_max);

// Spans M(1), ..., M(n_max) of the Lie algebra (under the species bracket)
// generated by the suboperad: M(n) is spanned by P(n) and the brackets
// [M(a), M(b)] over all 2-block splittings. M(1) is the unit component.
std::map<int, Span> lie_module_closure(const std::map<int, Span>& suboperad, int n_max);

// Span of eval(T) over all two-generator basis tensors of arity n with
// weight(T) >= level.
Span filtration_span(int n, int level);

// The three arity-3 facts about the filtration: the bracket-through-bullet
// difference lies two levels deep while each of its two sides sits exactly
// one level deep.
bool gr_relation_check();

}  // namespace plk

#endif
