#ifndef PLK_FREE_OPERAD_HPP
#define PLK_FREE_OPERAD_HPP

#include <map>
#include <vector>

#include "plk/span.hpp"
#include "plk/tree_tensor.hpp"
#include "plk/vec.hpp"

namespace plk {

// One arity component of a free operad: the canonical tree tensors on a
// label set, aligned with their BasisSpace ids.
struct FreeComponent {
  Signature sig;
  std::vector<Label> labels;        // sorted
  BasisSpace space;                 // keys = tensor serializations, lex order
  std::vector<TreeTensor> tensors;  // tensors[id] has repr == space.key(id)

  FreeComponent(Signature s, std::vector<Label> ls, std::vector<TreeTensor> ts,
                std::vector<std::string> keys)
      : sig(s), labels(std::move(ls)), space(make_name(s, labels), std::move(keys)),
        tensors(std::move(ts)) {}

  static std::string make_name(const Signature& s, const std::vector<Label>& ls);

  SpeciesVector vec(const TreeTensor& t, Rational c = 1) const {
    return SpeciesVector::unit(&space, space.id_of(t.str()), std::move(c));
  }
};

// Memoized component lookup; the returned reference stays valid for the
// lifetime of the process. |labels| >= 1 required.
const FreeComponent& free_component(const Signature& sig, const std::vector<Label>& labels);

inline const FreeComponent& free_component(const Signature& sig, int n) {
  std::vector<Label> ls(n);
  for (int i = 0; i < n; ++i) ls[i] = i + 1;
  return free_component(sig, ls);
}

// All canonical tree tensors of the component. Counts: prelie signature
// Catalan(n-1)*n!, bracket-only (2n-3)!!, two-generator (2n-3)!!*2^(n-1).
inline const std::vector<TreeTensor>& enumerate_basis(const Signature& sig,
                                                      const std::vector<Label>& labels) {
  return free_component(sig, labels).tensors;
}

// The free component owning the space of `v`; throws when v lives in some
// other kind of component.
const FreeComponent& free_component_of(const SpeciesVector& v);

// --- structural composition -------------------------------------------------

// Substitutes S for leaf `i` of T and recanonicalizes; the returned sign
// relates the raw substitution to the canonical form. Throws if `i` is not a
// leaf of T or the label sets collide (S may reuse the consumed label i).
std::pair<TreeTensor, int> substitute_leaf(const TreeTensor& T, Label i, const TreeTensor& S);

// Relabels every leaf through `images` (must be injective on T's labels).
std::pair<TreeTensor, int> relabel(const TreeTensor& T, const std::map<Label, Label>& images);

// --- linear operations ------------------------------------------------------

// Partial composition T o_i S as a single signed canonical term of the
// component on the merged label set.
SpeciesVector partial_compose(const Signature& sig, const TreeTensor& T, Label i,
                              const TreeTensor& S);

// gamma(S; parts...): simultaneous grafting, multilinear in the parts. The
// k-th smallest leaf label of S consumes parts[k]. Label sets of distinct
// parts must be pairwise disjoint; parts.size() must equal the arity of S.
SpeciesVector full_compose(const Signature& sig, const TreeTensor& S,
                           const std::vector<SpeciesVector>& parts);

// Right action of a permutation of the component's label set: relabels every
// term and recanonicalizes. act(sigma, act(tau, v)) == act(tau * sigma, v).
SpeciesVector act(const Perm& sigma, const SpeciesVector& v);

// Relabels a vector through an injective label map; the target component is
// the free component on the image labels.
SpeciesVector relabel_vec(const std::map<Label, Label>& images, const SpeciesVector& v);

// --- the two factorizations and the weight statistic ------------------------

// T = gamma(S; T_1, ..., T_p) with S the maximal bracket-only subtree at the
// root (the trivial tree when the root is not a bracket) and every part
// trivial or bullet-rooted. Each leaf of S carries the least label of the
// part grafted there, so recomposition is full_compose(S, parts) with parts
// listed by increasing least label.
struct Factorization {
  TreeTensor S;
  std::vector<TreeTensor> parts;  // by increasing min label
  int p() const { return static_cast<int>(parts.size()); }
};

Factorization gamma_factorize(const TreeTensor& T);

// p + number of bullet vertices; the trivial tree has weight 1.
int weight(const TreeTensor& T);

// Cuts a trivial or bullet-rooted tensor at its non-root bullet vertices into
// the unique list of bullet-rooted, bracket-bodied pieces (preorder). Each
// cut point is replaced by a leaf carrying the least label of the removed
// subtree, so iterated partial composition at those labels rebuilds T.
// Throws when T is bracket-rooted and nontrivial.
std::vector<TreeTensor> bullet_cut_factorize(const TreeTensor& T);

// --- linear-combination parsing ----------------------------------------------

// Parses "1/3 [[1,2],3] - 2 {1,{2,3}} + (1<2)..." into a vector of the free
// component on the labels of the first term. Every term must use exactly the
// same label set; generators are restricted to `sig`.
SpeciesVector parse_combination(const std::string& text, const Signature& sig);

}  // namespace plk

#endif
