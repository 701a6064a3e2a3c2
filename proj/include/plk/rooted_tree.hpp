#ifndef PLK_ROOTED_TREE_HPP
#define PLK_ROOTED_TREE_HPP

#include <map>
#include <vector>

#include "plk/perm.hpp"
#include "plk/tree_tensor.hpp"
#include "plk/vec.hpp"

namespace plk {

// Basis element of a pre-Lie component: a rooted tree whose vertex set is
// the label set, children unordered. Canonically encoded as the parent map
// over sorted labels; serialized "root(child,child(...))" with children in
// increasing label order.
class RootedTree {
 public:
  // parent.count(v) == 0 exactly for the root.
  RootedTree(const std::vector<Label>& vertices, const std::map<Label, Label>& parent);

  static RootedTree singleton(Label l) { return RootedTree({l}, {}); }

  int size() const { return static_cast<int>(verts_.size()); }
  const std::vector<Label>& vertices() const { return verts_; }
  Label root() const { return root_; }

  bool has_vertex(Label v) const;
  Label parent(Label v) const;          // v must not be the root
  std::vector<Label> children(Label v) const;

  const std::string& str() const { return repr_; }

  bool operator==(const RootedTree& o) const { return repr_ == o.repr_; }
  bool operator<(const RootedTree& o) const { return repr_ < o.repr_; }

  RootedTree relabel(const std::map<Label, Label>& images) const;

 private:
  RootedTree() = default;
  std::vector<Label> verts_;    // sorted
  std::vector<int> parent_;     // index into verts_, -1 for the root
  Label root_;
  std::string repr_;

  int index_of(Label v) const;
  void build_repr();
};

RootedTree parse_rooted_tree(const std::string& text);

// The pre-Lie component on a label set: all rooted trees with that vertex
// set (n^(n-1) of them), id order = lex order of serializations.
struct TreeComponent {
  std::vector<Label> labels;
  BasisSpace space;
  std::vector<RootedTree> trees;

  TreeComponent(std::vector<Label> ls, std::vector<RootedTree> ts, std::vector<std::string> keys);

  SpeciesVector vec(const RootedTree& t, Rational c = 1) const {
    return SpeciesVector::unit(&space, space.id_of(t.str()), std::move(c));
  }
};

const TreeComponent& tree_component(const std::vector<Label>& labels);
const TreeComponent& tree_component(int n);

inline const std::vector<RootedTree>& enumerate_rooted_trees(const std::vector<Label>& labels) {
  return tree_component(labels).trees;
}

// Partial composition of the rooted-tree operad: substitute S for vertex i
// of T, hang i's former parent edge on the root of S, and sum over all ways
// to reattach i's former children to vertices of S (|S|^children(i) terms,
// all with coefficient +1).
SpeciesVector graft_compose(const RootedTree& T, Label i, const RootedTree& S);

// Linear extension of graft_compose to vectors on disjoint label sets.
SpeciesVector graft_compose_vec(const SpeciesVector& u, Label i, const SpeciesVector& v);

// Pre-Lie product u <| v: graft the root of each v-tree below every vertex
// of each u-tree.
SpeciesVector prelie_product(const SpeciesVector& u, const SpeciesVector& v);

inline SpeciesVector bracket_product(const SpeciesVector& u, const SpeciesVector& v) {
  return prelie_product(u, v) - prelie_product(v, u);
}
inline SpeciesVector bullet_product(const SpeciesVector& u, const SpeciesVector& v) {
  return prelie_product(u, v) + prelie_product(v, u);
}

// Permutation action: relabels every tree (no signs).
SpeciesVector act_trees(const Perm& sigma, const SpeciesVector& v);

SpeciesVector relabel_trees(const std::map<Label, Label>& images, const SpeciesVector& v);

// Structural evaluation into the rooted-tree model: leaves become single
// vertices, prelie vertices graft products, brackets antisymmetrized and
// bullets symmetrized grafts. Works for any of the three signatures and is
// linear; the free-operad vector may live on any label set.
SpeciesVector eval_tensor(const TreeTensor& t);
SpeciesVector eval(const SpeciesVector& free_operad_vec);

}  // namespace plk

#endif
