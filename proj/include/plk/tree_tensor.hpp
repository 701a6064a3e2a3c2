#ifndef PLK_TREE_TENSOR_HPP
#define PLK_TREE_TENSOR_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "plk/perm.hpp"

namespace plk {

// The three binary generators the kernel knows about, with their serialized
// shapes and symmetries:
//   bracket  [x,y]   antisymmetric
//   bullet   {x,y}   symmetric
//   prelie   (x<y)   no symmetry
enum class Gen : unsigned char { bracket, bullet, prelie };

enum class Sym : unsigned char { antisymmetric, symmetric, none };

inline Sym symmetry(Gen g) {
  switch (g) {
    case Gen::bracket: return Sym::antisymmetric;
    case Gen::bullet: return Sym::symmetric;
    case Gen::prelie: return Sym::none;
  }
  throw std::logic_error("bad generator");
}

inline const char* gen_name(Gen g) {
  switch (g) {
    case Gen::bracket: return "[-,-]";
    case Gen::bullet: return "{-,-}";
    case Gen::prelie: return "(-<-)";
  }
  throw std::logic_error("bad generator");
}

// A set of binary generators. All arities are 2, so a signature is just
// which of the three generators are allowed.
class Signature {
 public:
  static Signature prelie() { return Signature(1u << static_cast<int>(Gen::prelie)); }
  static Signature lie() { return Signature(1u << static_cast<int>(Gen::bracket)); }
  static Signature lie_bullet() {
    return Signature((1u << static_cast<int>(Gen::bracket)) |
                     (1u << static_cast<int>(Gen::bullet)));
  }

  bool contains(Gen g) const { return mask_ & (1u << static_cast<int>(g)); }

  std::vector<Gen> generators() const {
    std::vector<Gen> gs;
    for (Gen g : {Gen::bracket, Gen::bullet, Gen::prelie})
      if (contains(g)) gs.push_back(g);
    return gs;
  }

  bool operator==(const Signature& o) const { return mask_ == o.mask_; }
  unsigned mask() const { return mask_; }

  std::string str() const {
    std::string s;
    for (Gen g : generators()) {
      if (!s.empty()) s += ",";
      s += gen_name(g);
    }
    return "{" + s + "}";
  }

 private:
  explicit Signature(unsigned mask) : mask_(mask) {}
  unsigned mask_;
};

// Plain rooted binary tree with labelled leaves and generator-labelled
// internal vertices, children in written order. This is the parser output
// and the input to canonicalize().
struct RawTree {
  bool is_leaf = true;
  Label label = 0;
  Gen gen = Gen::prelie;
  std::unique_ptr<RawTree> left, right;

  static RawTree leaf(Label l) {
    RawTree t;
    t.label = l;
    return t;
  }
  static RawTree node(Gen g, RawTree a, RawTree b) {
    RawTree t;
    t.is_leaf = false;
    t.gen = g;
    t.left = std::make_unique<RawTree>(std::move(a));
    t.right = std::make_unique<RawTree>(std::move(b));
    return t;
  }

  RawTree() = default;
  RawTree(RawTree&&) = default;
  RawTree& operator=(RawTree&&) = default;
};

// Canonical basis element of a free operad component: at every vertex whose
// generator has a symmetry the child with the smaller least leaf label comes
// first, and each executed swap of an antisymmetric vertex's children costs
// a sign. Instances are immutable and structurally shared; equality of
// canonical forms is equality of serializations.
class TreeTensor {
  struct Node {
    bool is_leaf;
    Gen gen;
    Label leaf_label;
    std::shared_ptr<const Node> left, right;
    Label min_label;
    int arity;
    std::string repr;
  };
  using NodePtr = std::shared_ptr<const Node>;

 public:
  TreeTensor() = default;

  static TreeTensor leaf(Label l) {
    auto n = std::make_shared<Node>();
    n->is_leaf = true;
    n->leaf_label = l;
    n->min_label = l;
    n->arity = 1;
    n->repr = std::to_string(l);
    return TreeTensor(std::move(n));
  }

  // Joins two canonical subtrees; enforces the child order at this vertex
  // and multiplies `sign` by -1 when an antisymmetric swap happens.
  static TreeTensor node(Gen g, const TreeTensor& a, const TreeTensor& b, int& sign) {
    const TreeTensor* x = &a;
    const TreeTensor* y = &b;
    if (symmetry(g) != Sym::none && b.min_label() < a.min_label()) {
      std::swap(x, y);
      if (symmetry(g) == Sym::antisymmetric) sign = -sign;
    }
    auto n = std::make_shared<Node>();
    n->is_leaf = false;
    n->gen = g;
    n->leaf_label = 0;
    n->left = x->n_;
    n->right = y->n_;
    n->min_label = std::min(x->min_label(), y->min_label());
    n->arity = x->arity() + y->arity();
    switch (g) {
      case Gen::bracket: n->repr = "[" + x->str() + "," + y->str() + "]"; break;
      case Gen::bullet: n->repr = "{" + x->str() + "," + y->str() + "}"; break;
      case Gen::prelie: n->repr = "(" + x->str() + "<" + y->str() + ")"; break;
    }
    return TreeTensor(std::move(n));
  }

  bool empty() const { return !n_; }
  bool is_leaf() const { return n_->is_leaf; }
  Label leaf_label() const { return n_->leaf_label; }
  Gen gen() const { return n_->gen; }
  TreeTensor left() const { return TreeTensor(n_->left); }
  TreeTensor right() const { return TreeTensor(n_->right); }
  Label min_label() const { return n_->min_label; }
  int arity() const { return n_->arity; }
  const std::string& str() const { return n_->repr; }

  // Trivial tree = single leaf: the unit of partial composition.
  bool trivial() const { return n_->is_leaf; }

  std::vector<Label> labels() const {
    std::vector<Label> out;
    collect_labels(n_, out);
    std::sort(out.begin(), out.end());
    return out;
  }

  bool has_label(Label l) const { return has_label(n_, l); }

  // True when every internal vertex carries a generator of `sig`.
  bool over(const Signature& sig) const { return over(n_, sig); }

  bool operator==(const TreeTensor& o) const {
    return n_ == o.n_ || (n_ && o.n_ && n_->repr == o.n_->repr);
  }
  bool operator!=(const TreeTensor& o) const { return !(*this == o); }
  bool operator<(const TreeTensor& o) const { return n_->repr < o.n_->repr; }

 private:
  explicit TreeTensor(NodePtr n) : n_(std::move(n)) {}

  static void collect_labels(const NodePtr& n, std::vector<Label>& out) {
    if (n->is_leaf) {
      out.push_back(n->leaf_label);
      return;
    }
    collect_labels(n->left, out);
    collect_labels(n->right, out);
  }

  static bool has_label(const NodePtr& n, Label l) {
    if (n->is_leaf) return n->leaf_label == l;
    return has_label(n->left, l) || has_label(n->right, l);
  }

  static bool over(const NodePtr& n, const Signature& sig) {
    if (n->is_leaf) return true;
    return sig.contains(n->gen) && over(n->left, sig) && over(n->right, sig);
  }

  NodePtr n_;
};

// Canonical representative of a raw tree together with the sign relating
// them. Throws std::invalid_argument on duplicate leaf labels.
std::pair<TreeTensor, int> canonicalize(const RawTree& raw);

// Tree-expression grammar (whitespace-insensitive):
//   tree := leaf | "[" tree "," tree "]" | "{" tree "," tree "}"
//         | "(" tree "<" tree ")"
//   leaf := decimal positive integer
// When a signature is given, generators outside it are rejected.
RawTree parse_raw_tree(const std::string& text, const Signature* sig = nullptr);

inline std::pair<TreeTensor, int> parse_tensor(const std::string& text,
                                               const Signature* sig = nullptr) {
  return canonicalize(parse_raw_tree(text, sig));
}

}  // namespace plk

#endif
