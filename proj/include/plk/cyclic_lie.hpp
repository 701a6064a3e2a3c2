#ifndef PLK_CYCLIC_LIE_HPP
#define PLK_CYCLIC_LIE_HPP

#include <vector>

#include "plk/free_operad.hpp"
#include "plk/span.hpp"

namespace plk {

// Exact coordinates on the left-normed basis of the free Lie structure over
// a label set: bracket expressions are reduced modulo the Jacobi ideal and
// solved against the monomial residues.
struct LieCoords {
  std::vector<Label> labels;
  const FreeComponent* comp;          // bracket-only free component
  std::vector<TreeTensor> monomials;  // left-normed, aligned with coord ids
  BasisSpace coords;                  // keys = monomial serializations

  LieCoords(std::vector<Label> ls, const FreeComponent* c, std::vector<TreeTensor> ms,
            std::vector<std::string> keys);

  // Coordinates of a bracket-only vector; exact, every bracket expression
  // is a combination of left-normed monomials modulo Jacobi.
  SpeciesVector rewrite(const SpeciesVector& v) const;
  SpeciesVector rewrite_tensor(const TreeTensor& t, const Rational& c = 1) const;

  // Expand coordinates back into the free component.
  SpeciesVector expand(const SpeciesVector& coords_vec) const;

 private:
  Span jacobi_;
  Span solver_;
  std::vector<std::vector<Rational>> row_coords_;  // solver row -> monomial coords
};

const LieCoords& lie_coords(const std::vector<Label>& labels);

// One arity component of the species of cyclic Lie elements, built as the
// formal span of symmetric pairs of Lie monomials over 2-block splittings
// modulo the invariance relation ([l1,l2],l3) = (l1,[l2,l3]) instantiated
// on Lie basis elements over all ordered 3-block splittings.
class CLComponent {
 public:
  struct Symbol {
    std::vector<Label> left_block, right_block;  // least label on the left
    KeyId left_mono, right_mono;                 // coord ids in lie_coords(block)
  };

  explicit CLComponent(int n);

  int n() const { return n_; }
  const BasisSpace& ambient() const { return *ambient_; }
  const Span& relations() const { return relations_; }
  int dim() const { return static_cast<int>(ambient_->dim() - relations_.dim()); }

  // Bilinear symmetric pairing of coordinate vectors on two blocks.
  SpeciesVector symbol_vec(const std::vector<Label>& block_a, const SpeciesVector& coords_a,
                           const std::vector<Label>& block_b, const SpeciesVector& coords_b) const;

  // Image of one ambient key under a permutation of {1..n}.
  SpeciesVector key_image(KeyId id, const Perm& sigma) const;

  // Character of sigma on the quotient: trace on the ambient minus trace on
  // the relation span.
  Rational character(const Perm& sigma) const;

 private:
  static std::unique_ptr<BasisSpace> build_ambient(int n, std::vector<Symbol>& symbols);

  int n_;
  std::vector<Symbol> symbols_;
  std::unique_ptr<BasisSpace> ambient_;
  Span relations_;
};

const CLComponent& cl_component(int n);  // memoized; n >= 2

inline int cl_dim(int n) { return cl_component(n).dim(); }
inline Rational cl_character(int n, const Perm& sigma) { return cl_component(n).character(sigma); }

}  // namespace plk

#endif
