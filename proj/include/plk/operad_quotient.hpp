#ifndef PLK_OPERAD_QUOTIENT_HPP
#define PLK_OPERAD_QUOTIENT_HPP

#include <string>
#include <vector>

#include "plk/free_operad.hpp"
#include "plk/span.hpp"

namespace plk {

// A binary-quadratic presentation: a signature plus arity-3 relators on the
// labels {1,2,3}.
struct Presentation {
  std::string name;
  Signature sig;
  std::vector<SpeciesVector> relators;
};

// x <| y with the associator symmetric in the last two slots.
const Presentation& prelie_presentation();

// bracket + bullet subject to the Jacobi identity and the eight-term
// relation coupling the two products.
const Presentation& two_gen_presentation();

// bracket alone subject to the Jacobi identity (components of the Lie
// operad); `bracket_only` picks the one-generator signature, otherwise the
// relator is taken inside the two-generator free operad.
const Presentation& jacobi_presentation();

// --- standard relators --------------------------------------------------------

SpeciesVector prelie_relator();
SpeciesVector jacobi_relator(const Signature& sig);
SpeciesVector two_gen_relator();  // the eight-term bracket/bullet relation

// The derived identity that moves a bracket through the symmetric product,
// {[1,2],3} - {1,[2,3]} = 1/3 (eight correction terms), written one-sided.
// Equals 1/3 (r - 2 r.(23)) for r = two_gen_relator(), exactly.
SpeciesVector bracket_through_bullet_relation();

// 1/3 (r - 2 r.(23)).
SpeciesVector symmetrized_two_gen_combination();

// --- ideal components ----------------------------------------------------------

// Arity-n component of the operadic ideal generated by the presentation's
// relators:
//   I(3) = S_3-span of the relators,
//   I(n) = span of all one-generator compositions of a basis of I(n-1),
//          taken over every label distribution (which makes the span S_n
//          stable by construction; stability is nevertheless verified, and
//          a failure throws std::logic_error).
// Results are memoized per presentation; n >= 3.
const Span& ideal_component(const Presentation& p, int n);

// dim free(n) - dim I(n); for n <= 2 the free dimension.
int quotient_dim(const Presentation& p, int n);

// Canonical coset representative: the reduction residue of v against the
// ideal span. Two vectors are equal in the quotient iff their residues are.
SpeciesVector reduce_mod_ideal(const SpeciesVector& v, const Span& ideal);

// Dimension of the S_3-orbit span of an arity-3 relator.
int orbit_rank(const SpeciesVector& relator);

}  // namespace plk

#endif
