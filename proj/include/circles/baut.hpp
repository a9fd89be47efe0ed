#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "circles/braid.hpp"
#include "circles/forest.hpp"

namespace circles {

// Element of the braided tree-automorphism group, stored recursively.
//
// At a vertex with m children the element carries a braid on m strands and
// one child element per *start* slot: the contents of slot i ride along
// strand i to slot sigma(i) (sigma = permutation_of(braid)) and are acted on
// by children()[i] on the way.  A child element therefore runs from the
// ordered shape at slot i to the ordered shape at slot sigma(i); the two are
// isomorphic but need not be equal as ordered trees, so elements form a
// groupoid over ordered shapes.  Group elements of BAut(T) are the elements
// whose source and target are both T.
class BautElement {
 public:
  // Identity of the root-only tree.
  BautElement() = default;
  // Throws Error(ShapeMismatch) when the data do not fit together.
  BautElement(RootedTree source, BraidWord braid, std::vector<BautElement> children);

  const RootedTree& source() const { return source_; }
  const RootedTree& target() const { return target_; }
  const BraidWord& braid() const { return braid_; }
  const std::vector<BautElement>& children() const { return children_; }
  // Sub-element at a vertex path of the source tree.
  const BautElement& at(const VertexPath& path) const;
  bool is_loop() const { return source_ == target_; }

 private:
  RootedTree source_;
  RootedTree target_;
  BraidWord braid_;
  std::vector<BautElement> children_;
};

BautElement baut_identity(const RootedTree& tree);
// Throws Error(ShapeMismatch) unless a.target() == b.source().
BautElement baut_multiply(const BautElement& a, const BautElement& b);
BautElement baut_inverse(const BautElement& a);
// Throws Error(ShapeMismatch) when the sources differ.
bool baut_equal(const BautElement& a, const BautElement& b);
// Every braid letter inverted in place (the image under reflecting motions
// through the x-axis).
BautElement baut_mirror(const BautElement& a);

// Automorphism of an unordered tree written against ordered representatives:
// slot i of a vertex goes to slot perm(i) of the image vertex, and
// children()[i] maps the subtree at slot i onto the subtree at slot perm(i).
struct TreeAutomorphism {
  Permutation perm;
  std::vector<TreeAutomorphism> children;

  bool is_identity() const;
  friend bool operator==(const TreeAutomorphism&, const TreeAutomorphism&) = default;
};

TreeAutomorphism identity_automorphism(const RootedTree& tree);
// First apply f, then g.
TreeAutomorphism compose(const TreeAutomorphism& f, const TreeAutomorphism& g);
TreeAutomorphism pi_to_aut(const BautElement& a);
bool is_pure_element(const BautElement& a);

// Child counts of the non-root vertices in preorder, then the root's.
std::vector<std::size_t> pbaut_factors(const RootedTree& tree);
// Same with the trivial factors (counts 0 and 1) dropped.
std::vector<std::size_t> pbaut_factors_reduced(const RootedTree& tree);
mpz_class aut_order(const RootedTree& tree);
std::string structure_description(const RootedTree& tree);

// Root braid w on the star with w.strands() leaves.
BautElement star_embed(const BraidWord& w);

// The element fixed by reference_identification in the planner: a braid
// that sorts the slots of `from` into the matching slots of `to`, with the
// same construction applied inside.  Throws Error(NotIsomorphic).
BautElement reference_arrow(const RootedTree& from, const RootedTree& to);

// sigma_slot (1-based) at the vertex, reference arrows on the two exchanged
// slots, identity elsewhere.  Throws Error(TypeMismatch) when the two
// subtrees are not isomorphic.
BautElement generator_element(const RootedTree& tree, const VertexPath& vertex, std::size_t slot);

}  // namespace circles
