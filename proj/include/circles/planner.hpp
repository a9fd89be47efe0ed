#pragma once

#include "circles/forest.hpp"
#include "circles/geometry.hpp"
#include "circles/motion.hpp"

namespace circles {

// Valid, crossing-generic path from `config` to kappa_of_tree(target).
// Throws Error(DifferentComponent) unless the labeled tree of `config` is
// labeled-isomorphic to `target`.
MotionPath plan_to(const LabeledConfiguration& config, const LabeledTree& target);

// plan_to(config, tree_of_configuration(config)).
MotionPath plan_to_canonical(const LabeledConfiguration& config);

// Path from a to b as labeled configurations.  Throws
// Error(DifferentComponent) when the labeled trees are not isomorphic.
MotionPath plan_between(const LabeledConfiguration& a, const LabeledConfiguration& b);

// Path from a to a relabeling of b (same circles as b, labels of a).
// Throws Error(DifferentComponent) when the trees are not isomorphic.
MotionPath plan_between_unlabeled(const LabeledConfiguration& a, const LabeledConfiguration& b);

// Loop at kappa_of_tree(tree) exchanging the circles at 1-based slots
// slot, slot + 1 below `vertex`, contents riding along and then re-seated
// by reference_identification when the two ordered subtrees differ.
// Throws Error(TypeMismatch) when the subtrees are not isomorphic.
MotionPath make_generator_loop(const LabeledTree& tree, const VertexPath& vertex, std::size_t slot);

// Fixed path, in unit-disk coordinates, from kappa_of_tree of the preorder
// labeling of `from` to the canonical configuration of the ordered shape
// `to` (same circles as kappa of `to`, labels carried over from `from`).
// Cached; the (to, from) path is the reversal of the (from, to) path.
// Throws Error(NotIsomorphic).
MotionPath reference_identification(const RootedTree& from, const RootedTree& to);

}  // namespace circles
