#pragma once

#include "circles/forest.hpp"
#include "circles/geometry.hpp"

namespace circles {

// The fixed configuration of a labeled tree.  The k children of the root sit
// at ((j-1)/k, 0) with radius 1/(3k); the k children of a circle (x, 0; r)
// sit at (x + (j-1) r / k, 0) with radius r / (3k).  Circle i carries label i.
LabeledConfiguration kappa_of_tree(const LabeledTree& tree);

// Same construction seen from inside an enclosing circle `frame`: the root's
// children are laid out as if the frame were the unit circle at the origin.
// kappa_of_tree(t) == kappa_in_frame(t, Circle(0, 0, 1)).
LabeledConfiguration kappa_in_frame(const LabeledTree& tree, const Circle& frame);

}  // namespace circles
