#pragma once

#include <cstddef>
#include <random>

#include "circles/baut.hpp"
#include "circles/braid.hpp"
#include "circles/forest.hpp"
#include "circles/geometry.hpp"

namespace circles {

using Rng = std::mt19937_64;

// Random recursive tree: vertex k attaches to a uniform earlier vertex.
RootedTree random_tree(std::size_t vertices, Rng& rng);
// Same shape distribution, labels a uniform random bijection onto 1..n.
LabeledTree random_labeled_tree(std::size_t vertices, Rng& rng);

// A configuration whose labeled tree is labeled-isomorphic to `tree`.
// Centers sit on a coarse grid, so tied x-coordinates are common.
LabeledConfiguration random_configuration(const LabeledTree& tree, Rng& rng);

BraidWord random_braid(std::size_t strands, std::size_t length, Rng& rng);

// Random element of BAut(tree) with at most about `letters` letters per
// vertex braid.
BautElement random_element(const RootedTree& tree, std::size_t letters, Rng& rng);

}  // namespace circles
