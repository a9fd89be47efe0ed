#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "circles/geometry.hpp"

namespace circles {

// Child indices from the root, 0-based.  The empty path is the root.
using VertexPath = std::vector<std::size_t>;

std::string format_vertex_path(const VertexPath& path);  // "", "0", "0.2", ...
VertexPath parse_vertex_path(std::string_view text);

// Finite rooted ordered tree: a vertex is the ordered list of its children.
class RootedTree {
 public:
  RootedTree() = default;
  explicit RootedTree(std::vector<RootedTree> children) : children_(std::move(children)) {}

  const std::vector<RootedTree>& children() const { return children_; }
  std::size_t child_count() const { return children_.size(); }
  const RootedTree& child(std::size_t i) const { return children_.at(i); }
  bool is_leaf() const { return children_.empty(); }

  // Vertices excluding this one.
  std::size_t descendant_count() const;
  const RootedTree& at(const VertexPath& path) const;

  friend bool operator==(const RootedTree&, const RootedTree&) = default;

 private:
  std::vector<RootedTree> children_;
};

RootedTree star_tree(std::size_t leaves);
RootedTree chain_tree(std::size_t length);

// Non-root vertices carry labels 1..n; the root carries kRoot.
struct LabeledTree {
  Label label = kRoot;
  std::vector<LabeledTree> children;

  friend bool operator==(const LabeledTree&, const LabeledTree&) = default;
};

RootedTree shape_of(const LabeledTree& tree);
std::size_t label_count(const LabeledTree& tree);
// Labels in preorder (root's children first, left to right, depth first).
LabeledTree preorder_labeling(const RootedTree& tree);
// Parent of every label (index = label, entry 0 unused); kRoot for top vertices.
std::vector<Label> parent_map(const LabeledTree& tree);
// Path of every label (index = label).
std::vector<VertexPath> label_paths(const LabeledTree& tree);
const LabeledTree& labeled_at(const LabeledTree& tree, const VertexPath& path);
// Throws Error(LabelError) unless the labels are exactly {1..n}.
void check_labels(const LabeledTree& tree);

LabeledTree tree_of_configuration(const LabeledConfiguration& config);

std::string ordered_code(const RootedTree& tree);
// Inverse of ordered_code; throws Error(ParseError).
RootedTree parse_ordered_code(std::string_view code);
std::string unordered_canonical_code(const RootedTree& tree);
bool trees_isomorphic(const RootedTree& t, const RootedTree& u);
// Throws Error(SizeMismatch) when the label counts differ.
bool labeled_trees_isomorphic(const LabeledTree& t, const LabeledTree& u);

// Children order rearranged so that sibling subtrees appear sorted by
// canonical code; equal for isomorphic trees.
RootedTree canonical_ordering(const RootedTree& tree);

// A vertex-path preserving isomorphism from `from` onto `to` (unordered),
// written as: for every vertex of `from`, the index permutation mapping its
// child slots to the matched child slots of the image vertex.  Matching is
// stable: the k-th child of a given type goes to the k-th child of that type.
struct SlotMatching {
  std::vector<std::size_t> image;  // slot i of `from` -> slot image[i] of `to`
  std::vector<SlotMatching> children;
};
// Throws Error(NotIsomorphic).
SlotMatching match_isomorphic(const RootedTree& from, const RootedTree& to);

struct TypePartition {
  std::vector<std::vector<std::size_t>> blocks;  // 1-based slot indices, blocks sorted by least element

  std::size_t size() const;
  // Block index of a 1-based slot.
  std::size_t block_of(std::size_t slot) const;
  std::string to_string() const;  // "{1,2}|{3}"
  friend bool operator==(const TypePartition&, const TypePartition&) = default;
};

TypePartition type_partition(const RootedTree& tree, const VertexPath& vertex = {});
TypePartition trivial_partition(std::size_t m);

// Text grammar: TREE := "(" ITEMS? ")"; ITEMS := NODE ("," NODE)*; NODE := label TREE?
LabeledTree parse_tree(std::string_view text);
std::string format_tree(const LabeledTree& tree);

}  // namespace circles
