#include "circles/canonical.hpp"

#include <optional>

#include "circles/error.hpp"

namespace circles {

namespace {

void place_children(const LabeledTree& node, const Rational& x, const Rational& y, const Rational& r,
                    std::vector<std::optional<Circle>>& slots) {
  const std::size_t k = node.children.size();
  for (std::size_t j = 0; j < k; ++j) {
    Rational cx = x + Rational(static_cast<long>(j)) * r / static_cast<long>(k);
    Rational radius = r / static_cast<long>(3 * k);
    const LabeledTree& child = node.children[j];
    slots.at(static_cast<std::size_t>(child.label - 1)) = Circle(cx, y, radius);
    place_children(child, cx, y, radius, slots);
  }
}

}  // namespace

LabeledConfiguration kappa_in_frame(const LabeledTree& tree, const Circle& frame) {
  check_labels(tree);
  std::vector<std::optional<Circle>> slots(label_count(tree));
  place_children(tree, frame.cx(), frame.cy(), frame.r(), slots);
  std::vector<Circle> circles;
  circles.reserve(slots.size());
  for (auto& c : slots) circles.push_back(*c);
  return LabeledConfiguration(std::move(circles));
}

LabeledConfiguration kappa_of_tree(const LabeledTree& tree) { return kappa_in_frame(tree, Circle(0, 0, 1)); }

}  // namespace circles
