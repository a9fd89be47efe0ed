#include "circles/sample.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace circles {

namespace {

std::size_t uniform(Rng& rng, std::size_t bound) { return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng); }

std::vector<std::size_t> random_parents(std::size_t vertices, Rng& rng) {
  // parents[k] for vertex k >= 1; vertex 0 is the root
  std::vector<std::size_t> parents(vertices + 1, 0);
  for (std::size_t k = 1; k <= vertices; ++k) parents[k] = uniform(rng, k);
  return parents;
}

LabeledTree build(std::size_t vertex, const std::vector<std::size_t>& parents, const std::vector<Label>& labels) {
  LabeledTree node;
  node.label = vertex == 0 ? kRoot : labels[vertex];
  for (std::size_t k = vertex + 1; k < parents.size(); ++k) {
    if (parents[k] == vertex) node.children.push_back(build(k, parents, labels));
  }
  return node;
}

}  // namespace

RootedTree random_tree(std::size_t vertices, Rng& rng) {
  std::vector<Label> labels(vertices + 1);
  std::iota(labels.begin(), labels.end(), 0);
  return shape_of(build(0, random_parents(vertices, rng), labels));
}

LabeledTree random_labeled_tree(std::size_t vertices, Rng& rng) {
  const auto parents = random_parents(vertices, rng);
  std::vector<Label> labels(vertices + 1);
  std::iota(labels.begin(), labels.end(), 0);
  std::shuffle(labels.begin() + 1, labels.end(), rng);
  return build(0, parents, labels);
}

namespace {

void place(const LabeledTree& node, const Rational& fx, const Rational& fy, const Rational& fr, Rng& rng,
           std::vector<std::optional<Circle>>& slots) {
  const std::size_t k = node.children.size();
  if (k == 0) return;
  // Distinct points on a 17 x 17 grid over the middle of the frame.
  std::set<std::pair<long, long>> used;
  std::vector<std::pair<Rational, Rational>> points;
  while (points.size() < k) {
    const long gx = static_cast<long>(uniform(rng, 17));
    const long gy = static_cast<long>(uniform(rng, 17));
    if (!used.insert({gx, gy}).second) continue;
    points.emplace_back(fx + fr * (ratio(gx, 16) - ratio(1, 2)), fy + fr * (ratio(gy, 16) - ratio(1, 2)));
  }
  Rational radius = fr / 4;
  if (k >= 2) radius = std::min<Rational>(radius, disks_from_points(points).at(1).r());
  // Vary radii a little so configurations are not too uniform.
  for (std::size_t j = 0; j < k; ++j) {
    const Rational r = radius * ratio(static_cast<long>(8 + uniform(rng, 9)), 16);
    slots[static_cast<std::size_t>(node.children[j].label - 1)] = Circle(points[j].first, points[j].second, r);
    place(node.children[j], points[j].first, points[j].second, r, rng, slots);
  }
}

}  // namespace

LabeledConfiguration random_configuration(const LabeledTree& tree, Rng& rng) {
  std::vector<std::optional<Circle>> slots(label_count(tree));
  place(tree, 0, 0, 4, rng, slots);
  std::vector<Circle> circles;
  for (auto& c : slots) circles.push_back(*c);
  return LabeledConfiguration(std::move(circles));
}

BraidWord random_braid(std::size_t strands, std::size_t length, Rng& rng) {
  if (strands < 2) return BraidWord(strands, {});
  std::vector<int> letters;
  for (std::size_t i = 0; i < length; ++i) {
    const int g = static_cast<int>(1 + uniform(rng, strands - 1));
    letters.push_back(uniform(rng, 2) ? g : -g);
  }
  return BraidWord(strands, std::move(letters));
}

BautElement random_element(const RootedTree& tree, std::size_t letters, Rng& rng) {
  const std::size_t m = tree.child_count();
  // A random word made pure, then a random block-preserving permutation braid.
  BraidWord w = random_braid(m, letters == 0 ? 0 : uniform(rng, letters + 1), rng);
  w = w * permutation_braid(permutation_of(w).inverse());
  std::vector<std::size_t> images(m);
  for (const auto& block : type_partition(tree).blocks) {
    std::vector<std::size_t> shuffled = block;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (std::size_t k = 0; k < block.size(); ++k) images[block[k] - 1] = shuffled[k] - 1;
  }
  const Permutation sigma(images);
  w = w * permutation_braid(sigma);
  std::vector<BautElement> children;
  for (std::size_t i = 0; i < m; ++i) {
    BautElement loop = random_element(tree.child(i), letters, rng);
    children.push_back(baut_multiply(loop, reference_arrow(tree.child(i), tree.child(sigma(i)))));
  }
  return BautElement(tree, std::move(w), std::move(children));
}

}  // namespace circles
