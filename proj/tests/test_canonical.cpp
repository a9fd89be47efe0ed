#include <doctest.h>

#include "circles/canonical.hpp"
#include "circles/forest.hpp"
#include "circles/sample.hpp"

using namespace circles;

namespace {

LabeledTree shifted(const LabeledTree& t, Label offset) {
  LabeledTree out;
  out.label = t.label == kRoot ? kRoot : t.label - offset;
  for (const auto& c : t.children) out.children.push_back(shifted(c, offset));
  return out;
}

}  // namespace

TEST_CASE("kappa of the tree (4(1,3),2)") {
  const LabeledConfiguration k = kappa_of_tree(parse_tree("(4(1,3),2)"));
  REQUIRE(k.size() == 4);
  CHECK(k.at(4) == Circle(0, 0, ratio(1, 6)));
  CHECK(k.at(2) == Circle(ratio(1, 2), 0, ratio(1, 6)));
  CHECK(k.at(1) == Circle(0, 0, ratio(1, 36)));
  CHECK(k.at(3) == Circle(ratio(1, 12), 0, ratio(1, 36)));
}

TEST_CASE("kappa of trivial and star trees") {
  CHECK(kappa_of_tree(LabeledTree{}).empty());
  const LabeledConfiguration k = kappa_of_tree(parse_tree("(1,2,3)"));
  CHECK(k.at(1) == Circle(0, 0, ratio(1, 9)));
  CHECK(k.at(2) == Circle(ratio(1, 3), 0, ratio(1, 9)));
  CHECK(k.at(3) == Circle(ratio(2, 3), 0, ratio(1, 9)));
  const LabeledConfiguration chain = kappa_of_tree(parse_tree("(2(1))"));
  CHECK(chain.at(2) == Circle(0, 0, ratio(1, 3)));
  CHECK(chain.at(1) == Circle(0, 0, ratio(1, 9)));
}

TEST_CASE("kappa in the unit frame matches kappa") {
  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const LabeledTree t = random_labeled_tree(trial % 10, rng);
    CHECK(kappa_in_frame(t, Circle(0, 0, 1)) == kappa_of_tree(t));
  }
}

TEST_CASE("tree of kappa is the tree, valid and inside the unit disk") {
  Rng rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const LabeledTree t = random_labeled_tree(1 + trial % 12, rng);
    const LabeledConfiguration k = kappa_of_tree(t);
    CHECK(validate_configuration(k).empty());
    CHECK(tree_of_configuration(k) == t);
    for (const Circle& c : k.circles()) {
      CHECK(c.cy() == 0);
      CHECK(abs(c.cx()) + c.r() < 1);
    }
  }
}

TEST_CASE("normalized contents reproduce kappa of the subtree") {
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const LabeledTree t = preorder_labeling(random_tree(1 + trial % 12, rng));
    const LabeledConfiguration k = kappa_of_tree(t);
    const auto paths = label_paths(t);
    for (Label p = 1; p <= static_cast<Label>(k.size()); ++p) {
      const LabeledTree& node = labeled_at(t, paths[static_cast<std::size_t>(p)]);
      // preorder: the descendants of p are p+1 .. p+m
      LabeledTree sub;
      sub.children = node.children;
      sub = shifted(sub, p);
      const LabeledConfiguration expected = kappa_of_tree(sub);
      const Circle& frame = k.at(p);
      for (Label j = 1; j <= static_cast<Label>(expected.size()); ++j) {
        const Circle& c = k.at(p + j);
        const Circle normalized((c.cx() - frame.cx()) / frame.r(), (c.cy() - frame.cy()) / frame.r(), c.r() / frame.r());
        CHECK(normalized == expected.at(j));
      }
    }
  }
}
