#include <doctest.h>

#include <algorithm>

#include "circles/error.hpp"
#include "circles/forest.hpp"
#include "circles/sample.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace circles;

namespace {

std::vector<Label> child_labels(const LabeledTree& tree, Label parent) {
  const LabeledTree* node = &tree;
  if (parent != kRoot) node = &labeled_at(tree, label_paths(tree)[static_cast<std::size_t>(parent)]);
  std::vector<Label> out;
  for (const auto& c : node->children) out.push_back(c.label);
  return out;
}

RootedTree reversed_everywhere(const RootedTree& t) {
  std::vector<RootedTree> kids;
  for (const auto& c : t.children()) kids.push_back(reversed_everywhere(c));
  std::reverse(kids.begin(), kids.end());
  return RootedTree(std::move(kids));
}

RootedTree shuffled(const RootedTree& t, Rng& rng) {
  std::vector<RootedTree> kids;
  for (const auto& c : t.children()) kids.push_back(shuffled(c, rng));
  std::shuffle(kids.begin(), kids.end(), rng);
  return RootedTree(std::move(kids));
}

}  // namespace

TEST_CASE("tree of the seven-circle configuration") {
  const LabeledTree t = tree_of_configuration(fixture::seven_circles());
  const std::vector<Label> parents = parent_map(t);
  CHECK(parents == std::vector<Label>{0, kRoot, 5, 2, 2, kRoot, 7, 5});
  CHECK(child_labels(t, kRoot) == std::vector<Label>{1, 5});
  CHECK(child_labels(t, 5) == std::vector<Label>{2, 7});
  CHECK(child_labels(t, 2) == std::vector<Label>{4, 3});
  CHECK(child_labels(t, 7) == std::vector<Label>{6});
  CHECK(format_tree(t) == "(1,5(2(4,3),7(6)))");
}

TEST_CASE("tree of trivial and concentric configurations") {
  CHECK(tree_of_configuration(LabeledConfiguration()) == LabeledTree{});
  const LabeledTree chain = tree_of_configuration(LabeledConfiguration({Circle(0, 0, 1), Circle(0, 0, 2)}));
  CHECK(format_tree(chain) == "(2(1))");
}

TEST_CASE("ordered codes") {
  CHECK(ordered_code(star_tree(2)) == "(()())");
  CHECK(ordered_code(shape_of(parse_tree("(4(1,3),2)"))) == "((()())())");
  CHECK(ordered_code(RootedTree()) == "()");
  CHECK(parse_ordered_code("((()())())") == shape_of(parse_tree("(4(1,3),2)")));
  CHECK_THROWS_AS(parse_ordered_code("(()"), Error);
  CHECK_THROWS_AS(parse_ordered_code("()()"), Error);
}

TEST_CASE("unordered canonical code and isomorphism examples") {
  const RootedTree a = parse_ordered_code(fixture::eleven_a());
  const RootedTree b = parse_ordered_code(fixture::eleven_b());
  CHECK(a.descendant_count() + 1 == 11);
  CHECK(b.descendant_count() + 1 == 11);
  CHECK(a != b);
  CHECK(unordered_canonical_code(a) == unordered_canonical_code(b));
  CHECK(oracle::isomorphic(a, b));
  CHECK(trees_isomorphic(star_tree(3), star_tree(3)));
  CHECK_FALSE(trees_isomorphic(star_tree(3), chain_tree(3)));
  CHECK_FALSE(oracle::isomorphic(star_tree(3), chain_tree(3)));
  CHECK(trees_isomorphic(RootedTree(), RootedTree()));

  const RootedTree s1 = shape_of(parse_tree(fixture::t1()));
  const RootedTree s2 = shape_of(parse_tree(fixture::t2()));
  const RootedTree s3 = shape_of(parse_tree(fixture::t3()));
  CHECK(trees_isomorphic(s1, s2));
  CHECK(trees_isomorphic(s2, s3));
  CHECK(s2 == s3);
}

TEST_CASE("canonical code is invariant under reordering children") {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const RootedTree t = random_tree(1 + trial % 12, rng);
    CHECK(unordered_canonical_code(t) == unordered_canonical_code(reversed_everywhere(t)));
    const RootedTree s = shuffled(t, rng);
    CHECK(trees_isomorphic(t, s));
    CHECK(canonical_ordering(t) == canonical_ordering(s));
    if (ordered_code(t) == ordered_code(s)) CHECK(unordered_canonical_code(t) == unordered_canonical_code(s));
  }
}

TEST_CASE("trees_isomorphic agrees with brute force on every pair of trees up to 7 vertices") {
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto all = oracle::trees(n);
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i; j < all.size(); ++j) {
        CHECK(trees_isomorphic(all[i], all[j]) == oracle::isomorphic(all[i], all[j]));
      }
    }
  }
  // sizes: Catalan numbers of ordered forests
  CHECK(oracle::trees(6).size() == 132);
}

TEST_CASE("labeled tree isomorphism") {
  const LabeledTree a = parse_tree(fixture::t1());
  const LabeledTree b = parse_tree(fixture::t2());
  const LabeledTree c = parse_tree(fixture::t3());
  CHECK(labeled_trees_isomorphic(a, b));
  CHECK_FALSE(labeled_trees_isomorphic(b, c));
  CHECK_FALSE(labeled_trees_isomorphic(a, c));
  try {
    labeled_trees_isomorphic(a, parse_tree("(1)"));
    FAIL("expected SIZE_MISMATCH");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeMismatch);
  }
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const LabeledTree x = random_labeled_tree(1 + trial % 7, rng);
    const LabeledTree y = random_labeled_tree(1 + trial % 7, rng);
    if (labeled_trees_isomorphic(x, y)) CHECK(trees_isomorphic(shape_of(x), shape_of(y)));
  }
}

TEST_CASE("relabeling a configuration relabels its tree") {
  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const LabeledTree t = random_labeled_tree(1 + trial % 8, rng);
    const LabeledConfiguration config = random_configuration(t, rng);
    const std::size_t n = config.size();
    std::vector<Label> sigma(n + 1);
    for (std::size_t i = 0; i <= n; ++i) sigma[i] = static_cast<Label>(i);
    std::shuffle(sigma.begin() + 1, sigma.end(), rng);
    std::vector<std::optional<Circle>> slots(n);
    for (Label l = 1; l <= static_cast<Label>(n); ++l) slots[static_cast<std::size_t>(sigma[static_cast<std::size_t>(l)] - 1)] = config.at(l);
    std::vector<Circle> circles;
    for (auto& s : slots) circles.push_back(*s);
    const LabeledTree before = tree_of_configuration(config);
    const LabeledTree after = tree_of_configuration(LabeledConfiguration(std::move(circles)));
    CHECK(shape_of(before) == shape_of(after));
    const auto pb = label_paths(before);
    const auto pa = label_paths(after);
    for (Label l = 1; l <= static_cast<Label>(n); ++l) CHECK(pb[static_cast<std::size_t>(l)] == pa[static_cast<std::size_t>(sigma[static_cast<std::size_t>(l)])]);
  }
}

TEST_CASE("type partitions") {
  const RootedTree big = parse_ordered_code(fixture::big_tree_code());
  CHECK(type_partition(big, {0}).to_string() == "{1,2}|{3}");
  CHECK(type_partition(big, {1}).to_string() == "{1,2}|{3}");
  CHECK(type_partition(big).to_string() == "{1,2}");
  CHECK(type_partition(star_tree(4)).to_string() == "{1,2,3,4}");
  CHECK(type_partition(big, {0}).block_of(3) == 1);
}

TEST_CASE("tree text parsing") {
  const LabeledTree t = parse_tree("(4(1,3),2)");
  REQUIRE(t.children.size() == 2);
  CHECK(t.children[0].label == 4);
  CHECK(t.children[1].label == 2);
  CHECK(t.children[0].children[0].label == 1);
  CHECK(t.children[0].children[1].label == 3);
  CHECK(format_tree(t) == "(4(1,3),2)");
  CHECK(parse_tree("()") == LabeledTree{});
  CHECK(format_tree(parse_tree(" ( 2 , 1 ) ")) == "(2,1)");
  auto code_of = [](const char* text) {
    try {
      parse_tree(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code_of("(1,1)") == ErrorCode::LabelError);
  CHECK(code_of("(1,3)") == ErrorCode::LabelError);
  CHECK(code_of("(1,") == ErrorCode::ParseError);
  CHECK(code_of("(1)x") == ErrorCode::ParseError);
  CHECK(code_of("1") == ErrorCode::ParseError);
  Rng rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const LabeledTree r = random_labeled_tree(trial % 15, rng);
    CHECK(parse_tree(format_tree(r)) == r);
  }
}

TEST_CASE("stable isomorphism matching") {
  const RootedTree a = parse_ordered_code(fixture::eleven_a());
  const RootedTree b = parse_ordered_code(fixture::eleven_b());
  const SlotMatching m = match_isomorphic(a, b);
  REQUIRE(m.image.size() == 2);
  CHECK(m.image == std::vector<std::size_t>{1, 0});
  CHECK_THROWS_AS(match_isomorphic(star_tree(3), chain_tree(3)), Error);
}
