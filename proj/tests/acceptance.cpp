// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "circles/baut.hpp"
#include "circles/braid.hpp"
#include "circles/canonical.hpp"
#include "circles/error.hpp"
#include "circles/forest.hpp"
#include "circles/motion.hpp"
#include "circles/planner.hpp"
#include "circles/sample.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace circles;

namespace {

// Collects failed expectations; keeps the first few messages.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (messages_.size() < 3) messages_.push_back(what);
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream out;
    out << checks_ << " checks";
    if (failures_) {
      out << ", " << failures_ << " failed:";
      for (const auto& m : messages_) out << " [" << m << "]";
    }
    return out.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> messages_;
};

BraidWord w(std::size_t n, std::vector<int> letters) { return BraidWord(n, std::move(letters)); }

std::vector<Label> children_of(const LabeledTree& t, Label parent) {
  const LabeledTree& node = parent == kRoot ? t : labeled_at(t, label_paths(t)[static_cast<std::size_t>(parent)]);
  std::vector<Label> out;
  for (const auto& c : node.children) out.push_back(c.label);
  return out;
}

void tree_extraction(Tally& tally) {
  const LabeledTree t = tree_of_configuration(fixture::seven_circles());
  const std::vector<Label> parents = parent_map(t);
  const std::vector<std::pair<Label, Label>> expected{{1, kRoot}, {5, kRoot}, {2, 5}, {7, 5}, {3, 2}, {4, 2}, {6, 7}};
  for (const auto& [child, parent] : expected) {
    tally.expect(parents[static_cast<std::size_t>(child)] == parent, "parent of " + std::to_string(child));
  }
  tally.expect(children_of(t, kRoot) == std::vector<Label>{1, 5}, "root children");
  tally.expect(children_of(t, 5) == std::vector<Label>{2, 7}, "children of 5");
  tally.expect(children_of(t, 2) == std::vector<Label>{4, 3}, "children of 2");
  tally.expect(children_of(t, 7) == std::vector<Label>{6}, "children of 7");
  tally.expect(t.children.size() == 2 && label_count(t) == 7, "size");
}

void fixed_configuration(Tally& tally) {
  const LabeledConfiguration k = kappa_of_tree(parse_tree("(4(1,3),2)"));
  tally.expect(k.size() == 4, "four circles");
  tally.expect(k.at(4) == Circle(0, 0, ratio(1, 6)), "circle 4");
  tally.expect(k.at(2) == Circle(ratio(1, 2), 0, ratio(1, 6)), "circle 2");
  tally.expect(k.at(1) == Circle(0, 0, ratio(1, 36)), "circle 1");
  tally.expect(k.at(3) == Circle(ratio(1, 12), 0, ratio(1, 36)), "circle 3");
}

void example_tree(Tally& tally) {
  const RootedTree big = parse_ordered_code(fixture::big_tree_code());
  tally.expect(aut_order(big) == 8, "aut_order");
  tally.expect(oracle::automorphism_count(big) == 8, "brute-force order");
  tally.expect(pbaut_factors_reduced(big) == std::vector<std::size_t>{3, 3, 2}, "pbaut factors");
  tally.expect(structure_description(big) == "(B_3^{{1,2}|{3}} × B_3^{{1,2}|{3}}) ⋊ B_2", "structure");
  tally.expect(type_partition(big, {0}).to_string() == "{1,2}|{3}", "partition");
  const TypePartition pi = type_partition(big, {0});
  std::vector<std::size_t> images{0, 1, 2};
  int preserving = 0, total = 0;
  do {
    ++total;
    if (in_block_subgroup(permutation_braid(Permutation(images)), pi)) ++preserving;
  } while (std::next_permutation(images.begin(), images.end()));
  tally.expect(total == 6 && preserving == 2, "block-preserving permutations");
}

void word_problem(Tally& tally) {
  Rng rng(1001);
  std::size_t equal = 0;
  const int pairs = 10000;
  for (int trial = 0; trial < pairs; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial) % 4;
    const bool constructed_equal = trial % 2 == 0;
    // equal pairs: insert a relator into a copy of a, staying within 16 letters
    const BraidWord a = random_braid(n, rng() % (constructed_equal ? 11 : 17), rng);
    BraidWord b = random_braid(n, rng() % 17, rng);
    if (constructed_equal) {
      std::vector<int> letters = a.letters();
      const int i = 1 + static_cast<int>(rng() % (n - 1));
      std::vector<int> relator{i, -i};
      if (i + 1 < static_cast<int>(n)) relator = {i, i + 1, i, -(i + 1), -i, -(i + 1)};
      const std::size_t pos = rng() % (letters.size() + 1);
      letters.insert(letters.begin() + static_cast<long>(pos), relator.begin(), relator.end());
      b = BraidWord(n, letters);
    }
    const bool nf_equal = braids_equal(a, b);
    tally.expect(nf_equal == handle_reduce(a * b.inverse()).empty(), "normal form vs handle reduction: " + a.to_string() + " / " + b.to_string());
    if (constructed_equal) tally.expect(nf_equal, "relator insertion: " + a.to_string() + " / " + b.to_string());
    if (nf_equal) ++equal;
  }
  tally.expect(equal >= pairs / 4, "enough equal pairs");
  for (std::size_t n = 3; n <= 6; ++n) {
    for (int i = 1; i + 1 < static_cast<int>(n); ++i) tally.expect(braids_equal(w(n, {i, i + 1, i}), w(n, {i + 1, i, i + 1})), "braid relation");
    for (int i = 1; i < static_cast<int>(n); ++i) {
      for (int j = i + 2; j < static_cast<int>(n); ++j) tally.expect(braids_equal(w(n, {i, j}), w(n, {j, i})), "far commutation");
    }
  }
  tally.expect(!braids_equal(w(2, {1}), w(2, {-1})), "sigma1 vs its inverse");
}

void group_axioms(Tally& tally) {
  Rng rng(1002);
  for (int trial = 0; trial < 1000; ++trial) {
    const RootedTree t = random_tree(static_cast<std::size_t>(trial) % 10, rng);  // up to 10 vertices with the root
    const BautElement a = random_element(t, 8, rng);
    const BautElement b = random_element(t, 8, rng);
    const BautElement c = random_element(t, 8, rng);
    const BautElement e = baut_identity(t);
    const std::string where = ordered_code(t);
    tally.expect(baut_equal(baut_multiply(baut_multiply(a, b), c), baut_multiply(a, baut_multiply(b, c))), "associativity on " + where);
    tally.expect(baut_equal(baut_multiply(a, e), a) && baut_equal(baut_multiply(e, a), a), "identity on " + where);
    tally.expect(baut_equal(baut_multiply(a, baut_inverse(a)), e) && baut_equal(baut_multiply(baut_inverse(a), a), e), "inverse on " + where);
    tally.expect(pi_to_aut(baut_multiply(a, b)) == compose(pi_to_aut(a), pi_to_aut(b)), "pi_to_aut homomorphism on " + where);
  }
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& t : oracle::trees(n)) tally.expect(aut_order(t).get_ui() == oracle::automorphism_count(t), "aut_order of " + ordered_code(t));
  }
}

void star_lemma(Tally& tally) {
  Rng rng(1003);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial) % 4;
    const BraidWord a = random_braid(n, rng() % 10, rng);
    const BraidWord b = random_braid(n, rng() % 10, rng);
    tally.expect(baut_equal(star_embed(a * b), baut_multiply(star_embed(a), star_embed(b))), "multiplicative");
    // a third of the comparisons are against a different spelling of a
    const BraidWord x = n >= 3 ? BraidWord(n, {1, 2, -1, -2}) : BraidWord(n, {1, 1});
    const BraidWord c = trial % 3 == 0 ? a * x.inverse() * x : b;
    tally.expect(baut_equal(star_embed(a), star_embed(c)) == braids_equal(a, c), "injective");
  }
}

std::vector<VertexPath> branching_vertices(const RootedTree& t, VertexPath prefix = {}) {
  std::vector<VertexPath> out;
  if (t.child_count() >= 2) out.push_back(prefix);
  for (std::size_t i = 0; i < t.child_count(); ++i) {
    VertexPath p = prefix;
    p.push_back(i);
    for (auto& v : branching_vertices(t.child(i), p)) out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::pair<VertexPath, std::size_t>> generator_slots(const RootedTree& shape) {
  std::vector<std::pair<VertexPath, std::size_t>> out;
  for (const auto& v : branching_vertices(shape)) {
    for (std::size_t s = 1; s < shape.at(v).child_count(); ++s) {
      if (trees_isomorphic(shape.at(v).child(s - 1), shape.at(v).child(s))) out.emplace_back(v, s);
    }
  }
  return out;
}

// Chains planner loops: generator loops (or their mirror images) and round
// trips through random configurations of the current tree.
MotionPath planner_loop(const LabeledTree& tree, std::size_t count, Rng& rng) {
  MotionPath loop = MotionPath::constant(kappa_of_tree(tree));
  const auto moves = generator_slots(shape_of(tree));
  for (std::size_t k = 0; k < count; ++k) {
    const LabeledTree here = tree_of_configuration(loop.end());
    MotionPath step;
    if (moves.empty() || rng() % 4 == 0) {
      const MotionPath p = plan_to(random_configuration(here, rng), here);
      step = concatenate(reverse(p), p);
    } else {
      const auto& [v, s] = moves[rng() % moves.size()];
      step = make_generator_loop(here, v, s);
      if (rng() % 2) step = mirror(step);
    }
    loop = concatenate(loop, step);
  }
  return loop;
}

void monodromy_properties(Tally& tally) {
  Rng rng(1004);
  std::size_t labeled = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const LabeledTree t = random_labeled_tree(1 + static_cast<std::size_t>(trial) % 8, rng);
    const RootedTree shape = shape_of(t);
    const std::string where = format_tree(t);
    const MotionPath p = planner_loop(t, 1 + rng() % 3, rng);
    const MotionPath q = planner_loop(tree_of_configuration(p.end()), 1 + rng() % 3, rng);
    tally.expect(!validate_path(p).has_value(), "loop valid on " + where);
    const BautElement mp = monodromy(p);
    const BautElement mq = monodromy(q);
    tally.expect(baut_equal(monodromy(concatenate(p, q)), baut_multiply(mp, mq)), "(a) concatenation on " + where);
    tally.expect(baut_equal(monodromy(reverse(p)), baut_inverse(mp)), "(b) reversal on " + where);
    tally.expect(baut_equal(monodromy(MotionPath::constant(kappa_of_tree(t))), baut_identity(shape)), "(c) constant on " + where);
    // a loop followed by its reversal ends where it started, labels included
    const MotionPath back = concatenate(p, reverse(p));
    for (const MotionPath& loop : {p, q, back}) {
      if (loop.start() == loop.end()) {
        ++labeled;
        tally.expect(is_pure_element(monodromy(loop)), "(d) labeled loop pure on " + where);
      }
    }
    for (const auto& [v, s] : generator_slots(shape)) {
      const MotionPath g = make_generator_loop(t, v, s);
      tally.expect(baut_equal(monodromy(g), generator_element(shape, v, s)), "(e) generator on " + where);
      // squares of generators are labeled loops
      const MotionPath gg = concatenate(g, make_generator_loop(tree_of_configuration(g.end()), v, s));
      if (gg.start() == gg.end()) {
        ++labeled;
        tally.expect(is_pure_element(monodromy(gg)), "(d) squared generator pure on " + where);
      }
    }
  }
  tally.expect(labeled >= 60, "enough labeled loops");
  for (std::size_t n = 3; n <= 5; ++n) {
    LabeledTree star;
    for (Label l = 1; l <= static_cast<Label>(n); ++l) star.children.push_back(LabeledTree{l, {}});
    auto word = [&](const std::vector<std::size_t>& slots) {
      MotionPath p = MotionPath::constant(kappa_of_tree(star));
      for (std::size_t s : slots) p = concatenate(p, make_generator_loop(tree_of_configuration(p.end()), {}, s));
      return p;
    };
    for (std::size_t i = 1; i + 1 < n; ++i) {
      tally.expect(baut_equal(monodromy(word({i, i + 1, i})), monodromy(word({i + 1, i, i + 1}))), "(e) braid relation in the image");
    }
  }
}

void component_decision(Tally& tally) {
  Rng rng(1005);
  std::size_t same = 0, different = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial) % 4;
    const LabeledTree ta = random_labeled_tree(n, rng);
    const LabeledTree tb = trial % 3 == 0 ? ta : random_labeled_tree(n, rng);
    const LabeledConfiguration a = random_configuration(ta, rng);
    const LabeledConfiguration b = random_configuration(tb, rng);
    const bool iso = labeled_trees_isomorphic(tree_of_configuration(a), tree_of_configuration(b));
    try {
      const MotionPath p = plan_between(a, b);
      ++same;
      tally.expect(iso, "path between non-isomorphic trees");
      tally.expect(!validate_path(p).has_value(), "planned path valid");
      tally.expect(p.start() == a && p.end() == b, "planned path endpoints");
    } catch (const Error& e) {
      ++different;
      tally.expect(e.code() == ErrorCode::DifferentComponent && !iso, "refused isomorphic pair");
    }
  }
  tally.expect(same >= 100 && different >= 100, "both verdicts exercised");
  const LabeledConfiguration nested({Circle(0, 0, 1), Circle(0, 0, 2)});
  const LabeledConfiguration unnested({Circle(-2, 0, 1), Circle(2, 0, 1)});
  bool refused = false;
  try {
    plan_between(nested, unnested);
  } catch (const Error& e) {
    refused = e.code() == ErrorCode::DifferentComponent;
  }
  tally.expect(refused, "nested vs unnested");
}

void path_validity(Tally& tally) {
  using K = Keyframe;
  const MotionPath collide({K{0, LabeledConfiguration({Circle(0, 0, 1), Circle(3, 0, 1)})},
                            K{1, LabeledConfiguration({Circle(3, 0, 1), Circle(0, 0, 1)})}});
  const auto v = validate_path(collide);
  tally.expect(v.has_value(), "collision detected");
  if (v) {
    // d(t)^2 - (r1 + r2)^2 = (3 - 6t)^2 - 4 = 36t^2 - 36t + 5; smaller root
    const double a = 36, b = -36, c = 5;
    const double root = (-b - std::sqrt(b * b - 4 * a * c)) / (2 * a);
    const double witness = to_double(v->time.p) + to_double(v->time.q) * std::sqrt(to_double(v->time.d));
    tally.expect(v->first == 1 && v->second == 2, "pair");
    tally.expect(std::abs(witness - root) < 1e-12, "witness time");
    tally.expect(to_double(v->time_low) <= root && root <= to_double(v->time_high), "witness interval");
    tally.expect(v->time_low <= ratio(1, 6) && ratio(1, 6) <= v->time_high, "exact contact time in interval");
    // the bracket ends are on either side of contact
    const auto gap = [](const Rational& t) {
      const Rational d = 3 - 6 * t;
      return sgn(Rational(d * d - 4));
    };
    tally.expect(v->time_low == v->time_high || (gap(v->time_low) >= 0 && gap(v->time_high) <= 0), "bracket signs");
  }
  const MotionPath swap({K{0, LabeledConfiguration({Circle(0, 0, 1), Circle(3, 0, 1)})},
                         K{1, LabeledConfiguration({Circle(ratio(3, 2), 2, 1), Circle(ratio(3, 2), -2, 1)})},
                         K{2, LabeledConfiguration({Circle(3, 0, 1), Circle(0, 0, 1)})}});
  tally.expect(!validate_path(swap).has_value(), "swap path accepted");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Tally&)>>> criteria{
      {"tree extraction from the seven-circle configuration", tree_extraction},
      {"fixed configuration of (4(1,3),2)", fixed_configuration},
      {"example tree: order 8, PB_3 x PB_3 x PB_2, structure, block index", example_tree},
      {"word problem: normal form vs handle reduction, relations", word_problem},
      {"group axioms, projection homomorphism, automorphism counts", group_axioms},
      {"star trees: star_embed multiplicative and injective", star_lemma},
      {"monodromy: products, inverses, identity, purity, generators", monodromy_properties},
      {"component decision and planned path validity", component_decision},
      {"exact path validity: collision witness and swap path", path_validity},
  };
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Tally tally;
    try {
      criteria[k].second(tally);
    } catch (const std::exception& e) {
      tally.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (tally.ok() ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << criteria[k].first << " (" << tally.summary() << ")"
              << std::endl;
    all = all && tally.ok();
  }
  return all ? 0 : 1;
}
