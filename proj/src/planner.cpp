#include "circles/planner.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "circles/canonical.hpp"
#include "circles/error.hpp"

namespace circles {

namespace {

// Accumulates keyframes at integer times, dropping repeats.
class PathBuilder {
 public:
  explicit PathBuilder(LabeledConfiguration start) : current_(start) { frames_.push_back({0, std::move(start)}); }

  const LabeledConfiguration& current() const { return current_; }

  void push(LabeledConfiguration next) {
    if (next == current_) return;
    current_ = next;
    frames_.push_back({Rational(static_cast<long>(frames_.size())), std::move(next)});
  }

  MotionPath finish() && { return MotionPath(std::move(frames_)); }

 private:
  LabeledConfiguration current_;
  std::vector<Keyframe> frames_;
};

// For every label, the labels of its subtree (itself first).
std::vector<std::vector<Label>> subtree_labels(const LabeledTree& tree) {
  std::vector<std::vector<Label>> out(label_count(tree) + 1);
  std::function<void(const LabeledTree&, std::vector<Label>&)> walk = [&](const LabeledTree& node, std::vector<Label>& into) {
    for (const auto& c : node.children) {
      std::vector<Label> mine{c.label};
      walk(c, mine);
      into.insert(into.end(), mine.begin(), mine.end());
      out[static_cast<std::size_t>(c.label)] = std::move(mine);
    }
  };
  std::vector<Label> all;
  walk(tree, all);
  out[0] = std::move(all);
  return out;
}

// Moves circle `label` to (cx, cy; r), carrying its contents along.
void move_rigidly(LabeledConfiguration& config, const std::vector<Label>& subtree, const Rational& cx, const Rational& cy,
                  const Rational& r) {
  const Circle old = config.at(subtree.front());
  const Rational scale = r / old.r();
  for (Label l : subtree) {
    const Circle& d = config.at(l);
    config.at(l) = Circle(cx + scale * (d.cx() - old.cx()), cy + scale * (d.cy() - old.cy()), d.r() * scale);
  }
}

void homothety(LabeledConfiguration& config, const std::vector<Label>& labels, const Rational& qx, const Rational& qy,
               const Rational& factor) {
  for (Label l : labels) {
    const Circle& d = config.at(l);
    config.at(l) = Circle(qx + factor * (d.cx() - qx), qy + factor * (d.cy() - qy), d.r() * factor);
  }
}

// A disk in the plane used as the unit disk of normalized coordinates.
struct Frame {
  Rational x;
  Rational y;
  Rational r;

  Rational raw_x(const Rational& u) const { return x + r * u; }
  Rational raw_y(const Rational& u) const { return y + r * u; }
  Rational norm_x(const Rational& raw) const { return (raw - x) / r; }
  Rational norm_y(const Rational& raw) const { return (raw - y) / r; }
};

Frame frame_of(const Circle& c) { return Frame{c.cx(), c.cy(), c.r()}; }

// Moves the children of the container (given in target order) to their
// canonical slots, then recurses.
void place_level(PathBuilder& builder, const LabeledTree& node, const Frame& frame,
                 const std::vector<std::vector<Label>>& subtrees) {
  const std::size_t m = node.children.size();
  if (m == 0) return;
  const long mm = static_cast<long>(m);
  const Rational slot_r = ratio(1, 3 * mm);
  auto target_x = [&](std::size_t j) { return ratio(static_cast<long>(j), mm); };

  bool in_place = true;
  for (std::size_t j = 0; j < m; ++j) {
    const Circle& c = builder.current().at(node.children[j].label);
    if (c != Circle(frame.raw_x(target_x(j)), frame.y, frame.r * slot_r)) in_place = false;
  }

  if (!in_place) {
    std::vector<Label> cluster;
    for (const auto& c : node.children) {
      const auto& s = subtrees[static_cast<std::size_t>(c.label)];
      cluster.insert(cluster.end(), s.begin(), s.end());
    }
    // Pull everything towards the container's center.
    LabeledConfiguration next = builder.current();
    homothety(next, cluster, frame.x, frame.y, ratio(1, 4));
    builder.push(next);

    // Shrink each child in place so that the disks are narrower than the
    // gaps between their x-coordinates.
    std::vector<Rational> xs;
    for (const auto& c : node.children) xs.push_back(frame.norm_x(next.at(c.label).cx()));
    std::vector<Rational> sorted = xs;
    std::sort(sorted.begin(), sorted.end());
    Rational small = ratio(1, 16 * mm * mm);
    for (std::size_t k = 1; k < sorted.size(); ++k) {
      if (sorted[k] == sorted[k - 1]) throw Error(ErrorCode::NonGeneric, "sibling circles share an x-coordinate");
      small = std::min<Rational>(small, (sorted[k] - sorted[k - 1]) / 8);
    }
    for (const auto& c : node.children) {
      const Circle& cur = next.at(c.label);
      const Rational r = std::min<Rational>(cur.r(), frame.r * small);
      move_rigidly(next, subtrees[static_cast<std::size_t>(c.label)], cur.cx(), cur.cy(), r);
    }
    builder.push(next);

    // Lift the cluster, offset so that no child shares an x with a slot.
    const Rational step = ratio(1, 64 * (mm * mm + mm + 1));
    Rational delta = 0;
    xs.clear();
    for (const auto& c : node.children) xs.push_back(frame.norm_x(next.at(c.label).cx()));
    auto collides = [&](const Rational& d) {
      for (const auto& x : xs) {
        for (std::size_t j = 0; j < m; ++j) {
          if (x + d == target_x(j)) return true;
        }
      }
      return false;
    };
    while (collides(delta)) delta += step;
    for (Label l : cluster) {
      const Circle& d = next.at(l);
      next.at(l) = Circle(d.cx() + frame.r * delta, d.cy() + frame.r / 2, d.r());
    }
    builder.push(next);

    // Route the children one at a time, leftmost first, along a row below
    // the slots.
    std::vector<std::size_t> order(m);
    for (std::size_t j = 0; j < m; ++j) order[j] = j;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return next.at(node.children[a].label).cx() < next.at(node.children[b].label).cx();
    });
    const Rational lane_x = ratio(-3, 8);
    const Rational lane_y = -ratio(1, 4 * mm);
    for (std::size_t j : order) {
      const Label label = node.children[j].label;
      const auto& subtree = subtrees[static_cast<std::size_t>(label)];
      const Rational r = next.at(label).r();
      const Rational y = next.at(label).cy();
      move_rigidly(next, subtree, frame.raw_x(lane_x), y, r);
      builder.push(next);
      move_rigidly(next, subtree, frame.raw_x(lane_x), frame.raw_y(lane_y), r);
      builder.push(next);
      move_rigidly(next, subtree, frame.raw_x(target_x(j)), frame.raw_y(lane_y), r);
      builder.push(next);
      move_rigidly(next, subtree, frame.raw_x(target_x(j)), frame.y, r);
      builder.push(next);
    }

    for (std::size_t j = 0; j < m; ++j) {
      const Label label = node.children[j].label;
      move_rigidly(next, subtrees[static_cast<std::size_t>(label)], frame.raw_x(target_x(j)), frame.y, frame.r * slot_r);
    }
    builder.push(next);
  }

  for (const auto& c : node.children) {
    place_level(builder, c, frame_of(builder.current().at(c.label)), subtrees);
  }
}

bool has_sibling_tie(const LabeledConfiguration& config, const LabeledTree& node) {
  std::vector<Rational> xs;
  for (const auto& c : node.children) xs.push_back(config.at(c.label).cx());
  std::sort(xs.begin(), xs.end());
  if (std::adjacent_find(xs.begin(), xs.end()) != xs.end()) return true;
  for (const auto& c : node.children) {
    if (has_sibling_tie(config, c)) return true;
  }
  return false;
}

// Rotates the whole configuration about the origin by a small rational
// clockwise angle so that no two siblings share an x-coordinate.  Tied
// siblings are ordered by cy, and a clockwise turn preserves that order,
// so the rotation itself records no crossings.
void break_ties(PathBuilder& builder, const LabeledTree& tree) {
  const LabeledConfiguration start = builder.current();
  if (!has_sibling_tie(start, tree)) return;
  Rational t = ratio(1, 8);
  for (int attempt = 0; attempt < 64; ++attempt, t /= 2) {
    const Rational denom = 1 + t * t;
    const Rational cos = (1 - t * t) / denom;
    const Rational sin = -2 * t / denom;
    std::vector<Circle> circles;
    for (const auto& c : start.circles()) circles.emplace_back(c.cx() * cos - c.cy() * sin, c.cx() * sin + c.cy() * cos, c.r());
    LabeledConfiguration turned(std::move(circles));
    if (has_sibling_tie(turned, tree)) continue;
    MotionPath segment({Keyframe{0, start}, Keyframe{1, turned}});
    if (validate_path(segment)) continue;
    try {
      if (!crossing_events(segment).empty()) continue;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NonGeneric) throw;
      continue;
    }
    builder.push(std::move(turned));
    return;
  }
  throw Error(ErrorCode::NonGeneric, "could not separate tied siblings");
}

void fit_in_unit_disk(PathBuilder& builder, const LabeledTree& tree) {
  Rational bound = 0;
  for (const auto& c : tree.children) {
    const Circle& circle = builder.current().at(c.label);
    bound = std::max<Rational>(bound, abs(circle.cx()) + abs(circle.cy()) + circle.r());
  }
  if (bound < 1) return;
  LabeledConfiguration next = builder.current();
  std::vector<Label> all;
  for (Label l = 1; l <= static_cast<Label>(next.size()); ++l) all.push_back(l);
  homothety(next, all, 0, 0, 1 / (2 * bound));
  builder.push(std::move(next));
}

}  // namespace

MotionPath plan_to(const LabeledConfiguration& config, const LabeledTree& target) {
  const LabeledTree tree = tree_of_configuration(config);
  if (label_count(tree) != label_count(target) || !labeled_trees_isomorphic(tree, target)) {
    throw Error(ErrorCode::DifferentComponent, "labeled trees are not isomorphic");
  }
  PathBuilder builder(config);
  if (config == kappa_of_tree(target)) return std::move(builder).finish();
  break_ties(builder, tree);
  fit_in_unit_disk(builder, target);
  place_level(builder, target, Frame{0, 0, 1}, subtree_labels(target));
  return std::move(builder).finish();
}

MotionPath plan_to_canonical(const LabeledConfiguration& config) {
  return plan_to(config, tree_of_configuration(config));
}

MotionPath plan_between(const LabeledConfiguration& a, const LabeledConfiguration& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DifferentComponent, "configurations have different numbers of circles");
  const LabeledTree ta = tree_of_configuration(a);
  const LabeledTree tb = tree_of_configuration(b);
  if (!labeled_trees_isomorphic(ta, tb)) throw Error(ErrorCode::DifferentComponent, "labeled trees are not isomorphic");
  if (a == b) return MotionPath::constant(a);
  MotionPath out = concatenate(plan_to_canonical(a), plan_to(kappa_of_tree(ta), tb));
  return concatenate(out, reverse(plan_to_canonical(b)));
}

namespace {

void match_labels(const LabeledTree& from, const LabeledTree& to, const SlotMatching& matching, std::vector<Label>& to_from) {
  for (std::size_t i = 0; i < from.children.size(); ++i) {
    const LabeledTree& x = from.children[i];
    const LabeledTree& y = to.children[matching.image[i]];
    to_from[static_cast<std::size_t>(y.label)] = x.label;
    match_labels(x, y, matching.children[i], to_from);
  }
}

}  // namespace

MotionPath plan_between_unlabeled(const LabeledConfiguration& a, const LabeledConfiguration& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DifferentComponent, "configurations have different numbers of circles");
  const LabeledTree ta = tree_of_configuration(a);
  const LabeledTree tb = tree_of_configuration(b);
  if (!trees_isomorphic(shape_of(ta), shape_of(tb))) throw Error(ErrorCode::DifferentComponent, "trees are not isomorphic");
  std::vector<Label> to_from(b.size() + 1, kRoot);
  match_labels(ta, tb, match_isomorphic(shape_of(ta), shape_of(tb)), to_from);
  std::vector<std::optional<Circle>> slots(b.size());
  for (Label l = 1; l <= static_cast<Label>(b.size()); ++l) slots[static_cast<std::size_t>(to_from[static_cast<std::size_t>(l)] - 1)] = b.at(l);
  std::vector<Circle> circles;
  for (auto& c : slots) circles.push_back(*c);
  return plan_between(a, LabeledConfiguration(std::move(circles)));
}

namespace {

// Exchanges the circles at 0-based slots k, k+1 of a container holding m
// children at their canonical slots: the left one dips below, the right one
// rises above, they pass each other once, and both settle back on the axis.
void swap_slots(PathBuilder& builder, const Frame& frame, std::size_t m, std::size_t k, Label left, Label right,
                const std::vector<std::vector<Label>>& subtrees) {
  const long mm = static_cast<long>(m);
  const Rational h = ratio(1, 2 * mm);
  const Rational xa = ratio(static_cast<long>(k), mm);
  const Rational xb = ratio(static_cast<long>(k + 1), mm);
  const auto& sl = subtrees[static_cast<std::size_t>(left)];
  const auto& sr = subtrees[static_cast<std::size_t>(right)];
  LabeledConfiguration next = builder.current();
  const Rational rl = next.at(left).r();
  const Rational rr = next.at(right).r();
  move_rigidly(next, sl, frame.raw_x(xa), frame.raw_y(-h), rl);
  move_rigidly(next, sr, frame.raw_x(xb), frame.raw_y(h), rr);
  builder.push(next);
  move_rigidly(next, sl, frame.raw_x(xb), frame.raw_y(-h), rl);
  move_rigidly(next, sr, frame.raw_x(xa), frame.raw_y(h), rr);
  builder.push(next);
  move_rigidly(next, sl, frame.raw_x(xb), frame.y, rl);
  move_rigidly(next, sr, frame.raw_x(xa), frame.y, rr);
  builder.push(next);
}

// Replays a unit-disk path inside the circle `host`; sub-path label s is
// the circle labels[s - 1].
void embed(PathBuilder& builder, const MotionPath& sub, Label host, const std::vector<Label>& labels) {
  const Frame frame = frame_of(builder.current().at(host));
  for (std::size_t k = 0; k < sub.size(); ++k) {
    LabeledConfiguration next = builder.current();
    const auto& config = sub.keyframes()[k].config;
    for (std::size_t s = 0; s < labels.size(); ++s) {
      const Circle& u = config.at(static_cast<Label>(s + 1));
      next.at(labels[s]) = Circle(frame.raw_x(u.cx()), frame.raw_y(u.cy()), frame.r * u.r());
    }
    if (k == 0 && next != builder.current()) throw Error(ErrorCode::InvalidPath, "embedded path does not start at the host's contents");
    builder.push(std::move(next));
  }
}

std::vector<Label> descendants(const std::vector<std::vector<Label>>& subtrees, Label label) {
  const auto& s = subtrees[static_cast<std::size_t>(label)];
  return std::vector<Label>(s.begin() + 1, s.end());
}

MotionPath build_reference(const RootedTree& from, const RootedTree& to) {
  const LabeledTree labeled = preorder_labeling(from);
  const LabeledConfiguration start = kappa_of_tree(labeled);
  if (from == to) return MotionPath::constant(start);
  if (ordered_code(to) < ordered_code(from)) {
    const MotionPath back = reverse(reference_identification(to, from));
    std::vector<Label> relabeling(start.size() + 1, kRoot);
    for (Label l = 1; l <= static_cast<Label>(start.size()); ++l) {
      for (Label k = 1; k <= static_cast<Label>(start.size()); ++k) {
        if (start.at(k) == back.start().at(l)) relabeling[static_cast<std::size_t>(l)] = k;
      }
    }
    return relabel(back, relabeling);
  }
  const std::size_t m = from.child_count();
  const auto subtrees = subtree_labels(labeled);
  const SlotMatching matching = match_isomorphic(from, to);
  PathBuilder builder(start);
  std::vector<std::size_t> targets = matching.image;
  std::vector<std::size_t> content(m);
  std::vector<Label> slot_label(m);
  for (std::size_t j = 0; j < m; ++j) {
    content[j] = j;
    slot_label[j] = labeled.children[j].label;
  }
  // Same sweep as permutation_braid, one positive exchange per inversion.
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t k = 0; k + 1 < m; ++k) {
      if (targets[k] > targets[k + 1]) {
        swap_slots(builder, Frame{0, 0, 1}, m, k, slot_label[k], slot_label[k + 1], subtrees);
        std::swap(targets[k], targets[k + 1]);
        std::swap(content[k], content[k + 1]);
        std::swap(slot_label[k], slot_label[k + 1]);
        swapped = true;
      }
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    const RootedTree& have = from.child(content[j]);
    if (have == to.child(j)) continue;
    embed(builder, reference_identification(have, to.child(j)), slot_label[j], descendants(subtrees, slot_label[j]));
  }
  return std::move(builder).finish();
}

std::mutex reference_mutex;
std::map<std::pair<std::string, std::string>, MotionPath> reference_cache;

}  // namespace

MotionPath reference_identification(const RootedTree& from, const RootedTree& to) {
  if (!trees_isomorphic(from, to)) throw Error(ErrorCode::NotIsomorphic, ordered_code(from) + " vs " + ordered_code(to));
  auto key = std::make_pair(ordered_code(from), ordered_code(to));
  {
    std::lock_guard<std::mutex> lock(reference_mutex);
    auto it = reference_cache.find(key);
    if (it != reference_cache.end()) return it->second;
  }
  MotionPath built = build_reference(from, to);
  std::lock_guard<std::mutex> lock(reference_mutex);
  return reference_cache.emplace(std::move(key), std::move(built)).first->second;
}

MotionPath make_generator_loop(const LabeledTree& tree, const VertexPath& vertex, std::size_t slot) {
  check_labels(tree);
  const LabeledConfiguration start = kappa_of_tree(tree);
  const LabeledTree& node = labeled_at(tree, vertex);
  const std::size_t m = node.children.size();
  if (slot < 1 || slot >= m) {
    throw Error(ErrorCode::InvalidArgument, "slot " + std::to_string(slot) + " out of range for " + std::to_string(m) + " children");
  }
  const LabeledTree& a = node.children[slot - 1];
  const LabeledTree& b = node.children[slot];
  const RootedTree shape_a = shape_of(a);
  const RootedTree shape_b = shape_of(b);
  if (!trees_isomorphic(shape_a, shape_b)) {
    throw Error(ErrorCode::TypeMismatch, "slots " + std::to_string(slot) + " and " + std::to_string(slot + 1) + " hold different types");
  }
  const Frame frame = vertex.empty() ? Frame{0, 0, 1} : frame_of(start.at(node.label));
  const auto subtrees = subtree_labels(tree);
  PathBuilder builder(start);
  swap_slots(builder, frame, m, slot - 1, a.label, b.label, subtrees);
  if (shape_a != shape_b) {
    embed(builder, reference_identification(shape_a, shape_b), a.label, descendants(subtrees, a.label));
    embed(builder, reference_identification(shape_b, shape_a), b.label, descendants(subtrees, b.label));
  }
  return std::move(builder).finish();
}

}  // namespace circles
