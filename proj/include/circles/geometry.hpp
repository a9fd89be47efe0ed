#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circles/rational.hpp"

namespace circles {

// A circle with exact rational center and radius; radius > 0 is enforced on
// construction.
class Circle {
 public:
  Circle(Rational cx, Rational cy, Rational r);

  const Rational& cx() const { return cx_; }
  const Rational& cy() const { return cy_; }
  const Rational& r() const { return r_; }

  friend bool operator==(const Circle& a, const Circle& b) {
    return a.cx_ == b.cx_ && a.cy_ == b.cy_ && a.r_ == b.r_;
  }
  // Lexicographic on (cx, cy, r); used for set comparisons of configurations.
  friend bool operator<(const Circle& a, const Circle& b);

 private:
  Rational cx_;
  Rational cy_;
  Rational r_;
};

// Squared distance between centers.
Rational center_distance2(const Circle& a, const Circle& b);

bool circles_disjoint(const Circle& a, const Circle& b);

enum class Nesting { AInsideB, BInsideA, Unnested };

// Throws Error(NotDisjoint) when the circles meet.
Nesting nesting_relation(const Circle& a, const Circle& b);

// Labels are 1..n; circle i lives at index i - 1.
using Label = int;
inline constexpr Label kRoot = 0;

class LabeledConfiguration {
 public:
  LabeledConfiguration() = default;
  explicit LabeledConfiguration(std::vector<Circle> circles) : circles_(std::move(circles)) {}

  std::size_t size() const { return circles_.size(); }
  bool empty() const { return circles_.empty(); }
  const Circle& at(Label label) const { return circles_.at(static_cast<std::size_t>(label - 1)); }
  Circle& at(Label label) { return circles_.at(static_cast<std::size_t>(label - 1)); }
  const std::vector<Circle>& circles() const { return circles_; }

  friend bool operator==(const LabeledConfiguration&, const LabeledConfiguration&) = default;

 private:
  std::vector<Circle> circles_;
};

// True when the two configurations hold the same set of circles, ignoring labels.
bool same_underlying_set(const LabeledConfiguration& a, const LabeledConfiguration& b);

// Smallest containing circle, or kRoot.  Precondition: the configuration is valid.
Label immediate_parent(const LabeledConfiguration& config, Label i);

struct Violation {
  enum class Kind { NonPositiveRadius, Intersecting };
  Kind kind;
  Label first;
  Label second;  // equals first for NonPositiveRadius
  std::string describe() const;
};

// Unchecked circle data, e.g. straight from a file.
struct RawCircle {
  Rational cx;
  Rational cy;
  Rational r;
};

// Checks radii and pairwise disjointness; empty result means valid.  Labels
// in the violations are 1-based positions.
std::vector<Violation> validate_circles(const std::vector<RawCircle>& circles);
std::vector<Violation> validate_configuration(const LabeledConfiguration& config);

// Builds a configuration or throws Error(NotDisjoint) listing the violations.
LabeledConfiguration make_configuration(const std::vector<RawCircle>& circles);

// Disks of radius d/3 (d = minimum pairwise center distance) at the given
// points; radius 1 for fewer than two points.  Irrational d/3 is replaced by
// a rational lower bound with denominator 2^32.
LabeledConfiguration disks_from_points(const std::vector<std::pair<Rational, Rational>>& points);

}  // namespace circles
