#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "circles/baut.hpp"
#include "circles/forest.hpp"
#include "circles/geometry.hpp"

namespace circles {

struct Keyframe {
  Rational t;
  LabeledConfiguration config;

  friend bool operator==(const Keyframe&, const Keyframe&) = default;
};

// Piecewise-linear motion: centers and radii interpolate linearly between
// keyframes.  The constructor checks only the shape (times increasing, equal
// circle counts); geometric validity is validate_path's job.
class MotionPath {
 public:
  MotionPath() = default;
  // Throws Error(InvalidPath).
  explicit MotionPath(std::vector<Keyframe> keyframes);
  static MotionPath constant(const LabeledConfiguration& config, Rational t = 0);

  const std::vector<Keyframe>& keyframes() const { return keyframes_; }
  std::size_t size() const { return keyframes_.size(); }
  std::size_t circle_count() const { return keyframes_.front().config.size(); }
  const LabeledConfiguration& start() const { return keyframes_.front().config; }
  const LabeledConfiguration& end() const { return keyframes_.back().config; }
  const Rational& start_time() const { return keyframes_.front().t; }
  const Rational& end_time() const { return keyframes_.back().t; }

  // Configuration at time t (clamped to the keyframe range).
  LabeledConfiguration at(const Rational& t) const;

  friend bool operator==(const MotionPath&, const MotionPath&) = default;

 private:
  std::vector<Keyframe> keyframes_;
};

// Same motion backwards, over the same time interval.
MotionPath reverse(const MotionPath& p);
// p then q, with q shifted in time to start where p ends.  Throws
// Error(InvalidPath) unless p ends exactly where q starts.
MotionPath concatenate(const MotionPath& p, const MotionPath& q);
// Reflection through the x-axis.
MotionPath mirror(const MotionPath& p);
// Every label l replaced by relabel[l] (index 0 unused).
MotionPath relabel(const MotionPath& p, const std::vector<Label>& relabel);

// A number p + q * sqrt(d) with rational p, q and d >= 0.
struct QuadraticSurd {
  Rational p;
  Rational q;
  Rational d;

  std::string to_string() const;
};

struct PathViolation {
  std::size_t segment;  // keyframe index for invalid keyframes
  Label first;
  Label second;  // equals first for a non-positive radius
  // First instant of contact, exactly, and a rational bracket around it.
  QuadraticSurd time;
  Rational time_low;
  Rational time_high;

  std::string describe() const;
};

// Exact check that every instant of the path is a configuration.  Returns
// the earliest violation found, segment by segment.
std::optional<PathViolation> validate_path(const MotionPath& p);

struct CrossingEvent {
  Rational time;
  VertexPath vertex;  // parent vertex, as a path in the starting tree
  std::size_t slot;   // 1-based left position of the crossing pair
  int sign;           // +1 when the circle moving right has the smaller cy

  friend bool operator==(const CrossingEvent&, const CrossingEvent&) = default;
};

// Sibling exchanges in time order.  Throws Error(NonGeneric) when siblings
// share an x-coordinate over a whole segment, or when events at one vertex
// coincide in time and share a circle.  Precondition: validate_path is ok.
std::vector<CrossingEvent> crossing_events(const MotionPath& p);

// Element carried by a path whose endpoints are both canonical
// configurations of their trees: each vertex's braid is its crossing
// sequence.  Throws Error(BasepointMismatch) when either end is not
// canonical, Error(NonGeneric) as crossing_events.
BautElement path_element(const MotionPath& p);

// Monodromy of a loop at a canonical configuration.  Throws
// Error(BasepointMismatch), Error(NotALoop), Error(NonGeneric).
BautElement monodromy(const MotionPath& p);

}  // namespace circles
