#include "circles/geometry.hpp"

#include <algorithm>
#include <sstream>

#include "circles/error.hpp"

namespace circles {

Circle::Circle(Rational cx, Rational cy, Rational r) : cx_(std::move(cx)), cy_(std::move(cy)), r_(std::move(r)) {
  cx_.canonicalize();
  cy_.canonicalize();
  r_.canonicalize();
  if (sgn(r_) <= 0) throw Error(ErrorCode::InvalidArgument, "circle radius must be positive, got " + to_string(r_));
}

bool operator<(const Circle& a, const Circle& b) {
  if (a.cx_ != b.cx_) return a.cx_ < b.cx_;
  if (a.cy_ != b.cy_) return a.cy_ < b.cy_;
  return a.r_ < b.r_;
}

Rational center_distance2(const Circle& a, const Circle& b) {
  Rational dx = a.cx() - b.cx();
  Rational dy = a.cy() - b.cy();
  return dx * dx + dy * dy;
}

namespace {

// Disjoint iff one disjunct of the semialgebraic description holds:
// (ra - rb)^2 - d^2 > 0 (nested) or (ra + rb)^2 - d^2 < 0 (apart).
bool disjoint_raw(const Rational& dx, const Rational& dy, const Rational& ra, const Rational& rb) {
  Rational d2 = dx * dx + dy * dy;
  Rational diff = ra - rb;
  Rational sum = ra + rb;
  return diff * diff > d2 || sum * sum < d2;
}

}  // namespace

bool circles_disjoint(const Circle& a, const Circle& b) {
  return disjoint_raw(a.cx() - b.cx(), a.cy() - b.cy(), a.r(), b.r());
}

Nesting nesting_relation(const Circle& a, const Circle& b) {
  Rational d2 = center_distance2(a, b);
  Rational diff = a.r() - b.r();
  Rational sum = a.r() + b.r();
  if (diff * diff > d2) return a.r() < b.r() ? Nesting::AInsideB : Nesting::BInsideA;
  if (sum * sum < d2) return Nesting::Unnested;
  throw Error(ErrorCode::NotDisjoint, "circles intersect");
}

bool same_underlying_set(const LabeledConfiguration& a, const LabeledConfiguration& b) {
  if (a.size() != b.size()) return false;
  std::vector<Circle> x = a.circles();
  std::vector<Circle> y = b.circles();
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

Label immediate_parent(const LabeledConfiguration& config, Label i) {
  const Circle& c = config.at(i);
  Label best = kRoot;
  for (Label j = 1; j <= static_cast<Label>(config.size()); ++j) {
    if (j == i) continue;
    const Circle& other = config.at(j);
    if (nesting_relation(c, other) != Nesting::AInsideB) continue;
    if (best == kRoot || other.r() < config.at(best).r()) best = j;
  }
  return best;
}

std::string Violation::describe() const {
  std::ostringstream out;
  if (kind == Kind::NonPositiveRadius) {
    out << "circle " << first << " has non-positive radius";
  } else {
    out << "circles " << first << " and " << second << " intersect";
  }
  return out.str();
}

std::vector<Violation> validate_circles(const std::vector<RawCircle>& circles) {
  std::vector<Violation> out;
  const Label n = static_cast<Label>(circles.size());
  for (Label i = 0; i < n; ++i) {
    if (sgn(circles[i].r) <= 0) out.push_back({Violation::Kind::NonPositiveRadius, i + 1, i + 1});
  }
  for (Label i = 0; i < n; ++i) {
    for (Label j = i + 1; j < n; ++j) {
      const RawCircle& a = circles[i];
      const RawCircle& b = circles[j];
      if (!disjoint_raw(a.cx - b.cx, a.cy - b.cy, a.r, b.r)) {
        out.push_back({Violation::Kind::Intersecting, i + 1, j + 1});
      }
    }
  }
  return out;
}

std::vector<Violation> validate_configuration(const LabeledConfiguration& config) {
  std::vector<Violation> out;
  const Label n = static_cast<Label>(config.size());
  for (Label i = 1; i <= n; ++i) {
    for (Label j = i + 1; j <= n; ++j) {
      if (!circles_disjoint(config.at(i), config.at(j))) out.push_back({Violation::Kind::Intersecting, i, j});
    }
  }
  return out;
}

LabeledConfiguration make_configuration(const std::vector<RawCircle>& circles) {
  auto violations = validate_circles(circles);
  if (!violations.empty()) {
    std::string message;
    for (const auto& v : violations) {
      if (!message.empty()) message += "; ";
      message += v.describe();
    }
    throw Error(ErrorCode::NotDisjoint, message);
  }
  std::vector<Circle> out;
  out.reserve(circles.size());
  for (const auto& c : circles) out.emplace_back(c.cx, c.cy, c.r);
  return LabeledConfiguration(std::move(out));
}

LabeledConfiguration disks_from_points(const std::vector<std::pair<Rational, Rational>>& points) {
  const std::size_t n = points.size();
  Rational radius(1);
  if (n >= 2) {
    std::optional<Rational> min_d2;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        Rational dx = points[i].first - points[j].first;
        Rational dy = points[i].second - points[j].second;
        Rational d2 = dx * dx + dy * dy;
        if (sgn(d2) == 0) {
          std::ostringstream msg;
          msg << "points " << i + 1 << " and " << j + 1 << " coincide";
          throw Error(ErrorCode::DuplicatePoint, msg.str());
        }
        if (!min_d2 || d2 < *min_d2) min_d2 = d2;
      }
    }
    Rational d;
    if (exact_sqrt(*min_d2, d)) {
      radius = d / 3;
    } else {
      // (3r)^2 <= d^2  <=>  r^2 <= d^2 / 9
      // sqrt_floor already guarantees (3r)^2 <= d^2; more bits only when the
      // points are so close that 2^-32 would round the radius to zero.
      unsigned bits = 32;
      radius = sqrt_floor(*min_d2 / 9, bits);
      while (sgn(radius) == 0) radius = sqrt_floor(*min_d2 / 9, bits *= 2);
    }
    radius.canonicalize();
  }
  std::vector<Circle> out;
  out.reserve(n);
  for (const auto& [x, y] : points) out.emplace_back(x, y, radius);
  return LabeledConfiguration(std::move(out));
}

}  // namespace circles
