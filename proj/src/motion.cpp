#include "circles/motion.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "circles/canonical.hpp"
#include "circles/error.hpp"

namespace circles {

MotionPath::MotionPath(std::vector<Keyframe> keyframes) : keyframes_(std::move(keyframes)) {
  if (keyframes_.empty()) throw Error(ErrorCode::InvalidPath, "a path needs at least one keyframe");
  for (std::size_t k = 1; k < keyframes_.size(); ++k) {
    if (keyframes_[k].t <= keyframes_[k - 1].t) {
      throw Error(ErrorCode::InvalidPath, "keyframe times must increase strictly (keyframe " + std::to_string(k) + ")");
    }
    if (keyframes_[k].config.size() != keyframes_[0].config.size()) {
      throw Error(ErrorCode::InvalidPath, "keyframe " + std::to_string(k) + " has a different number of circles");
    }
  }
}

MotionPath MotionPath::constant(const LabeledConfiguration& config, Rational t) {
  return MotionPath({Keyframe{std::move(t), config}});
}

namespace {

Rational lerp(const Rational& a, const Rational& b, const Rational& s) { return a + (b - a) * s; }

LabeledConfiguration interpolate(const LabeledConfiguration& a, const LabeledConfiguration& b, const Rational& s) {
  std::vector<Circle> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Circle& x = a.circles()[i];
    const Circle& y = b.circles()[i];
    out.emplace_back(lerp(x.cx(), y.cx(), s), lerp(x.cy(), y.cy(), s), lerp(x.r(), y.r(), s));
  }
  return LabeledConfiguration(std::move(out));
}

}  // namespace

LabeledConfiguration MotionPath::at(const Rational& t) const {
  if (t <= keyframes_.front().t) return keyframes_.front().config;
  if (t >= keyframes_.back().t) return keyframes_.back().config;
  std::size_t k = 1;
  while (keyframes_[k].t < t) ++k;
  const Keyframe& a = keyframes_[k - 1];
  const Keyframe& b = keyframes_[k];
  return interpolate(a.config, b.config, (t - a.t) / (b.t - a.t));
}

MotionPath reverse(const MotionPath& p) {
  const Rational total = p.start_time() + p.end_time();
  std::vector<Keyframe> out;
  out.reserve(p.size());
  for (auto it = p.keyframes().rbegin(); it != p.keyframes().rend(); ++it) out.push_back({total - it->t, it->config});
  return MotionPath(std::move(out));
}

MotionPath concatenate(const MotionPath& p, const MotionPath& q) {
  if (p.end() != q.start()) throw Error(ErrorCode::InvalidPath, "concatenated paths do not meet");
  const Rational shift = p.end_time() - q.start_time();
  std::vector<Keyframe> out = p.keyframes();
  for (std::size_t k = 1; k < q.size(); ++k) out.push_back({q.keyframes()[k].t + shift, q.keyframes()[k].config});
  return MotionPath(std::move(out));
}

MotionPath mirror(const MotionPath& p) {
  std::vector<Keyframe> out;
  for (const auto& kf : p.keyframes()) {
    std::vector<Circle> circles;
    for (const auto& c : kf.config.circles()) circles.emplace_back(c.cx(), -c.cy(), c.r());
    out.push_back({kf.t, LabeledConfiguration(std::move(circles))});
  }
  return MotionPath(std::move(out));
}

MotionPath relabel(const MotionPath& p, const std::vector<Label>& relabel) {
  const std::size_t n = p.circle_count();
  if (relabel.size() != n + 1) throw Error(ErrorCode::SizeMismatch, "relabeling has the wrong size");
  std::vector<Keyframe> out;
  for (const auto& kf : p.keyframes()) {
    std::vector<std::optional<Circle>> slots(n);
    for (Label l = 1; l <= static_cast<Label>(n); ++l) {
      const Label to = relabel[static_cast<std::size_t>(l)];
      if (to < 1 || to > static_cast<Label>(n) || slots[static_cast<std::size_t>(to - 1)]) {
        throw Error(ErrorCode::LabelError, "relabeling is not a bijection");
      }
      slots[static_cast<std::size_t>(to - 1)] = kf.config.at(l);
    }
    std::vector<Circle> circles;
    for (auto& c : slots) circles.push_back(*c);
    out.push_back({kf.t, LabeledConfiguration(std::move(circles))});
  }
  return MotionPath(std::move(out));
}

std::string QuadraticSurd::to_string() const {
  if (sgn(q) == 0 || sgn(d) == 0) return circles::to_string(p);
  std::string out = circles::to_string(p);
  out += sgn(q) > 0 ? " + " : " - ";
  out += circles::to_string(abs(q)) + "*sqrt(" + circles::to_string(d) + ")";
  return out;
}

std::string PathViolation::describe() const {
  std::ostringstream out;
  if (first == second) {
    out << "circle " << first << " has non-positive radius at t = " << time.to_string();
  } else {
    out << "circles " << first << " and " << second << " meet at t = " << time.to_string() << " (segment " << segment
        << ", within [" << to_string(time_low) << ", " << to_string(time_high) << "])";
  }
  return out.str();
}

namespace {

struct Quadratic {
  Rational a, b, c;
  Rational operator()(const Rational& s) const { return (a * s + b) * s + c; }
};

// Squared-distance and radius terms of a pair as polynomials in the segment
// parameter s in [0, 1]; picks the disjointness branch positive at s = 0.
Quadratic active_branch(const Circle& i0, const Circle& i1, const Circle& j0, const Circle& j1) {
  const Rational dx = i0.cx() - j0.cx();
  const Rational dy = i0.cy() - j0.cy();
  const Rational ux = (i1.cx() - j1.cx()) - dx;
  const Rational uy = (i1.cy() - j1.cy()) - dy;
  // d^2(s) = e2 s^2 + e1 s + e0
  const Rational e2 = ux * ux + uy * uy;
  const Rational e1 = 2 * (dx * ux + dy * uy);
  const Rational e0 = dx * dx + dy * dy;
  const Rational sum0 = i0.r() + j0.r();
  const Rational usum = (i1.r() + j1.r()) - sum0;
  const Rational diff0 = i0.r() - j0.r();
  const Rational udiff = (i1.r() - j1.r()) - diff0;
  Quadratic apart{e2 - usum * usum, e1 - 2 * sum0 * usum, e0 - sum0 * sum0};
  if (sgn(apart.c) > 0) return apart;
  return Quadratic{udiff * udiff - e2, 2 * diff0 * udiff - e1, diff0 * diff0 - e0};
}

// Whether q > 0 on [0, 1], given q(0) > 0.
bool stays_positive(const Quadratic& q) {
  if (sgn(q(Rational(1))) <= 0) return false;
  if (sgn(q.a) <= 0) return true;
  const Rational vertex = -q.b / (2 * q.a);
  if (sgn(vertex) <= 0 || vertex >= 1) return true;
  return sgn(q.b * q.b - 4 * q.a * q.c) < 0;
}

PathViolation contact_witness(const Quadratic& q, const Rational& t0, const Rational& t1) {
  const Rational h = t1 - t0;
  PathViolation v{};
  if (sgn(q.a) == 0) {
    const Rational s = -q.c / q.b;
    v.time = {t0 + h * s, 0, 0};
  } else {
    // The first root after 0 is (-b - sqrt(D)) / (2a) for either sign of a.
    const Rational disc = q.b * q.b - 4 * q.a * q.c;
    Rational p = -q.b / (2 * q.a);
    Rational coeff = -1 / (2 * q.a);
    Rational root;
    if (exact_sqrt(disc, root)) {
      v.time = {t0 + h * (p + coeff * root), 0, 0};
    } else {
      v.time = {t0 + h * p, h * coeff, disc};
    }
  }
  Rational lo = 0;
  Rational hi = 1;
  if (sgn(q(hi)) > 0) hi = -q.b / (2 * q.a);  // positive at 1: dips below at the vertex
  for (int iter = 0; iter < 48; ++iter) {
    Rational mid = (lo + hi) / 2;
    if (sgn(q(mid)) > 0) lo = mid;
    else hi = mid;
  }
  v.time_low = t0 + h * lo;
  v.time_high = t0 + h * hi;
  return v;
}

}  // namespace

namespace {

// Sign of a + b * sqrt(d), d >= 0.
int surd_sign(const Rational& a, const Rational& b, const Rational& d) {
  const int sa = sgn(a);
  const int sb = sgn(d) == 0 ? 0 : sgn(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: the larger magnitude wins
  const int cmp = sgn(Rational(a * a - b * b * d));
  return cmp == 0 ? 0 : (cmp > 0 ? sa : sb);
}

// Sign of x - y for two surds, exactly.
int compare(const QuadraticSurd& x, const QuadraticSurd& y) {
  // a + b sqrt(d1) + c sqrt(d2)
  const Rational a = x.p - y.p;
  const Rational b = sgn(x.d) == 0 ? Rational(0) : x.q;
  const Rational c = sgn(y.d) == 0 ? Rational(0) : Rational(-y.q);
  if (sgn(c) == 0) return surd_sign(a, b, x.d);
  if (sgn(b) == 0) return surd_sign(a, c, y.d);
  // sign of u = b sqrt(d1) + c sqrt(d2)
  int su;
  if (sgn(b) == sgn(c)) {
    su = sgn(b);
  } else {
    const int cmp = sgn(Rational(b * b * x.d - c * c * y.d));
    su = cmp == 0 ? 0 : (cmp > 0 ? sgn(b) : sgn(c));
  }
  const int sa = sgn(a);
  if (su == 0) return sa;
  if (sa == 0 || sa == su) return su;
  // compare a^2 with u^2 = b^2 d1 + c^2 d2 + 2 b c sqrt(d1 d2)
  const int cmp = surd_sign(Rational(a * a - b * b * x.d - c * c * y.d), Rational(-2 * b * c), Rational(x.d * y.d));
  return cmp == 0 ? 0 : (cmp > 0 ? sa : su);
}

std::optional<PathViolation> keyframe_violation(const Keyframe& kf, std::size_t k) {
  auto violations = validate_configuration(kf.config);
  if (violations.empty()) return std::nullopt;
  const Violation& bad = violations.front();
  return PathViolation{k, bad.first, bad.second, {kf.t, 0, 0}, kf.t, kf.t};
}

}  // namespace

std::optional<PathViolation> validate_path(const MotionPath& p) {
  const auto& kfs = p.keyframes();
  if (auto v = keyframe_violation(kfs.front(), 0)) return v;
  const Label n = static_cast<Label>(p.circle_count());
  for (std::size_t k = 0; k + 1 < kfs.size(); ++k) {
    const auto& a = kfs[k].config;
    const auto& b = kfs[k + 1].config;
    std::optional<PathViolation> earliest;
    for (Label i = 1; i <= n; ++i) {
      for (Label j = i + 1; j <= n; ++j) {
        Quadratic q = active_branch(a.at(i), b.at(i), a.at(j), b.at(j));
        if (stays_positive(q)) continue;
        PathViolation v = contact_witness(q, kfs[k].t, kfs[k + 1].t);
        v.segment = k;
        v.first = i;
        v.second = j;
        if (!earliest || compare(v.time, earliest->time) < 0) earliest = v;
      }
    }
    if (earliest) return earliest;
    if (auto v = keyframe_violation(kfs[k + 1], k + 1)) return v;
  }
  return std::nullopt;
}

namespace {

struct PairEvent {
  Rational time;
  Label mover;  // circle moving rightwards through the crossing
  Label other;
  int sign;
};

// +1 when a is after b in the (cx, cy) order.
int lex_side(const Circle& a, const Circle& b) {
  if (a.cx() != b.cx()) return a.cx() > b.cx() ? 1 : -1;
  return a.cy() > b.cy() ? 1 : -1;
}

PairEvent make_event(const MotionPath& p, const Rational& t, Label a, Label b, int side_before) {
  const LabeledConfiguration config = p.at(t);
  const Label mover = side_before < 0 ? a : b;
  const Label other = side_before < 0 ? b : a;
  const Rational& my = config.at(mover).cy();
  const Rational& oy = config.at(other).cy();
  if (my == oy) throw Error(ErrorCode::NonGeneric, "sibling centers coincide at t = " + to_string(t));
  return PairEvent{t, mover, other, my < oy ? 1 : -1};
}

void pair_events(const MotionPath& p, Label a, Label b, std::vector<PairEvent>& out) {
  const auto& kfs = p.keyframes();
  const std::size_t last = kfs.size() - 1;
  std::vector<Rational> diff(kfs.size());
  for (std::size_t k = 0; k <= last; ++k) diff[k] = kfs[k].config.at(a).cx() - kfs[k].config.at(b).cx();
  for (std::size_t k = 0; k < last; ++k) {
    if (sgn(diff[k]) == 0 && sgn(diff[k + 1]) == 0) {
      throw Error(ErrorCode::NonGeneric, "circles " + std::to_string(a) + " and " + std::to_string(b) +
                                             " share an x-coordinate on segment " + std::to_string(k));
    }
  }
  for (std::size_t k = 0; k <= last; ++k) {
    if (sgn(diff[k]) == 0) {
      const int before = k == 0 ? lex_side(kfs[0].config.at(a), kfs[0].config.at(b)) : sgn(diff[k - 1]);
      const int after = k == last ? lex_side(kfs[last].config.at(a), kfs[last].config.at(b)) : sgn(diff[k + 1]);
      if (before != after) out.push_back(make_event(p, kfs[k].t, a, b, before));
    }
    if (k < last && sgn(diff[k]) != 0 && sgn(diff[k + 1]) != 0 && sgn(diff[k]) != sgn(diff[k + 1])) {
      const Rational s = diff[k] / (diff[k] - diff[k + 1]);
      out.push_back(make_event(p, lerp(kfs[k].t, kfs[k + 1].t, s), a, b, sgn(diff[k])));
    }
  }
}

void vertex_events(const MotionPath& p, const LabeledTree& node, const VertexPath& path, std::vector<CrossingEvent>& out) {
  std::vector<Label> order;
  for (const auto& c : node.children) order.push_back(c.label);
  std::vector<PairEvent> events;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) pair_events(p, order[i], order[j], events);
  }
  std::sort(events.begin(), events.end(), [](const PairEvent& x, const PairEvent& y) { return x.time < y.time; });
  std::size_t begin = 0;
  while (begin < events.size()) {
    std::size_t end = begin;
    while (end < events.size() && events[end].time == events[begin].time) ++end;
    std::vector<std::pair<std::size_t, int>> group;  // (left position, sign)
    std::vector<Label> involved;
    for (std::size_t e = begin; e < end; ++e) {
      const PairEvent& ev = events[e];
      for (Label l : {ev.mover, ev.other}) {
        if (std::find(involved.begin(), involved.end(), l) != involved.end()) {
          throw Error(ErrorCode::NonGeneric, "simultaneous crossings share circle " + std::to_string(l) + " at t = " + to_string(ev.time));
        }
        involved.push_back(l);
      }
      const auto pm = static_cast<std::size_t>(std::find(order.begin(), order.end(), ev.mover) - order.begin());
      const auto po = static_cast<std::size_t>(std::find(order.begin(), order.end(), ev.other) - order.begin());
      if (po != pm + 1) {
        throw Error(ErrorCode::NonGeneric, "crossing of non-adjacent circles at t = " + to_string(ev.time));
      }
      group.emplace_back(pm, ev.sign);
    }
    std::sort(group.begin(), group.end());
    for (const auto& [pos, sign] : group) {
      std::swap(order[pos], order[pos + 1]);
      out.push_back(CrossingEvent{events[begin].time, path, pos + 1, sign});
    }
    begin = end;
  }
  VertexPath child_path = path;
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    child_path.push_back(i);
    vertex_events(p, node.children[i], child_path, out);
    child_path.pop_back();
  }
}

}  // namespace

std::vector<CrossingEvent> crossing_events(const MotionPath& p) {
  const LabeledTree tree = tree_of_configuration(p.start());
  std::vector<CrossingEvent> out;
  vertex_events(p, tree, {}, out);
  std::stable_sort(out.begin(), out.end(), [](const CrossingEvent& a, const CrossingEvent& b) { return a.time < b.time; });
  return out;
}

namespace {

BautElement assemble(const LabeledTree& node, const VertexPath& path, const std::map<VertexPath, std::vector<int>>& letters) {
  std::vector<BautElement> children;
  VertexPath child_path = path;
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    child_path.push_back(i);
    children.push_back(assemble(node.children[i], child_path, letters));
    child_path.pop_back();
  }
  auto it = letters.find(path);
  std::vector<int> word = it == letters.end() ? std::vector<int>{} : it->second;
  return BautElement(shape_of(node), BraidWord(node.children.size(), std::move(word)), std::move(children));
}

}  // namespace

BautElement path_element(const MotionPath& p) {
  const LabeledTree start = tree_of_configuration(p.start());
  if (p.start() != kappa_of_tree(start)) throw Error(ErrorCode::BasepointMismatch, "path does not start at a canonical configuration");
  const LabeledTree end = tree_of_configuration(p.end());
  if (p.end() != kappa_of_tree(end)) throw Error(ErrorCode::BasepointMismatch, "path does not end at a canonical configuration");
  std::map<VertexPath, std::vector<int>> letters;
  for (const auto& e : crossing_events(p)) letters[e.vertex].push_back(e.sign * static_cast<int>(e.slot));
  BautElement element = assemble(start, {}, letters);
  if (element.target() != shape_of(end)) throw Error(ErrorCode::InvalidPath, "crossing record does not reach the final tree");
  return element;
}

BautElement monodromy(const MotionPath& p) {
  const LabeledTree start = tree_of_configuration(p.start());
  if (p.start() != kappa_of_tree(start)) throw Error(ErrorCode::BasepointMismatch, "loop does not start at a canonical configuration");
  if (!same_underlying_set(p.start(), p.end())) throw Error(ErrorCode::NotALoop, "path ends away from its starting circles");
  return path_element(p);
}

}  // namespace circles
