#include "circles/render.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

namespace circles {

namespace {

constexpr double kSize = 1000.0;
constexpr double kMargin = 0.05 * kSize;

// Maps plane coordinates into the viewport, keeping the aspect ratio.
class Viewport {
 public:
  explicit Viewport(const std::vector<const LabeledConfiguration*>& configs) {
    double lo_x = std::numeric_limits<double>::max(), hi_x = std::numeric_limits<double>::lowest();
    double lo_y = lo_x, hi_y = hi_x;
    for (const auto* config : configs) {
      for (const auto& c : config->circles()) {
        const double x = to_double(c.cx()), y = to_double(c.cy()), r = to_double(c.r());
        lo_x = std::min(lo_x, x - r);
        hi_x = std::max(hi_x, x + r);
        lo_y = std::min(lo_y, y - r);
        hi_y = std::max(hi_y, y + r);
      }
    }
    if (lo_x > hi_x) lo_x = lo_y = -1, hi_x = hi_y = 1;
    const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12});
    scale_ = (kSize - 2 * kMargin) / span;
    // center the drawing
    off_x_ = kMargin + ((kSize - 2 * kMargin) - (hi_x - lo_x) * scale_) / 2 - lo_x * scale_;
    off_y_ = kMargin + ((kSize - 2 * kMargin) - (hi_y - lo_y) * scale_) / 2 + hi_y * scale_;
  }

  double x(const Rational& v) const { return off_x_ + to_double(v) * scale_; }
  double y(const Rational& v) const { return off_y_ - to_double(v) * scale_; }
  double length(const Rational& v) const { return to_double(v) * scale_; }

 private:
  double scale_ = 1;
  double off_x_ = 0;
  double off_y_ = 0;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

void draw_config(std::ostringstream& out, const Viewport& view, const LabeledConfiguration& config, const char* style,
                 bool labels) {
  for (Label l = 1; l <= static_cast<Label>(config.size()); ++l) {
    const Circle& c = config.at(l);
    out << "  <circle cx=\"" << fmt(view.x(c.cx())) << "\" cy=\"" << fmt(view.y(c.cy())) << "\" r=\""
        << fmt(view.length(c.r())) << "\" " << style << "/>\n";
    if (labels) {
      out << "  <text x=\"" << fmt(view.x(c.cx())) << "\" y=\"" << fmt(view.y(c.cy()))
          << "\" font-size=\"12\" text-anchor=\"middle\">" << l << "</text>\n";
    }
  }
}

void header(std::ostringstream& out) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" viewBox=\"0 0 1000 1000\">\n";
}

}  // namespace

std::string render_svg(const LabeledConfiguration& config, bool labels) {
  Viewport view({&config});
  std::ostringstream out;
  header(out);
  draw_config(out, view, config, "fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"", labels);
  out << "</svg>\n";
  return out.str();
}

std::string render_svg(const MotionPath& path, bool labels) {
  std::vector<const LabeledConfiguration*> configs;
  for (const auto& kf : path.keyframes()) configs.push_back(&kf.config);
  Viewport view(configs);
  std::ostringstream out;
  header(out);
  for (std::size_t k = 1; k < path.size(); ++k) {
    draw_config(out, view, path.keyframes()[k].config, "fill=\"none\" stroke=\"gray\" stroke-opacity=\"0.3\"", false);
  }
  for (Label l = 1; l <= static_cast<Label>(path.circle_count()); ++l) {
    out << "  <polyline fill=\"none\" stroke=\"steelblue\" points=\"";
    for (std::size_t k = 0; k < path.size(); ++k) {
      const Circle& c = path.keyframes()[k].config.at(l);
      out << (k ? " " : "") << fmt(view.x(c.cx())) << "," << fmt(view.y(c.cy()));
    }
    out << "\"/>\n";
  }
  draw_config(out, view, path.start(), "fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"", labels);
  out << "</svg>\n";
  return out.str();
}

}  // namespace circles
