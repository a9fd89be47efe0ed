#pragma once

#include <string>

#include "circles/geometry.hpp"
#include "circles/motion.hpp"

namespace circles {

// 1000x1000 SVG, 5% margin, circles stroked and unfilled, y pointing up.
std::string render_svg(const LabeledConfiguration& config, bool labels = false);
// Every keyframe drawn faintly, the start configuration on top, and the
// center tracks as polylines.
std::string render_svg(const MotionPath& path, bool labels = false);

}  // namespace circles
