#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "circles/baut.hpp"
#include "circles/forest.hpp"
#include "circles/geometry.hpp"
#include "circles/motion.hpp"

namespace circles {

using Json = nlohmann::ordered_json;

// {"circles":[{"label":1,"cx":"p/q","cy":"p/q","r":"p/q"},...]}, sorted by label.
Json config_to_json(const LabeledConfiguration& config);
// Circles in label order, unchecked apart from the label set (exactly 1..n)
// and the rational syntax.  Throws Error(ParseError) or Error(LabelError).
std::vector<RawCircle> raw_circles_from_json(const Json& j);
// Same, then checked for disjointness (Error(NotDisjoint)).
LabeledConfiguration config_from_json(const Json& j);

// {"keyframes":[{"t":"p/q","config":{...}},...]}
Json path_to_json(const MotionPath& p);
// Keyframes are not required to be valid configurations here.
MotionPath path_from_json(const Json& j);

// {"tree":"(()())","braids":{"":"1","0":""}}; every vertex of the source
// tree appears, in preorder.
Json element_to_json(const BautElement& e);
// Missing vertices get the empty braid.
BautElement element_from_json(const Json& j);

// {"children":[...],"label":k}; the root carries no label.
Json tree_to_json(const LabeledTree& tree);
LabeledTree tree_from_json(const Json& j);

// Parses text, reporting malformed input with its location as Error(ParseError).
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace circles
