#include "circles/io.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "circles/error.hpp"

namespace circles {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing key \"") + key + "\"");
  return j.at(key);
}

Rational rational_member(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw Error(ErrorCode::ParseError, std::string("\"") + key + "\" must be a rational string");
}

}  // namespace

Json config_to_json(const LabeledConfiguration& config) {
  Json circles = Json::array();
  for (Label l = 1; l <= static_cast<Label>(config.size()); ++l) {
    const Circle& c = config.at(l);
    Json item;
    item["label"] = l;
    item["cx"] = to_string(c.cx());
    item["cy"] = to_string(c.cy());
    item["r"] = to_string(c.r());
    circles.push_back(std::move(item));
  }
  Json out;
  out["circles"] = std::move(circles);
  return out;
}

std::vector<RawCircle> raw_circles_from_json(const Json& j) {
  const Json& list = member(j, "circles");
  if (!list.is_array()) throw Error(ErrorCode::ParseError, "\"circles\" must be an array");
  const std::size_t n = list.size();
  std::vector<std::optional<RawCircle>> slots(n);
  for (const auto& item : list) {
    const Json& label = member(item, "label");
    if (!label.is_number_integer()) throw Error(ErrorCode::ParseError, "\"label\" must be an integer");
    const long l = label.get<long>();
    if (l < 1 || static_cast<std::size_t>(l) > n) {
      throw Error(ErrorCode::LabelError, "label " + std::to_string(l) + " outside 1.." + std::to_string(n));
    }
    auto& slot = slots[static_cast<std::size_t>(l - 1)];
    if (slot) throw Error(ErrorCode::LabelError, "duplicate label " + std::to_string(l));
    slot = RawCircle{rational_member(item, "cx"), rational_member(item, "cy"), rational_member(item, "r")};
  }
  std::vector<RawCircle> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

LabeledConfiguration config_from_json(const Json& j) { return make_configuration(raw_circles_from_json(j)); }

Json path_to_json(const MotionPath& p) {
  Json frames = Json::array();
  for (const auto& kf : p.keyframes()) {
    Json item;
    item["t"] = to_string(kf.t);
    item["config"] = config_to_json(kf.config);
    frames.push_back(std::move(item));
  }
  Json out;
  out["keyframes"] = std::move(frames);
  return out;
}

MotionPath path_from_json(const Json& j) {
  const Json& list = member(j, "keyframes");
  if (!list.is_array()) throw Error(ErrorCode::ParseError, "\"keyframes\" must be an array");
  std::vector<Keyframe> frames;
  for (const auto& item : list) {
    std::vector<Circle> circles;
    for (const auto& raw : raw_circles_from_json(member(item, "config"))) {
      if (sgn(raw.r) <= 0) throw Error(ErrorCode::InvalidPath, "keyframe has a non-positive radius");
      circles.emplace_back(raw.cx, raw.cy, raw.r);
    }
    frames.push_back({rational_member(item, "t"), LabeledConfiguration(std::move(circles))});
  }
  return MotionPath(std::move(frames));
}

Json element_to_json(const BautElement& e) {
  Json braids = Json::object();
  VertexPath path;
  std::function<void(const BautElement&)> walk = [&](const BautElement& node) {
    braids[format_vertex_path(path)] = node.braid().to_string();
    for (std::size_t i = 0; i < node.children().size(); ++i) {
      path.push_back(i);
      walk(node.children()[i]);
      path.pop_back();
    }
  };
  walk(e);
  Json out;
  out["tree"] = ordered_code(e.source());
  out["braids"] = std::move(braids);
  return out;
}

BautElement element_from_json(const Json& j) {
  const Json& tree = member(j, "tree");
  if (!tree.is_string()) throw Error(ErrorCode::ParseError, "\"tree\" must be an ordered tree code");
  const RootedTree shape = parse_ordered_code(tree.get<std::string>());
  std::map<VertexPath, std::string> words;
  if (j.contains("braids")) {
    const Json& braids = j.at("braids");
    if (!braids.is_object()) throw Error(ErrorCode::ParseError, "\"braids\" must be an object");
    for (const auto& [key, value] : braids.items()) {
      if (!value.is_string()) throw Error(ErrorCode::ParseError, "braid at \"" + key + "\" must be a string");
      VertexPath path = parse_vertex_path(key);
      shape.at(path);  // rejects paths outside the tree
      words[path] = value.get<std::string>();
    }
  }
  VertexPath path;
  std::function<BautElement(const RootedTree&)> build = [&](const RootedTree& node) {
    std::vector<BautElement> children;
    for (std::size_t i = 0; i < node.child_count(); ++i) {
      path.push_back(i);
      children.push_back(build(node.child(i)));
      path.pop_back();
    }
    auto it = words.find(path);
    BraidWord w = it == words.end() ? BraidWord(node.child_count(), {}) : parse_braid(node.child_count(), it->second);
    return BautElement(node, std::move(w), std::move(children));
  };
  return build(shape);
}

Json tree_to_json(const LabeledTree& tree) {
  Json children = Json::array();
  for (const auto& c : tree.children) children.push_back(tree_to_json(c));
  Json out;
  out["children"] = std::move(children);
  if (tree.label != kRoot) out["label"] = tree.label;
  return out;
}

LabeledTree tree_from_json(const Json& j) {
  std::function<LabeledTree(const Json&, bool)> build = [&](const Json& node, bool root) {
    LabeledTree out;
    if (!root) {
      const Json& label = member(node, "label");
      if (!label.is_number_integer()) throw Error(ErrorCode::ParseError, "\"label\" must be an integer");
      out.label = label.get<Label>();
    }
    if (node.contains("children")) {
      for (const auto& c : node.at("children")) out.children.push_back(build(c, false));
    }
    return out;
  };
  LabeledTree tree = build(j, true);
  check_labels(tree);
  return tree;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace circles
