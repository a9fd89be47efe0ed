#include "circles/forest.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

#include "circles/error.hpp"

namespace circles {

std::string format_vertex_path(const VertexPath& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(path[i]);
  }
  return out;
}

VertexPath parse_vertex_path(std::string_view text) {
  VertexPath path;
  if (text.empty()) return path;
  std::size_t start = 0;
  while (true) {
    auto dot = text.find('.', start);
    auto part = text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
    if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw Error(ErrorCode::ParseError, "malformed vertex path '" + std::string(text) + "'");
    }
    path.push_back(std::stoul(std::string(part)));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return path;
}

std::size_t RootedTree::descendant_count() const {
  std::size_t n = children_.size();
  for (const auto& c : children_) n += c.descendant_count();
  return n;
}

const RootedTree& RootedTree::at(const VertexPath& path) const {
  const RootedTree* node = this;
  for (std::size_t i : path) {
    if (i >= node->children_.size()) throw Error(ErrorCode::InvalidArgument, "vertex path " + format_vertex_path(path) + " is outside the tree");
    node = &node->children_[i];
  }
  return *node;
}

RootedTree star_tree(std::size_t leaves) { return RootedTree(std::vector<RootedTree>(leaves)); }

RootedTree chain_tree(std::size_t length) {
  RootedTree t;
  for (std::size_t i = 0; i < length; ++i) t = RootedTree({t});
  return t;
}

RootedTree shape_of(const LabeledTree& tree) {
  std::vector<RootedTree> children;
  children.reserve(tree.children.size());
  for (const auto& c : tree.children) children.push_back(shape_of(c));
  return RootedTree(std::move(children));
}

std::size_t label_count(const LabeledTree& tree) {
  std::size_t n = tree.children.size();
  for (const auto& c : tree.children) n += label_count(c);
  return n;
}

LabeledTree preorder_labeling(const RootedTree& tree) {
  Label next = 1;
  std::function<LabeledTree(const RootedTree&, Label)> build = [&](const RootedTree& node, Label label) {
    LabeledTree out;
    out.label = label;
    for (const auto& c : node.children()) {
      Label l = next++;
      out.children.push_back(build(c, l));
    }
    return out;
  };
  return build(tree, kRoot);
}

std::vector<Label> parent_map(const LabeledTree& tree) {
  std::vector<Label> parents(label_count(tree) + 1, kRoot);
  std::function<void(const LabeledTree&)> walk = [&](const LabeledTree& node) {
    for (const auto& c : node.children) {
      parents.at(static_cast<std::size_t>(c.label)) = node.label;
      walk(c);
    }
  };
  walk(tree);
  return parents;
}

std::vector<VertexPath> label_paths(const LabeledTree& tree) {
  std::vector<VertexPath> paths(label_count(tree) + 1);
  VertexPath current;
  std::function<void(const LabeledTree&)> walk = [&](const LabeledTree& node) {
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      current.push_back(i);
      paths.at(static_cast<std::size_t>(node.children[i].label)) = current;
      walk(node.children[i]);
      current.pop_back();
    }
  };
  walk(tree);
  return paths;
}

const LabeledTree& labeled_at(const LabeledTree& tree, const VertexPath& path) {
  const LabeledTree* node = &tree;
  for (std::size_t i : path) {
    if (i >= node->children.size()) throw Error(ErrorCode::InvalidArgument, "vertex path " + format_vertex_path(path) + " is outside the tree");
    node = &node->children[i];
  }
  return *node;
}

void check_labels(const LabeledTree& tree) {
  const std::size_t n = label_count(tree);
  std::vector<bool> seen(n + 1, false);
  std::function<void(const LabeledTree&)> walk = [&](const LabeledTree& node) {
    for (const auto& c : node.children) {
      if (c.label < 1 || static_cast<std::size_t>(c.label) > n) {
        throw Error(ErrorCode::LabelError, "label " + std::to_string(c.label) + " outside 1.." + std::to_string(n));
      }
      if (seen[static_cast<std::size_t>(c.label)]) throw Error(ErrorCode::LabelError, "duplicate label " + std::to_string(c.label));
      seen[static_cast<std::size_t>(c.label)] = true;
      walk(c);
    }
  };
  walk(tree);
}

LabeledTree tree_of_configuration(const LabeledConfiguration& config) {
  const Label n = static_cast<Label>(config.size());
  std::vector<std::vector<Label>> kids(static_cast<std::size_t>(n) + 1);
  for (Label i = 1; i <= n; ++i) kids[static_cast<std::size_t>(immediate_parent(config, i))].push_back(i);
  for (auto& list : kids) {
    std::sort(list.begin(), list.end(), [&](Label a, Label b) {
      const Circle& ca = config.at(a);
      const Circle& cb = config.at(b);
      if (ca.cx() != cb.cx()) return ca.cx() < cb.cx();
      return ca.cy() < cb.cy();
    });
    for (std::size_t k = 1; k < list.size(); ++k) {
      const Circle& a = config.at(list[k - 1]);
      const Circle& b = config.at(list[k]);
      if (a.cx() == b.cx() && a.cy() == b.cy()) {
        throw Error(ErrorCode::InvalidArgument, "sibling circles share a center; configuration is not valid");
      }
    }
  }
  std::function<LabeledTree(Label)> build = [&](Label label) {
    LabeledTree node;
    node.label = label;
    for (Label c : kids[static_cast<std::size_t>(label)]) node.children.push_back(build(c));
    return node;
  };
  return build(kRoot);
}

std::string ordered_code(const RootedTree& tree) {
  std::string out = "(";
  for (const auto& c : tree.children()) out += ordered_code(c);
  out += ')';
  return out;
}

RootedTree parse_ordered_code(std::string_view code) {
  std::size_t pos = 0;
  std::function<RootedTree()> parse = [&]() {
    if (pos >= code.size() || code[pos] != '(') {
      throw Error(ErrorCode::ParseError, "expected '(' at position " + std::to_string(pos));
    }
    ++pos;
    std::vector<RootedTree> children;
    while (pos < code.size() && code[pos] == '(') children.push_back(parse());
    if (pos >= code.size() || code[pos] != ')') {
      throw Error(ErrorCode::ParseError, "expected ')' at position " + std::to_string(pos));
    }
    ++pos;
    return RootedTree(std::move(children));
  };
  RootedTree t = parse();
  if (pos != code.size()) throw Error(ErrorCode::ParseError, "trailing input at position " + std::to_string(pos));
  return t;
}

std::string unordered_canonical_code(const RootedTree& tree) {
  std::vector<std::string> codes;
  codes.reserve(tree.child_count());
  for (const auto& c : tree.children()) codes.push_back(unordered_canonical_code(c));
  std::sort(codes.begin(), codes.end());
  std::string out = "(";
  for (const auto& c : codes) out += c;
  out += ')';
  return out;
}

bool trees_isomorphic(const RootedTree& t, const RootedTree& u) {
  return unordered_canonical_code(t) == unordered_canonical_code(u);
}

bool labeled_trees_isomorphic(const LabeledTree& t, const LabeledTree& u) {
  const std::size_t n = label_count(t);
  if (n != label_count(u)) {
    throw Error(ErrorCode::SizeMismatch, std::to_string(n) + " vs " + std::to_string(label_count(u)) + " labels");
  }
  // Equal parent maps are equivalent to equal child-label sets at every vertex.
  return parent_map(t) == parent_map(u);
}

RootedTree canonical_ordering(const RootedTree& tree) {
  std::vector<std::pair<std::string, RootedTree>> keyed;
  for (const auto& c : tree.children()) {
    RootedTree canon = canonical_ordering(c);
    keyed.emplace_back(ordered_code(canon), std::move(canon));
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<RootedTree> children;
  for (auto& [code, c] : keyed) children.push_back(std::move(c));
  return RootedTree(std::move(children));
}

SlotMatching match_isomorphic(const RootedTree& from, const RootedTree& to) {
  if (from.child_count() != to.child_count()) throw Error(ErrorCode::NotIsomorphic, "child counts differ");
  const std::size_t m = from.child_count();
  std::vector<std::string> from_codes(m), to_codes(m);
  for (std::size_t i = 0; i < m; ++i) {
    from_codes[i] = unordered_canonical_code(from.child(i));
    to_codes[i] = unordered_canonical_code(to.child(i));
  }
  SlotMatching out;
  out.image.assign(m, 0);
  std::vector<bool> used(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    bool found = false;
    for (std::size_t j = 0; j < m; ++j) {
      if (!used[j] && to_codes[j] == from_codes[i]) {
        used[j] = true;
        out.image[i] = j;
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorCode::NotIsomorphic, "no matching subtree for slot " + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < m; ++i) out.children.push_back(match_isomorphic(from.child(i), to.child(out.image[i])));
  return out;
}

std::size_t TypePartition::size() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  return n;
}

std::size_t TypePartition::block_of(std::size_t slot) const {
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (std::find(blocks[b].begin(), blocks[b].end(), slot) != blocks[b].end()) return b;
  }
  throw Error(ErrorCode::PartitionMismatch, "slot " + std::to_string(slot) + " is in no block");
}

std::string TypePartition::to_string() const {
  std::string out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) out += '|';
    out += '{';
    for (std::size_t k = 0; k < blocks[b].size(); ++k) {
      if (k) out += ',';
      out += std::to_string(blocks[b][k]);
    }
    out += '}';
  }
  return out;
}

TypePartition type_partition(const RootedTree& tree, const VertexPath& vertex) {
  const RootedTree& v = tree.at(vertex);
  TypePartition out;
  std::vector<std::string> block_codes;
  for (std::size_t i = 0; i < v.child_count(); ++i) {
    std::string code = unordered_canonical_code(v.child(i));
    auto it = std::find(block_codes.begin(), block_codes.end(), code);
    if (it == block_codes.end()) {
      block_codes.push_back(code);
      out.blocks.push_back({i + 1});
    } else {
      out.blocks[static_cast<std::size_t>(it - block_codes.begin())].push_back(i + 1);
    }
  }
  return out;
}

TypePartition trivial_partition(std::size_t m) {
  TypePartition out;
  if (m == 0) return out;
  out.blocks.emplace_back();
  for (std::size_t i = 1; i <= m; ++i) out.blocks.back().push_back(i);
  return out;
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  LabeledTree parse() {
    LabeledTree root;
    root.label = kRoot;
    root.children = parse_items();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    check_labels(root);
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at position " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::vector<LabeledTree> parse_items() {
    expect('(');
    std::vector<LabeledTree> items;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ')') {
      ++pos_;
      return items;
    }
    while (true) {
      items.push_back(parse_node());
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      expect(')');
      return items;
    }
  }

  LabeledTree parse_node() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a label");
    if (pos_ - start > 9) fail("label too large");
    LabeledTree node;
    node.label = std::stoi(std::string(text_.substr(start, pos_ - start)));
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '(') node.children = parse_items();
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void format_items(const std::vector<LabeledTree>& items, std::string& out) {
  out += '(';
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(items[i].label);
    if (!items[i].children.empty()) format_items(items[i].children, out);
  }
  out += ')';
}

}  // namespace

LabeledTree parse_tree(std::string_view text) { return TreeParser(text).parse(); }

std::string format_tree(const LabeledTree& tree) {
  std::string out;
  format_items(tree.children, out);
  return out;
}

}  // namespace circles
