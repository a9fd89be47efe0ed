#include "circles/baut.hpp"

#include "circles/error.hpp"

namespace circles {

namespace {

void require_strands(const BraidWord& w, std::size_t m) {
  if (w.strands() != m) {
    throw Error(ErrorCode::ShapeMismatch,
                "braid on " + std::to_string(w.strands()) + " strands at a vertex with " + std::to_string(m) + " children");
  }
}

}  // namespace

BautElement::BautElement(RootedTree source, BraidWord braid, std::vector<BautElement> children)
    : source_(std::move(source)), braid_(std::move(braid)), children_(std::move(children)) {
  const std::size_t m = source_.child_count();
  require_strands(braid_, m);
  if (children_.size() != m) throw Error(ErrorCode::ShapeMismatch, "child element count differs from child count");
  for (std::size_t i = 0; i < m; ++i) {
    if (children_[i].source() != source_.child(i)) {
      throw Error(ErrorCode::ShapeMismatch, "child element " + std::to_string(i) + " acts on the wrong subtree");
    }
  }
  const Permutation sigma = permutation_of(braid_);
  std::vector<RootedTree> landed(m);
  // No type check here: for loops the target equality forces the braid into
  // the block subgroup, and arrows may legitimately reorder types.
  for (std::size_t i = 0; i < m; ++i) landed[sigma(i)] = children_[i].target();
  target_ = RootedTree(std::move(landed));
}

const BautElement& BautElement::at(const VertexPath& path) const {
  const BautElement* node = this;
  for (std::size_t i : path) {
    if (i >= node->children_.size()) {
      throw Error(ErrorCode::InvalidArgument, "vertex path " + format_vertex_path(path) + " is outside the tree");
    }
    node = &node->children_[i];
  }
  return *node;
}

BautElement baut_identity(const RootedTree& tree) {
  std::vector<BautElement> children;
  children.reserve(tree.child_count());
  for (const auto& c : tree.children()) children.push_back(baut_identity(c));
  return BautElement(tree, BraidWord(tree.child_count(), {}), std::move(children));
}

BautElement baut_multiply(const BautElement& a, const BautElement& b) {
  if (a.target() != b.source()) {
    throw Error(ErrorCode::ShapeMismatch, "product of elements on " + ordered_code(a.target()) + " and " + ordered_code(b.source()));
  }
  const Permutation sigma = permutation_of(a.braid());
  std::vector<BautElement> children;
  children.reserve(a.children().size());
  for (std::size_t i = 0; i < a.children().size(); ++i) {
    children.push_back(baut_multiply(a.children()[i], b.children()[sigma(i)]));
  }
  return BautElement(a.source(), a.braid() * b.braid(), std::move(children));
}

BautElement baut_inverse(const BautElement& a) {
  const Permutation sigma = permutation_of(a.braid());
  const std::size_t m = a.children().size();
  std::vector<BautElement> children(m);
  for (std::size_t i = 0; i < m; ++i) children[sigma(i)] = baut_inverse(a.children()[i]);
  return BautElement(a.target(), a.braid().inverse(), std::move(children));
}

bool baut_equal(const BautElement& a, const BautElement& b) {
  if (a.source() != b.source()) {
    throw Error(ErrorCode::ShapeMismatch, "comparing elements on " + ordered_code(a.source()) + " and " + ordered_code(b.source()));
  }
  if (a.target() != b.target()) return false;
  if (permutation_of(a.braid()) != permutation_of(b.braid())) return false;
  if (!braids_equal(a.braid(), b.braid())) return false;
  for (std::size_t i = 0; i < a.children().size(); ++i) {
    if (!baut_equal(a.children()[i], b.children()[i])) return false;
  }
  return true;
}

BautElement baut_mirror(const BautElement& a) {
  std::vector<int> letters = a.braid().letters();
  for (int& l : letters) l = -l;
  std::vector<BautElement> children;
  children.reserve(a.children().size());
  for (const auto& c : a.children()) children.push_back(baut_mirror(c));
  return BautElement(a.source(), BraidWord(a.braid().strands(), std::move(letters)), std::move(children));
}

bool TreeAutomorphism::is_identity() const {
  if (!perm.is_identity()) return false;
  for (const auto& c : children) {
    if (!c.is_identity()) return false;
  }
  return true;
}

TreeAutomorphism identity_automorphism(const RootedTree& tree) {
  TreeAutomorphism out;
  out.perm = Permutation::identity(tree.child_count());
  for (const auto& c : tree.children()) out.children.push_back(identity_automorphism(c));
  return out;
}

TreeAutomorphism compose(const TreeAutomorphism& f, const TreeAutomorphism& g) {
  TreeAutomorphism out;
  out.perm = compose(f.perm, g.perm);
  for (std::size_t i = 0; i < f.children.size(); ++i) out.children.push_back(compose(f.children[i], g.children.at(f.perm(i))));
  return out;
}

TreeAutomorphism pi_to_aut(const BautElement& a) {
  TreeAutomorphism out;
  out.perm = permutation_of(a.braid());
  for (const auto& c : a.children()) out.children.push_back(pi_to_aut(c));
  return out;
}

bool is_pure_element(const BautElement& a) {
  if (!is_pure(a.braid())) return false;
  for (const auto& c : a.children()) {
    if (!is_pure_element(c)) return false;
  }
  return true;
}

namespace {

void collect_factors(const RootedTree& tree, std::vector<std::size_t>& out) {
  for (const auto& c : tree.children()) {
    out.push_back(c.child_count());
    collect_factors(c, out);
  }
}

std::string describe(const RootedTree& tree) {
  std::vector<std::string> factors;
  for (const auto& c : tree.children()) {
    std::string d = describe(c);
    if (d != "1") factors.push_back(d);
  }
  std::string root;
  const std::size_t m = tree.child_count();
  if (m >= 2) {
    TypePartition pi = type_partition(tree);
    root = "B_" + std::to_string(m);
    if (pi.blocks.size() > 1) root += "^{" + pi.to_string() + "}";
  }
  if (factors.empty()) return root.empty() ? "1" : root;
  std::string product;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) product += " × ";
    const bool compound = factors.size() > 1 && factors[i].find(' ') != std::string::npos;
    product += compound ? "(" + factors[i] + ")" : factors[i];
  }
  if (root.empty()) return product;
  const bool wrap = product.find(' ') != std::string::npos;
  return (wrap ? "(" + product + ")" : product) + " ⋊ " + root;
}

mpz_class factorial(std::size_t k) {
  mpz_class out = 1;
  for (std::size_t i = 2; i <= k; ++i) out *= static_cast<unsigned long>(i);
  return out;
}

}  // namespace

std::vector<std::size_t> pbaut_factors(const RootedTree& tree) {
  std::vector<std::size_t> out;
  collect_factors(tree, out);
  out.push_back(tree.child_count());
  return out;
}

std::vector<std::size_t> pbaut_factors_reduced(const RootedTree& tree) {
  std::vector<std::size_t> out;
  for (std::size_t d : pbaut_factors(tree)) {
    if (d >= 2) out.push_back(d);
  }
  return out;
}

mpz_class aut_order(const RootedTree& tree) {
  mpz_class out = 1;
  for (const auto& block : type_partition(tree).blocks) out *= factorial(block.size());
  for (const auto& c : tree.children()) out *= aut_order(c);
  return out;
}

std::string structure_description(const RootedTree& tree) { return describe(tree); }

BautElement star_embed(const BraidWord& w) {
  return BautElement(star_tree(w.strands()), w, std::vector<BautElement>(w.strands()));
}

BautElement reference_arrow(const RootedTree& from, const RootedTree& to) {
  if (from == to) return baut_identity(from);
  if (!trees_isomorphic(from, to)) throw Error(ErrorCode::NotIsomorphic, ordered_code(from) + " vs " + ordered_code(to));
  if (ordered_code(to) < ordered_code(from)) return baut_inverse(reference_arrow(to, from));
  const SlotMatching matching = match_isomorphic(from, to);
  std::vector<BautElement> children;
  for (std::size_t i = 0; i < from.child_count(); ++i) {
    children.push_back(reference_arrow(from.child(i), to.child(matching.image[i])));
  }
  return BautElement(from, permutation_braid(Permutation(matching.image)), std::move(children));
}

BautElement generator_element(const RootedTree& tree, const VertexPath& vertex, std::size_t slot) {
  const RootedTree& v = tree.at(vertex);
  const std::size_t m = v.child_count();
  if (slot < 1 || slot >= m) {
    throw Error(ErrorCode::InvalidArgument, "slot " + std::to_string(slot) + " out of range for " + std::to_string(m) + " children");
  }
  if (!trees_isomorphic(v.child(slot - 1), v.child(slot))) {
    throw Error(ErrorCode::TypeMismatch, "slots " + std::to_string(slot) + " and " + std::to_string(slot + 1) + " hold different types");
  }
  std::vector<BautElement> children;
  for (std::size_t i = 0; i < m; ++i) {
    if (i == slot - 1) children.push_back(reference_arrow(v.child(i), v.child(i + 1)));
    else if (i == slot) children.push_back(reference_arrow(v.child(i), v.child(i - 1)));
    else children.push_back(baut_identity(v.child(i)));
  }
  BautElement element(v, BraidWord(m, {static_cast<int>(slot)}), std::move(children));
  // Wrap in identities along the path back to the root.
  for (std::size_t depth = vertex.size(); depth-- > 0;) {
    VertexPath parent_path(vertex.begin(), vertex.begin() + static_cast<long>(depth));
    const RootedTree& parent = tree.at(parent_path);
    std::vector<BautElement> wrapped;
    for (std::size_t i = 0; i < parent.child_count(); ++i) {
      wrapped.push_back(i == vertex[depth] ? element : baut_identity(parent.child(i)));
    }
    element = BautElement(parent, BraidWord(parent.child_count(), {}), std::move(wrapped));
  }
  return element;
}

}  // namespace circles
