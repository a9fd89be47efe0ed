#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>

#include "circles/baut.hpp"
#include "circles/braid.hpp"
#include "circles/canonical.hpp"
#include "circles/error.hpp"
#include "circles/forest.hpp"
#include "circles/io.hpp"
#include "circles/motion.hpp"
#include "circles/planner.hpp"
#include "circles/render.hpp"
#include "circles/sample.hpp"

namespace circles::cli {

namespace {

// Labeled tree text "(4(1,3),2)" or a bare ordered code "((()())())".
RootedTree parse_shape(const std::string& text) {
  if (std::any_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    return shape_of(parse_tree(text));
  }
  return parse_ordered_code(text);
}

std::string join(const std::vector<std::size_t>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out + "]";
}

bool is_path(const Json& j) { return j.is_object() && j.contains("keyframes"); }

struct Options {
  std::string file;
  std::string second_file;
  std::string text;
  std::string output;
  std::string word1;
  std::string word2;
  std::size_t strands = 0;
  std::size_t size = 6;
  std::size_t length = 8;
  unsigned long long seed = 1;
  bool labeled = false;
  bool unlabeled = false;
  bool labels = false;
  bool all = false;
};

int cmd_validate(const Options& o, std::ostream& out) {
  const Json j = read_json_file(o.file);
  if (is_path(j)) {
    const MotionPath p = path_from_json(j);
    if (auto v = validate_path(p)) {
      out << "invalid path: " << v->describe() << "\n";
      return 1;
    }
    try {
      const auto events = crossing_events(p);
      out << "valid path: " << p.size() << " keyframes, " << events.size() << " crossing events\n";
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NonGeneric) throw;
      out << "valid path, not generic: " << e.what() << "\n";
    }
    return 0;
  }
  const auto violations = validate_circles(raw_circles_from_json(j));
  if (violations.empty()) {
    out << "valid\n";
    return 0;
  }
  for (const auto& v : violations) out << "violation: " << v.describe() << "\n";
  return 1;
}

int cmd_tree(const Options& o, std::ostream& out) {
  const LabeledTree t = tree_of_configuration(config_from_json(read_json_file(o.file)));
  out << format_tree(t) << "\n" << dump(tree_to_json(t));
  return 0;
}

int cmd_components(const Options& o, std::ostream& out) {
  const LabeledConfiguration a = config_from_json(read_json_file(o.file));
  const LabeledConfiguration b = config_from_json(read_json_file(o.second_file));
  bool same = a.size() == b.size();
  if (same) {
    const LabeledTree ta = tree_of_configuration(a);
    const LabeledTree tb = tree_of_configuration(b);
    same = o.labeled ? labeled_trees_isomorphic(ta, tb) : trees_isomorphic(shape_of(ta), shape_of(tb));
  }
  out << (same ? "same component" : "different components") << "\n";
  return same ? 0 : 1;
}

int cmd_braid(const std::string& mode, const Options& o, std::ostream& out) {
  const BraidWord w1 = parse_braid(o.strands, o.word1);
  if (mode == "nf") {
    const GarsideNormalForm nf = normal_form(w1);
    out << nf.to_string() << "\n" << to_word(nf).to_string() << "\n";
    return 0;
  }
  const bool equal = braids_equal(w1, parse_braid(o.strands, o.word2));
  out << (equal ? "equal" : "not equal") << "\n";
  return equal ? 0 : 1;
}

int cmd_monodromy(const Options& o, std::ostream& out) {
  const MotionPath p = path_from_json(read_json_file(o.file));
  if (auto v = validate_path(p)) throw Error(ErrorCode::InvalidPath, v->describe());
  out << dump(element_to_json(monodromy(p)));
  return 0;
}

int cmd_plan(const Options& o, std::ostream& out) {
  const LabeledConfiguration a = config_from_json(read_json_file(o.file));
  MotionPath p;
  if (o.second_file.empty()) {
    p = plan_to_canonical(a);
  } else {
    const LabeledConfiguration b = config_from_json(read_json_file(o.second_file));
    p = o.unlabeled ? plan_between_unlabeled(a, b) : plan_between(a, b);
  }
  out << dump(path_to_json(p));
  return 0;
}

int cmd_render(const Options& o, std::ostream& out) {
  const Json j = read_json_file(o.file);
  const std::string svg = is_path(j) ? render_svg(path_from_json(j), o.labels) : render_svg(config_from_json(j), o.labels);
  std::ofstream file(o.output);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write " + o.output);
  file << svg;
  out << "wrote " << o.output << "\n";
  return 0;
}

int cmd_sample(const std::string& kind, const Options& o, std::ostream& out) {
  Rng rng(o.seed);
  if (kind == "tree") {
    out << format_tree(random_labeled_tree(o.size, rng)) << "\n";
  } else if (kind == "config") {
    out << dump(config_to_json(random_configuration(random_labeled_tree(o.size, rng), rng)));
  } else {
    out << random_braid(o.strands, o.length, rng).to_string() << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Configurations of circles, their trees, braided automorphism groups and motions", "circles"};
  app.require_subcommand(1);
  Options o;
  std::string group_mode, braid_mode, sample_kind;

  auto* validate = app.add_subcommand("validate", "check a configuration or path file");
  validate->add_option("file", o.file, "configuration or path JSON")->required();

  auto* tree = app.add_subcommand("tree", "print the labeled tree of a configuration");
  tree->add_option("file", o.file, "configuration JSON")->required();

  auto* canonical = app.add_subcommand("canonical", "print the canonical configuration of a labeled tree");
  canonical->add_option("tree", o.text, "labeled tree text, e.g. \"(4(1,3),2)\"")->required();

  auto* components = app.add_subcommand("components", "decide whether two configurations share a component");
  components->add_option("a", o.file)->required();
  components->add_option("b", o.second_file)->required();
  components->add_flag("--labeled", o.labeled, "compare as labeled configurations");

  auto* group = app.add_subcommand("group", "report on the braided automorphism group of a tree");
  group->add_option("mode", group_mode)->required()->check(CLI::IsMember({"order", "factors", "structure"}));
  group->add_option("tree", o.text, "labeled tree text or ordered code")->required();
  group->add_flag("--all", o.all, "factors: keep trivial factors");

  auto* braid = app.add_subcommand("braid", "braid word problem");
  braid->add_option("mode", braid_mode)->required()->check(CLI::IsMember({"eq", "nf"}));
  braid->add_option("strands", o.strands)->required();
  braid->add_option("w1", o.word1)->required();
  braid->add_option("w2", o.word2);

  auto* mono = app.add_subcommand("monodromy", "element carried by a loop");
  mono->add_option("file", o.file, "path JSON")->required();

  auto* plan = app.add_subcommand("plan", "path to the canonical configuration, or between two configurations");
  plan->add_option("a", o.file)->required();
  plan->add_option("b", o.second_file);
  plan->add_flag("--unlabeled", o.unlabeled, "only match the second configuration as a set of circles");

  auto* render = app.add_subcommand("render", "draw a configuration or path as SVG");
  render->add_option("file", o.file)->required();
  render->add_option("-o,--output", o.output)->required();
  render->add_flag("--labels", o.labels, "print circle labels");

  auto* sample = app.add_subcommand("sample", "random test data");
  sample->add_option("kind", sample_kind)->required()->check(CLI::IsMember({"tree", "config", "braid"}));
  sample->add_option("--seed", o.seed);
  sample->add_option("--size", o.size, "non-root vertices");
  sample->add_option("--strands", o.strands);
  sample->add_option("--length", o.length);

  std::vector<const char*> argv{"circles"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) return cmd_validate(o, out);
    if (*tree) return cmd_tree(o, out);
    if (*canonical) {
      out << dump(config_to_json(kappa_of_tree(parse_tree(o.text))));
      return 0;
    }
    if (*components) return cmd_components(o, out);
    if (*group) {
      const RootedTree t = parse_shape(o.text);
      if (group_mode == "order") out << aut_order(t).get_str() << "\n";
      else if (group_mode == "factors") out << join(o.all ? pbaut_factors(t) : pbaut_factors_reduced(t)) << "\n";
      else out << structure_description(t) << "\n";
      return 0;
    }
    if (*braid) {
      if (braid_mode == "eq" && o.word2.empty() && braid->count("w2") == 0) {
        throw Error(ErrorCode::InvalidArgument, "braid eq needs two words");
      }
      return cmd_braid(braid_mode, o, out);
    }
    if (*mono) return cmd_monodromy(o, out);
    if (*plan) return cmd_plan(o, out);
    if (*render) return cmd_render(o, out);
    if (*sample) return cmd_sample(sample_kind, o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace circles::cli
