#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "uniphy/decide.hpp"
#include "uniphy/error.hpp"

namespace {

using namespace uniphy;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

VertexSet parse_subset(const CharacterSet& cs, const std::string& arg) {
  VertexSet subset;
  std::size_t i = 0;
  while (i <= arg.size()) {
    std::size_t j = arg.find(',', i);
    if (j == std::string::npos) j = arg.size();
    std::string name = arg.substr(i, j - i);
    if (!name.empty()) {
      auto idx = cs.character_index(name);
      if (!idx) fail(ErrorKind::UnknownCharacter, "unknown character '" + name + "'");
      subset.insert(*idx);
    }
    if (j == arg.size()) break;
    i = j + 1;
  }
  return subset;
}

int run(int argc, char** argv) {
  CLI::App app{"decides whether partial characters define a unique perfect phylogeny"};
  app.require_subcommand(1);

  struct Common {
    std::string input;
    int cap = 20;
  };
  auto add_common = [](CLI::App* cmd, Common& c, bool with_cap = true) {
    cmd->add_option("input", c.input, "character file, or - for stdin")->required();
    if (with_cap)
      cmd->add_option("--cap", c.cap, "bound on missing edges during triangulation enumeration");
  };

  Common compat_opts, defines_opts, maxc_opts, maxdef_opts, pig_opts, tree_opts, oracle_opts;
  std::string subset_arg, pig_format = "dot", tree_format = "newick";
  int node_cap = 0;

  CLI::App* compat = app.add_subcommand("compat", "is the character set compatible");
  add_common(compat, compat_opts);

  CLI::App* defines = app.add_subcommand("defines", "does it define a unique perfect phylogeny");
  add_common(defines, defines_opts);

  CLI::App* maxc = app.add_subcommand("max-compat", "maximum compatible character subsets");
  add_common(maxc, maxc_opts);

  CLI::App* maxdef = app.add_subcommand("maximal-defining", "maximal defining subsets");
  add_common(maxdef, maxdef_opts);
  maxdef->add_option("--subset", subset_arg, "comma-separated character names to test");

  CLI::App* pig = app.add_subcommand("export-pig", "partition intersection graph");
  add_common(pig, pig_opts, false);
  pig->add_option("--format", pig_format, "dot or text")
      ->check(CLI::IsMember({"dot", "text"}));

  CLI::App* tree = app.add_subcommand("export-tree", "decided tree, if any");
  add_common(tree, tree_opts);
  tree->add_option("--format", tree_format, "newick or dot")
      ->check(CLI::IsMember({"newick", "dot"}));

  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive search over X-trees");
  add_common(oracle, oracle_opts, false);
  oracle->add_option("--node-cap", node_cap, "bound on tree nodes (0: derived from taxa)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (compat->parsed()) {
    CharacterSet cs = parse_character_set(read_input(compat_opts.input));
    CompatVerdict v = is_compatible(cs, compat_opts.cap);
    std::cout << report(v, cs);
    return v.compatible ? 0 : 1;
  }
  if (defines->parsed()) {
    CharacterSet cs = parse_character_set(read_input(defines_opts.input));
    DefinesVerdict v = defines_unique(cs, defines_opts.cap);
    std::cout << report(v, cs);
    return v.defines ? 0 : 1;
  }
  if (maxc->parsed()) {
    CharacterSet cs = parse_character_set(read_input(maxc_opts.input));
    MaxCompatResult v = max_compatible_subsets(cs, maxc_opts.cap);
    std::cout << report(v, cs);
    return v.size >= 1 ? 0 : 1;
  }
  if (maxdef->parsed()) {
    CharacterSet cs = parse_character_set(read_input(maxdef_opts.input));
    if (!subset_arg.empty()) {
      SubsetVerdict v = is_maximal_defining_subset(cs, parse_subset(cs, subset_arg), maxdef_opts.cap);
      std::cout << report(v, cs);
      return v.maximal_defining ? 0 : 1;
    }
    std::vector<SubsetVerdict> vs = find_maximal_defining_subsets(cs, maxdef_opts.cap);
    std::cout << report(vs, cs);
    return vs.empty() ? 1 : 0;
  }
  if (pig->parsed()) {
    CharacterSet cs = parse_character_set(read_input(pig_opts.input));
    LabeledGraph g = build_pig(cs);
    if (pig_format == "dot") {
      std::cout << to_dot(g, cs);
    } else {
      for (auto [u, v] : g.edges())
        std::cout << "(" << pig_vertex_label(cs, u) << ")-(" << pig_vertex_label(cs, v) << ")\n";
    }
    return 0;
  }
  if (tree->parsed()) {
    CharacterSet cs = parse_character_set(read_input(tree_opts.input));
    DefinesVerdict dv = defines_unique(cs, tree_opts.cap);
    std::optional<XTree> xt = dv.tree;
    if (!dv.defines) {
      CompatVerdict cv = is_compatible(cs, tree_opts.cap);
      xt = cv.tree;
    }
    if (!xt) {
      std::cerr << "characters are incompatible; no tree to export\n";
      return 1;
    }
    if (tree_format == "newick")
      std::cout << to_newick(*xt, cs.taxa()) << "\n";
    else
      std::cout << to_dot(*xt, cs.taxa());
    return 0;
  }
  CharacterSet cs = parse_character_set(read_input(oracle_opts.input));
  OracleResult v = oracle_defines(cs, node_cap);
  std::cout << report(v, cs);
  return v.defines() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const uniphy::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == uniphy::ErrorKind::TooLarge ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
