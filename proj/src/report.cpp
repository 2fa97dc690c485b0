#include <string>

#include "uniphy/decide.hpp"

namespace uniphy {

std::string to_string(DecideFailure f) {
  switch (f) {
    case DecideFailure::NoDisplayingTriangulation: return "no-displaying-triangulation";
    case DecideFailure::MultipleDisplayingTriangulations:
      return "multiple-displaying-triangulations";
    case DecideFailure::ExtraDisplayedCharacters: return "extra-displayed-characters";
    case DecideFailure::MultipleCliqueTrees: return "multiple-clique-trees";
    case DecideFailure::WrongLeafCount: return "wrong-leaf-count";
    case DecideFailure::NotTernary: return "not-ternary";
    case DecideFailure::ContractableEdge: return "contractable-edge";
  }
  return "unknown";
}

namespace {

std::string fill_line(const Triangulation& t, const CharacterSet& cs) {
  std::string out;
  for (auto [u, v] : t.fill)
    out += " (" + pig_vertex_label(cs, u) + ")-(" + pig_vertex_label(cs, v) + ")";
  return out;
}

std::string character_names(VertexSet chars, const CharacterSet& cs) {
  std::string out;
  for (int c : chars) out += " " + cs.character(c).name;
  return out;
}

std::string clique_label(const CliqueTreeRep& rep, int node, const CharacterSet& cs) {
  std::string out = "{";
  bool first = true;
  for (int v : rep.cliques[node]) {
    if (!first) out += ", ";
    out += pig_vertex_label(cs, v);
    first = false;
  }
  return out + "}";
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string defines_body(const DefinesVerdict& v, const CharacterSet& cs,
                         const std::string& prefix) {
  std::string out;
  if (v.tree) out += prefix + "tree: " + to_newick(*v.tree, cs.taxa()) + "\n";
  if (v.defines && v.triangulation)
    out += prefix + "triangulation.fill:" + fill_line(*v.triangulation, cs) + "\n";
  if (!v.failure) return out;
  out += prefix + "failure: " + to_string(*v.failure) + "\n";
  switch (*v.failure) {
    case DecideFailure::NoDisplayingTriangulation:
      if (!v.conflicting.empty()) {
        out += prefix + "example.fill:" + fill_line(v.conflicting[0], cs) + "\n";
        out += prefix + "example.broken:" +
               character_names(display_report(v.conflicting[0]).broken, cs) + "\n";
      }
      break;
    case DecideFailure::MultipleDisplayingTriangulations:
      for (std::size_t i = 0; i < v.conflicting.size(); ++i)
        out += prefix + "conflict." + std::to_string(i + 1) + ".fill:" +
               fill_line(v.conflicting[i], cs) + "\n";
      break;
    case DecideFailure::ExtraDisplayedCharacters:
      if (!v.conflicting.empty())
        out += prefix + "displayed:" +
               character_names(display_report(v.conflicting[0]).displayed, cs) + "\n";
      break;
    case DecideFailure::MultipleCliqueTrees:
      out += prefix + "clique-trees: " + std::to_string(v.conflicting_trees.size()) + "+\n";
      break;
    case DecideFailure::WrongLeafCount:
      if (v.leafage)
        out += prefix + "leaf-count: " + std::to_string(v.leafage->leafage) +
               " expected: " + std::to_string(cs.taxa().size()) + "\n";
      break;
    case DecideFailure::NotTernary:
      break;
    case DecideFailure::ContractableEdge:
      if (v.contractable_edge && v.clique_tree)
        out += prefix + "edge: " + clique_label(*v.clique_tree, v.contractable_edge->first, cs) +
               "-" + clique_label(*v.clique_tree, v.contractable_edge->second, cs) + "\n";
      break;
  }
  return out;
}

}  // namespace

std::string report(const CompatVerdict& v, const CharacterSet& cs) {
  std::string out = "compatible: " + bool_str(v.compatible) + "\n";
  if (v.compatible) {
    if (v.witness) {
      out += "witness.fill:" + fill_line(*v.witness, cs) + "\n";
      out += "witness.displayed:" + character_names(display_report(*v.witness).displayed, cs) + "\n";
    }
    if (v.tree) out += "tree: " + to_newick(*v.tree, cs.taxa()) + "\n";
  } else if (v.obstruction) {
    out += "obstruction.fill:" + fill_line(*v.obstruction, cs) + "\n";
    out += "obstruction.broken:" + character_names(display_report(*v.obstruction).broken, cs) + "\n";
  }
  return out;
}

std::string report(const DefinesVerdict& v, const CharacterSet& cs) {
  return "defines: " + bool_str(v.defines) + "\n" + defines_body(v, cs, "");
}

std::string report(const MaxCompatResult& v, const CharacterSet& cs) {
  std::string out = "max-size: " + std::to_string(v.size) + "\n";
  out += "subsets: " + std::to_string(v.subsets.size()) + "\n";
  for (std::size_t i = 0; i < v.subsets.size(); ++i) {
    std::string key = "subset." + std::to_string(i + 1);
    out += key + ":" + character_names(v.subsets[i], cs) + "\n";
    out += key + ".fill:" + fill_line(v.witnesses[i], cs) + "\n";
  }
  return out;
}

std::string report(const SubsetVerdict& v, const CharacterSet& cs) {
  std::string out = "subset:" + character_names(v.subset, cs) + "\n";
  out += "maximal-defining: " + bool_str(v.maximal_defining) + "\n";
  out += defines_body(v.detail, cs, "");
  return out;
}

std::string report(const std::vector<SubsetVerdict>& vs, const CharacterSet& cs) {
  std::string out = "count: " + std::to_string(vs.size()) + "\n";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::string key = "subset." + std::to_string(i + 1);
    out += key + ":" + character_names(vs[i].subset, cs) + "\n";
    if (vs[i].detail.tree)
      out += key + ".tree: " + to_newick(*vs[i].detail.tree, cs.taxa()) + "\n";
  }
  return out;
}

std::string report(const OracleResult& v, const CharacterSet& cs) {
  std::string out = "tree-count: " + std::to_string(v.tree_count) + "\n";
  out += "compatible: " + bool_str(v.compatible()) + "\n";
  out += "defines: " + bool_str(v.defines()) + "\n";
  for (std::size_t i = 0; i < v.trees.size(); ++i)
    out += "tree." + std::to_string(i + 1) + ": " + to_newick(v.trees[i], cs.taxa()) + "\n";
  return out;
}

}  // namespace uniphy
