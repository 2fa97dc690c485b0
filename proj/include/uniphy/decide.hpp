#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uniphy/phylo.hpp"

namespace uniphy {

struct CompatVerdict {
  bool compatible = false;
  std::optional<Triangulation> witness;  // a proper minimal triangulation
  std::optional<XTree> tree;             // an X-tree displaying all characters
  std::optional<Triangulation> obstruction;  // a minimal triangulation, breaks something
};

enum class DecideFailure {
  NoDisplayingTriangulation,
  MultipleDisplayingTriangulations,
  ExtraDisplayedCharacters,
  MultipleCliqueTrees,
  WrongLeafCount,
  NotTernary,
  ContractableEdge,
};

std::string to_string(DecideFailure f);

// Outcome of the three-condition test: a unique minimal triangulation with
// the requested displayed set, whose graph has a unique clique tree that is
// ternary with leaf count |X|, all of whose edges are incontractable.
// Exactly one failure is reported, with a counterexample object.
struct DefinesVerdict {
  bool defines = false;
  std::optional<XTree> tree;
  std::optional<Triangulation> triangulation;  // the unique qualifying one
  std::optional<CliqueTreeRep> clique_tree;
  std::optional<DecideFailure> failure;
  std::vector<Triangulation> conflicting;        // up to two triangulations
  std::vector<CliqueTreeRep> conflicting_trees;  // two clique trees
  std::optional<std::pair<int, int>> contractable_edge;  // clique tree node ids
  std::optional<LeafageReport> leafage;
};

struct SubsetVerdict {
  VertexSet subset;  // character indices
  bool maximal_defining = false;
  DefinesVerdict detail;
};

struct MaxCompatResult {
  int size = 0;
  std::vector<VertexSet> subsets;  // distinct displayed sets of maximum size
  std::vector<Triangulation> witnesses;  // parallel to subsets
};

// Compatibility via existence of a proper minimal triangulation of the
// partition intersection graph. cap bounds triangulation enumeration (see
// enumerate_minimal_triangulations).
CompatVerdict is_compatible(const CharacterSet& cs, int cap = 20);

// Whether cs defines a unique perfect phylogeny; on success `tree` is the
// witness (the induced X-tree).
DefinesVerdict defines_unique(const CharacterSet& cs, int cap = 20);

// Maximum-size displayed character sets over all minimal triangulations.
MaxCompatResult max_compatible_subsets(const CharacterSet& cs, int cap = 20);

// Whether `subset` defines a unique perfect phylogeny and no compatible
// set lies strictly between it and the full character set.
SubsetVerdict is_maximal_defining_subset(const CharacterSet& cs, VertexSet subset, int cap = 20);

// All maximal defining subsets, in ascending subset order.
std::vector<SubsetVerdict> find_maximal_defining_subsets(const CharacterSet& cs, int cap = 20);

// Exhaustive table of the X-trees on the taxa of cs (up to label-preserving
// isomorphism) with at most node_cap nodes, each with its displayed
// character set. node_cap 0 means 2|X| - 2 (clamped to 1), which already
// carries every X-tree: more nodes force an unlabeled node of degree <= 2.
struct XTreeUniverse {
  std::vector<XTree> trees;
  std::vector<VertexSet> displayed;  // parallel: displayed character indices

  long long count_displaying(VertexSet chars) const;
  std::vector<XTree> first_displaying(VertexSet chars, std::size_t limit) const;
};
XTreeUniverse enumerate_xtree_universe(const CharacterSet& cs, int node_cap = 0);

struct OracleResult {
  long long tree_count = 0;
  std::vector<XTree> trees;  // at most two witnesses

  bool compatible() const { return tree_count >= 1; }
  bool defines() const { return tree_count == 1; }
};

// Independent decision by exhaustive search: the number of X-trees (up to
// label-preserving isomorphism) displaying every character. Small taxon
// sets only; throws TooLarge above 6 taxa or node_cap 12.
OracleResult oracle_defines(const CharacterSet& cs, int node_cap = 0);

// Line-oriented reports, stable key order.
std::string report(const CompatVerdict& v, const CharacterSet& cs);
std::string report(const DefinesVerdict& v, const CharacterSet& cs);
std::string report(const MaxCompatResult& v, const CharacterSet& cs);
std::string report(const SubsetVerdict& v, const CharacterSet& cs);
std::string report(const std::vector<SubsetVerdict>& vs, const CharacterSet& cs);
std::string report(const OracleResult& v, const CharacterSet& cs);

}  // namespace uniphy
