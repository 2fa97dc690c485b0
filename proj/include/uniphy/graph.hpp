#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "uniphy/characters.hpp"
#include "uniphy/vertex_set.hpp"

namespace uniphy {

// Undirected graph on vertices 0..n-1, optionally carrying a PigVertex label
// per vertex (set for partition intersection graphs and their supergraphs).
class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(int n);
  static LabeledGraph complete(int n);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const;
  VertexSet vertices() const { return VertexSet::first_n(vertex_count()); }

  bool has_edge(int u, int v) const { return adj_.at(u).contains(v); }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  VertexSet neighbors(int v) const { return adj_.at(v); }

  // Edge lists in ascending (u, v) order with u < v.
  std::vector<std::pair<int, int>> edges() const;
  std::vector<std::pair<int, int>> non_edges() const;

  bool connected() const;

  bool has_labels() const { return !labels_.empty(); }
  const PigVertex& label(int v) const { return labels_.at(v); }
  const std::vector<PigVertex>& labels() const { return labels_; }
  void set_labels(std::vector<PigVertex> labels);

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.adj_ == b.adj_;
  }

 private:
  std::vector<VertexSet> adj_;
  std::vector<PigVertex> labels_;
};

// Partition intersection graph of cs: one vertex per cell, edges between
// intersecting cells. Two cells of the same character never intersect, so
// same-character vertices are never adjacent. Vertices are labeled.
LabeledGraph build_pig(const CharacterSet& cs);

// Tree whose nodes carry vertex sets of a host graph. clique_tree_flag
// records whether the nodes are exactly the maximal cliques (checked by
// is_valid_clique_tree, set by the constructors that guarantee it).
struct CliqueTreeRep {
  std::vector<VertexSet> cliques;
  std::vector<std::pair<int, int>> tree_edges;
  int graph_vertex_count = 0;
  bool clique_tree_flag = false;

  int node_count() const { return static_cast<int>(cliques.size()); }
  int node_degree(int node) const;
  std::vector<int> node_neighbors(int node) const;

  // Nodes whose set contains the vertex.
  VertexSet nodes_containing(int vertex) const;

  friend bool operator==(const CliqueTreeRep& a, const CliqueTreeRep& b) {
    return a.cliques == b.cliques && a.tree_edges == b.tree_edges;
  }
};

struct MinimalSeparator {
  VertexSet vertices;
  int multiplicity = 0;
};

struct ComponentReport {
  std::vector<VertexSet> components;  // components of g - s, by lowest vertex
  std::vector<bool> full;             // component sees all of s
  int full_count = 0;
};

bool is_chordal(const LabeledGraph& g);

// Maximal cliques of a chordal graph, in ascending-element order.
// Throws NotChordal otherwise.
std::vector<VertexSet> maximal_cliques_chordal(const LabeledGraph& g);

// One clique tree of a chordal graph: maximum-weight spanning tree of the
// complete clique graph under w(K, K') = |K intersect K'|. Deterministic.
// The empty graph yields a single node carrying the empty set.
CliqueTreeRep clique_tree(const LabeledGraph& g);

// All clique trees, i.e. all maximum-weight spanning trees, each re-verified
// against the coverage + convexity definition. Stops early after `limit`
// trees when limit > 0. Sorted by edge list when complete.
std::vector<CliqueTreeRep> enumerate_clique_trees(const LabeledGraph& g, std::size_t limit = 0);

// Definition checks for tree representations.
bool satisfies_edge_coverage(const CliqueTreeRep& rep, const LabeledGraph& g);
bool satisfies_convexity(const CliqueTreeRep& rep);
bool is_valid_tree_representation(const CliqueTreeRep& rep, const LabeledGraph& g);
bool is_valid_clique_tree(const CliqueTreeRep& rep, const LabeledGraph& g);

ComponentReport full_components(const LabeledGraph& g, VertexSet s);

// All minimal separators with multiplicities (full component count minus
// one), by neighborhood-closure generation with a verification of each
// candidate. Canonically sorted. Throws TooLarge above vertex_cap.
std::vector<MinimalSeparator> minimal_separators_bruteforce(const LabeledGraph& g,
                                                            int vertex_cap = 32);

// Minimal separators of the represented chordal graph, read off a clique
// tree: distinct edge intersections, multiplicity = number of tree edges
// realizing the set. Throws NotCliqueTree unless rep.clique_tree_flag.
std::vector<MinimalSeparator> minimal_separators_from_clique_tree(const CliqueTreeRep& rep);

// Whether a connected chordal graph has exactly one clique tree, decided by
// the forced-edge condition: every minimal separator is contained in exactly
// two maximal cliques. Throws NotChordal / Disconnected.
bool is_ur_chordal(const LabeledGraph& g);

struct LeafageReport {
  int leafage = 0;   // nodes of tree degree <= 1 (a lone node counts)
  bool ternary = false;  // every node of degree >= 2 has degree exactly 3
};
LeafageReport ur_leafage_and_ternary(const CliqueTreeRep& rep);

// Induced subgraph on the complement of u, vertices renumbered in order;
// labels are carried over.
LabeledGraph delete_vertices(const LabeledGraph& g, VertexSet u);

// Graphviz renderings; vertex labels come from the character set.
std::string to_dot(const LabeledGraph& g, const CharacterSet& cs);
std::string to_dot(const CliqueTreeRep& rep, const CharacterSet& cs);

}  // namespace uniphy
