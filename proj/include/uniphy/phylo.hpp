#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uniphy/graph.hpp"
#include "uniphy/triangulation.hpp"

namespace uniphy {

// Tree with a taxon-to-node map phi. Valid X-trees label every node of
// degree two or one with at least one taxon; a lone node may stay unlabeled
// only when the taxon set is empty.
struct XTree {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;  // sorted, u < v
  std::vector<int> phi;                    // taxon index -> node

  int taxon_count() const { return static_cast<int>(phi.size()); }
  int degree(int node) const;
  std::vector<int> neighbors(int node) const;
  VertexSet taxa_at(int node) const;
};

bool validate_xtree(const XTree& xt);

// Node set of the minimal subtree connecting phi(taxa). Throws EmptySet on
// an empty taxon set, UnknownTaxon past the end of phi.
VertexSet span(const XTree& xt, VertexSet taxa);

// Cell spans pairwise node-disjoint.
bool displays(const XTree& xt, const PartialCharacter& chi);

struct FreeTernaryReport {
  bool free_tree = false;  // phi is a bijection onto the leaves
  bool ternary = false;    // every internal node has degree 3
};
FreeTernaryReport is_free_ternary(const XTree& xt);

// For each tree edge, the set of character indices distinguishing it: the
// endpoints lie in spans of two different cells. Aligned with xt.edges.
// Throws NotDisplayed if some character is not displayed.
std::vector<VertexSet> distinguished_edges(const XTree& xt, const CharacterSet& cs);

// Label-preserving isomorphism. Throws TaxonMismatch on different taxon
// counts.
bool xtree_isomorphic(const XTree& a, const XTree& b);
std::string xtree_canonical_form(const XTree& xt);

// Intersection graph of the cell spans on xt, always a triangulation of
// the partition intersection graph, plus the tree representation
// tr(A, chi) = span(A). representation.clique_tree_flag records whether it
// is a clique tree of graph. Defined for any valid X-tree over the same
// taxa; throws UnknownTaxon when the taxon counts disagree.
struct DeriveResult {
  LabeledGraph graph;
  CliqueTreeRep representation;
  std::vector<std::pair<int, int>> fill;  // edges beyond the intersection graph

  Triangulation triangulation(const CharacterSet& cs) const;
};
DeriveResult derive(const CharacterSet& cs, const XTree& xt);

// X-trees read off a clique tree: each taxon may map to any node whose
// clique contains all of its cells' vertices (taxa mentioned by no
// character go to the canonical first candidate only), then unlabeled
// degree-2 nodes are suppressed. Deterministic order; the first tree takes
// every canonical candidate. Throws NotCliqueTree / NoCandidateNode /
// TooLarge past max_results.
std::vector<XTree> induce_xtrees(const CliqueTreeRep& rep, const CharacterSet& cs,
                                 std::size_t max_results = 100000);

// For each tree edge (aligned with rep.tree_edges), the characters in
// `chars` witnessing that the edge cannot be contracted: some cell span
// covers one endpoint but not the other on both sides. Throws NotProper if
// a clique holds two cells of a queried character.
std::vector<VertexSet> incontractable_edges(const CliqueTreeRep& rep, const CharacterSet& cs,
                                            VertexSet chars);
std::vector<VertexSet> incontractable_edges(const CliqueTreeRep& rep, const CharacterSet& cs);

// Rooted at the tree center (virtual root on a central edge), children
// ordered by smallest descendant taxon, multi-taxon labels joined by '+'.
std::string to_newick(const XTree& xt, const TaxonSet& taxa);
XTree parse_newick(std::string_view text, const TaxonSet& taxa);
std::string to_dot(const XTree& xt, const TaxonSet& taxa);

}  // namespace uniphy
