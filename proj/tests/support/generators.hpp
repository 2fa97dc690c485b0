#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "uniphy/characters.hpp"
#include "uniphy/graph.hpp"
#include "uniphy/phylo.hpp"

namespace uniphy::testgen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Connected chordal graph grown by simplicial vertex addition: each new
// vertex attaches to a nonempty subset of an existing maximal clique.
inline LabeledGraph random_connected_chordal(Rng& rng, int n) {
  LabeledGraph g(n);
  for (int v = 1; v < n; ++v) {
    LabeledGraph head(v);
    for (int a = 0; a < v; ++a)
      for (int b : g.neighbors(a))
        if (b < a) head.add_edge(b, a);
    std::vector<VertexSet> cliques = maximal_cliques_chordal(head);
    VertexSet base = cliques[uniform(rng, 0, static_cast<int>(cliques.size()) - 1)];
    std::vector<int> members = base.to_vector();
    VertexSet picked;
    for (int m : members)
      if (uniform(rng, 0, 1)) picked.insert(m);
    if (picked.empty()) picked.insert(members[uniform(rng, 0, static_cast<int>(members.size()) - 1)]);
    for (int m : picked) g.add_edge(m, v);
  }
  return g;
}

// Complete graph minus a random set of at most max_non_edges edges.
inline LabeledGraph random_graph_few_nonedges(Rng& rng, int n, int max_non_edges) {
  LabeledGraph g = LabeledGraph::complete(n);
  std::vector<std::pair<int, int>> all = g.edges();
  std::shuffle(all.begin(), all.end(), rng);
  int drop = uniform(rng, 0, std::min<int>(max_non_edges, static_cast<int>(all.size())));
  for (int i = 0; i < drop; ++i) g.remove_edge(all[i].first, all[i].second);
  return g;
}

inline std::vector<std::string> taxon_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return names;
}

// Up to max_chars characters on 2..max_taxa taxa, each a partition of a
// random support into 2..3 cells (sometimes 1).
inline CharacterSet random_character_set(Rng& rng, int max_taxa = 5, int max_chars = 4) {
  int nt = uniform(rng, 2, max_taxa);
  int nc = uniform(rng, 1, max_chars);
  std::vector<PartialCharacter> chars;
  for (int c = 0; c < nc; ++c) {
    int want_cells = uniform(rng, 0, 7) == 0 ? 1 : uniform(rng, 2, 3);
    want_cells = std::min(want_cells, nt);
    int support = uniform(rng, want_cells, nt);
    std::vector<int> taxa(nt);
    for (int i = 0; i < nt; ++i) taxa[i] = i;
    std::shuffle(taxa.begin(), taxa.end(), rng);
    std::vector<VertexSet> cells(want_cells);
    for (int i = 0; i < support; ++i)
      cells[i < want_cells ? i : uniform(rng, 0, want_cells - 1)].insert(taxa[i]);
    chars.push_back({"chi" + std::to_string(c + 1), std::move(cells)});
  }
  return CharacterSet(TaxonSet(taxon_names(nt)), std::move(chars));
}

// Random tree on k nodes: node i attaches to a uniform earlier node.
inline std::vector<std::pair<int, int>> random_tree_edges(Rng& rng, int k) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < k; ++v) {
    int u = uniform(rng, 0, v - 1);
    edges.emplace_back(u, v);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

// X-tree on nt taxa over a random tree shape; every node of degree <= 2
// gets a taxon first, the rest are scattered.
inline XTree random_xtree(Rng& rng, int nt, int max_extra_nodes = 3) {
  while (true) {
    int k = uniform(rng, 1, std::max(1, nt + max_extra_nodes));
    XTree xt;
    xt.node_count = k;
    xt.edges = random_tree_edges(rng, k);
    std::vector<int> mandatory;
    for (int v = 0; v < k; ++v)
      if (xt.degree(v) <= 2) mandatory.push_back(v);
    if (static_cast<int>(mandatory.size()) > nt) continue;
    std::shuffle(mandatory.begin(), mandatory.end(), rng);
    xt.phi.assign(nt, -1);
    std::vector<int> order(nt);
    for (int i = 0; i < nt; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 0; i < mandatory.size(); ++i) xt.phi[order[i]] = mandatory[i];
    for (int i = static_cast<int>(mandatory.size()); i < nt; ++i)
      xt.phi[order[i]] = uniform(rng, 0, k - 1);
    if (validate_xtree(xt)) return xt;
  }
}

// Free ternary X-tree built by leaf insertion: each new leaf hangs off a
// node subdividing a random existing edge.
inline XTree random_free_ternary(Rng& rng, int nt) {
  XTree xt;
  if (nt == 1) {
    xt.node_count = 1;
    xt.phi = {0};
    return xt;
  }
  xt.node_count = 2;
  xt.edges = {{0, 1}};
  xt.phi = {0, 1};
  for (int t = 2; t < nt; ++t) {
    int e = uniform(rng, 0, static_cast<int>(xt.edges.size()) - 1);
    auto [u, v] = xt.edges[e];
    int mid = xt.node_count++;
    int leaf = xt.node_count++;
    xt.edges.erase(xt.edges.begin() + e);
    xt.edges.emplace_back(std::min(u, mid), std::max(u, mid));
    xt.edges.emplace_back(std::min(v, mid), std::max(v, mid));
    xt.edges.emplace_back(mid, leaf);
    xt.phi.push_back(leaf);
  }
  std::sort(xt.edges.begin(), xt.edges.end());
  return xt;
}

// The full split characters of xt: one two-cell character per edge, cells
// given by the taxa on each side. A free ternary tree displays the set and
// every edge is distinguished by its own split.
inline CharacterSet split_characters(Rng& rng, const XTree& xt, int nt) {
  std::vector<PartialCharacter> chars;
  for (std::size_t e = 0; e < xt.edges.size(); ++e) {
    auto [u, v] = xt.edges[e];
    std::vector<int> side(xt.node_count, -1);
    std::vector<int> stack{u};
    side[u] = 0;
    side[v] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : xt.neighbors(x))
        if (side[y] < 0) {
          side[y] = 0;
          stack.push_back(y);
        }
    }
    VertexSet left, right;
    for (int a = 0; a < nt; ++a) (side[xt.phi[a]] == 0 ? left : right).insert(a);
    if (left.empty() || right.empty()) continue;
    chars.push_back({"chi" + std::to_string(e + 1), {left, right}});
  }
  std::shuffle(chars.begin(), chars.end(), rng);
  for (std::size_t i = 0; i < chars.size(); ++i) chars[i].name = "chi" + std::to_string(i + 1);
  return CharacterSet(TaxonSet(taxon_names(nt)), std::move(chars));
}

}  // namespace uniphy::testgen
