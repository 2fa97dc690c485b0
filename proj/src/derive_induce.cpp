#include <algorithm>

#include "uniphy/error.hpp"
#include "uniphy/phylo.hpp"

namespace uniphy {

Triangulation DeriveResult::triangulation(const CharacterSet& cs) const {
  Triangulation t{build_pig(cs), fill};
  return t;
}

DeriveResult derive(const CharacterSet& cs, const XTree& xt) {
  if (cs.taxa().size() != xt.taxon_count())
    fail(ErrorKind::UnknownTaxon, "tree and character set disagree on taxa");

  int n = pig_vertex_count(cs);
  std::vector<VertexSet> spans(n);
  std::vector<PigVertex> labels(n);
  for (int u = 0; u < n; ++u) {
    labels[u] = pig_vertex(cs, u);
    spans[u] = span(xt, cs.character(labels[u].character).cells[labels[u].cell]);
  }

  DeriveResult result;
  result.graph = LabeledGraph(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (spans[u].intersects(spans[v])) result.graph.add_edge(u, v);
  result.graph.set_labels(labels);

  result.representation.cliques.assign(xt.node_count, VertexSet());
  for (int u = 0; u < n; ++u)
    for (int node : spans[u]) result.representation.cliques[node].insert(u);
  result.representation.tree_edges = xt.edges;
  result.representation.graph_vertex_count = n;
  result.representation.clique_tree_flag = is_valid_clique_tree(result.representation, result.graph);

  LabeledGraph pig = build_pig(cs);
  for (auto [u, v] : result.graph.edges())
    if (!pig.has_edge(u, v)) result.fill.emplace_back(u, v);
  return result;
}

namespace {

// Preorder from the node with the smallest clique; children by node id.
std::vector<int> preorder_positions(const CliqueTreeRep& rep) {
  int k = rep.node_count();
  int root = 0;
  for (int i = 1; i < k; ++i)
    if (lex_less(rep.cliques[i], rep.cliques[root])) root = i;
  std::vector<int> pos(k, -1);
  int counter = 0;
  std::vector<int> stack{root};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (pos[v] >= 0) continue;
    pos[v] = counter++;
    std::vector<int> nb = rep.node_neighbors(v);
    for (auto it = nb.rbegin(); it != nb.rend(); ++it)
      if (pos[*it] < 0) stack.push_back(*it);
  }
  return pos;
}

XTree assemble_xtree(const CliqueTreeRep& rep, const std::vector<int>& node_of_taxon) {
  int k = rep.node_count();
  std::vector<std::vector<int>> adj(k);
  for (auto [a, b] : rep.tree_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> taxa_count(k, 0);
  for (int node : node_of_taxon) ++taxa_count[node];

  std::vector<bool> alive(k, true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < k; ++v) {
      if (!alive[v] || taxa_count[v] != 0 || adj[v].size() != 2) continue;
      int a = adj[v][0], b = adj[v][1];
      alive[v] = false;
      std::replace(adj[a].begin(), adj[a].end(), v, b);
      std::replace(adj[b].begin(), adj[b].end(), v, a);
      adj[v].clear();
      changed = true;
    }
  }

  std::vector<int> newid(k, -1);
  int next = 0;
  for (int v = 0; v < k; ++v)
    if (alive[v]) newid[v] = next++;
  XTree xt;
  xt.node_count = next;
  for (int v = 0; v < k; ++v)
    if (alive[v])
      for (int w : adj[v])
        if (newid[w] > newid[v]) xt.edges.emplace_back(newid[v], newid[w]);
  std::sort(xt.edges.begin(), xt.edges.end());
  for (int node : node_of_taxon) xt.phi.push_back(newid[node]);
  return xt;
}

}  // namespace

std::vector<XTree> induce_xtrees(const CliqueTreeRep& rep, const CharacterSet& cs,
                                 std::size_t max_results) {
  if (!rep.clique_tree_flag) fail(ErrorKind::NotCliqueTree, "not a clique tree");
  int nt = cs.taxa().size();
  std::vector<int> pos = preorder_positions(rep);

  std::vector<std::vector<int>> candidates(nt);
  for (int a = 0; a < nt; ++a) {
    VertexSet required;
    for (int u = 0; u < pig_vertex_count(cs); ++u) {
      PigVertex pv = pig_vertex(cs, u);
      if (cs.character(pv.character).cells[pv.cell].contains(a)) required.insert(u);
    }
    for (int v = 0; v < rep.node_count(); ++v)
      if (required.is_subset_of(rep.cliques[v])) candidates[a].push_back(v);
    if (candidates[a].empty())
      fail(ErrorKind::NoCandidateNode,
           "no clique-tree node can host taxon '" + cs.taxa().name(a) + "'");
    std::sort(candidates[a].begin(), candidates[a].end(),
              [&](int x, int y) { return pos[x] < pos[y]; });
    // A taxon no character mentions would fit anywhere; pin it to the
    // canonical candidate so it cannot multiply the answer.
    if (required.empty()) candidates[a].resize(1);
  }

  std::vector<XTree> out;
  std::vector<int> choice(nt, 0);
  std::vector<int> node_of_taxon(nt);
  while (true) {
    for (int a = 0; a < nt; ++a) node_of_taxon[a] = candidates[a][choice[a]];
    out.push_back(assemble_xtree(rep, node_of_taxon));
    if (out.size() > max_results)
      fail(ErrorKind::TooLarge, "more than " + std::to_string(max_results) + " induced trees");
    int a = nt - 1;
    while (a >= 0 && choice[a] + 1 == static_cast<int>(candidates[a].size())) choice[a--] = 0;
    if (a < 0) break;
    ++choice[a];
  }
  return out;
}

std::vector<VertexSet> incontractable_edges(const CliqueTreeRep& rep, const CharacterSet& cs,
                                            VertexSet chars) {
  if (!rep.clique_tree_flag) fail(ErrorKind::NotCliqueTree, "not a clique tree");
  for (int c : chars)
    if (c >= cs.character_count())
      fail(ErrorKind::UnknownCharacter, "character index " + std::to_string(c) + " out of range");

  // cell_at[node][c]: the cell of character c present at the node, if any.
  // Two cells of one character meeting in a clique would be adjacent cells
  // of the same character, which display forbids.
  std::vector<std::vector<int>> cell_at(rep.node_count(),
                                        std::vector<int>(cs.character_count(), -1));
  for (int v = 0; v < rep.node_count(); ++v)
    for (int u : rep.cliques[v]) {
      PigVertex pv = pig_vertex(cs, u);
      if (!chars.contains(pv.character)) continue;
      int& slot = cell_at[v][pv.character];
      if (slot >= 0 && slot != pv.cell)
        fail(ErrorKind::NotProper, "character '" + cs.character(pv.character).name +
                                       "' has two cells in one clique");
      slot = pv.cell;
    }

  std::vector<VertexSet> out(rep.tree_edges.size());
  for (std::size_t e = 0; e < rep.tree_edges.size(); ++e) {
    auto [a, b] = rep.tree_edges[e];
    for (int c : chars) {
      int ca = cell_at[a][c], cb = cell_at[b][c];
      if (ca >= 0 && cb >= 0 && ca != cb) out[e].insert(c);
    }
  }
  return out;
}

std::vector<VertexSet> incontractable_edges(const CliqueTreeRep& rep, const CharacterSet& cs) {
  return incontractable_edges(rep, cs, VertexSet::first_n(cs.character_count()));
}

}  // namespace uniphy
