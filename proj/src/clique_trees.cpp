#include <algorithm>
#include <numeric>

#include "uniphy/error.hpp"
#include "uniphy/graph.hpp"

namespace uniphy {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

struct WeightedEdge {
  int a, b, w;
};

// All clique pairs, heaviest first; ties in ascending (a, b). Zero-weight
// pairs are kept so that disconnected graphs still get spanning trees.
std::vector<WeightedEdge> clique_graph_edges(const std::vector<VertexSet>& cliques) {
  std::vector<WeightedEdge> edges;
  int k = static_cast<int>(cliques.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      edges.push_back({i, j, (cliques[i] & cliques[j]).size()});
  std::stable_sort(edges.begin(), edges.end(), [](const WeightedEdge& x, const WeightedEdge& y) {
    if (x.w != y.w) return x.w > y.w;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  });
  return edges;
}

int max_spanning_weight(const std::vector<WeightedEdge>& edges, int k) {
  UnionFind uf(k);
  int total = 0, used = 0;
  for (const WeightedEdge& e : edges) {
    if (used == k - 1) break;
    if (uf.unite(e.a, e.b)) {
      total += e.w;
      ++used;
    }
  }
  return total;
}

CliqueTreeRep empty_graph_tree() {
  CliqueTreeRep rep;
  rep.cliques = {VertexSet()};
  rep.graph_vertex_count = 0;
  rep.clique_tree_flag = true;
  return rep;
}

}  // namespace

CliqueTreeRep clique_tree(const LabeledGraph& g) {
  if (g.vertex_count() == 0) return empty_graph_tree();
  CliqueTreeRep rep;
  rep.cliques = maximal_cliques_chordal(g);
  rep.graph_vertex_count = g.vertex_count();
  int k = rep.node_count();
  UnionFind uf(k);
  for (const WeightedEdge& e : clique_graph_edges(rep.cliques)) {
    if (static_cast<int>(rep.tree_edges.size()) == k - 1) break;
    if (uf.unite(e.a, e.b)) rep.tree_edges.emplace_back(e.a, e.b);
  }
  std::sort(rep.tree_edges.begin(), rep.tree_edges.end());
  rep.clique_tree_flag = true;
  return rep;
}

bool satisfies_edge_coverage(const CliqueTreeRep& rep, const LabeledGraph& g) {
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (const VertexSet& c : rep.cliques)
      if (c.contains(u) && c.contains(v)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  // Isolated vertices still need a node.
  for (int v = 0; v < g.vertex_count(); ++v)
    if (rep.nodes_containing(v).empty()) return false;
  return true;
}

bool satisfies_convexity(const CliqueTreeRep& rep) {
  // Nodes holding any fixed vertex must induce a subtree: connected with
  // (size - 1) induced edges.
  for (int v = 0; v < rep.graph_vertex_count; ++v) {
    VertexSet nodes = rep.nodes_containing(v);
    if (nodes.empty()) continue;
    int induced = 0;
    for (auto [a, b] : rep.tree_edges)
      if (nodes.contains(a) && nodes.contains(b)) ++induced;
    if (induced != nodes.size() - 1) return false;
  }
  return true;
}

namespace {

bool is_tree_shape(const CliqueTreeRep& rep) {
  int k = rep.node_count();
  if (static_cast<int>(rep.tree_edges.size()) != k - 1) return false;
  UnionFind uf(k);
  for (auto [a, b] : rep.tree_edges)
    if (!uf.unite(a, b)) return false;
  return true;
}

}  // namespace

bool is_valid_tree_representation(const CliqueTreeRep& rep, const LabeledGraph& g) {
  if (g.vertex_count() == 0) return rep.tree_edges.empty() && rep.node_count() >= 1;
  if (rep.node_count() == 0) return false;
  if (rep.graph_vertex_count != g.vertex_count()) return false;
  if (!is_tree_shape(rep)) return false;
  for (const VertexSet& c : rep.cliques)
    for (int u : c)
      for (int v : c)
        if (u < v && !g.has_edge(u, v)) return false;
  return satisfies_edge_coverage(rep, g) && satisfies_convexity(rep);
}

bool is_valid_clique_tree(const CliqueTreeRep& rep, const LabeledGraph& g) {
  if (g.vertex_count() == 0)
    return rep.node_count() == 1 && rep.cliques[0].empty() && rep.tree_edges.empty();
  if (!is_valid_tree_representation(rep, g)) return false;
  std::vector<VertexSet> expected = maximal_cliques_chordal(g);
  std::vector<VertexSet> got = rep.cliques;
  std::sort(got.begin(), got.end(), lex_less);
  if (std::adjacent_find(got.begin(), got.end()) != got.end()) return false;
  return got == expected;
}

std::vector<CliqueTreeRep> enumerate_clique_trees(const LabeledGraph& g, std::size_t limit) {
  if (g.vertex_count() == 0) return {empty_graph_tree()};
  std::vector<VertexSet> cliques = maximal_cliques_chordal(g);
  int k = static_cast<int>(cliques.size());
  std::vector<CliqueTreeRep> out;
  auto emit = [&](const std::vector<std::pair<int, int>>& chosen) {
    CliqueTreeRep rep;
    rep.cliques = cliques;
    rep.tree_edges = chosen;
    std::sort(rep.tree_edges.begin(), rep.tree_edges.end());
    rep.graph_vertex_count = g.vertex_count();
    rep.clique_tree_flag = is_valid_clique_tree(rep, g);
    if (rep.clique_tree_flag) out.push_back(std::move(rep));
  };
  if (k == 1) {
    emit({});
    return out;
  }

  std::vector<WeightedEdge> edges = clique_graph_edges(cliques);
  int target = max_spanning_weight(edges, k);
  int m = static_cast<int>(edges.size());
  // Edges are sorted by weight desc, so the best completion from position i
  // with r slots left is bounded by the sum of the next r weights.
  std::vector<long long> prefix(m + 1, 0);
  for (int i = 0; i < m; ++i) prefix[i + 1] = prefix[i] + edges[i].w;

  std::vector<std::pair<int, int>> chosen;
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  bool stopped = false;

  auto find_root = [&](int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };

  auto rec = [&](auto&& self, int idx, int picked, int weight) -> void {
    if (stopped) return;
    if (picked == k - 1) {
      if (weight == target) emit(chosen);
      if (limit > 0 && out.size() >= limit) stopped = true;
      return;
    }
    if (idx == m) return;
    int slots = k - 1 - picked;
    if (m - idx < slots) return;
    if (weight + (prefix[std::min(m, idx + slots)] - prefix[idx]) < target) return;

    const WeightedEdge& e = edges[idx];
    int ra = find_root(e.a), rb = find_root(e.b);
    if (ra != rb) {
      parent[rb] = ra;
      chosen.emplace_back(e.a, e.b);
      self(self, idx + 1, picked + 1, weight + e.w);
      chosen.pop_back();
      parent[rb] = rb;
    }
    self(self, idx + 1, picked, weight);
  };
  rec(rec, 0, 0, 0);

  if (!stopped)
    std::sort(out.begin(), out.end(), [](const CliqueTreeRep& a, const CliqueTreeRep& b) {
      return a.tree_edges < b.tree_edges;
    });
  return out;
}

LeafageReport ur_leafage_and_ternary(const CliqueTreeRep& rep) {
  LeafageReport report;
  report.ternary = true;
  for (int i = 0; i < rep.node_count(); ++i) {
    int d = rep.node_degree(i);
    if (d <= 1)
      ++report.leafage;
    else if (d != 3)
      report.ternary = false;
  }
  return report;
}

}  // namespace uniphy
