#include "uniphy/graph.hpp"

#include <algorithm>

#include "uniphy/error.hpp"

namespace uniphy {

LabeledGraph::LabeledGraph(int n) {
  if (n < 0) fail(ErrorKind::InvalidArgument, "negative vertex count");
  if (n > VertexSet::kCapacity)
    fail(ErrorKind::TooLarge, "graph exceeds " + std::to_string(VertexSet::kCapacity) + " vertices");
  adj_.assign(n, VertexSet());
}

LabeledGraph LabeledGraph::complete(int n) {
  LabeledGraph g(n);
  VertexSet all = VertexSet::first_n(n);
  for (int v = 0; v < n; ++v) {
    g.adj_[v] = all;
    g.adj_[v].erase(v);
  }
  return g;
}

int LabeledGraph::edge_count() const {
  int twice = 0;
  for (const VertexSet& nb : adj_) twice += nb.size();
  return twice / 2;
}

void LabeledGraph::add_edge(int u, int v) {
  if (u == v) fail(ErrorKind::InvalidArgument, "self loop");
  adj_.at(u).insert(v);
  adj_.at(v).insert(u);
}

void LabeledGraph::remove_edge(int u, int v) {
  adj_.at(u).erase(v);
  adj_.at(v).erase(u);
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj_[u])
      if (v > u) out.emplace_back(u, v);
  return out;
}

std::vector<std::pair<int, int>> LabeledGraph::non_edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < vertex_count(); ++u)
    for (int v = u + 1; v < vertex_count(); ++v)
      if (!adj_[u].contains(v)) out.emplace_back(u, v);
  return out;
}

bool LabeledGraph::connected() const {
  if (vertex_count() == 0) return true;
  VertexSet seen = VertexSet::single(0);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= adj_[v];
    frontier = next - seen;
    seen |= frontier;
  }
  return seen == vertices();
}

void LabeledGraph::set_labels(std::vector<PigVertex> labels) {
  if (static_cast<int>(labels.size()) != vertex_count())
    fail(ErrorKind::InvalidArgument, "label count does not match vertex count");
  labels_ = std::move(labels);
}

LabeledGraph build_pig(const CharacterSet& cs) {
  int n = pig_vertex_count(cs);
  LabeledGraph g(n);
  std::vector<PigVertex> labels(n);
  std::vector<VertexSet> cell_of(n);
  for (int v = 0; v < n; ++v) {
    labels[v] = pig_vertex(cs, v);
    cell_of[v] = cs.character(labels[v].character).cells[labels[v].cell];
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (cell_of[u].intersects(cell_of[v])) g.add_edge(u, v);
  g.set_labels(std::move(labels));
  return g;
}

int CliqueTreeRep::node_degree(int node) const {
  int d = 0;
  for (auto [a, b] : tree_edges)
    if (a == node || b == node) ++d;
  return d;
}

std::vector<int> CliqueTreeRep::node_neighbors(int node) const {
  std::vector<int> out;
  for (auto [a, b] : tree_edges) {
    if (a == node) out.push_back(b);
    if (b == node) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet CliqueTreeRep::nodes_containing(int vertex) const {
  VertexSet out;
  for (int i = 0; i < node_count(); ++i)
    if (cliques[i].contains(vertex)) out.insert(i);
  return out;
}

namespace {

// Maximum cardinality search. Returns vertices in visit order; the reverse
// of that order is a perfect elimination order iff the graph is chordal.
std::vector<int> mcs_order(const LabeledGraph& g) {
  int n = g.vertex_count();
  std::vector<int> weight(n, 0), order;
  std::vector<bool> numbered(n, false);
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!numbered[v] && (best == -1 || weight[v] > weight[best])) best = v;
    numbered[best] = true;
    order.push_back(best);
    for (int u : g.neighbors(best))
      if (!numbered[u]) ++weight[u];
  }
  return order;
}

// pos[v] = rank of v in the elimination order (reverse MCS order).
std::vector<int> elimination_positions(const LabeledGraph& g) {
  std::vector<int> order = mcs_order(g);
  std::reverse(order.begin(), order.end());
  std::vector<int> pos(g.vertex_count());
  for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
  return pos;
}

bool peo_check(const LabeledGraph& g, const std::vector<int>& pos) {
  int n = g.vertex_count();
  for (int v = 0; v < n; ++v) {
    VertexSet later;
    for (int u : g.neighbors(v))
      if (pos[u] > pos[v]) later.insert(u);
    if (later.empty()) continue;
    int first = -1;
    for (int u : later)
      if (first == -1 || pos[u] < pos[first]) first = u;
    later.erase(first);
    if (!later.is_subset_of(g.neighbors(first))) return false;
  }
  return true;
}

}  // namespace

bool is_chordal(const LabeledGraph& g) {
  if (g.vertex_count() == 0) return true;
  return peo_check(g, elimination_positions(g));
}

std::vector<VertexSet> maximal_cliques_chordal(const LabeledGraph& g) {
  if (g.vertex_count() == 0) return {};
  std::vector<int> pos = elimination_positions(g);
  if (!peo_check(g, pos)) fail(ErrorKind::NotChordal, "graph is not chordal");

  // {v} + later neighbors, for each v, covers all maximal cliques.
  std::vector<VertexSet> candidates;
  for (int v = 0; v < g.vertex_count(); ++v) {
    VertexSet c = VertexSet::single(v);
    for (int u : g.neighbors(v))
      if (pos[u] > pos[v]) c.insert(u);
    candidates.push_back(c);
  }
  std::sort(candidates.begin(), candidates.end(),
            [](VertexSet a, VertexSet b) { return a.size() > b.size(); });
  std::vector<VertexSet> maximal;
  for (VertexSet c : candidates) {
    bool covered = false;
    for (VertexSet m : maximal)
      if (c.is_subset_of(m)) {
        covered = true;
        break;
      }
    if (!covered) maximal.push_back(c);
  }
  std::sort(maximal.begin(), maximal.end(), lex_less);
  return maximal;
}

LabeledGraph delete_vertices(const LabeledGraph& g, VertexSet u) {
  std::vector<int> keep;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!u.contains(v)) keep.push_back(v);
  std::vector<int> newid(g.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) newid[keep[i]] = i;
  LabeledGraph out(static_cast<int>(keep.size()));
  for (int v : keep)
    for (int w : g.neighbors(v))
      if (newid[w] > newid[v]) out.add_edge(newid[v], newid[w]);
  if (g.has_labels()) {
    std::vector<PigVertex> labels;
    for (int v : keep) labels.push_back(g.label(v));
    out.set_labels(std::move(labels));
  }
  return out;
}

ComponentReport full_components(const LabeledGraph& g, VertexSet s) {
  ComponentReport report;
  VertexSet rest = g.vertices() - s;
  VertexSet unvisited = rest;
  while (!unvisited.empty()) {
    int start = unvisited.lowest();
    VertexSet comp = VertexSet::single(start);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      frontier = (next & rest) - comp;
      comp |= frontier;
    }
    unvisited -= comp;
    VertexSet seen_in_s;
    for (int v : comp) seen_in_s |= g.neighbors(v) & s;
    report.components.push_back(comp);
    report.full.push_back(seen_in_s == s);
    if (seen_in_s == s) ++report.full_count;
  }
  return report;
}

std::string to_dot(const LabeledGraph& g, const CharacterSet& cs) {
  std::string out = "graph pig {\n  node [shape=ellipse];\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    out += "  v" + std::to_string(v) + " [label=\"" + pig_vertex_label(cs, v) + "\"];\n";
  for (auto [u, v] : g.edges())
    out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

std::string to_dot(const CliqueTreeRep& rep, const CharacterSet& cs) {
  std::string out = "graph cliquetree {\n  node [shape=box];\n";
  for (int i = 0; i < rep.node_count(); ++i) {
    std::string label = "{";
    bool first = true;
    for (int v : rep.cliques[i]) {
      if (!first) label += ", ";
      label += pig_vertex_label(cs, v);
      first = false;
    }
    label += "}";
    out += "  n" + std::to_string(i) + " [label=\"" + label + "\"];\n";
  }
  for (auto [a, b] : rep.tree_edges)
    out += "  n" + std::to_string(a) + " -- n" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace uniphy
