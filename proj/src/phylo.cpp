#include "uniphy/phylo.hpp"

#include <algorithm>
#include <numeric>

#include "uniphy/error.hpp"

namespace uniphy {

int XTree::degree(int node) const {
  int d = 0;
  for (auto [a, b] : edges)
    if (a == node || b == node) ++d;
  return d;
}

std::vector<int> XTree::neighbors(int node) const {
  std::vector<int> out;
  for (auto [a, b] : edges) {
    if (a == node) out.push_back(b);
    if (b == node) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet XTree::taxa_at(int node) const {
  VertexSet out;
  for (int t = 0; t < taxon_count(); ++t)
    if (phi[t] == node) out.insert(t);
  return out;
}

namespace {

bool is_tree(const XTree& xt) {
  if (xt.node_count <= 0) return false;
  if (static_cast<int>(xt.edges.size()) != xt.node_count - 1) return false;
  std::vector<int> parent(xt.node_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : xt.edges) {
    if (a < 0 || b < 0 || a >= xt.node_count || b >= xt.node_count || a == b) return false;
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[rb] = ra;
  }
  return true;
}

}  // namespace

bool validate_xtree(const XTree& xt) {
  if (!is_tree(xt)) return false;
  for (int t = 0; t < xt.taxon_count(); ++t)
    if (xt.phi[t] < 0 || xt.phi[t] >= xt.node_count) return false;
  if (xt.node_count == 1) return true;
  for (int v = 0; v < xt.node_count; ++v)
    if (xt.degree(v) <= 2 && xt.taxa_at(v).empty()) return false;
  return true;
}

VertexSet span(const XTree& xt, VertexSet taxa) {
  if (taxa.empty()) fail(ErrorKind::EmptySet, "span of an empty taxon set");
  for (int t : taxa)
    if (t >= xt.taxon_count()) fail(ErrorKind::UnknownTaxon, "taxon " + std::to_string(t) + " not mapped");

  int root = xt.phi[taxa.lowest()];
  std::vector<int> parent(xt.node_count, -2);
  std::vector<int> order{root};
  parent[root] = -1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int w : xt.neighbors(order[i]))
      if (parent[w] == -2) {
        parent[w] = order[i];
        order.push_back(w);
      }

  VertexSet nodes;
  for (int t : taxa)
    for (int v = xt.phi[t]; v != -1 && !nodes.contains(v); v = parent[v]) nodes.insert(v);
  return nodes;
}

bool displays(const XTree& xt, const PartialCharacter& chi) {
  std::vector<VertexSet> spans;
  for (VertexSet cell : chi.cells) spans.push_back(span(xt, cell));
  for (std::size_t i = 0; i < spans.size(); ++i)
    for (std::size_t j = i + 1; j < spans.size(); ++j)
      if (spans[i].intersects(spans[j])) return false;
  return true;
}

FreeTernaryReport is_free_ternary(const XTree& xt) {
  FreeTernaryReport report;
  report.free_tree = true;
  report.ternary = true;
  std::vector<int> count(xt.node_count, 0);
  for (int t = 0; t < xt.taxon_count(); ++t) ++count[xt.phi[t]];
  for (int v = 0; v < xt.node_count; ++v) {
    int d = xt.degree(v);
    bool leaf = d <= 1;
    if (leaf && count[v] != 1) report.free_tree = false;
    if (!leaf && count[v] != 0) report.free_tree = false;
    if (!leaf && d != 3) report.ternary = false;
  }
  return report;
}

std::vector<VertexSet> distinguished_edges(const XTree& xt, const CharacterSet& cs) {
  // Spans of distinct cells of a displayed character are disjoint, so each
  // node lies in at most one cell span per character.
  std::vector<VertexSet> out(xt.edges.size());
  for (int c = 0; c < cs.character_count(); ++c) {
    const PartialCharacter& chi = cs.character(c);
    if (!displays(xt, chi))
      fail(ErrorKind::NotDisplayed, "character '" + chi.name + "' is not displayed");
    std::vector<int> cell_at(xt.node_count, -1);
    for (std::size_t cell = 0; cell < chi.cells.size(); ++cell)
      for (int v : span(xt, chi.cells[cell])) cell_at[v] = static_cast<int>(cell);
    for (std::size_t e = 0; e < xt.edges.size(); ++e) {
      auto [u, v] = xt.edges[e];
      if (cell_at[u] >= 0 && cell_at[v] >= 0 && cell_at[u] != cell_at[v]) out[e].insert(c);
    }
  }
  return out;
}

namespace {

std::vector<int> tree_centers(const XTree& xt) {
  int n = xt.node_count;
  if (n == 1) return {0};
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = xt.degree(v);
  std::vector<int> layer;
  std::vector<bool> removed(n, false);
  for (int v = 0; v < n; ++v)
    if (deg[v] <= 1) layer.push_back(v);
  int alive = n;
  while (alive > 2) {
    std::vector<int> next;
    for (int v : layer) {
      removed[v] = true;
      --alive;
      for (int w : xt.neighbors(v))
        if (!removed[w] && --deg[w] == 1) next.push_back(w);
    }
    layer = next;
  }
  std::vector<int> centers;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) centers.push_back(v);
  std::sort(centers.begin(), centers.end());
  return centers;
}

std::string node_tag(const XTree& xt, int node) {
  std::string tag = "{";
  bool first = true;
  for (int t : xt.taxa_at(node)) {
    if (!first) tag += ',';
    tag += std::to_string(t);
    first = false;
  }
  tag += '}';
  return tag;
}

std::string encode_rooted(const XTree& xt, int node, int parent) {
  std::vector<std::string> parts;
  for (int w : xt.neighbors(node))
    if (w != parent) parts.push_back(encode_rooted(xt, w, node));
  std::sort(parts.begin(), parts.end());
  std::string out = "(" + node_tag(xt, node);
  for (const std::string& p : parts) out += p;
  out += ')';
  return out;
}

}  // namespace

std::string xtree_canonical_form(const XTree& xt) {
  std::vector<int> centers = tree_centers(xt);
  if (centers.size() == 1) return encode_rooted(xt, centers[0], -1);
  std::string a = encode_rooted(xt, centers[0], centers[1]);
  std::string b = encode_rooted(xt, centers[1], centers[0]);
  if (b < a) std::swap(a, b);
  return "[" + a + "|" + b + "]";
}

bool xtree_isomorphic(const XTree& a, const XTree& b) {
  if (a.taxon_count() != b.taxon_count())
    fail(ErrorKind::TaxonMismatch, "trees are over different taxon sets");
  return xtree_canonical_form(a) == xtree_canonical_form(b);
}

std::string to_dot(const XTree& xt, const TaxonSet& taxa) {
  std::string out = "graph xtree {\n";
  for (int v = 0; v < xt.node_count; ++v) {
    VertexSet at = xt.taxa_at(v);
    if (at.empty()) {
      out += "  n" + std::to_string(v) + " [shape=point];\n";
    } else {
      std::string label;
      for (int t : at) {
        if (!label.empty()) label += '+';
        label += taxa.name(t);
      }
      out += "  n" + std::to_string(v) + " [shape=ellipse, label=\"" + label + "\"];\n";
    }
  }
  for (auto [u, v] : xt.edges)
    out += "  n" + std::to_string(u) + " -- n" + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace uniphy
