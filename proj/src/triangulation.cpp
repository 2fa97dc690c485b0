#include "uniphy/triangulation.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "uniphy/error.hpp"

namespace uniphy {

LabeledGraph Triangulation::filled() const {
  LabeledGraph g = base;
  for (auto [u, v] : fill) g.add_edge(u, v);
  return g;
}

bool is_minimal_triangulation(const Triangulation& t) {
  LabeledGraph h = t.filled();
  if (!is_chordal(h)) fail(ErrorKind::NotChordal, "filled graph is not chordal");
  for (auto [u, v] : t.fill) {
    h.remove_edge(u, v);
    bool still = is_chordal(h);
    h.add_edge(u, v);
    if (still) return false;
  }
  return true;
}

std::vector<int> find_chordless_cycle(const LabeledGraph& g) {
  int n = g.vertex_count();
  for (int v = 0; v < n; ++v) {
    VertexSet nb = g.neighbors(v);
    for (int x : nb)
      for (int y : nb) {
        if (y <= x || g.has_edge(x, y)) continue;
        // Shortest x-y path avoiding v and its other neighbors closes a
        // chordless cycle through v.
        VertexSet allowed = g.vertices() - nb;
        allowed.erase(v);
        allowed.insert(x);
        allowed.insert(y);
        std::vector<int> prev(n, -2);
        std::vector<int> bfs{x};
        prev[x] = -1;
        for (std::size_t i = 0; i < bfs.size() && prev[y] == -2; ++i)
          for (int w : g.neighbors(bfs[i]) & allowed)
            if (prev[w] == -2) {
              prev[w] = bfs[i];
              bfs.push_back(w);
            }
        if (prev[y] == -2) continue;
        std::vector<int> cycle{v};
        for (int w = y; w != -1; w = prev[w]) cycle.push_back(w);
        std::reverse(cycle.begin() + 1, cycle.end());
        return cycle;
      }
  }
  return {};
}

namespace {

using FillMask = std::array<std::uint64_t, 2>;

FillMask with_bit(FillMask m, int bit) {
  m[bit / 64] |= 1ull << (bit % 64);
  return m;
}

}  // namespace

std::vector<Triangulation> enumerate_minimal_triangulations(const LabeledGraph& g,
                                                            int max_non_edges) {
  if (is_chordal(g)) return {Triangulation{g, {}}};

  std::vector<std::pair<int, int>> nonedges = g.non_edges();
  int m = static_cast<int>(nonedges.size());
  if (m > max_non_edges || m > 128)
    fail(ErrorKind::TooLarge, "triangulation enumeration capped at " +
                                  std::to_string(std::min(max_non_edges, 128)) +
                                  " non-edges, got " + std::to_string(m));
  std::map<std::pair<int, int>, int> bit_of;
  for (int i = 0; i < m; ++i) bit_of[nonedges[i]] = i;

  std::set<FillMask> visited;
  std::vector<FillMask> stack{FillMask{0, 0}};
  visited.insert(FillMask{0, 0});
  std::vector<Triangulation> out;

  while (!stack.empty()) {
    FillMask mask = stack.back();
    stack.pop_back();
    Triangulation t{g, {}};
    for (int i = 0; i < m; ++i)
      if ((mask[i / 64] >> (i % 64)) & 1) t.fill.push_back(nonedges[i]);
    LabeledGraph h = t.filled();

    std::vector<int> cycle = find_chordless_cycle(h);
    if (cycle.empty()) {
      if (is_minimal_triangulation(t)) out.push_back(std::move(t));
      continue;
    }
    // Every triangulation of g with this partial fill adds a chord of the
    // cycle, so branching on all chords loses no minimal triangulation.
    int len = static_cast<int>(cycle.size());
    for (int i = 0; i < len; ++i)
      for (int j = i + 2; j < len; ++j) {
        if (i == 0 && j == len - 1) continue;
        int u = std::min(cycle[i], cycle[j]);
        int v = std::max(cycle[i], cycle[j]);
        FillMask child = with_bit(mask, bit_of.at({u, v}));
        if (visited.insert(child).second) stack.push_back(child);
      }
  }

  std::sort(out.begin(), out.end(),
            [](const Triangulation& a, const Triangulation& b) { return a.fill < b.fill; });
  return out;
}

bool is_proper(const Triangulation& t) {
  if (t.base.vertex_count() == 0) return true;
  if (!t.base.has_labels()) fail(ErrorKind::MissingLabels, "triangulation base has no labels");
  for (auto [u, v] : t.fill)
    if (t.base.label(u).character == t.base.label(v).character) return false;
  return true;
}

DisplayReport display_report(const Triangulation& t) {
  if (t.base.vertex_count() == 0) return {};
  if (!t.base.has_labels()) fail(ErrorKind::MissingLabels, "triangulation base has no labels");
  int nchars = 0;
  for (const PigVertex& pv : t.base.labels()) nchars = std::max(nchars, pv.character + 1);
  DisplayReport report;
  for (auto [u, v] : t.fill)
    if (t.base.label(u).character == t.base.label(v).character)
      report.broken.insert(t.base.label(u).character);
  report.displayed = VertexSet::first_n(nchars) - report.broken;
  return report;
}

std::string serialize_triangulation(const Triangulation& t, const CharacterSet& cs) {
  std::string out = "fill:";
  for (auto [u, v] : t.fill)
    out += " (" + pig_vertex_label(cs, u) + ")-(" + pig_vertex_label(cs, v) + ")";
  out += '\n';
  DisplayReport report = display_report(t);
  out += "displayed:";
  for (int c : report.displayed) out += " " + cs.character(c).name;
  out += "\nbroken:";
  for (int c : report.broken) out += " " + cs.character(c).name;
  out += '\n';
  return out;
}

std::string to_dot(const Triangulation& t, const CharacterSet& cs) {
  std::string out = "graph triangulation {\n  node [shape=ellipse];\n";
  for (int v = 0; v < t.base.vertex_count(); ++v)
    out += "  v" + std::to_string(v) + " [label=\"" + pig_vertex_label(cs, v) + "\"];\n";
  for (auto [u, v] : t.base.edges())
    out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + ";\n";
  for (auto [u, v] : t.fill)
    out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + " [style=dashed];\n";
  out += "}\n";
  return out;
}

}  // namespace uniphy
