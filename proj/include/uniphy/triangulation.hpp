#pragma once

#include <string>
#include <utility>
#include <vector>

#include "uniphy/graph.hpp"

namespace uniphy {

// A chordal supergraph of base given by its fill edges (sorted, disjoint
// from the base edges). base keeps its vertex labels, so filled() is again
// a labeled graph.
struct Triangulation {
  LabeledGraph base;
  std::vector<std::pair<int, int>> fill;

  LabeledGraph filled() const;

  friend bool operator==(const Triangulation& a, const Triangulation& b) {
    return a.base == b.base && a.fill == b.fill;
  }
};

// No single fill edge can be dropped while keeping the graph chordal; for
// triangulations this is equivalent to no proper fill subset sufficing.
// Throws NotChordal if t.filled() is not chordal.
bool is_minimal_triangulation(const Triangulation& t);

// All minimal triangulations, canonically sorted by fill list. Branches on
// the chords of a chordless cycle, so only fill subsets that can still
// become minimal are visited; every emitted leaf passes
// is_minimal_triangulation. Throws TooLarge when the base graph has more
// than max_non_edges missing edges (chordal inputs short-circuit first).
std::vector<Triangulation> enumerate_minimal_triangulations(const LabeledGraph& g,
                                                            int max_non_edges = 20);

// Shortest chordless cycle through the lowest witness vertex, empty when
// the graph is chordal.
std::vector<int> find_chordless_cycle(const LabeledGraph& g);

// True when no fill edge joins two cells of the same character.
// Throws MissingLabels if the base graph has no vertex labels.
bool is_proper(const Triangulation& t);

struct DisplayReport {
  VertexSet displayed;  // character indices
  VertexSet broken;
};

// A character breaks exactly when some fill edge joins two of its cells.
DisplayReport display_report(const Triangulation& t);

std::string serialize_triangulation(const Triangulation& t, const CharacterSet& cs);
std::string to_dot(const Triangulation& t, const CharacterSet& cs);

}  // namespace uniphy
