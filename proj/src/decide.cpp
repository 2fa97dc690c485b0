#include "uniphy/decide.hpp"

#include <algorithm>
#include <unordered_set>

#include "uniphy/error.hpp"

namespace uniphy {

namespace {

XTree single_node_tree(int taxon_count) {
  XTree xt;
  xt.node_count = 1;
  xt.phi.assign(taxon_count, 0);
  return xt;
}

VertexSet all_characters(const CharacterSet& cs) {
  return VertexSet::first_n(cs.character_count());
}

bool unique_clique_tree(const LabeledGraph& h) {
  if (h.vertex_count() == 0 || !h.connected())
    return enumerate_clique_trees(h, 2).size() == 1;
  return is_ur_chordal(h);
}

// Conditions shared by defines_unique (subset = all characters) and the
// maximal-defining-subset test: a unique minimal triangulation displaying
// the subset and nothing less, a unique ternary clique tree with leaf count
// |X|, and no contractable edge.
DefinesVerdict check_conditions(const CharacterSet& cs, VertexSet subset,
                                const std::vector<Triangulation>& mintris) {
  DefinesVerdict v;

  std::vector<const Triangulation*> displaying;
  for (const Triangulation& t : mintris)
    if (subset.is_subset_of(display_report(t).displayed)) displaying.push_back(&t);
  if (displaying.empty()) {
    v.failure = DecideFailure::NoDisplayingTriangulation;
    if (!mintris.empty()) v.conflicting.push_back(mintris.front());
    return v;
  }
  if (displaying.size() >= 2) {
    v.failure = DecideFailure::MultipleDisplayingTriangulations;
    v.conflicting.push_back(*displaying[0]);
    v.conflicting.push_back(*displaying[1]);
    return v;
  }
  const Triangulation& h = *displaying.front();
  if (display_report(h).displayed != subset) {
    v.failure = DecideFailure::ExtraDisplayedCharacters;
    v.conflicting.push_back(h);
    return v;
  }
  v.triangulation = h;

  LabeledGraph hg = h.filled();
  if (!unique_clique_tree(hg)) {
    v.failure = DecideFailure::MultipleCliqueTrees;
    std::vector<CliqueTreeRep> two = enumerate_clique_trees(hg, 2);
    v.conflicting_trees.assign(two.begin(), two.end());
    return v;
  }
  CliqueTreeRep ct = clique_tree(hg);
  v.clique_tree = ct;

  LeafageReport lr = ur_leafage_and_ternary(ct);
  v.leafage = lr;
  if (lr.leafage != cs.taxa().size()) {
    v.failure = DecideFailure::WrongLeafCount;
    return v;
  }
  if (!lr.ternary) {
    v.failure = DecideFailure::NotTernary;
    return v;
  }

  std::vector<VertexSet> inc = incontractable_edges(ct, cs, subset);
  for (std::size_t e = 0; e < inc.size(); ++e)
    if (inc[e].empty()) {
      v.failure = DecideFailure::ContractableEdge;
      v.contractable_edge = ct.tree_edges[e];
      return v;
    }

  v.defines = true;
  // The witness comes from the instance restricted to the displayed
  // characters: dropping the broken characters' vertices keeps a minimal
  // triangulation, now proper, of the restricted intersection graph. With
  // subset == all characters the restriction is the identity.
  VertexSet dropped;
  for (int u = 0; u < hg.vertex_count(); ++u)
    if (!subset.contains(hg.label(u).character)) dropped.insert(u);
  CharacterSet restricted = cs.restrict(subset);
  LabeledGraph h2 = delete_vertices(hg, dropped);
  Triangulation t2{build_pig(restricted), {}};
  for (auto [a, b] : h2.edges())
    if (!t2.base.has_edge(a, b)) t2.fill.emplace_back(a, b);
  v.tree = induce_xtrees(clique_tree(t2.filled()), restricted).front();
  return v;
}

}  // namespace

CompatVerdict is_compatible(const CharacterSet& cs, int cap) {
  CompatVerdict v;
  if (cs.character_count() == 0) {
    v.compatible = true;
    v.witness = Triangulation{build_pig(cs), {}};
    v.tree = single_node_tree(cs.taxa().size());
    return v;
  }
  LabeledGraph pig = build_pig(cs);
  std::vector<Triangulation> mintris = enumerate_minimal_triangulations(pig, cap);
  for (const Triangulation& t : mintris)
    if (is_proper(t)) {
      v.compatible = true;
      v.witness = t;
      v.tree = induce_xtrees(clique_tree(t.filled()), cs).front();
      return v;
    }
  v.obstruction = mintris.front();
  return v;
}

DefinesVerdict defines_unique(const CharacterSet& cs, int cap) {
  if (cs.taxa().size() == 0) {
    DefinesVerdict v;
    v.defines = true;
    v.tree = single_node_tree(0);
    v.triangulation = Triangulation{build_pig(cs), {}};
    return v;
  }
  LabeledGraph pig = build_pig(cs);
  std::vector<Triangulation> mintris = enumerate_minimal_triangulations(pig, cap);
  return check_conditions(cs, all_characters(cs), mintris);
}

MaxCompatResult max_compatible_subsets(const CharacterSet& cs, int cap) {
  MaxCompatResult result;
  LabeledGraph pig = build_pig(cs);
  std::vector<Triangulation> mintris = enumerate_minimal_triangulations(pig, cap);
  for (const Triangulation& t : mintris)
    result.size = std::max(result.size, display_report(t).displayed.size());
  for (const Triangulation& t : mintris) {
    VertexSet displayed = display_report(t).displayed;
    if (displayed.size() != result.size) continue;
    bool fresh = true;
    for (VertexSet s : result.subsets)
      if (s == displayed) fresh = false;
    if (!fresh) continue;
    result.subsets.push_back(displayed);
    result.witnesses.push_back(t);
  }
  std::vector<int> order(result.subsets.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return lex_less(result.subsets[a], result.subsets[b]); });
  MaxCompatResult sorted;
  sorted.size = result.size;
  for (int i : order) {
    sorted.subsets.push_back(result.subsets[i]);
    sorted.witnesses.push_back(result.witnesses[i]);
  }
  return sorted;
}

SubsetVerdict is_maximal_defining_subset(const CharacterSet& cs, VertexSet subset, int cap) {
  for (int c : subset)
    if (c >= cs.character_count())
      fail(ErrorKind::UnknownCharacter, "character index " + std::to_string(c) + " out of range");
  SubsetVerdict v;
  v.subset = subset;
  if (cs.taxa().size() == 0) {
    v.detail.defines = true;
    v.detail.tree = single_node_tree(0);
    v.maximal_defining = true;
    return v;
  }
  LabeledGraph pig = build_pig(cs);
  std::vector<Triangulation> mintris = enumerate_minimal_triangulations(pig, cap);
  v.detail = check_conditions(cs, subset, mintris);
  v.maximal_defining = v.detail.defines;
  return v;
}

std::vector<SubsetVerdict> find_maximal_defining_subsets(const CharacterSet& cs, int cap) {
  LabeledGraph pig = build_pig(cs);
  std::vector<Triangulation> mintris = enumerate_minimal_triangulations(pig, cap);

  std::vector<VertexSet> candidates;
  for (const Triangulation& t : mintris) {
    VertexSet displayed = display_report(t).displayed;
    bool fresh = true;
    for (VertexSet s : candidates)
      if (s == displayed) fresh = false;
    if (fresh) candidates.push_back(displayed);
  }
  std::sort(candidates.begin(), candidates.end(), lex_less);

  std::vector<SubsetVerdict> out;
  for (VertexSet cand : candidates) {
    SubsetVerdict v;
    v.subset = cand;
    v.detail = check_conditions(cs, cand, mintris);
    v.maximal_defining = v.detail.defines;
    if (v.maximal_defining) out.push_back(std::move(v));
  }
  return out;
}

namespace {

// Unlabeled tree shapes up to isomorphism, by node count. Every shape on m
// nodes arises from one on m - 1 by attaching a leaf, so leaf addition plus
// canonical dedupe is exhaustive.
const std::vector<std::vector<XTree>>& tree_shapes() {
  static const std::vector<std::vector<XTree>> shapes = [] {
    constexpr int kMax = 12;
    std::vector<std::vector<XTree>> by_size(kMax + 1);
    XTree lone;
    lone.node_count = 1;
    by_size[1].push_back(lone);
    for (int m = 2; m <= kMax; ++m) {
      std::unordered_set<std::string> seen;
      for (const XTree& base : by_size[m - 1])
        for (int v = 0; v < base.node_count; ++v) {
          XTree grown = base;
          grown.node_count = m;
          grown.edges.emplace_back(v, m - 1);
          std::sort(grown.edges.begin(), grown.edges.end());
          if (seen.insert(xtree_canonical_form(grown)).second) by_size[m].push_back(grown);
        }
    }
    return by_size;
  }();
  return shapes;
}

}  // namespace

XTreeUniverse enumerate_xtree_universe(const CharacterSet& cs, int node_cap) {
  int nx = cs.taxa().size();
  if (nx > 6) fail(ErrorKind::TooLarge, "exhaustive search supports at most 6 taxa");
  if (node_cap == 0) node_cap = std::max(1, 2 * nx - 2);
  if (node_cap > 12) fail(ErrorKind::TooLarge, "node cap exceeds cached tree shapes");

  XTreeUniverse universe;
  std::unordered_set<std::string> seen;
  std::vector<int> phi(nx, -1);

  for (int m = 1; m <= node_cap; ++m) {
    for (const XTree& shape : tree_shapes()[m]) {
      VertexSet mandatory;  // nodes that must receive a taxon
      if (m >= 2)
        for (int v = 0; v < m; ++v)
          if (shape.degree(v) <= 2) mandatory.insert(v);
      if (mandatory.size() > nx) continue;

      auto assign = [&](auto&& self, int taxon, VertexSet unhit) -> void {
        if (nx - taxon < unhit.size()) return;
        if (taxon == nx) {
          XTree xt = shape;
          xt.phi = phi;
          if (seen.insert(xtree_canonical_form(xt)).second) {
            VertexSet displayed;
            for (int c = 0; c < cs.character_count(); ++c)
              if (displays(xt, cs.character(c))) displayed.insert(c);
            universe.trees.push_back(std::move(xt));
            universe.displayed.push_back(displayed);
          }
          return;
        }
        for (int v = 0; v < m; ++v) {
          phi[taxon] = v;
          VertexSet next = unhit;
          next.erase(v);
          self(self, taxon + 1, next);
        }
        phi[taxon] = -1;
      };
      assign(assign, 0, mandatory);
    }
  }
  return universe;
}

long long XTreeUniverse::count_displaying(VertexSet chars) const {
  long long count = 0;
  for (VertexSet d : displayed)
    if (chars.is_subset_of(d)) ++count;
  return count;
}

std::vector<XTree> XTreeUniverse::first_displaying(VertexSet chars, std::size_t limit) const {
  std::vector<XTree> out;
  for (std::size_t i = 0; i < trees.size() && out.size() < limit; ++i)
    if (chars.is_subset_of(displayed[i])) out.push_back(trees[i]);
  return out;
}

OracleResult oracle_defines(const CharacterSet& cs, int node_cap) {
  XTreeUniverse universe = enumerate_xtree_universe(cs, node_cap);
  OracleResult result;
  VertexSet all = all_characters(cs);
  result.tree_count = universe.count_displaying(all);
  result.trees = universe.first_displaying(all, 2);
  return result;
}

}  // namespace uniphy
