#include <string>
#include <vector>

#include "doctest.h"
#include "support/checks.hpp"
#include "support/generators.hpp"
#include "uniphy/decide.hpp"

using namespace uniphy;
using testsup::error_kind;

namespace {

const char* kFigText =
    "taxa: a b c d e\n"
    "chi1: a b | c d\n"
    "chi2: a c | b d e\n"
    "chi3: a b | d e\n";

const char* kQuartetText =
    "taxa: a b c d\n"
    "c1: a b | c d\n"
    "c2: a | b c d\n"
    "c3: b | a c d\n"
    "c4: c | a b d\n"
    "c5: d | a b c\n";

const char* kQuartetConflictText =
    "taxa: a b c d\n"
    "c1: a b | c d\n"
    "c2: a | b c d\n"
    "c3: b | a c d\n"
    "c4: c | a b d\n"
    "c5: d | a b c\n"
    "c6: a c | b d\n";

// Oracle-side maximal-defining test: the subset pins exactly one tree and
// every strictly larger subset pins none.
bool oracle_maximal_defining(const XTreeUniverse& u, const CharacterSet& cs, VertexSet subset) {
  if (u.count_displaying(subset) != 1) return false;
  VertexSet all = VertexSet::first_n(cs.character_count());
  VertexSet rest = all - subset;
  std::vector<int> extra = rest.to_vector();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << extra.size()); ++mask) {
    VertexSet bigger = subset;
    for (std::size_t i = 0; i < extra.size(); ++i)
      if (mask >> i & 1) bigger.insert(extra[i]);
    if (u.count_displaying(bigger) >= 1) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("decide") {

TEST_CASE("figure instance is incompatible") {
  CharacterSet cs = parse_character_set(kFigText);
  CompatVerdict cv = is_compatible(cs);
  CHECK(!cv.compatible);
  CHECK(!cv.tree);
  CHECK(!cv.witness);
  REQUIRE(cv.obstruction);
  CHECK(!display_report(*cv.obstruction).broken.empty());

  DefinesVerdict dv = defines_unique(cs);
  CHECK(!dv.defines);
  CHECK(dv.failure == DecideFailure::NoDisplayingTriangulation);
  CHECK(!dv.conflicting.empty());

  OracleResult ore = oracle_defines(cs);
  CHECK(ore.tree_count == 0);
  CHECK(!ore.compatible());
}

TEST_CASE("quartet splits define their tree") {
  CharacterSet cs = parse_character_set(kQuartetText);
  DefinesVerdict dv = defines_unique(cs);
  REQUIRE(dv.defines);
  REQUIRE(dv.tree);
  XTree expected = parse_newick("((a,b),(c,d));", cs.taxa());
  CHECK(xtree_isomorphic(*dv.tree, expected));
  REQUIRE(dv.triangulation);
  CHECK(dv.triangulation->fill.empty());
  REQUIRE(dv.clique_tree);
  CHECK(dv.clique_tree->clique_tree_flag);

  FreeTernaryReport ft = is_free_ternary(*dv.tree);
  CHECK(ft.free_tree);
  CHECK(ft.ternary);
  for (int c = 0; c < cs.character_count(); ++c) CHECK(displays(*dv.tree, cs.character(c)));
  for (const VertexSet& s : distinguished_edges(*dv.tree, cs)) CHECK(!s.empty());

  CompatVerdict cv = is_compatible(cs);
  CHECK(cv.compatible);
  REQUIRE(cv.tree);
  CHECK(xtree_isomorphic(*cv.tree, expected));

  OracleResult ore = oracle_defines(cs);
  CHECK(ore.tree_count == 1);
  CHECK(xtree_isomorphic(ore.trees[0], *dv.tree));
}

TEST_CASE("a single binary character defines the cherry") {
  CharacterSet cs = parse_character_set("chi1: a | b\n");
  DefinesVerdict dv = defines_unique(cs);
  REQUIRE(dv.defines);
  CHECK(to_newick(*dv.tree, cs.taxa()) == "(a,b);");
  CHECK(oracle_defines(cs).tree_count == 1);
}

TEST_CASE("degenerate taxon sets") {
  CharacterSet one(TaxonSet({"a"}), {});
  DefinesVerdict dv1 = defines_unique(one);
  REQUIRE(dv1.defines);
  CHECK(to_newick(*dv1.tree, one.taxa()) == "a;");
  CHECK(oracle_defines(one).tree_count == 1);

  CharacterSet two(TaxonSet({"a", "b"}), {});
  DefinesVerdict dv2 = defines_unique(two);
  CHECK(!dv2.defines);
  CHECK(dv2.failure == DecideFailure::WrongLeafCount);
  CHECK(oracle_defines(two).tree_count == 2);

  CharacterSet onecell = parse_character_set("taxa: a b\nchi1: a b\n");
  DefinesVerdict dv3 = defines_unique(onecell);
  CHECK(!dv3.defines);
  CHECK(dv3.failure == DecideFailure::WrongLeafCount);
  CHECK(is_compatible(onecell).compatible);
  CHECK(oracle_defines(onecell).tree_count == 2);
}

TEST_CASE("max compatible subsets on the figure") {
  CharacterSet cs = parse_character_set(kFigText);
  MaxCompatResult mc = max_compatible_subsets(cs);
  CHECK(mc.size == 2);
  REQUIRE(mc.subsets == std::vector<VertexSet>{VertexSet::of({0, 2}), VertexSet::of({1, 2})});
  REQUIRE(mc.witnesses.size() == 2);
  for (std::size_t i = 0; i < mc.subsets.size(); ++i)
    CHECK(display_report(mc.witnesses[i]).displayed == mc.subsets[i]);

  // Neither maximum compatible pair defines: the qualifying triangulations
  // have two-leaf clique trees, nowhere near five leaves.
  SubsetVerdict sv = is_maximal_defining_subset(cs, VertexSet::of({0, 2}));
  CHECK(!sv.maximal_defining);
  CHECK(sv.detail.failure == DecideFailure::WrongLeafCount);
  CHECK(find_maximal_defining_subsets(cs).empty());
}

TEST_CASE("maximal defining subsets of a conflicted quartet") {
  CharacterSet cs = parse_character_set(kQuartetConflictText);
  CHECK(!defines_unique(cs).defines);

  std::vector<SubsetVerdict> subs = find_maximal_defining_subsets(cs);
  REQUIRE(subs.size() == 2);
  CHECK(subs[0].subset == VertexSet::first_n(5));
  CHECK(subs[1].subset == (VertexSet::first_n(6) - VertexSet::single(0)));
  CHECK(to_newick(*subs[0].detail.tree, cs.taxa()) == "((a,b),(c,d));");
  CHECK(to_newick(*subs[1].detail.tree, cs.taxa()) == "((a,c),(b,d));");

  SubsetVerdict sv = is_maximal_defining_subset(cs, VertexSet::first_n(5));
  CHECK(sv.maximal_defining);

  CharacterSet quartet = parse_character_set(kQuartetText);
  std::vector<SubsetVerdict> whole = find_maximal_defining_subsets(quartet);
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].subset == VertexSet::first_n(5));
  CHECK(is_maximal_defining_subset(quartet, VertexSet::first_n(5)).maximal_defining);

  CHECK(error_kind([&] { is_maximal_defining_subset(cs, VertexSet::single(9)); }) ==
        ErrorKind::UnknownCharacter);
}

TEST_CASE("xtree universe enumeration") {
  CharacterSet empty3(TaxonSet({"a", "b", "c"}), {});
  XTreeUniverse u = enumerate_xtree_universe(empty3);
  CHECK(u.trees.size() == 8);
  for (const XTree& xt : u.trees) CHECK(validate_xtree(xt));
  for (std::size_t i = 0; i < u.trees.size(); ++i)
    for (std::size_t j = i + 1; j < u.trees.size(); ++j)
      CHECK(!xtree_isomorphic(u.trees[i], u.trees[j]));

  // The default node bound already saturates the universe.
  CHECK(enumerate_xtree_universe(empty3, 5).trees.size() == 8);

  CharacterSet cherry = parse_character_set("chi1: a | b\n");
  XTreeUniverse uc = enumerate_xtree_universe(cherry);
  CHECK(uc.count_displaying(VertexSet::single(0)) == 1);
  CHECK(uc.count_displaying(VertexSet()) == static_cast<long long>(uc.trees.size()));
  CHECK(uc.first_displaying(VertexSet::single(0), 5).size() == 1);

  CharacterSet wide(TaxonSet(testgen::taxon_names(7)), {});
  CHECK(error_kind([&] { enumerate_xtree_universe(wide); }) == ErrorKind::TooLarge);
  CHECK(error_kind([&] { enumerate_xtree_universe(empty3, 13); }) == ErrorKind::TooLarge);
}

TEST_CASE("checker agrees with the oracle on random instances") {
  testgen::Rng rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    CharacterSet cs = testgen::random_character_set(rng, 4, 3);
    XTreeUniverse u = enumerate_xtree_universe(cs);
    OracleResult ore = oracle_defines(cs);

    DefinesVerdict dv = defines_unique(cs, 128);
    CHECK(dv.defines == ore.defines());
    if (dv.defines && ore.defines()) CHECK(xtree_isomorphic(*dv.tree, ore.trees[0]));

    CompatVerdict cv = is_compatible(cs, 128);
    CHECK(cv.compatible == ore.compatible());
    if (cv.compatible) {
      REQUIRE(cv.tree);
      for (int c = 0; c < cs.character_count(); ++c) CHECK(displays(*cv.tree, cs.character(c)));
    }

    // Maximum compatible subsets against the universe.
    MaxCompatResult mc = max_compatible_subsets(cs, 128);
    int nc = cs.character_count();
    std::vector<VertexSet> best;
    int best_size = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nc); ++mask) {
      VertexSet s;
      for (int i = 0; i < nc; ++i)
        if (mask >> i & 1) s.insert(i);
      if (u.count_displaying(s) == 0) continue;
      if (s.size() > best_size) {
        best_size = s.size();
        best.clear();
      }
      if (s.size() == best_size) best.push_back(s);
    }
    std::sort(best.begin(), best.end(), lex_less);
    CHECK(mc.size == best_size);
    CHECK(mc.subsets == best);
  }
}

TEST_CASE("maximal defining agrees with the oracle on random instances") {
  testgen::Rng rng(72);
  for (int trial = 0; trial < 12; ++trial) {
    CharacterSet cs = testgen::random_character_set(rng, 4, 3);
    XTreeUniverse u = enumerate_xtree_universe(cs);
    int nc = cs.character_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nc); ++mask) {
      VertexSet s;
      for (int i = 0; i < nc; ++i)
        if (mask >> i & 1) s.insert(i);
      CHECK(is_maximal_defining_subset(cs, s, 128).maximal_defining ==
            oracle_maximal_defining(u, cs, s));
    }
  }
}

TEST_CASE("the enumeration budget surfaces as TooLarge") {
  CharacterSet cs = parse_character_set(
      "taxa: a b c d e f g h i\n"
      "chi1: a b | c d\n"
      "chi2: a c | b d e\n"
      "chi3: a b | d e\n"
      "chi4: f | g\n"
      "chi5: h | i\n");
  CHECK(error_kind([&] { defines_unique(cs); }) == ErrorKind::TooLarge);
  CHECK(!defines_unique(cs, 40).defines);
}

TEST_CASE("report formats") {
  CharacterSet quartet = parse_character_set(kQuartetText);
  CHECK(report(defines_unique(quartet), quartet) ==
        "defines: true\n"
        "tree: ((a,b),(c,d));\n"
        "triangulation.fill:\n");
  CHECK(report(oracle_defines(quartet), quartet) ==
        "tree-count: 1\n"
        "compatible: true\n"
        "defines: true\n"
        "tree.1: ((a,b),(c,d));\n");

  CharacterSet fig = parse_character_set(kFigText);
  CHECK(report(defines_unique(fig), fig) ==
        "defines: false\n"
        "failure: no-displaying-triangulation\n"
        "example.fill: (ab/chi1)-(cd/chi1) (cd/chi1)-(ab/chi3)\n"
        "example.broken: chi1\n");
  CHECK(report(is_compatible(fig), fig) ==
        "compatible: false\n"
        "obstruction.fill: (ab/chi1)-(cd/chi1) (cd/chi1)-(ab/chi3)\n"
        "obstruction.broken: chi1\n");
  CHECK(report(max_compatible_subsets(fig), fig) ==
        "max-size: 2\n"
        "subsets: 2\n"
        "subset.1: chi1 chi3\n"
        "subset.1.fill: (ac/chi2)-(bde/chi2)\n"
        "subset.2: chi2 chi3\n"
        "subset.2.fill: (ab/chi1)-(cd/chi1) (cd/chi1)-(ab/chi3)\n");
}

}  // TEST_SUITE
