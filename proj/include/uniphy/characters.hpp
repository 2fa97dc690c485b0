#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "uniphy/vertex_set.hpp"

namespace uniphy {

// Ordered taxon universe; indices are stable and used everywhere downstream.
class TaxonSet {
 public:
  TaxonSet() = default;
  explicit TaxonSet(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(std::string_view name) const;

  friend bool operator==(const TaxonSet& a, const TaxonSet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

// Partition of a subset of the taxa into nonempty, pairwise disjoint cells.
// Cells hold taxon indices; cell order is preserved from the input.
struct PartialCharacter {
  std::string name;
  std::vector<VertexSet> cells;

  VertexSet support() const {
    VertexSet u;
    for (VertexSet c : cells) u |= c;
    return u;
  }
};

class CharacterSet {
 public:
  CharacterSet() = default;
  CharacterSet(TaxonSet taxa, std::vector<PartialCharacter> characters);

  const TaxonSet& taxa() const { return taxa_; }
  int character_count() const { return static_cast<int>(characters_.size()); }
  const PartialCharacter& character(int i) const { return characters_.at(i); }
  const std::vector<PartialCharacter>& characters() const { return characters_; }
  std::optional<int> character_index(std::string_view name) const;

  // Character set restricted to the characters whose indices are in keep;
  // taxa and names are preserved.
  CharacterSet restrict(VertexSet keep) const;

 private:
  TaxonSet taxa_;
  std::vector<PartialCharacter> characters_;
};

// One vertex of a partition intersection graph: cell #cell of character #chi.
struct PigVertex {
  int character = -1;
  int cell = -1;

  friend bool operator==(PigVertex a, PigVertex b) {
    return a.character == b.character && a.cell == b.cell;
  }
};

// Vertex numbering of the partition intersection graph of cs: cells in
// (character index, cell index) order.
int pig_vertex_count(const CharacterSet& cs);
PigVertex pig_vertex(const CharacterSet& cs, int vertex);
int pig_vertex_id(const CharacterSet& cs, PigVertex pv);

// "abc/chi1": concatenated cell member names, then the character name.
std::string pig_vertex_label(const CharacterSet& cs, int vertex);

// Text format, one character per line:
//
//   # comment
//   taxa: a b c d e        (optional, first content line only)
//   chi1: a b | c d
//
// Cell members are whitespace-separated names; cells are separated by '|'.
// The taxon set is the declared list plus undeclared members in order of
// first appearance.
CharacterSet parse_character_set(std::string_view text);
std::string serialize_character_set(const CharacterSet& cs);

}  // namespace uniphy
