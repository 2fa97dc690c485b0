#include "uniphy/characters.hpp"

#include <algorithm>
#include <sstream>

#include "uniphy/error.hpp"

namespace uniphy {

TaxonSet::TaxonSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (static_cast<int>(names_.size()) > VertexSet::kCapacity)
    fail(ErrorKind::TooLarge, "taxon set exceeds " + std::to_string(VertexSet::kCapacity));
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    if (names_[i].empty()) fail(ErrorKind::ParseError, "empty taxon name");
    if (!index_.emplace(names_[i], i).second)
      fail(ErrorKind::DuplicateTaxon, "duplicate taxon '" + names_[i] + "'");
  }
}

std::optional<int> TaxonSet::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

void validate_character(const TaxonSet& taxa, const PartialCharacter& chi) {
  if (chi.cells.empty())
    fail(ErrorKind::EmptySet, "character '" + chi.name + "' has no cells");
  VertexSet seen;
  for (VertexSet cell : chi.cells) {
    if (cell.empty()) fail(ErrorKind::EmptySet, "character '" + chi.name + "' has an empty cell");
    if (cell.intersects(seen))
      fail(ErrorKind::OverlappingCells, "cells of character '" + chi.name + "' overlap");
    if (!cell.is_subset_of(VertexSet::first_n(taxa.size())))
      fail(ErrorKind::UnknownTaxon, "character '" + chi.name + "' references an unknown taxon");
    seen |= cell;
  }
}

}  // namespace

CharacterSet::CharacterSet(TaxonSet taxa, std::vector<PartialCharacter> characters)
    : taxa_(std::move(taxa)), characters_(std::move(characters)) {
  std::vector<std::string> names;
  for (const PartialCharacter& chi : characters_) {
    if (chi.name.empty()) fail(ErrorKind::ParseError, "empty character name");
    if (std::find(names.begin(), names.end(), chi.name) != names.end())
      fail(ErrorKind::DuplicateCharacter, "duplicate character '" + chi.name + "'");
    names.push_back(chi.name);
    validate_character(taxa_, chi);
  }
  if (pig_vertex_count(*this) > VertexSet::kCapacity)
    fail(ErrorKind::TooLarge, "partition intersection graph exceeds " +
                                  std::to_string(VertexSet::kCapacity) + " vertices");
}

std::optional<int> CharacterSet::character_index(std::string_view name) const {
  for (int i = 0; i < character_count(); ++i)
    if (characters_[i].name == name) return i;
  return std::nullopt;
}

CharacterSet CharacterSet::restrict(VertexSet keep) const {
  std::vector<PartialCharacter> kept;
  for (int i : keep) {
    if (i >= character_count())
      fail(ErrorKind::UnknownCharacter, "character index " + std::to_string(i) + " out of range");
    kept.push_back(characters_[i]);
  }
  return CharacterSet(taxa_, std::move(kept));
}

int pig_vertex_count(const CharacterSet& cs) {
  int n = 0;
  for (const PartialCharacter& chi : cs.characters()) n += static_cast<int>(chi.cells.size());
  return n;
}

PigVertex pig_vertex(const CharacterSet& cs, int vertex) {
  int base = 0;
  for (int c = 0; c < cs.character_count(); ++c) {
    int ncells = static_cast<int>(cs.character(c).cells.size());
    if (vertex < base + ncells) return PigVertex{c, vertex - base};
    base += ncells;
  }
  fail(ErrorKind::InvalidArgument, "vertex " + std::to_string(vertex) + " out of range");
}

int pig_vertex_id(const CharacterSet& cs, PigVertex pv) {
  int base = 0;
  for (int c = 0; c < pv.character; ++c) base += static_cast<int>(cs.character(c).cells.size());
  return base + pv.cell;
}

std::string pig_vertex_label(const CharacterSet& cs, int vertex) {
  PigVertex pv = pig_vertex(cs, vertex);
  std::string out;
  for (int t : cs.character(pv.character).cells[pv.cell]) out += cs.taxa().name(t);
  out += '/';
  out += cs.character(pv.character).name;
  return out;
}

namespace {

struct Token {
  std::string text;
  int column = 0;
};

[[noreturn]] void parse_fail(int line, int column, const std::string& message) {
  fail(ErrorKind::ParseError,
       "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message);
}

std::vector<Token> split_tokens(const std::string& s, int offset) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    out.push_back(Token{s.substr(i, j - i), offset + static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

}  // namespace

CharacterSet parse_character_set(std::string_view text) {
  std::vector<std::string> taxa_names;
  std::unordered_map<std::string, int> taxon_index;
  auto intern_taxon = [&](const std::string& name) {
    auto it = taxon_index.find(name);
    if (it != taxon_index.end()) return it->second;
    int id = static_cast<int>(taxa_names.size());
    taxa_names.push_back(name);
    taxon_index.emplace(name, id);
    return id;
  };

  struct RawCharacter {
    std::string name;
    std::vector<std::vector<int>> cells;
    int line = 0;
  };
  std::vector<RawCharacter> raw;
  bool saw_content = false;

  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (size_t hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;

    size_t colon = line.find(':');
    if (colon == std::string::npos) parse_fail(lineno, static_cast<int>(first) + 1, "expected 'name:'");
    std::string name = line.substr(first, colon - first);
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
    if (name.empty()) parse_fail(lineno, static_cast<int>(first) + 1, "empty name before ':'");
    if (name.find('|') != std::string::npos)
      parse_fail(lineno, static_cast<int>(first) + 1, "'|' not allowed in a name");
    std::string rest = line.substr(colon + 1);
    int rest_offset = static_cast<int>(colon) + 1;

    if (!saw_content && name == "taxa") {
      saw_content = true;
      std::vector<Token> toks = split_tokens(rest, rest_offset);
      for (const Token& t : toks) {
        if (taxon_index.count(t.text)) parse_fail(lineno, t.column, "duplicate taxon '" + t.text + "'");
        intern_taxon(t.text);
      }
      continue;
    }
    saw_content = true;

    RawCharacter rc;
    rc.name = name;
    rc.line = lineno;
    std::vector<int> cell;
    size_t i = 0;
    size_t cell_start = 0;
    auto flush_cell = [&](size_t end_pos) {
      std::vector<Token> toks = split_tokens(rest.substr(cell_start, end_pos - cell_start),
                                             rest_offset + static_cast<int>(cell_start));
      if (toks.empty()) parse_fail(lineno, rest_offset + static_cast<int>(cell_start) + 1, "empty cell");
      cell.clear();
      for (const Token& t : toks) cell.push_back(intern_taxon(t.text));
      rc.cells.push_back(cell);
    };
    for (i = 0; i <= rest.size(); ++i) {
      if (i == rest.size() || rest[i] == '|') {
        flush_cell(i);
        cell_start = i + 1;
      }
    }
    raw.push_back(std::move(rc));
  }

  if (static_cast<int>(taxa_names.size()) > VertexSet::kCapacity)
    fail(ErrorKind::TooLarge, "taxon set exceeds " + std::to_string(VertexSet::kCapacity));

  std::vector<PartialCharacter> characters;
  for (const RawCharacter& rc : raw) {
    PartialCharacter chi;
    chi.name = rc.name;
    VertexSet seen;
    for (const std::vector<int>& cell : rc.cells) {
      VertexSet cs;
      for (int t : cell) {
        if (cs.contains(t))
          fail(ErrorKind::DuplicateTaxon, "line " + std::to_string(rc.line) + ": taxon '" +
                                              taxa_names[t] + "' repeated in a cell of '" + rc.name + "'");
        if (seen.contains(t))
          fail(ErrorKind::OverlappingCells, "line " + std::to_string(rc.line) + ": taxon '" +
                                                taxa_names[t] + "' in two cells of '" + rc.name + "'");
        cs.insert(t);
      }
      seen |= cs;
      chi.cells.push_back(cs);
    }
    characters.push_back(std::move(chi));
  }

  return CharacterSet(TaxonSet(std::move(taxa_names)), std::move(characters));
}

std::string serialize_character_set(const CharacterSet& cs) {
  std::string out = "taxa:";
  for (const std::string& n : cs.taxa().names()) {
    out += ' ';
    out += n;
  }
  out += '\n';
  for (const PartialCharacter& chi : cs.characters()) {
    out += chi.name;
    out += ':';
    for (size_t c = 0; c < chi.cells.size(); ++c) {
      if (c > 0) out += " |";
      for (int t : chi.cells[c]) {
        out += ' ';
        out += cs.taxa().name(t);
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace uniphy
