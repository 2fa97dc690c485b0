#include <algorithm>
#include <climits>

#include "uniphy/error.hpp"
#include "uniphy/phylo.hpp"

namespace uniphy {

namespace {

std::vector<int> newick_centers(const XTree& xt) {
  int n = xt.node_count;
  std::vector<int> deg(n), layer;
  std::vector<bool> removed(n, false);
  for (int v = 0; v < n; ++v) {
    deg[v] = xt.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
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
  return centers;
}

struct Rendered {
  std::string text;
  int min_taxon = INT_MAX;
};

Rendered render(const XTree& xt, const TaxonSet& taxa, int node, int parent) {
  std::vector<Rendered> children;
  for (int w : xt.neighbors(node))
    if (w != parent) children.push_back(render(xt, taxa, w, node));
  std::sort(children.begin(), children.end(), [](const Rendered& a, const Rendered& b) {
    if (a.min_taxon != b.min_taxon) return a.min_taxon < b.min_taxon;
    return a.text < b.text;
  });

  Rendered out;
  std::string label;
  for (int t : xt.taxa_at(node)) {
    if (!label.empty()) label += '+';
    label += taxa.name(t);
    out.min_taxon = std::min(out.min_taxon, t);
  }
  for (const Rendered& c : children) out.min_taxon = std::min(out.min_taxon, c.min_taxon);

  if (children.empty()) {
    out.text = label;
    return out;
  }
  out.text = "(";
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (i > 0) out.text += ',';
    out.text += children[i].text;
  }
  out.text += ')';
  out.text += label;
  return out;
}

}  // namespace

std::string to_newick(const XTree& xt, const TaxonSet& taxa) {
  std::vector<int> centers = newick_centers(xt);
  if (centers.size() == 1) return render(xt, taxa, centers[0], -1).text + ";";
  Rendered a = render(xt, taxa, centers[0], centers[1]);
  Rendered b = render(xt, taxa, centers[1], centers[0]);
  if (b.min_taxon < a.min_taxon) std::swap(a, b);
  return "(" + a.text + "," + b.text + ");";
}

namespace {

struct NewickParser {
  std::string_view text;
  std::size_t pos = 0;
  const TaxonSet& taxa;
  XTree tree;
  std::vector<bool> taxon_seen;

  explicit NewickParser(std::string_view t, const TaxonSet& tx)
      : text(t), taxa(tx), taxon_seen(tx.size(), false) {}

  [[noreturn]] void bail(const std::string& message) {
    fail(ErrorKind::ParseError, "newick position " + std::to_string(pos + 1) + ": " + message);
  }

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  int new_node() {
    return tree.node_count++;
  }

  // Returns the node id; registers edges child-to-parent later at the call
  // site so ids follow completion order.
  int parse_node() {
    skip_space();
    std::vector<int> children;
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      children.push_back(parse_node());
      skip_space();
      while (pos < text.size() && text[pos] == ',') {
        ++pos;
        children.push_back(parse_node());
        skip_space();
      }
      if (pos >= text.size() || text[pos] != ')') bail("expected ')'");
      ++pos;
    }
    std::string label = parse_label();
    int node = new_node();
    for (int c : children) tree.edges.emplace_back(std::min(c, node), std::max(c, node));
    attach_taxa(node, label);
    return node;
  }

  std::string parse_label() {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != '(' && text[pos] != ')' && text[pos] != ',' &&
           text[pos] != ';' && !std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    return std::string(text.substr(start, pos - start));
  }

  void attach_taxa(int node, const std::string& label) {
    if (label.empty()) return;
    std::size_t i = 0;
    while (i <= label.size()) {
      std::size_t j = label.find('+', i);
      if (j == std::string::npos) j = label.size();
      std::string name = label.substr(i, j - i);
      if (name.empty()) bail("empty taxon name in label");
      auto idx = taxa.index_of(name);
      if (!idx) fail(ErrorKind::UnknownTaxon, "unknown taxon '" + name + "'");
      if (taxon_seen[*idx]) fail(ErrorKind::DuplicateTaxon, "taxon '" + name + "' twice");
      taxon_seen[*idx] = true;
      while (static_cast<int>(tree.phi.size()) <= *idx) tree.phi.push_back(-1);
      tree.phi[*idx] = node;
      i = j + 1;
      if (j == label.size()) break;
    }
  }
};

}  // namespace

XTree parse_newick(std::string_view text, const TaxonSet& taxa) {
  NewickParser parser(text, taxa);
  int root = parser.parse_node();
  parser.skip_space();
  if (parser.pos >= text.size() || text[parser.pos] != ';')
    parser.bail("expected ';'");
  ++parser.pos;
  parser.skip_space();
  if (parser.pos != text.size()) parser.bail("trailing input");

  XTree xt = parser.tree;
  for (int t = 0; t < taxa.size(); ++t)
    if (t >= xt.taxon_count() || xt.phi[t] < 0)
      fail(ErrorKind::ParseError, "taxon '" + taxa.name(t) + "' does not appear");
  while (xt.taxon_count() < taxa.size()) xt.phi.push_back(-1);

  // A bare unlabeled degree-2 root is the virtual root of an edge-rooted
  // rendering; splice it back out.
  if (xt.node_count >= 2 && xt.taxa_at(root).empty()) {
    std::vector<int> nb = xt.neighbors(root);
    if (nb.size() == 2) {
      XTree spliced;
      spliced.node_count = xt.node_count - 1;
      for (auto [u, v] : xt.edges)
        if (u != root && v != root) spliced.edges.emplace_back(u, v);
      spliced.edges.emplace_back(std::min(nb[0], nb[1]), std::max(nb[0], nb[1]));
      std::sort(spliced.edges.begin(), spliced.edges.end());
      spliced.phi = xt.phi;
      xt = spliced;
    }
  }
  std::sort(xt.edges.begin(), xt.edges.end());
  if (!validate_xtree(xt)) fail(ErrorKind::ParseError, "not a valid labeled tree");
  return xt;
}

}  // namespace uniphy
