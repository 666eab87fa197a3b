#include "tld.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <tuple>

#include "torihedra/errors.hpp"

namespace torihedra::detail {

namespace {

struct Token {
  std::string_view text;
  int column = 0;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' && line[j] != '#')
      ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

int to_int(const Token& t, int line) {
  int value = 0;
  const char* begin = t.text.data();
  const char* end = begin + t.text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw ParseError(line, t.column, "expected an integer, got '" + std::string(t.text) + "'");
  return value;
}

// Parses "<id>.<slot>"; column points at the offending part.
std::pair<int, int> to_endpoint(const Token& t, int line) {
  const auto dot = t.text.find('.');
  if (dot == std::string_view::npos)
    throw ParseError(line, t.column, "expected <id>.<slot>, got '" + std::string(t.text) + "'");
  const Token id{t.text.substr(0, dot), t.column};
  const Token slot{t.text.substr(dot + 1), t.column + static_cast<int>(dot) + 1};
  return {to_int(id, line), to_int(slot, line)};
}

void expect_count(const std::vector<Token>& toks, std::size_t n, int line, std::string_view what) {
  if (toks.size() != n) {
    const int col = toks.size() > n ? toks[n].column : toks.back().column;
    throw ParseError(line, col,
                     std::string(what) + " expects " + std::to_string(n - 1) + " arguments");
  }
}

}  // namespace

TldDocument parse_tld(std::string_view text, std::string_view node_keyword) {
  const std::string_view value_keyword = node_keyword == "crossing" ? "over" : "valence";
  TldDocument doc;
  bool header = false;
  bool lattice_seen = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    const auto toks = tokenize(line);
    if (toks.empty()) {
      if (nl == text.size()) break;
      continue;
    }
    const std::string_view kw = toks[0].text;
    if (!header) {
      if (kw != "tld") throw ParseError(line_no, toks[0].column, "missing 'tld 1' version line");
      expect_count(toks, 2, line_no, "tld");
      if (to_int(toks[1], line_no) != 1)
        throw ParseError(line_no, toks[1].column, "unsupported version");
      header = true;
    } else if (kw == node_keyword) {
      expect_count(toks, 4, line_no, kw);
      if (toks[2].text != value_keyword)
        throw ParseError(line_no, toks[2].column, "expected '" + std::string(value_keyword) + "'");
      TldNode node{to_int(toks[1], line_no), to_int(toks[3], line_no), line_no};
      if (node.id < 0) throw ParseError(line_no, toks[1].column, "negative id");
      if (node_keyword == "crossing" && (node.value < 0 || node.value > 3))
        throw ParseError(line_no, toks[3].column, "over slot must be in 0..3");
      if (node_keyword == "vertex" && (node.value < 2 || node.value > 4))
        throw ParseError(line_no, toks[3].column, "valence must be 2, 3 or 4");
      doc.nodes.push_back(node);
    } else if (kw == "edge") {
      expect_count(toks, 5, line_no, kw);
      TldEdge e;
      std::tie(e.id_a, e.slot_a) = to_endpoint(toks[1], line_no);
      std::tie(e.id_b, e.slot_b) = to_endpoint(toks[2], line_no);
      e.holonomy = {to_int(toks[3], line_no), to_int(toks[4], line_no)};
      e.line = line_no;
      e.column = toks[1].column;
      doc.edges.push_back(e);
    } else if (kw == "lattice") {
      expect_count(toks, 5, line_no, kw);
      if (lattice_seen) throw ParseError(line_no, toks[0].column, "duplicate lattice line");
      lattice_seen = true;
      for (int i = 0; i < 4; ++i) doc.lattice.v[i] = to_int(toks[i + 1], line_no);
      const auto& v = doc.lattice.v;
      if (v[0] * v[3] - v[1] * v[2] == 0)
        throw ParseError(line_no, toks[1].column, "lattice vectors are dependent");
    } else if (kw == "tld") {
      throw ParseError(line_no, toks[0].column, "duplicate version line");
    } else {
      throw ParseError(line_no, toks[0].column, "unknown keyword '" + std::string(kw) + "'");
    }
    if (nl == text.size()) break;
  }
  if (!header) throw ParseError(1, 1, "missing 'tld 1' version line");
  return doc;
}

std::vector<EdgeSpec> resolve_edges(const TldDocument& doc, std::vector<int>& sorted_ids,
                                    std::vector<int>& sorted_values, int fixed_degree) {
  std::vector<TldNode> nodes = doc.nodes;
  std::sort(nodes.begin(), nodes.end(), [](const TldNode& a, const TldNode& b) { return a.id < b.id; });
  std::map<int, int> index;
  sorted_ids.clear();
  sorted_values.clear();
  for (const TldNode& n : nodes) {
    if (!index.emplace(n.id, static_cast<int>(sorted_ids.size())).second)
      throw ParseError(n.line, 1, "duplicate id " + std::to_string(n.id));
    sorted_ids.push_back(n.id);
    sorted_values.push_back(n.value);
  }
  std::vector<EdgeSpec> edges;
  for (const TldEdge& e : doc.edges) {
    auto a = index.find(e.id_a);
    auto b = index.find(e.id_b);
    if (a == index.end() || b == index.end())
      throw ParseError(e.line, e.column, "edge refers to an undeclared id");
    for (auto [it, slot] : {std::pair{a, e.slot_a}, std::pair{b, e.slot_b}}) {
      const int degree = fixed_degree > 0 ? fixed_degree : sorted_values[it->second];
      if (slot < 0 || slot >= degree)
        throw ParseError(e.line, e.column,
                         "slot " + std::to_string(slot) + " out of range for id " + std::to_string(it->first));
    }
    edges.push_back({a->second, e.slot_a, b->second, e.slot_b, e.holonomy});
  }
  return edges;
}

std::string format_edges(const std::vector<int>& ids, const std::vector<EdgeSpec>& edges) {
  using Row = std::tuple<int, int, int, int, int, int>;
  std::vector<Row> rows;
  rows.reserve(edges.size());
  for (const EdgeSpec& e : edges) {
    Row fwd{ids[e.vertex_a], e.slot_a, ids[e.vertex_b], e.slot_b, e.holonomy.x, e.holonomy.y};
    Row rev{ids[e.vertex_b], e.slot_b, ids[e.vertex_a], e.slot_a, -e.holonomy.x, -e.holonomy.y};
    rows.push_back(std::min(fwd, rev));
  }
  std::sort(rows.begin(), rows.end());
  std::ostringstream out;
  for (const auto& [ia, sa, ib, sb, dx, dy] : rows)
    out << "edge " << ia << '.' << sa << ' ' << ib << '.' << sb << ' ' << dx << ' ' << dy << '\n';
  return out.str();
}

std::string format_lattice(const Lattice& lattice) {
  if (lattice.is_standard()) return {};
  std::ostringstream out;
  out << "lattice " << lattice.v[0] << ' ' << lattice.v[1] << ' ' << lattice.v[2] << ' '
      << lattice.v[3] << '\n';
  return out.str();
}

}  // namespace torihedra::detail
