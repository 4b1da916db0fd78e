#include "posetforge/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "posetforge/error.hpp"

namespace pf {

namespace {

struct Line {
  int number;
  std::string head;  // directive including the colon, or empty
  std::vector<std::string> tokens;
  std::string raw;
};

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

// Non-empty lines with comments removed; `word:` at the start becomes head.
std::vector<Line> lines_of(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    Line l{n, {}, {}, line};
    const auto colon = line.find(':');
    const auto space = line.find_first_of(" \t");
    if (colon != std::string::npos && (space == std::string::npos || colon < space) && colon > 0) {
      l.head = line.substr(0, colon + 1);
      l.tokens = split_ws(line.substr(colon + 1));
    } else {
      l.tokens = split_ws(line);
    }
    out.push_back(std::move(l));
  }
  return out;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

Scalar element_value(const Field& f, const std::string& tok, int line) {
  try {
    return f.parse_element(tok);
  } catch (const Error& e) {
    fail(line, e.what());
  }
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PosetPtr load_poset(const std::filesystem::path& path) { return share(parse_poset(read_file(path))); }

std::optional<std::string> poset_reference(std::string_view text) {
  for (const auto& l : lines_of(text))
    if (l.head == "poset:") {
      if (l.tokens.size() != 1) fail(l.number, "expected 'poset: <file>'");
      return l.tokens.front();
    }
  return std::nullopt;
}

MultCochain parse_cochain(std::string_view text, const PosetPtr& p, const Field& f) {
  struct Entry {
    Chain chain;
    Scalar value;
    int line;
  };
  std::vector<Entry> entries;
  for (const auto& l : lines_of(text)) {
    if (l.head == "poset:") continue;
    const auto colon = l.raw.find(':');
    if (colon == std::string::npos) fail(l.number, "expected 'x y ... : value'");
    const auto names = split_ws(l.raw.substr(0, colon));
    const auto value = split_ws(l.raw.substr(colon + 1));
    if (names.size() < 1 || value.size() != 1) fail(l.number, "expected 'x y ... : value'");
    Entry e{{}, element_value(f, value.front(), l.number), l.number};
    for (const auto& s : names) e.chain.push_back(p->index_of(s));
    if (!entries.empty() && entries.front().chain.size() != e.chain.size())
      fail(l.number, "chain length differs from the first line");
    entries.push_back(std::move(e));
  }
  if (entries.empty()) throw Error(ErrorCode::ParseError, "no cochain values");
  bool weak = false;
  for (const auto& e : entries)
    for (std::size_t i = 0; i + 1 < e.chain.size(); ++i) weak = weak || e.chain[i] == e.chain[i + 1];
  MultCochain c(p, f, static_cast<int>(entries.front().chain.size()) - 1,
                weak ? ChainDomain::Weak : ChainDomain::Strict);
  for (const auto& e : entries) {
    if (c.has(e.chain)) fail(e.line, "repeated chain");
    c.set(e.chain, e.value);
  }
  c.require_complete();
  return c;
}

ThinRep parse_rep(std::string_view text, const Field& f, const std::filesystem::path& base_dir) {
  std::string poset_text;
  std::optional<std::string> ref;
  const Line* support_line = nullptr;
  std::vector<const Line*> rel_lines, alpha_lines;
  const auto lines = lines_of(text);
  for (const auto& l : lines) {
    if (l.head == "elements:" || l.head == "covers:") {
      poset_text += l.raw + "\n";
    } else if (l.head == "poset:") {
      if (l.tokens.size() != 1) fail(l.number, "expected 'poset: <file>'");
      ref = l.tokens.front();
    } else if (l.head == "support:") {
      if (support_line) fail(l.number, "repeated support line");
      support_line = &l;
    } else if (l.head == "rel:") {
      rel_lines.push_back(&l);
    } else if (l.head == "alpha:") {
      if (l.tokens.size() != 3) fail(l.number, "expected 'alpha: x y value'");
      alpha_lines.push_back(&l);
    } else {
      fail(l.number, "unknown directive '" + (l.head.empty() ? l.tokens.front() : l.head) + "'");
    }
  }
  if (ref && !poset_text.empty()) throw Error(ErrorCode::ParseError, "both a poset reference and inline elements");
  PosetPtr p;
  if (ref) p = load_poset(base_dir / *ref);
  else if (!poset_text.empty()) p = share(parse_poset(poset_text));
  else throw Error(ErrorCode::ParseError, "no poset: give 'poset: <file>' or inline 'elements:'");
  if (!support_line) throw Error(ErrorCode::ParseError, "missing 'support:' line");

  std::vector<Index> members;
  for (const auto& s : support_line->tokens) members.push_back(p->index_of(s));
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    fail(support_line->number, "repeated support element");
  std::vector<IndexPair> rel;
  if (rel_lines.empty()) {
    for (auto x : members)
      for (auto y : members)
        if (p->lt(x, y)) rel.emplace_back(x, y);
  } else {
    // closure of the listed pairs inside the support
    std::vector<std::string> labels;
    for (auto x : members) labels.push_back(p->label(x));
    std::vector<IndexPair> gen;
    for (const Line* l : rel_lines)
      for (const auto& tok : l->tokens) {
        const auto lt = tok.find('<');
        if (lt == std::string::npos || lt == 0 || lt + 1 == tok.size()) fail(l->number, "expected x<y, got '" + tok + "'");
        const Index x = p->index_of(tok.substr(0, lt)), y = p->index_of(tok.substr(lt + 1));
        const auto ix = std::find(members.begin(), members.end(), x), iy = std::find(members.begin(), members.end(), y);
        if (ix == members.end() || iy == members.end()) fail(l->number, "'" + tok + "' leaves the support");
        gen.emplace_back(static_cast<Index>(ix - members.begin()), static_cast<Index>(iy - members.begin()));
      }
    const Preorder local = Preorder::generated_by(labels, gen);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = 0; j < members.size(); ++j)
        if (i != j && local.leq(static_cast<Index>(i), static_cast<Index>(j))) rel.emplace_back(members[i], members[j]);
  }
  ClosedSubposet s(p, members, rel);

  std::map<IndexPair, Scalar> alpha;
  for (const Line* l : alpha_lines) {
    const IndexPair xy{p->index_of(l->tokens[0]), p->index_of(l->tokens[1])};
    if (!s.rel(xy.first, xy.second)) fail(l->number, "alpha on a pair outside the support order");
    if (!alpha.emplace(xy, element_value(f, l->tokens[2], l->number)).second) fail(l->number, "repeated alpha");
  }
  // fill by interval length: covers get 1, longer intervals a product
  auto strict = s.strict_pairs();
  auto length = [&](const IndexPair& xy) {
    std::size_t k = 0;
    for (auto z : members)
      if (s.rel(xy.first, z) && s.rel(z, xy.second)) ++k;
    return k;
  };
  std::stable_sort(strict.begin(), strict.end(), [&](const auto& a, const auto& b) { return length(a) < length(b); });
  for (const auto& [x, z] : strict) {
    if (alpha.count({x, z})) continue;
    Scalar v = 1;
    for (auto y : members)
      if (y != x && y != z && s.rel(x, y) && s.rel(y, z)) {
        v = f.mul(alpha.at({x, y}), alpha.at({y, z}));
        break;
      }
    alpha[{x, z}] = v;
  }
  return ThinRep(s, f, std::move(alpha));
}

ThinRep load_rep(const std::filesystem::path& path, const Field& f) {
  return parse_rep(read_file(path), f, path.parent_path());
}

PatternMatrix parse_matrix(std::string_view text, const Field& f) {
  std::vector<std::vector<Scalar>> rows;
  for (const auto& l : lines_of(text)) {
    if (!l.head.empty()) fail(l.number, "unexpected '" + l.head + "'");
    std::vector<Scalar> row;
    for (const auto& tok : l.tokens) row.push_back(element_value(f, tok, l.number));
    if (!rows.empty() && row.size() != rows.front().size()) fail(l.number, "row length differs from the first row");
    rows.push_back(std::move(row));
  }
  FieldMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return PatternMatrix(f, std::move(m));
}

}  // namespace pf
