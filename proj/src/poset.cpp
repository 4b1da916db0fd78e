#include "posetforge/poset.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <sstream>
#include <string>

#include "posetforge/error.hpp"

namespace pf {
namespace {

std::size_t cell(std::size_t n, Index x, Index y) {
  return static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y);
}

void close_transitively(std::size_t n, std::vector<std::uint8_t>& rel) {
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!rel[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (rel[k * n + j]) rel[i * n + j] = 1;
      }
    }
  }
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::size_t env_limit(std::size_t fallback) {
  if (const char* env = std::getenv("POSET_FORGE_MAX_ELEMENTS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') return static_cast<std::size_t>(v);
  }
  return fallback;
}

}  // namespace

// ---------------------------------------------------------------- Preorder

Preorder::Preorder(std::vector<std::string> labels, std::vector<std::uint8_t> rel)
    : labels_(std::move(labels)), rel_(std::move(rel)) {
  const std::size_t n = labels_.size();
  if (rel_.size() != n * n) {
    throw Error(ErrorCode::InvalidArgument, "relation matrix has wrong size");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!rel_[i * n + i]) throw Error(ErrorCode::InvalidArgument, "relation is not reflexive");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (rel_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (rel_[k * n + j] && !rel_[i * n + j])
            throw Error(ErrorCode::InvalidArgument, "relation is not transitive");
  build_index();
}

Preorder Preorder::generated_by(std::vector<std::string> labels,
                                const std::vector<IndexPair>& pairs) {
  const std::size_t n = labels.size();
  std::vector<std::uint8_t> rel(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) rel[i * n + i] = 1;
  for (auto [x, y] : pairs) rel[cell(n, x, y)] = 1;
  close_transitively(n, rel);
  return Preorder(std::move(labels), std::move(rel));
}

void Preorder::build_index() {
  index_.clear();
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], static_cast<Index>(i)).second) {
      throw Error(ErrorCode::DuplicateElement, "duplicate element '" + labels_[i] + "'");
    }
  }
}

Index Preorder::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) {
    throw Error(ErrorCode::UnknownElement, "unknown element '" + std::string(label) + "'");
  }
  return it->second;
}

bool Preorder::is_antisymmetric() const noexcept {
  const auto n = static_cast<Index>(size());
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (leq(i, j) && leq(j, i)) return false;
  return true;
}

std::vector<std::vector<Index>> Preorder::classes() const {
  const auto n = static_cast<Index>(size());
  std::vector<int> seen(size(), 0);
  std::vector<std::vector<Index>> out;
  for (Index i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    std::vector<Index> cls;
    for (Index j = i; j < n; ++j) {
      if (equivalent(i, j)) {
        cls.push_back(j);
        seen[static_cast<std::size_t>(j)] = 1;
      }
    }
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<IndexPair> Preorder::pairs() const {
  std::vector<IndexPair> out;
  const auto n = static_cast<Index>(size());
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (leq(i, j)) out.emplace_back(i, j);
  return out;
}

// ------------------------------------------------------------------- Poset

Poset::Poset(std::vector<std::string> labels, std::vector<std::uint8_t> rel)
    : Preorder(std::move(labels), std::move(rel)) {
  if (!is_antisymmetric()) {
    throw Error(ErrorCode::CycleDetected, "relation is not antisymmetric");
  }
}

Poset Poset::from_pairs(std::vector<std::string> labels, const std::vector<IndexPair>& pairs) {
  const std::size_t n = labels.size();
  std::vector<std::uint8_t> rel(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) rel[i * n + i] = 1;
  for (auto [x, y] : pairs) rel[cell(n, x, y)] = 1;
  close_transitively(n, rel);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rel[i * n + j] && rel[j * n + i])
        throw Error(ErrorCode::CycleDetected,
                    "cycle through '" + labels[i] + "' and '" + labels[j] + "'");
  return Poset(std::move(labels), std::move(rel));
}

bool Poset::is_minimal(Index x) const noexcept {
  const auto n = static_cast<Index>(size());
  for (Index y = 0; y < n; ++y)
    if (lt(y, x)) return false;
  return true;
}

bool Poset::is_maximal(Index x) const noexcept {
  const auto n = static_cast<Index>(size());
  for (Index y = 0; y < n; ++y)
    if (lt(x, y)) return false;
  return true;
}

Poset Poset::induced(const std::vector<Index>& members) const {
  const std::size_t m = members.size();
  std::vector<std::string> labels;
  labels.reserve(m);
  for (Index x : members) labels.push_back(label(x));
  std::vector<std::uint8_t> rel(m * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      rel[i * m + j] = leq(members[i], members[j]) ? 1 : 0;
  return Poset(std::move(labels), std::move(rel));
}

Poset parse_poset(std::string_view text) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> raw;
  bool have_elements = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    std::string head = toks.front();
    std::vector<std::string> rest(toks.begin() + 1, toks.end());
    // allow "elements:a" and "elements :"
    if (auto colon = head.find(':'); colon != std::string::npos && colon + 1 < head.size()) {
      rest.insert(rest.begin(), head.substr(colon + 1));
      head = head.substr(0, colon + 1);
    }
    if (head == "elements:") {
      if (have_elements) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": repeated elements line");
      }
      have_elements = true;
      labels = rest;
    } else if (head == "covers:") {
      for (const auto& tok : rest) {
        auto lt = tok.find('<');
        if (lt == std::string::npos || lt == 0 || lt + 1 == tok.size() ||
            tok.find('<', lt + 1) != std::string::npos) {
          throw Error(ErrorCode::ParseError,
                      "line " + std::to_string(lineno) + ": expected x<y, got '" + tok + "'");
        }
        raw.emplace_back(tok.substr(0, lt), tok.substr(lt + 1));
      }
    } else {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(lineno) + ": unknown directive '" + head + "'");
    }
  }
  if (!have_elements) throw Error(ErrorCode::ParseError, "missing 'elements:' line");
  // index check happens in the Preorder constructor; resolve names first
  std::unordered_map<std::string, Index> idx;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!idx.emplace(labels[i], static_cast<Index>(i)).second) {
      throw Error(ErrorCode::DuplicateElement, "duplicate element '" + labels[i] + "'");
    }
  }
  std::vector<IndexPair> pairs;
  for (const auto& [a, b] : raw) {
    auto ia = idx.find(a);
    auto ib = idx.find(b);
    if (ia == idx.end()) throw Error(ErrorCode::UnknownElement, "unknown element '" + a + "'");
    if (ib == idx.end()) throw Error(ErrorCode::UnknownElement, "unknown element '" + b + "'");
    if (ia->second == ib->second) {
      throw Error(ErrorCode::CycleDetected, "'" + a + "<" + a + "' relates an element to itself");
    }
    pairs.emplace_back(ia->second, ib->second);
  }
  return Poset::from_pairs(std::move(labels), pairs);
}

std::vector<IndexPair> hasse_covers(const Poset& p) {
  std::vector<IndexPair> out;
  const auto n = static_cast<Index>(p.size());
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (!p.lt(x, y)) continue;
      bool cover = true;
      for (Index z = 0; z < n && cover; ++z) {
        if (p.lt(x, z) && p.lt(z, y)) cover = false;
      }
      if (cover) out.emplace_back(x, y);
    }
  }
  return out;
}

std::size_t closed_subposet_limit() { return env_limit(20); }
std::size_t automorphism_limit() { return env_limit(10); }

// ------------------------------------------------------------ automorphisms

bool is_automorphism(const Poset& p, const Permutation& sigma) {
  const auto n = static_cast<Index>(p.size());
  if (sigma.size() != p.size()) return false;
  std::vector<int> hit(p.size(), 0);
  for (Index x : sigma) {
    if (x < 0 || x >= n || hit[static_cast<std::size_t>(x)]++) return false;
  }
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (p.leq(x, y) != p.leq(sigma[static_cast<std::size_t>(x)], sigma[static_cast<std::size_t>(y)]))
        return false;
  return true;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) {
    out[i] = outer[static_cast<std::size_t>(inner[i])];
  }
  return out;
}

Permutation inverse(const Permutation& sigma) {
  Permutation out(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    out[static_cast<std::size_t>(sigma[i])] = static_cast<Index>(i);
  }
  return out;
}

std::vector<Permutation> automorphism_group(const Poset& p) {
  const std::size_t n = p.size();
  if (n > automorphism_limit()) {
    throw Error(ErrorCode::TooLarge, "automorphism search refuses posets with more than " +
                                         std::to_string(automorphism_limit()) + " elements");
  }
  // (down-set size, up-set size) is preserved by automorphisms
  std::vector<std::pair<int, int>> sig(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (p.leq(static_cast<Index>(y), static_cast<Index>(x))) ++sig[x].first;
      if (p.leq(static_cast<Index>(x), static_cast<Index>(y))) ++sig[x].second;
    }
  }
  std::vector<Permutation> out;
  Permutation cur(n, -1);
  std::vector<std::uint8_t> used(n, 0);
  auto rec = [&](auto&& self, std::size_t x) -> void {
    if (x == n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t img = 0; img < n; ++img) {
      if (used[img] || sig[img] != sig[x]) continue;
      bool ok = true;
      for (std::size_t y = 0; y < x && ok; ++y) {
        auto iy = static_cast<std::size_t>(cur[y]);
        ok = p.leq(static_cast<Index>(x), static_cast<Index>(y)) ==
                 p.leq(static_cast<Index>(img), static_cast<Index>(iy)) &&
             p.leq(static_cast<Index>(y), static_cast<Index>(x)) ==
                 p.leq(static_cast<Index>(iy), static_cast<Index>(img));
      }
      if (!ok) continue;
      used[img] = 1;
      cur[x] = static_cast<Index>(img);
      self(self, x + 1);
      used[img] = 0;
    }
  };
  rec(rec, 0);
  // lexicographic enumeration already puts the identity first
  return out;
}

// ---------------------------------------------------------- closed subposets

ClosedSubposet::ClosedSubposet(PosetPtr parent, std::vector<std::uint8_t> in,
                               std::vector<std::uint8_t> rel)
    : parent_(std::move(parent)), in_(std::move(in)), rel_(std::move(rel)) {
  for (std::size_t i = 0; i < in_.size(); ++i)
    if (in_[i]) members_.push_back(static_cast<Index>(i));
}

ClosedSubposet::ClosedSubposet(PosetPtr parent, std::vector<Index> members,
                               const std::vector<IndexPair>& rel)
    : parent_(std::move(parent)) {
  if (!parent_) throw Error(ErrorCode::InvalidArgument, "closed subposet without parent");
  const std::size_t n = parent_->size();
  in_.assign(n, 0);
  rel_.assign(n * n, 0);
  for (Index x : members) {
    if (x < 0 || static_cast<std::size_t>(x) >= n) {
      throw Error(ErrorCode::UnknownElement, "member index out of range");
    }
    in_[static_cast<std::size_t>(x)] = 1;
    rel_[cell(n, x, x)] = 1;
  }
  for (auto [x, y] : rel) {
    if (x < 0 || y < 0 || static_cast<std::size_t>(x) >= n || static_cast<std::size_t>(y) >= n) {
      throw Error(ErrorCode::UnknownElement, "relation index out of range");
    }
    rel_[cell(n, x, y)] = 1;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (in_[i]) members_.push_back(static_cast<Index>(i));
  validate();
}

void ClosedSubposet::validate() const {
  const Poset& p = *parent_;
  const auto n = static_cast<Index>(p.size());
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (!rel(x, y)) continue;
      if (!contains(x) || !contains(y)) {
        throw Error(ErrorCode::NotClosed, "relation " + p.label(x) + "<=" + p.label(y) +
                                              " involves a non-member");
      }
      if (!p.leq(x, y)) {
        throw Error(ErrorCode::NotClosed, "relation " + p.label(x) + "<=" + p.label(y) +
                                              " is not a relation of the parent");
      }
      for (Index z = 0; z < n; ++z) {
        if (p.leq(x, z) && p.leq(z, y) && !(rel(x, z) && rel(z, y))) {
          throw Error(ErrorCode::NotClosed, "interval [" + p.label(x) + "," + p.label(y) +
                                                "] is not closed at " + p.label(z));
        }
        if (rel(y, z) && !rel(x, z)) {
          throw Error(ErrorCode::NotClosed, "relation is not transitive at " + p.label(x) +
                                                "," + p.label(y) + "," + p.label(z));
        }
      }
    }
  }
}

bool ClosedSubposet::rel(Index x, Index y) const noexcept {
  return rel_[cell(parent_->size(), x, y)] != 0;
}

ClosedSubposet ClosedSubposet::empty(PosetPtr parent) {
  return ClosedSubposet(std::move(parent), std::vector<Index>{}, std::vector<IndexPair>{});
}

ClosedSubposet ClosedSubposet::full(PosetPtr parent) {
  std::vector<Index> members(parent->size());
  std::iota(members.begin(), members.end(), 0);
  auto pairs = parent->pairs();
  return ClosedSubposet(std::move(parent), std::move(members), pairs);
}

ClosedSubposet ClosedSubposet::discrete(PosetPtr parent, std::vector<Index> members) {
  return ClosedSubposet(std::move(parent), std::move(members), std::vector<IndexPair>{});
}

ClosedSubposet ClosedSubposet::lower_set(PosetPtr parent, Index x) {
  std::vector<Index> members;
  const auto n = static_cast<Index>(parent->size());
  for (Index z = 0; z < n; ++z)
    if (parent->leq(z, x)) members.push_back(z);
  std::vector<IndexPair> rel;
  for (Index a : members)
    for (Index b : members)
      if (parent->lt(a, b)) rel.emplace_back(a, b);
  return ClosedSubposet(std::move(parent), std::move(members), rel);
}

std::vector<IndexPair> ClosedSubposet::strict_pairs() const {
  std::vector<IndexPair> out;
  for (Index x : members_)
    for (Index y : members_)
      if (x != y && rel(x, y)) out.emplace_back(x, y);
  return out;
}

std::vector<IndexPair> ClosedSubposet::pairs() const {
  std::vector<IndexPair> out;
  for (Index x : members_)
    for (Index y : members_)
      if (rel(x, y)) out.emplace_back(x, y);
  return out;
}

Poset ClosedSubposet::as_poset() const {
  const std::size_t m = members_.size();
  std::vector<std::string> labels;
  for (Index x : members_) labels.push_back(parent_->label(x));
  std::vector<std::uint8_t> r(m * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      r[i * m + j] = rel(members_[i], members_[j]) ? 1 : 0;
  return Poset(std::move(labels), std::move(r));
}

Index ClosedSubposet::local_index(Index x) const noexcept {
  auto it = std::lower_bound(members_.begin(), members_.end(), x);
  if (it == members_.end() || *it != x) return -1;
  return static_cast<Index>(it - members_.begin());
}

bool ClosedSubposet::same_parent(const ClosedSubposet& other) const noexcept {
  return parent_ == other.parent_ || *parent_ == *other.parent_;
}

bool operator<(const ClosedSubposet& a, const ClosedSubposet& b) {
  if (a.members_.size() != b.members_.size()) return a.members_.size() < b.members_.size();
  if (a.members_ != b.members_) return a.members_ < b.members_;
  auto pa = a.strict_pairs();
  auto pb = b.strict_pairs();
  if (pa.size() != pb.size()) return pa.size() < pb.size();
  return pa < pb;
}

std::vector<ClosedSubposet> closed_subposets(const PosetPtr& p) {
  const std::size_t n = p->size();
  if (n > closed_subposet_limit()) {
    throw Error(ErrorCode::TooLarge, "closed subposet enumeration refuses posets with more than " +
                                         std::to_string(closed_subposet_limit()) + " elements");
  }
  // intervals ordered by cardinality so that every proper subinterval is
  // decided before the interval itself
  std::vector<IndexPair> intervals = p->pairs();
  std::vector<int> card(n * n, 0);
  for (auto [x, y] : intervals) {
    for (std::size_t z = 0; z < n; ++z)
      if (p->leq(x, static_cast<Index>(z)) && p->leq(static_cast<Index>(z), y))
        ++card[cell(n, x, y)];
  }
  std::stable_sort(intervals.begin(), intervals.end(), [&](IndexPair a, IndexPair b) {
    return card[cell(n, a.first, a.second)] < card[cell(n, b.first, b.second)];
  });

  std::vector<std::uint8_t> rel(n * n, 0);
  std::vector<ClosedSubposet> out;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == intervals.size()) {
      std::vector<std::uint8_t> in(n, 0);
      for (std::size_t i = 0; i < n; ++i) in[i] = rel[i * n + i];
      out.push_back(ClosedSubposet(p, std::move(in), rel));
      return;
    }
    auto [x, y] = intervals[k];
    bool subintervals_in = true;
    bool composite = false;
    for (std::size_t ai = 0; ai < n; ++ai)
      for (std::size_t bi = 0; bi < n; ++bi) {
        auto a = static_cast<Index>(ai);
        auto b = static_cast<Index>(bi);
        if ((a == x && b == y) || !p->leq(x, a) || !p->leq(a, b) || !p->leq(b, y)) continue;
        if (!rel[cell(n, a, b)]) subintervals_in = false;
        if (a == x && b != x && b != y && rel[cell(n, x, b)] && rel[cell(n, b, y)]) composite = true;
      }
    if (composite) {
      // transitivity forces [x,y]; closure then needs every subinterval
      if (!subintervals_in) return;
    } else {
      self(self, k + 1);  // exclude
    }
    if (subintervals_in) {
      rel[cell(n, x, y)] = 1;
      self(self, k + 1);
      rel[cell(n, x, y)] = 0;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

ClosedSubposet closure_of_intervals(PosetPtr p, const std::vector<IndexPair>& intervals) {
  const std::size_t n = p->size();
  std::vector<IndexPair> work;
  for (auto iv : intervals) {
    if (!p->leq(iv.first, iv.second)) {
      throw Error(ErrorCode::InvalidArgument, "[" + p->label(iv.first) + "," +
                                                  p->label(iv.second) + "] is not an interval");
    }
    work.push_back(iv);
  }
  auto contains = [&](IndexPair outer, IndexPair inner) {
    return p->leq(outer.first, inner.first) && p->leq(inner.second, outer.second);
  };
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(work.begin(), work.end());
    work.erase(std::unique(work.begin(), work.end()), work.end());
    // keep maximal intervals only
    for (std::size_t i = 0; i < work.size() && !changed; ++i)
      for (std::size_t j = 0; j < work.size() && !changed; ++j)
        if (i != j && contains(work[j], work[i])) {
          work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
        }
    if (changed) continue;
    // merge overlaps x_i <= x_j <= y_i <= y_j into [x_i, y_j]
    for (std::size_t i = 0; i < work.size() && !changed; ++i)
      for (std::size_t j = 0; j < work.size() && !changed; ++j) {
        if (i == j) continue;
        auto [xi, yi] = work[i];
        auto [xj, yj] = work[j];
        if (p->leq(xi, xj) && p->leq(xj, yi) && p->leq(yi, yj)) {
          work.push_back({xi, yj});
          changed = true;
        }
      }
  }
  std::vector<std::uint8_t> in(n, 0);
  std::vector<std::uint8_t> rel(n * n, 0);
  for (auto [x, y] : work)
    for (std::size_t ai = 0; ai < n; ++ai)
      for (std::size_t bi = 0; bi < n; ++bi) {
        auto a = static_cast<Index>(ai);
        auto b = static_cast<Index>(bi);
        if (p->leq(x, a) && p->leq(a, b) && p->leq(b, y)) {
          rel[cell(n, a, b)] = 1;
          in[ai] = in[bi] = 1;
        }
      }
  ClosedSubposet s(std::move(p), std::move(in), std::move(rel));
  s.validate();
  return s;
}

ClosedSubposet wedge(const ClosedSubposet& s, const ClosedSubposet& t) {
  if (!s.same_parent(t)) {
    throw Error(ErrorCode::MismatchedParent, "wedge of closed subposets of different posets");
  }
  const std::size_t n = s.parent().size();
  std::vector<std::uint8_t> in(n, 0);
  std::vector<std::uint8_t> rel(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) in[i] = s.in_[i] & t.in_[i];
  for (std::size_t i = 0; i < n * n; ++i) rel[i] = s.rel_[i] & t.rel_[i];
  ClosedSubposet w(s.parent_ptr(), std::move(in), std::move(rel));
  w.validate();
  return w;
}

// ------------------------------------------------------------ connectivity

std::vector<std::vector<Index>> components(const Preorder& p) {
  const auto n = static_cast<Index>(p.size());
  std::vector<int> comp(p.size(), -1);
  std::vector<std::vector<Index>> out;
  for (Index s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<Index> members;
    std::deque<Index> queue{s};
    comp[static_cast<std::size_t>(s)] = id;
    while (!queue.empty()) {
      Index x = queue.front();
      queue.pop_front();
      members.push_back(x);
      for (Index y = 0; y < n; ++y) {
        if (comp[static_cast<std::size_t>(y)] < 0 && (p.leq(x, y) || p.leq(y, x))) {
          comp[static_cast<std::size_t>(y)] = id;
          queue.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_connected(const Preorder& p) { return components(p).size() == 1; }

Index removable_extremal(const Poset& p) {
  const auto n = static_cast<Index>(p.size());
  if (n < 2) throw Error(ErrorCode::Singleton, "poset has fewer than two elements");
  if (!is_connected(p)) throw Error(ErrorCode::NotConnected, "poset is not connected");

  // bipartite graph on Min u Max with an edge x -- y when x <= y
  std::vector<Index> verts;
  for (Index x = 0; x < n; ++x)
    if (p.is_minimal(x) || p.is_maximal(x)) verts.push_back(x);
  auto adjacent = [&](Index a, Index b) {
    return a != b && ((p.is_minimal(a) && p.is_maximal(b) && p.leq(a, b)) ||
                      (p.is_minimal(b) && p.is_maximal(a) && p.leq(b, a)));
  };
  std::vector<int> tree_degree(p.size(), 0);
  std::vector<std::uint8_t> seen(p.size(), 0);
  std::deque<Index> queue{verts.front()};
  seen[static_cast<std::size_t>(verts.front())] = 1;
  while (!queue.empty()) {
    Index a = queue.front();
    queue.pop_front();
    for (Index b : verts) {
      if (seen[static_cast<std::size_t>(b)] || !adjacent(a, b)) continue;
      seen[static_cast<std::size_t>(b)] = 1;
      ++tree_degree[static_cast<std::size_t>(a)];
      ++tree_degree[static_cast<std::size_t>(b)];
      queue.push_back(b);
    }
  }
  for (Index x : verts) {
    if (!seen[static_cast<std::size_t>(x)]) {
      throw Error(ErrorCode::NotConnected, "min/max graph is not connected");
    }
  }
  for (Index x : verts) {
    if (tree_degree[static_cast<std::size_t>(x)] != 1) continue;
    std::vector<Index> rest;
    for (Index z = 0; z < n; ++z)
      if (z != x) rest.push_back(z);
    if (!is_connected(p.induced(rest))) {
      throw Error(ErrorCode::NotConnected, "leaf removal disconnected the poset");
    }
    return x;
  }
  throw Error(ErrorCode::NotConnected, "spanning tree has no leaf");
}

}  // namespace pf
