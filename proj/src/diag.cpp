#include "posetforge/diag.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "posetforge/error.hpp"

namespace pf {

namespace {

struct UnionFind {
  std::vector<std::size_t> up;
  explicit UnionFind(std::size_t n) : up(n) { std::iota(up.begin(), up.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    up[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

std::size_t u(Index i) { return static_cast<std::size_t>(i); }

}  // namespace

PatternMatrix::PatternMatrix(Field f, FieldMatrix m) : field(std::move(f)), entries(std::move(m)) {
  if (!field.is_concrete())
    throw Error(ErrorCode::SymbolicFieldUnsupported, "matrix entries need a concrete field");
  if (entries.rows() != entries.cols())
    throw Error(ErrorCode::InvalidArgument, "matrix is " + std::to_string(entries.rows()) + "x" +
                                                std::to_string(entries.cols()) + ", not square");
  for (std::size_t i = 0; i < entries.rows(); ++i)
    for (std::size_t j = 0; j < entries.cols(); ++j)
      if (!field.contains(entries(i, j)))
        throw Error(ErrorCode::InvalidArgument, "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                                    ") is not an element of " + field.name());
}

Digraph pattern_graph(const PatternMatrix& a) {
  Digraph g;
  g.n = a.size();
  for (std::size_t i = 0; i < g.n; ++i)
    for (std::size_t j = 0; j < g.n; ++j)
      if (a(i, j) != 0) g.arrows.emplace_back(static_cast<Index>(i), static_cast<Index>(j));
  return g;
}

SpanningStructure spanning_structure(const Digraph& g) {
  // Deleting ascending non-bridges leaves the forest Kruskal builds from the
  // arrows taken in descending order.
  std::vector<IndexPair> arrows = g.arrows;
  std::sort(arrows.begin(), arrows.end());
  arrows.erase(std::unique(arrows.begin(), arrows.end()), arrows.end());
  UnionFind uf(g.n);
  std::vector<std::uint8_t> kept(arrows.size(), 0);
  for (std::size_t k = arrows.size(); k-- > 0;)
    kept[k] = uf.unite(u(arrows[k].first), u(arrows[k].second));

  SpanningStructure s;
  std::vector<std::size_t> comp_of(g.n);
  for (std::size_t v = 0; v < g.n; ++v) {
    const std::size_t r = uf.find(v);
    if (r == v) {
      comp_of[v] = s.components.size();
      s.components.emplace_back();
    } else {
      comp_of[v] = comp_of[r];
    }
    s.components[comp_of[v]].push_back(static_cast<Index>(v));
  }
  s.trees.resize(s.components.size());
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    if (kept[k]) s.trees[comp_of[u(arrows[k].first)]].push_back(arrows[k]);
    else s.eliminated.push_back(arrows[k]);
  }
  return s;
}

CanonicalPair canonical_form(const PatternMatrix& a) {
  const Field& f = a.field;
  const std::size_t n = a.size();
  const auto s = spanning_structure(pattern_graph(a));
  std::vector<Scalar> d(n, Scalar(0));
  std::vector<std::vector<IndexPair>> incident(n);
  for (const auto& tree : s.trees)
    for (const auto& e : tree) {
      incident[u(e.first)].push_back(e);
      incident[u(e.second)].push_back(e);
    }
  // c_ij = d_i a_ij / d_j = 1 along the tree, d = 1 at each root
  for (const auto& comp : s.components) {
    std::vector<Index> stack{comp.front()};
    d[u(comp.front())] = 1;
    while (!stack.empty()) {
      const Index v = stack.back();
      stack.pop_back();
      for (const auto& [i, j] : incident[u(v)]) {
        if (d[u(i)] != 0 && d[u(j)] != 0) continue;
        if (i == v) {
          d[u(j)] = f.mul(d[u(i)], a(u(i), u(j)));
          stack.push_back(j);
        } else {
          d[u(i)] = f.div(d[u(j)], a(u(i), u(j)));
          stack.push_back(i);
        }
      }
    }
  }
  return {conjugate(a, d), d};
}

PatternMatrix conjugate(const PatternMatrix& a, const std::vector<Scalar>& d) {
  const Field& f = a.field;
  const std::size_t n = a.size();
  if (d.size() != n) throw Error(ErrorCode::InvalidArgument, "diagonal has the wrong length");
  FieldMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j) != 0) c(i, j) = f.div(f.mul(d[i], a(i, j)), d[j]);
  return PatternMatrix(f, std::move(c));
}

OrbitInvariant orbit_invariant(const PatternMatrix& a) {
  OrbitInvariant out;
  out.graph = pattern_graph(a);
  const auto s = spanning_structure(out.graph);
  const auto c = canonical_form(a).c;
  for (const auto& [i, j] : s.eliminated) out.holonomy.push_back(c(u(i), u(j)));
  return out;
}

std::optional<std::vector<Scalar>> diag_conjugate_test(const PatternMatrix& a, const PatternMatrix& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::InvalidArgument, "matrices of different sizes");
  if (!(a.field == b.field)) throw Error(ErrorCode::InvalidArgument, "matrices over different fields");
  if (!(pattern_graph(a) == pattern_graph(b))) return std::nullopt;
  const auto ca = canonical_form(a), cb = canonical_form(b);
  if (!(ca.c == cb.c)) return std::nullopt;
  std::vector<Scalar> d(a.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.field.div(ca.d[i], cb.d[i]);
  if (!(conjugate(a, d) == b)) throw Error(ErrorCode::InvalidArgument, "internal: conjugating diagonal failed");
  return d;
}

Preorder quiver_quotient_preorder(const PatternMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  Preorder pre = Preorder::generated_by(labels, pattern_graph(a).arrows);
  // the span of e_ij over i <= j is a subalgebra: e_ij e_jk = e_ik
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n && pre.leq(static_cast<Index>(i), static_cast<Index>(j)); ++k)
        if (pre.leq(static_cast<Index>(j), static_cast<Index>(k)) &&
            !pre.leq(static_cast<Index>(i), static_cast<Index>(k)))
          throw Error(ErrorCode::InvalidArgument, "internal: reachability span not closed");
  return pre;
}

}  // namespace pf
