#include "posetforge/thin.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "posetforge/chain_complex.hpp"
#include "posetforge/error.hpp"
#include "posetforge/int_matrix.hpp"

namespace pf {

namespace {

std::string pair_text(const Poset& p, Index x, Index y) { return "(" + p.label(x) + ", " + p.label(y) + ")"; }

FieldMatrix action_matrix(const ThinRep& m, Index x, Index y) {
  const auto& s = m.support();
  FieldMatrix a(m.dimension(), m.dimension());
  if (s.rel(x, y))
    a(static_cast<std::size_t>(s.local_index(x)), static_cast<std::size_t>(s.local_index(y))) = m.alpha(x, y);
  return a;
}

}  // namespace

// ----- ThinRep

ThinRep::ThinRep(ClosedSubposet support, Field field, std::map<IndexPair, Scalar> alpha)
    : support_(std::move(support)), field_(std::move(field)) {
  if (!field_.is_concrete()) throw Error(ErrorCode::SymbolicFieldUnsupported, "thin representations over " + field_.name());
  const Poset& p = support_.parent();
  for (auto& [xy, v] : alpha) {
    const auto [x, y] = xy;
    if (x < 0 || y < 0 || static_cast<std::size_t>(x) >= p.size() || static_cast<std::size_t>(y) >= p.size())
      throw Error(ErrorCode::UnknownElement, "alpha entry outside the poset");
    if (!support_.rel(x, y)) throw Error(ErrorCode::InvalidArgument, "alpha given at " + pair_text(p, x, y) + " outside the support");
    v.canonicalize();
    if (!field_.contains(v)) throw Error(ErrorCode::InvalidArgument, "alpha value " + v.get_str() + " not in " + field_.name());
    if (v == 0) throw Error(ErrorCode::NotInvertible, "alpha vanishes at " + pair_text(p, x, y));
    if (x == y) {
      if (v != 1) throw Error(ErrorCode::NotMultiplicative, "alpha must be 1 on the diagonal");
      continue;
    }
    alpha_[xy] = v;
  }
  for (const auto& [x, y] : support_.strict_pairs())
    if (!alpha_.count({x, y})) throw Error(ErrorCode::MissingValue, "no alpha at " + pair_text(p, x, y));
  for (const auto& [xy, a] : alpha_)
    for (const auto& [yz, b] : alpha_) {
      if (xy.second != yz.first) continue;
      if (alpha_.at({xy.first, yz.second}) != field_.mul(a, b))
        throw Error(ErrorCode::NotMultiplicative, "alpha" + pair_text(p, xy.first, yz.second) +
                                                      " differs from the product through " + p.label(xy.second));
    }
}

std::vector<int> ThinRep::dimension_vector() const {
  std::vector<int> d(parent().size(), 0);
  for (auto x : support_.members()) d[static_cast<std::size_t>(x)] = 1;
  return d;
}

Scalar ThinRep::alpha(Index x, Index y) const {
  if (!support_.rel(x, y)) return 0;
  if (x == y) return 1;
  return alpha_.at({x, y});
}

PosetPtr ThinRep::support_poset() const { return share(support_.as_poset()); }

MultCochain ThinRep::local_cochain(const PosetPtr& sp) const {
  MultCochain c(sp, field_, 1, ChainDomain::Strict);
  for (const auto& [xy, v] : alpha_) c.set({support_.local_index(xy.first), support_.local_index(xy.second)}, v);
  return c;
}

ThinRep defining_representation(const PosetPtr& p, const Field& f) {
  std::map<IndexPair, Scalar> alpha;
  for (const auto& [x, y] : p->pairs())
    if (x != y) alpha[{x, y}] = 1;
  return ThinRep(ClosedSubposet::full(p), f, std::move(alpha));
}

ThinRep make_thin(const PosetPtr& p, const ClosedSubposet& s, const std::map<IndexPair, Scalar>& alpha, const Field& f) {
  if (!(s.parent() == *p)) throw Error(ErrorCode::MismatchedParent, "support lives in another poset");
  return ThinRep(s, f, alpha);
}

// ----- action tables

ActionTable action_table(const ThinRep& m) {
  ActionTable t{m.parent_ptr(), m.field(), m.support().members(), {}};
  for (const auto& [x, y] : m.parent().pairs()) t.action[{x, y}] = action_matrix(m, x, y);
  return t;
}

ClosedSubposet annihilator_support(const ActionTable& t) {
  const Poset& p = *t.parent;
  const std::size_t d = t.basis.size();
  std::vector<long> pos(p.size(), -1);
  for (std::size_t i = 0; i < d; ++i) {
    const Index x = t.basis[i];
    if (x < 0 || static_cast<std::size_t>(x) >= p.size() || pos[static_cast<std::size_t>(x)] >= 0)
      throw Error(ErrorCode::NotClosed, "basis must list distinct elements of the poset");
    pos[static_cast<std::size_t>(x)] = static_cast<long>(i);
  }
  std::vector<IndexPair> rel;
  std::map<IndexPair, Scalar> value;
  for (const auto& [x, y] : p.pairs()) {
    auto it = t.action.find({x, y});
    if (it == t.action.end()) throw Error(ErrorCode::NotClosed, "no action given for f" + pair_text(p, x, y));
    const FieldMatrix& a = it->second;
    if (a.rows() != d || a.cols() != d) throw Error(ErrorCode::NotClosed, "action of f" + pair_text(p, x, y) + " has the wrong size");
    const long r = pos[static_cast<std::size_t>(x)], c = pos[static_cast<std::size_t>(y)];
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (a(i, j) != 0 && !(static_cast<long>(i) == r && static_cast<long>(j) == c))
          throw Error(ErrorCode::NotClosed, "f" + pair_text(p, x, y) + " does not send m_y to a multiple of m_x");
    if (r < 0 || c < 0) continue;
    const Scalar& v = a(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    if (x == y) {
      if (v != 1) throw Error(ErrorCode::NotClosed, "f" + pair_text(p, x, x) + " must fix m_" + p.label(x));
      continue;
    }
    if (v != 0) {
      rel.emplace_back(x, y);
      value[{x, y}] = v;
    }
  }
  for (const auto& [xy, a] : value)
    for (const auto& [yz, b] : value)
      if (xy.second == yz.first) {
        auto it = value.find({xy.first, yz.second});
        if (it == value.end() || it->second != t.field.mul(a, b))
          throw Error(ErrorCode::NotClosed, "action is not compatible with f_xy f_yz = f_xz");
      }
  return ClosedSubposet(t.parent, t.basis, rel);
}

// ----- isomorphism and homomorphisms

std::optional<std::vector<Scalar>> reps_isomorphic(const ThinRep& m, const ThinRep& n) {
  if (!(m.parent() == n.parent())) throw Error(ErrorCode::MismatchedParent, "representations of different posets");
  if (!(m.field() == n.field())) throw Error(ErrorCode::InvalidArgument, "representations over different fields");
  if (!(m.support() == n.support())) return std::nullopt;
  const Field& f = m.field();
  std::vector<Scalar> theta(m.parent().size(), Scalar(1));
  if (m.alpha_values().empty()) return theta;
  const auto sp = m.support_poset();
  const auto c = multiply(m.local_cochain(sp), inverse(n.local_cochain(sp)));
  auto rep = reduce_modulo_coboundaries(c);
  if (!rep.trivial) return std::nullopt;
  const auto& members = m.support().members();
  for (std::size_t i = 0; i < members.size(); ++i)
    theta[static_cast<std::size_t>(members[i])] = rep.witness->at({static_cast<Index>(i)});
  for (const auto& [xy, a] : m.alpha_values()) {
    const Scalar want = f.div(theta[static_cast<std::size_t>(xy.second)], theta[static_cast<std::size_t>(xy.first)]);
    if (f.div(a, n.alpha(xy.first, xy.second)) != want) throw std::logic_error("isomorphism witness failed verification");
  }
  return theta;
}

std::size_t hom_dimension(const ThinRep& m, const ThinRep& n) {
  if (!(m.parent() == n.parent())) throw Error(ErrorCode::MismatchedParent, "representations of different posets");
  if (!(m.field() == n.field())) throw Error(ErrorCode::InvalidArgument, "representations over different fields");
  const Field& f = m.field();
  const std::size_t dm = m.dimension(), dn = n.dimension();
  const std::size_t vars = dm * dn;
  if (vars == 0) return 0;
  // Phi (dn x dm) with A_N(f) Phi = Phi A_M(f); one sparse row per
  // (generator, entry)
  std::vector<std::map<std::size_t, Scalar>> eqs;
  for (const auto& [x, y] : m.parent().pairs()) {
    const Scalar b = n.alpha(x, y), a = m.alpha(x, y);
    if (b == 0 && a == 0) continue;
    const long rx = n.support().local_index(x), ry = n.support().local_index(y);
    const long cx = m.support().local_index(x), cy = m.support().local_index(y);
    std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Scalar>> rows;
    // (A_N Phi)(rx, c) = b Phi(ry, c)
    if (b != 0)
      for (std::size_t c = 0; c < dm; ++c) {
        auto& slot = rows[{static_cast<std::size_t>(rx), c}][static_cast<std::size_t>(ry) * dm + c];
        slot = f.add(slot, b);
      }
    // (Phi A_M)(r, cy) = a Phi(r, cx)
    if (a != 0)
      for (std::size_t r = 0; r < dn; ++r) {
        auto& slot = rows[{r, static_cast<std::size_t>(cy)}][r * dm + static_cast<std::size_t>(cx)];
        slot = f.sub(slot, a);
      }
    for (auto& [rc, row] : rows) eqs.push_back(std::move(row));
  }
  FieldMatrix sys(eqs.size(), vars);
  for (std::size_t i = 0; i < eqs.size(); ++i)
    for (const auto& [j, v] : eqs[i]) sys(i, j) = v;
  return vars - rank(f, std::move(sys));
}

std::size_t endomorphism_dimension(const ThinRep& m) { return hom_dimension(m, m); }

// ----- classification

ThinCatalogue classify_thin(const PosetPtr& p, const Field& f) {
  if (!f.is_finite()) throw Error(ErrorCode::InvalidField, "classification needs a finite field, got " + f.name());
  const mpz_class m = static_cast<unsigned long>(f.order() - 1);
  ThinCatalogue out;
  for (const auto& s : closed_subposets(p)) {
    const auto strict = s.strict_pairs();
    if (strict.empty()) {
      out.entries.push_back({ThinRep(s, f, {}), {}});
      out.per_support.emplace_back(s, 1);
      continue;
    }
    const Poset local = s.as_poset();
    const OrderComplex k = order_complex(local);
    const auto& edges = k.chains(1);
    std::vector<std::vector<mpz_class>> gens;
    if (k.count(2) > 0) {
      gens = CongruenceSolver(boundary_matrix(k, 2).transposed()).kernel_generators(m);
    } else {
      for (std::size_t i = 0; i < edges.size(); ++i) {
        gens.emplace_back(edges.size());
        gens.back()[i] = 1;
      }
    }
    const CongruenceSolver cob(boundary_matrix(k, 1).transposed());
    std::set<std::vector<mpz_class>> seen;
    std::deque<std::vector<mpz_class>> todo;
    auto visit = [&](std::vector<mpz_class> v) {
      auto r = cob.reduce(v, m);
      if (seen.insert(r).second) todo.push_back(std::move(r));
    };
    visit(std::vector<mpz_class>(edges.size()));
    while (!todo.empty()) {
      const auto v = todo.front();
      todo.pop_front();
      for (const auto& g : gens) {
        auto w = v;
        for (std::size_t i = 0; i < w.size(); ++i) w[i] += g[i];
        visit(std::move(w));
      }
    }
    const auto& members = s.members();
    for (const auto& key : seen) {
      std::map<IndexPair, Scalar> alpha;
      for (std::size_t i = 0; i < edges.size(); ++i)
        alpha[{members[static_cast<std::size_t>(edges[i][0])], members[static_cast<std::size_t>(edges[i][1])]}] =
            f.exp(key[i].get_ui());
      out.entries.push_back({ThinRep(s, f, std::move(alpha)), key});
    }
    out.per_support.emplace_back(s, seen.size());
  }
  return out;
}

// ----- rebasing

RebaseCertificate rebase_to_defining(const ThinRep& m) {
  const Field& f = m.field();
  const auto& s = m.support();
  RebaseCertificate cert;
  for (const auto& [x, y] : s.pairs()) cert.algebra_scale[{x, y}] = f.inv(m.alpha(x, y));
  for (const auto& [xy, a] : cert.algebra_scale) {
    if (f.mul(a, m.alpha(xy.first, xy.second)) != 1) throw std::logic_error("rescaled action is not defining");
    for (const auto& [yz, b] : cert.algebra_scale)
      if (xy.second == yz.first && f.mul(a, b) != cert.algebra_scale.at({xy.first, yz.second}))
        throw std::logic_error("rescaled basis does not multiply as an incidence algebra");
  }
  std::map<IndexPair, Scalar> ones;
  for (const auto& [x, y] : s.strict_pairs()) ones[{x, y}] = 1;
  if (auto theta = reps_isomorphic(m, ThinRep(s, f, std::move(ones)))) {
    std::vector<Scalar> scale(m.parent().size(), Scalar(1));
    for (auto x : s.members()) scale[static_cast<std::size_t>(x)] = f.inv((*theta)[static_cast<std::size_t>(x)]);
    for (const auto& [x, y] : s.strict_pairs())
      if (f.mul(scale[static_cast<std::size_t>(y)], m.alpha(x, y)) != scale[static_cast<std::size_t>(x)])
        throw std::logic_error("module rescaling is not defining");
    cert.module_scale = std::move(scale);
  }
  return cert;
}

// ----- indecomposability and accessibility

bool is_indecomposable(const ThinRep& m) {
  if (m.is_zero()) throw Error(ErrorCode::ZeroRep, "the zero representation");
  const std::size_t parts = components(m.support().as_poset()).size();
  if (endomorphism_dimension(m) != parts) throw std::logic_error("End(M) dimension disagrees with the components");
  return parts == 1;
}

std::vector<AccessStep> accessibility_chain(const ThinRep& m) {
  if (m.is_zero()) throw Error(ErrorCode::ZeroRep, "the zero representation");
  if (!is_connected(m.support().as_poset())) throw Error(ErrorCode::NotIndecomposable, "support is not connected");
  const Field& f = m.field();
  const auto& parent = m.parent_ptr();
  std::vector<AccessStep> out;
  out.push_back({m, AccessStep::Kind::Start, -1, {}});
  while (out.back().rep.dimension() > 1) {
    const ThinRep& cur = out.back().rep;
    const auto& s = cur.support();
    const Poset local = s.as_poset();
    const Index lx = removable_extremal(local);
    const Index x = s.members()[static_cast<std::size_t>(lx)];
    const bool top = local.is_maximal(lx);

    std::vector<Index> members;
    for (auto z : s.members())
      if (z != x) members.push_back(z);
    std::vector<IndexPair> rel;
    std::map<IndexPair, Scalar> alpha;
    for (const auto& [u, v] : s.strict_pairs())
      if (u != x && v != x) {
        rel.emplace_back(u, v);
        alpha[{u, v}] = cur.alpha(u, v);
      }
    ThinRep next(ClosedSubposet(parent, members, rel), f, std::move(alpha));
    if (!is_connected(next.support().as_poset())) throw std::logic_error("accessibility step disconnected the support");

    const std::size_t big = cur.dimension(), small = next.dimension();
    FieldMatrix map = top ? FieldMatrix(big, small) : FieldMatrix(small, big);
    for (std::size_t i = 0; i < small; ++i) {
      const auto j = static_cast<std::size_t>(s.local_index(members[i]));
      if (top) map(j, i) = 1;
      else map(i, j) = 1;
    }
    for (const auto& [u, v] : m.parent().pairs()) {
      const FieldMatrix ab = action_matrix(cur, u, v), as = action_matrix(next, u, v);
      const bool ok = top ? multiply(f, ab, map) == multiply(f, map, as) : multiply(f, as, map) == multiply(f, map, ab);
      if (!ok) throw std::logic_error("accessibility map is not a module map");
    }
    if (rank(f, map) != small) throw std::logic_error("accessibility map has the wrong rank");
    out.push_back({std::move(next), top ? AccessStep::Kind::Submodule : AccessStep::Kind::Quotient, x, std::move(map)});
  }
  return out;
}

// ----- submodules of projectives

SubmoduleLattice submodule_lattice(const PosetPtr& p, Index x) {
  if (x < 0 || static_cast<std::size_t>(x) >= p->size()) throw Error(ErrorCode::UnknownElement, "no such element");
  std::vector<Index> below;
  for (Index z = 0; z < static_cast<Index>(p->size()); ++z)
    if (p->leq(z, x)) below.push_back(z);
  const std::size_t k = below.size();
  if (k > 24) throw Error(ErrorCode::TooLarge, "lower set too large for lattice enumeration");
  std::vector<std::uint32_t> masks;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << k); ++s) {
    bool closed = true;
    for (std::size_t i = 0; i < k && closed; ++i)
      if (s >> i & 1)
        for (std::size_t j = 0; j < k && closed; ++j)
          if (p->leq(below[j], below[i]) && !(s >> j & 1)) closed = false;
    if (closed) masks.push_back(s);
  }
  auto members = [&](std::uint32_t s) {
    std::vector<Index> v;
    for (std::size_t i = 0; i < k; ++i)
      if (s >> i & 1) v.push_back(below[i]);
    return v;
  };
  std::sort(masks.begin(), masks.end(), [&](std::uint32_t a, std::uint32_t b) {
    const int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    if (pa != pb) return pa < pb;
    return members(a) < members(b);
  });
  SubmoduleLattice out;
  out.top = x;
  const std::size_t n = masks.size();
  for (auto s : masks) out.elements.push_back(members(s));
  out.leq.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.leq[i * n + j] = (masks[i] & ~masks[j]) == 0;

  // closed under union and intersection: a sublattice of a Boolean lattice
  const std::set<std::uint32_t> family(masks.begin(), masks.end());
  bool ok = true;
  for (auto a : masks)
    for (auto b : masks)
      if (!family.count(a & b) || !family.count(a | b)) ok = false;
  if (ok && n <= 128)
    for (auto a : masks)
      for (auto b : masks)
        for (auto c : masks)
          if ((a & (b | c)) != ((a & b) | (a & c))) ok = false;
  if (!ok) throw std::logic_error("submodule lattice is not distributive");
  out.distributive = ok;
  return out;
}

}  // namespace pf
