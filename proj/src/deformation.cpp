#include "posetforge/deformation.hpp"

#include <algorithm>
#include <stdexcept>

#include "posetforge/error.hpp"

namespace pf {

namespace {

MultCochain as_weak(const MultCochain& c) {
  return c.domain() == ChainDomain::Weak ? c : extend_to_weak(c);
}

bool is_zero_vec(const std::vector<Scalar>& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x == 0; });
}

std::vector<Scalar> unit_vec(std::size_t n, std::size_t i) {
  std::vector<Scalar> v(n);
  v[i] = 1;
  return v;
}

// sum_k v_k b_i b_k (left) or sum_k v_k b_k b_i (right)
std::vector<Scalar> times(const StructureConstantAlgebra& a, std::size_t i, const std::vector<Scalar>& v, bool left) {
  const std::size_t n = a.dimension();
  std::vector<Scalar> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (v[k] == 0) continue;
    const auto& p = left ? a.product(i, k) : a.product(k, i);
    for (std::size_t t = 0; t < n; ++t)
      if (p[t] != 0) out[t] = a.field.add(out[t], a.field.mul(v[k], p[t]));
  }
  return out;
}

// c * b_k when v is exactly that, nullopt otherwise
std::optional<std::pair<std::size_t, Scalar>> monomial(const std::vector<Scalar>& v) {
  std::optional<std::pair<std::size_t, Scalar>> out;
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (v[t] == 0) continue;
    if (out) return std::nullopt;
    out = std::make_pair(t, v[t]);
  }
  return out;
}

std::string strip_diagonal_label(const std::string& s) {
  if (s.size() < 5 || s.rfind("f[", 0) != 0 || s.back() != ']') return {};
  const std::string inner = s.substr(2, s.size() - 3);
  const auto colon = inner.find(':');
  if (colon == std::string::npos || inner.find(':', colon + 1) != std::string::npos) return {};
  if (inner.substr(0, colon) != inner.substr(colon + 1) || colon == 0) return {};
  return inner.substr(0, colon);
}

}  // namespace

// ----- DeformedAlgebra

DeformedAlgebra::DeformedAlgebra(MultCochain lambda, Normalization norm)
    : lambda_(std::move(lambda)), norm_(std::move(norm)) {
  const auto& p = lambda_.poset();
  const std::size_t n = p.size();
  basis_ = p.pairs();
  index_.assign(n * n, -1);
  for (std::size_t i = 0; i < basis_.size(); ++i)
    index_[static_cast<std::size_t>(basis_[i].first) * n + static_cast<std::size_t>(basis_[i].second)] =
        static_cast<long>(i);
}

long DeformedAlgebra::basis_index(Index x, Index y) const noexcept {
  const std::size_t n = poset().size();
  if (x < 0 || y < 0 || static_cast<std::size_t>(x) >= n || static_cast<std::size_t>(y) >= n) return -1;
  return index_[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)];
}

std::string DeformedAlgebra::basis_label(std::size_t i) const {
  const auto [x, y] = basis_.at(i);
  return "f[" + poset().label(x) + ":" + poset().label(y) + "]";
}

std::optional<std::pair<std::size_t, Scalar>> DeformedAlgebra::product(std::size_t i, std::size_t j) const {
  const auto [x, y] = basis_.at(i);
  const auto [t, z] = basis_.at(j);
  if (y != t) return std::nullopt;
  return std::make_pair(static_cast<std::size_t>(basis_index(x, z)), lambda_.at({x, y, z}));
}

SparseVec DeformedAlgebra::multiply(const SparseVec& a, const SparseVec& b) const {
  const Field& f = field();
  SparseVec out;
  for (const auto& [i, u] : a)
    for (const auto& [j, v] : b) {
      auto p = product(i, j);
      if (!p) continue;
      auto& slot = out[p->first];
      slot = f.add(slot, f.mul(f.mul(u, v), p->second));
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

SparseVec DeformedAlgebra::unit() const {
  SparseVec u;
  for (Index x = 0; x < static_cast<Index>(poset().size()); ++x)
    u[static_cast<std::size_t>(basis_index(x, x))] = norm_.alpha.at({x, x});
  return u;
}

DeformedAlgebra build_deformed(const MultCochain& lambda_in) {
  if (lambda_in.degree() != 2) throw Error(ErrorCode::InvalidArgument, "deformation data must have degree 2");
  lambda_in.require_complete();
  if (!is_cocycle(lambda_in)) throw Error(ErrorCode::NotACocycle, "multiplication is not associative");
  MultCochain lambda = as_weak(lambda_in);
  auto norm = normalize_2cocycle(lambda);
  DeformedAlgebra a(std::move(lambda), std::move(norm));

  // associativity on basis triples
  const std::size_t n = a.dimension();
  const Field& f = a.field();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto ij = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        const auto jk = a.product(j, k);
        std::optional<std::pair<std::size_t, Scalar>> l, r;
        if (ij) {
          l = a.product(ij->first, k);
          if (l) l->second = f.mul(l->second, ij->second);
        }
        if (jk) {
          r = a.product(i, jk->first);
          if (r) r->second = f.mul(r->second, jk->second);
        }
        if (l != r) throw Error(ErrorCode::NotACocycle, "multiplication is not associative");
      }
    }
  return a;
}

DeformedAlgebra build_deformed(const PosetPtr& p, const MultCochain& lambda, const Field& f) {
  if (!(*p == lambda.poset())) throw Error(ErrorCode::InvalidArgument, "cocycle lives on another poset");
  if (!(f == lambda.field())) throw Error(ErrorCode::InvalidArgument, "cocycle lives over " + lambda.field().name());
  return build_deformed(lambda);
}

// ----- triviality and isomorphism

TrivialDeformation is_trivial_deformation(const DeformedAlgebra& a) {
  auto rep = reduce_modulo_coboundaries(a.lambda());
  if (!rep.trivial) return {};
  MultCochain r = inverse(*rep.witness);
  const Field& f = a.field();
  for (std::size_t i = 0; i < a.dimension(); ++i)
    for (std::size_t j = 0; j < a.dimension(); ++j) {
      const auto p = a.product(i, j);
      if (!p) continue;
      const auto [x, y] = a.basis()[i];
      const auto z = a.basis()[j].second;
      const Scalar lhs = f.mul(f.mul(r.at({x, y}), r.at({y, z})), p->second);
      if (lhs != r.at({x, z})) throw std::logic_error("rescaling does not trivialize the deformation");
    }
  return {true, std::move(r)};
}

std::optional<DeformationIso> deformations_isomorphic(const DeformedAlgebra& a, const DeformedAlgebra& b) {
  if (!(a.poset() == b.poset())) throw Error(ErrorCode::InvalidArgument, "deformations of different posets");
  if (!(a.field() == b.field())) throw Error(ErrorCode::InvalidArgument, "deformations over different fields");
  if (!a.field().is_concrete()) throw Error(ErrorCode::SymbolicFieldUnsupported, a.field().name());
  const MultCochain lb_inv = inverse(b.lambda());
  for (const auto& sigma : automorphism_group(a.poset())) {
    auto rep = reduce_modulo_coboundaries(multiply(pullback(a.lambda(), sigma), lb_inv));
    if (rep.trivial) return DeformationIso{sigma, std::move(*rep.witness)};
  }
  return std::nullopt;
}

// ----- basis maps

SparseVec apply(const BasisMap& m, const SparseVec& v, const Field& f) {
  SparseVec out;
  for (const auto& [i, c] : v) {
    auto& slot = out[m.image.at(i)];
    slot = f.add(slot, f.mul(c, m.coeff.at(i)));
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

bool is_homomorphism(const DeformedAlgebra& from, const DeformedAlgebra& to, const BasisMap& m) {
  const Field& f = to.field();
  if (m.image.size() != from.dimension() || m.coeff.size() != from.dimension()) return false;
  for (std::size_t i = 0; i < from.dimension(); ++i)
    for (std::size_t j = 0; j < from.dimension(); ++j) {
      SparseVec bi{{i, Scalar(1)}}, bj{{j, Scalar(1)}};
      const auto lhs = to.multiply(apply(m, bi, f), apply(m, bj, f));
      const auto rhs = apply(m, from.multiply(bi, bj), f);
      if (lhs != rhs) return false;
    }
  return true;
}

bool is_multiplicative(const DeformedAlgebra& a, const BasisMap& m) { return is_homomorphism(a, a, m); }

BasisMap standard_automorphism(const DeformedAlgebra& a, const Permutation& sigma, const MultCochain& alpha_in) {
  const Poset& p = a.poset();
  if (!is_automorphism(p, sigma)) throw Error(ErrorCode::InvalidArgument, "not an automorphism of the poset");
  if (alpha_in.degree() != 1 || !(alpha_in.poset() == p) || !(alpha_in.field() == a.field()))
    throw Error(ErrorCode::InvalidArgument, "alpha must be a degree-1 cochain on the same poset and field");
  const Permutation tau = inverse(sigma);

  auto rep = reduce_modulo_coboundaries(multiply(a.lambda(), inverse(pullback(a.lambda(), tau))));
  if (!rep.trivial) throw Error(ErrorCode::ClassNotFixed, "the automorphism moves the class of lambda");
  const MultCochain alpha = as_weak(alpha_in);
  if (!is_cocycle(alpha)) throw Error(ErrorCode::NotMultiplicative, "alpha is not multiplicative");
  const MultCochain c = multiply(*rep.witness, alpha);

  BasisMap m;
  for (const auto& [x, y] : a.basis()) {
    const Index tx = tau[static_cast<std::size_t>(x)], ty = tau[static_cast<std::size_t>(y)];
    m.image.push_back(static_cast<std::size_t>(a.basis_index(tx, ty)));
    m.coeff.push_back(c.at({x, y}));
  }
  if (!is_multiplicative(a, m)) throw std::logic_error("standard automorphism failed verification");
  return m;
}

// ----- structure constants

void StructureConstantAlgebra::validate() const {
  const std::size_t n = basis.size();
  if (table.size() != n * n) throw Error(ErrorCode::InvalidArgument, "multiplication table must have n*n entries");
  for (const auto& row : table) {
    if (row.size() != n) throw Error(ErrorCode::InvalidArgument, "table entries must have length n");
    for (const auto& x : row)
      if (!field.contains(x)) throw Error(ErrorCode::InvalidArgument, "table entry outside " + field.name());
  }
  std::vector<std::uint8_t> seen(n, 0);
  for (auto i : idempotents) {
    if (i >= n || seen[i]) throw Error(ErrorCode::InvalidArgument, "bad idempotent index");
    seen[i] = 1;
  }
}

StructureConstantAlgebra to_structure_constants(const DeformedAlgebra& a) {
  const MultCochain& mu = a.normalization().mu;
  const std::size_t n = a.dimension();
  StructureConstantAlgebra out{a.field(), {}, {}, std::vector<std::vector<Scalar>>(n * n, std::vector<Scalar>(n))};
  for (std::size_t i = 0; i < n; ++i) {
    out.basis.push_back(a.basis_label(i));
    if (a.basis()[i].first == a.basis()[i].second) out.idempotents.push_back(i);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto [x, y] = a.basis()[i];
      const auto [t, z] = a.basis()[j];
      if (y != t) continue;
      out.table[i * n + j][static_cast<std::size_t>(a.basis_index(x, z))] = mu.at({x, y, z});
    }
  return out;
}

RecognitionResult recognize_incidence(const StructureConstantAlgebra& a) {
  a.validate();
  const std::size_t n = a.dimension();
  const std::size_t k = a.idempotents.size();
  const Field& f = a.field;
  auto fail = [](std::string why) { return RecognitionResult{std::nullopt, std::move(why)}; };

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const auto& p = a.product(a.idempotents[i], a.idempotents[j]);
      const auto want = i == j ? unit_vec(n, a.idempotents[i]) : std::vector<Scalar>(n);
      if (p != want)
        throw Error(ErrorCode::MalformedBasis, "designated idempotents " + a.basis[a.idempotents[i]] + ", " +
                                                   a.basis[a.idempotents[j]] + " are not orthogonal idempotents");
    }

  // block of every basis vector
  std::vector<IndexPair> block(n);
  std::map<IndexPair, std::vector<std::size_t>> members;
  for (std::size_t v = 0; v < n; ++v) {
    const auto bv = unit_vec(n, v);
    auto side = [&](bool left) -> long {
      long found = -1;
      for (std::size_t i = 0; i < k; ++i) {
        const auto w = times(a, a.idempotents[i], bv, left);
        if (w == bv) {
          if (found >= 0) return -1;
          found = static_cast<long>(i);
        } else if (!is_zero_vec(w)) {
          return -1;
        }
      }
      return found;
    };
    const long l = side(true), r = side(false);
    if (l < 0 || r < 0)
      throw Error(ErrorCode::MalformedBasis, "basis vector " + a.basis[v] + " is not supported in a single block");
    block[v] = {static_cast<Index>(l), static_cast<Index>(r)};
    members[block[v]].push_back(v);
  }
  for (const auto& [b, vs] : members)
    if (vs.size() > 1)
      return fail("block (" + a.basis[a.idempotents[static_cast<std::size_t>(b.first)]] + ", " +
                  a.basis[a.idempotents[static_cast<std::size_t>(b.second)]] + ") has dimension " +
                  std::to_string(vs.size()));

  std::vector<long> at(k * k, -1);
  for (std::size_t v = 0; v < n; ++v)
    at[static_cast<std::size_t>(block[v].first) * k + static_cast<std::size_t>(block[v].second)] = static_cast<long>(v);

  // every product is a multiple of the composed block's vector, nonzero
  // exactly when the blocks compose
  std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, Scalar>> mono;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      const auto& p = a.product(u, v);
      if (block[u].second != block[v].first) {
        if (!is_zero_vec(p)) return fail("product " + a.basis[u] + " * " + a.basis[v] + " should vanish");
        continue;
      }
      const long target = at[static_cast<std::size_t>(block[u].first) * k + static_cast<std::size_t>(block[v].second)];
      const auto m = monomial(p);
      if (target < 0 || !m || m->first != static_cast<std::size_t>(target))
        return fail("composition " + a.basis[u] + " * " + a.basis[v] + " is not a nonzero multiple of one basis vector");
      mono[{u, v}] = *m;
    }
  for (const auto& [uv, m1] : mono)
    for (std::size_t w = 0; w < n; ++w) {
      auto it1 = mono.find({m1.first, w});
      if (it1 == mono.end()) continue;
      auto it2 = mono.find({uv.second, w});
      if (it2 == mono.end()) return fail("table is not associative");
      auto it3 = mono.find({uv.first, it2->second.first});
      if (it3 == mono.end() || it3->second.first != it1->second.first ||
          f.mul(m1.second, it1->second.second) != f.mul(it2->second.second, it3->second.second))
        return fail("table is not associative");
    }

  // labels of the points
  std::vector<std::string> labels;
  for (auto e : a.idempotents) labels.push_back(strip_diagonal_label(a.basis[e]));
  {
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    const bool ok = std::find(sorted.begin(), sorted.end(), std::string()) == sorted.end() &&
                    std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    if (!ok)
      for (std::size_t i = 0; i < k; ++i) labels[i] = a.basis[a.idempotents[i]];
  }
  std::vector<std::uint8_t> rel(k * k, 0);
  for (std::size_t i = 0; i < k * k; ++i) rel[i] = at[i] >= 0;

  Recognition out;
  out.order = Preorder(labels, rel);
  out.block = block;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const long u = at[i * k + j];
      if (u < 0) continue;
      for (std::size_t l = 0; l < k; ++l) {
        const long v = at[j * k + l];
        if (v < 0) continue;
        out.structure[{static_cast<Index>(i), static_cast<Index>(j), static_cast<Index>(l)}] =
            mono.at({static_cast<std::size_t>(u), static_cast<std::size_t>(v)}).second;
      }
    }
  out.is_poset = out.order.is_antisymmetric();
  if (out.is_poset) {
    auto p = share(Poset(labels, rel));
    MultCochain lambda(p, f, 2, ChainDomain::Weak);
    for (const auto& [ch, v] : out.structure) lambda.set(ch, v);
    out.poset = p;
    out.lambda = std::move(lambda);
  }
  return {std::move(out), {}};
}

// ----- ideals

std::vector<TwoSidedIdeal> two_sided_ideals(const PosetPtr& pp) {
  const Poset& p = *pp;
  const std::size_t n = p.size();
  if (n > closed_subposet_limit())
    throw Error(ErrorCode::TooLarge, "ideal enumeration refuses posets with more than " +
                                         std::to_string(closed_subposet_limit()) + " elements");
  constexpr std::size_t kMaxIdeals = 1000000;
  // complements are the down-sets of the intervals under containment;
  // intervals are decided smallest first, so both maximal proper
  // subintervals are already settled
  auto pairs = p.pairs();
  std::vector<std::size_t> width(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (Index z = 0; z < static_cast<Index>(n); ++z)
      width[i] += p.leq(pairs[i].first, z) && p.leq(z, pairs[i].second);
  std::vector<std::size_t> order(pairs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return width[a] < width[b]; });
  const auto covers = hasse_covers(p);

  std::vector<long> at(n * n, -1);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    at[static_cast<std::size_t>(pairs[i].first) * n + static_cast<std::size_t>(pairs[i].second)] = static_cast<long>(i);
  std::vector<std::vector<std::size_t>> below(pairs.size());
  for (auto [u, v] : covers)
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto [x, y] = pairs[i];
      if (v == y && p.leq(x, u))  // [x, u] with u covered by y
        below[i].push_back(static_cast<std::size_t>(at[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(u)]));
      if (u == x && p.leq(v, y))  // [v, y] with v covering x
        below[i].push_back(static_cast<std::size_t>(at[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(y)]));
    }

  std::vector<std::vector<std::uint8_t>> found;
  std::vector<std::uint8_t> keep(pairs.size(), 0);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == order.size()) {
      if (found.size() >= kMaxIdeals) throw Error(ErrorCode::TooLarge, "more than a million ideals");
      found.push_back(keep);
      return;
    }
    const std::size_t i = order[k];
    keep[i] = 0;
    self(self, k + 1);
    if (std::all_of(below[i].begin(), below[i].end(), [&](std::size_t j) { return keep[j] != 0; })) {
      keep[i] = 1;
      self(self, k + 1);
      keep[i] = 0;
    }
  };
  rec(rec, 0);

  std::vector<TwoSidedIdeal> out;
  out.reserve(found.size());
  for (const auto& f : found) {
    TwoSidedIdeal ideal;
    for (std::size_t i = 0; i < pairs.size(); ++i) (f[i] ? ideal.complement : ideal.span).push_back(pairs[i]);
    bool transitive = true;
    for (auto [x, y] : ideal.complement)
      for (auto [t, z] : ideal.complement)
        if (y == t && !f[static_cast<std::size_t>(at[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(z)])])
          transitive = false;
    if (transitive) {
      std::vector<Index> members;
      std::vector<IndexPair> rel;
      for (auto [x, y] : ideal.complement) {
        if (x == y) members.push_back(x);
        else rel.emplace_back(x, y);
      }
      ideal.closed = ClosedSubposet(pp, members, rel);
    }
    out.push_back(std::move(ideal));
  }
  std::sort(out.begin(), out.end(), [](const TwoSidedIdeal& a, const TwoSidedIdeal& b) {
    if (a.complement.size() != b.complement.size()) return a.complement.size() > b.complement.size();
    return a.complement < b.complement;
  });
  return out;
}

}  // namespace pf
