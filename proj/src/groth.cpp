#include "posetforge/groth.hpp"

#include <algorithm>
#include <map>

#include "posetforge/error.hpp"

namespace pf {

ThinRep tensor(const ThinRep& m, const ThinRep& n) {
  if (!(m.parent() == n.parent())) throw Error(ErrorCode::MismatchedParent, "representations of different posets");
  if (!(m.field() == n.field())) throw Error(ErrorCode::InvalidArgument, "representations over different fields");
  const ClosedSubposet s = wedge(m.support(), n.support());
  std::map<IndexPair, Scalar> alpha;
  for (const auto& [x, y] : s.strict_pairs()) alpha[{x, y}] = m.field().mul(m.alpha(x, y), n.alpha(x, y));
  return ThinRep(s, m.field(), std::move(alpha));
}

ThinRep projective_rep(const PosetPtr& p, Index x, const Field& f) {
  const auto s = ClosedSubposet::lower_set(p, x);
  std::map<IndexPair, Scalar> alpha;
  for (const auto& xy : s.strict_pairs()) alpha[xy] = 1;
  return ThinRep(s, f, std::move(alpha));
}

SemigroupTable undeformed_semigroup(const PosetPtr& p) {
  SemigroupTable t;
  t.elements = closed_subposets(p);
  const std::size_t n = t.elements.size();
  std::map<ClosedSubposet, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(t.elements[i], i);
  t.identity = index.at(ClosedSubposet::full(p));
  t.product.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      t.product[i * n + j] = t.product[j * n + i] = index.at(wedge(t.elements[i], t.elements[j]));
  return t;
}

namespace {

std::vector<Index> maximal_lower_bounds(const Poset& p, Index x, Index y) {
  const auto n = static_cast<Index>(p.size());
  std::vector<Index> lower;
  for (Index z = 0; z < n; ++z)
    if (p.leq(z, x) && p.leq(z, y)) lower.push_back(z);
  std::vector<Index> out;
  for (auto z : lower)
    if (std::none_of(lower.begin(), lower.end(), [&](Index w) { return w != z && p.leq(z, w); })) out.push_back(z);
  return out;
}

}  // namespace

std::optional<Index> meet(const Poset& p, Index x, Index y) {
  const auto m = maximal_lower_bounds(p, x, y);
  if (m.size() != 1) return std::nullopt;
  return m.front();
}

MeetCheck is_meet_semilattice(const Poset& p) {
  MeetCheck out;
  const auto n = static_cast<Index>(p.size());
  for (Index x = n; x-- > 0;)
    for (Index y = n; y-- > x + 1;) {
      auto m = maximal_lower_bounds(p, x, y);
      if (m.size() == 1) continue;
      out.is_meet_semilattice = false;
      out.witness = IndexPair{x, y};
      out.maximal_lower_bounds = std::move(m);
      return out;
    }
  return out;
}

K0Table k0_table(const PosetPtr& p) {
  const auto check = is_meet_semilattice(*p);
  if (!check.is_meet_semilattice) {
    const auto [x, y] = *check.witness;
    throw Error(ErrorCode::NotMeetSemilattice, p->label(x) + " and " + p->label(y) + " have no greatest lower bound");
  }
  const std::size_t n = p->size();
  K0Table t{p, std::vector<Index>(n * n)};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t.meet[x * n + y] = *meet(*p, static_cast<Index>(x), static_cast<Index>(y));
  return t;
}

}  // namespace pf
