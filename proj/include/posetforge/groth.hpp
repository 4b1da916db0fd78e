#pragma once

// Tensor products of thin representations and the semigroups they span.

#include <optional>
#include <vector>

#include "posetforge/poset.hpp"
#include "posetforge/thin.hpp"

namespace pf {

/// Support = wedge of the supports, alpha multiplied pointwise on it.
/// MismatchedParent; InvalidArgument for different fields.
ThinRep tensor(const ThinRep& m, const ThinRep& n);

/// P(x): support {z : z <= x} with the induced order, alpha = 1.
ThinRep projective_rep(const PosetPtr& p, Index x, const Field& f);

/// Cayley table of (Cl(P), wedge) over closed_subposets(P).
struct SemigroupTable {
  std::vector<ClosedSubposet> elements;
  /// product[i * n + j] = index of elements[i] wedge elements[j].
  std::vector<std::size_t> product;
  /// Index of the full subposet, the identity.
  std::size_t identity = 0;
};

SemigroupTable undeformed_semigroup(const PosetPtr& p);

struct MeetCheck {
  bool is_meet_semilattice = true;
  /// Lexicographically last pair without a greatest lower bound.
  std::optional<IndexPair> witness;
  /// Maximal lower bounds of the witness pair (empty when it has none).
  std::vector<Index> maximal_lower_bounds;
};

MeetCheck is_meet_semilattice(const Poset& p);
/// Greatest lower bound, if any.
std::optional<Index> meet(const Poset& p, Index x, Index y);

struct K0Table {
  PosetPtr poset;
  /// meet[x * n + y] = x wedge y.
  std::vector<Index> meet;
};

/// NotMeetSemilattice, naming the witness pair.
K0Table k0_table(const PosetPtr& p);

}  // namespace pf
