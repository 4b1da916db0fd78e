#pragma once

// Finite posets and preorders, Hasse covers, automorphisms, closed
// subposets (subposets closed under subintervals) and the connectivity
// helpers used by the accessibility construction.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pf {

using Index = int;
using IndexPair = std::pair<Index, Index>;
/// perm[x] is the image of element x.
using Permutation = std::vector<Index>;

/// Reflexive, transitive relation on labelled points.
class Preorder {
 public:
  Preorder() = default;
  /// rel is row-major n*n; validated reflexive and transitive.
  Preorder(std::vector<std::string> labels, std::vector<std::uint8_t> rel);

  /// Reflexive-transitive closure of the given pairs.
  static Preorder generated_by(std::vector<std::string> labels,
                               const std::vector<IndexPair>& pairs);

  std::size_t size() const noexcept { return labels_.size(); }
  bool leq(Index x, Index y) const noexcept {
    return rel_[static_cast<std::size_t>(x) * size() + static_cast<std::size_t>(y)] != 0;
  }
  bool equivalent(Index x, Index y) const noexcept { return leq(x, y) && leq(y, x); }
  const std::string& label(Index x) const { return labels_.at(static_cast<std::size_t>(x)); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<std::uint8_t>& relation() const noexcept { return rel_; }
  Index index_of(std::string_view label) const;

  bool is_antisymmetric() const noexcept;
  /// Equivalence classes of x ~ y (x <= y <= x), in order of least member.
  std::vector<std::vector<Index>> classes() const;
  /// All pairs (x, y) with x <= y in row-major order.
  std::vector<IndexPair> pairs() const;

  friend bool operator==(const Preorder&, const Preorder&) = default;

 protected:
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> rel_;
  std::unordered_map<std::string, Index> index_;

  void build_index();
};

/// Finite partially ordered set.  Element indices follow declaration order,
/// which is also the tie-break order used throughout the library.
class Poset : public Preorder {
 public:
  Poset() = default;
  /// Validated reflexive, transitive and antisymmetric.
  Poset(std::vector<std::string> labels, std::vector<std::uint8_t> rel);

  /// Transitive-reflexive closure of the pairs; CycleDetected when two
  /// distinct elements end up equivalent.
  static Poset from_pairs(std::vector<std::string> labels,
                          const std::vector<IndexPair>& pairs);

  bool lt(Index x, Index y) const noexcept { return x != y && leq(x, y); }
  bool comparable(Index x, Index y) const noexcept { return leq(x, y) || leq(y, x); }
  bool is_minimal(Index x) const noexcept;
  bool is_maximal(Index x) const noexcept;

  /// Induced subposet on the given members (kept in the given order).
  Poset induced(const std::vector<Index>& members) const;

  friend bool operator==(const Poset&, const Poset&) = default;
};

using PosetPtr = std::shared_ptr<const Poset>;

inline PosetPtr share(Poset p) { return std::make_shared<const Poset>(std::move(p)); }

/// Parses the text format: a line `elements: e1 e2 ...`, any number of lines
/// `covers: x<y x<z ...`, `#` comments.
Poset parse_poset(std::string_view text);

/// Pairs x < y with nothing strictly between, row-major order.
std::vector<IndexPair> hasse_covers(const Poset& p);

/// Element-count guards for exponential enumerations.  The environment
/// variable POSET_FORGE_MAX_ELEMENTS overrides both defaults.
std::size_t closed_subposet_limit();
std::size_t automorphism_limit();

/// All order automorphisms, identity first, then lexicographic.
std::vector<Permutation> automorphism_group(const Poset& p);

bool is_automorphism(const Poset& p, const Permutation& sigma);
Permutation compose(const Permutation& outer, const Permutation& inner);
Permutation inverse(const Permutation& sigma);

/// Subposet (S, <=_S) of a parent poset that is closed under subintervals:
/// x <=_S y and x <= z <= y in the parent force z in S and x <=_S z <=_S y.
class ClosedSubposet {
 public:
  /// Validates every invariant; NotClosed otherwise.  rel holds the pairs
  /// x <=_S y with x != y; reflexive pairs are implied by membership.
  ClosedSubposet(PosetPtr parent, std::vector<Index> members,
                 const std::vector<IndexPair>& rel);

  static ClosedSubposet empty(PosetPtr parent);
  static ClosedSubposet full(PosetPtr parent);
  /// The set with no relations besides equality.
  static ClosedSubposet discrete(PosetPtr parent, std::vector<Index> members);
  /// Principal lower set {z : z <= x} with the full induced order.
  static ClosedSubposet lower_set(PosetPtr parent, Index x);

  const Poset& parent() const noexcept { return *parent_; }
  const PosetPtr& parent_ptr() const noexcept { return parent_; }
  bool contains(Index x) const noexcept { return in_[static_cast<std::size_t>(x)] != 0; }
  bool rel(Index x, Index y) const noexcept;
  /// Sorted member indices.
  const std::vector<Index>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool is_empty() const noexcept { return members_.empty(); }
  /// Pairs x <_S y, row-major.
  std::vector<IndexPair> strict_pairs() const;
  /// Pairs x <=_S y including x = y, row-major.
  std::vector<IndexPair> pairs() const;

  /// (S, <=_S) as a standalone poset, elements in member order.
  Poset as_poset() const;
  /// Position of a parent index inside members(), or -1.
  Index local_index(Index x) const noexcept;

  bool same_parent(const ClosedSubposet& other) const noexcept;

  friend bool operator==(const ClosedSubposet& a, const ClosedSubposet& b) {
    return a.members_ == b.members_ && a.rel_ == b.rel_;
  }
  /// Deterministic total order: size, then members, then relations.
  friend bool operator<(const ClosedSubposet& a, const ClosedSubposet& b);

 private:
  ClosedSubposet(PosetPtr parent, std::vector<std::uint8_t> in,
                 std::vector<std::uint8_t> rel);

  PosetPtr parent_;
  std::vector<std::uint8_t> in_;
  std::vector<std::uint8_t> rel_;  // n*n over parent indices, reflexive on members
  std::vector<Index> members_;

  void validate() const;
  friend ClosedSubposet wedge(const ClosedSubposet&, const ClosedSubposet&);
  friend ClosedSubposet closure_of_intervals(PosetPtr, const std::vector<IndexPair>&);
  friend std::vector<ClosedSubposet> closed_subposets(const PosetPtr&);
};

/// Every closed subposet, including the empty one and P itself, sorted.
/// TooLarge when |P| exceeds closed_subposet_limit().
std::vector<ClosedSubposet> closed_subposets(const PosetPtr& p);

/// Smallest closed subposet containing the given intervals [x, y]:
/// repeatedly keeps maximal intervals and merges overlapping ones.
ClosedSubposet closure_of_intervals(PosetPtr p, const std::vector<IndexPair>& intervals);

/// Intersection of members with the conjunction of the relations.
ClosedSubposet wedge(const ClosedSubposet& s, const ClosedSubposet& t);

/// Connected components of the comparability graph, each sorted, ordered by
/// least member.
std::vector<std::vector<Index>> components(const Preorder& p);
bool is_connected(const Preorder& p);

/// A minimal or maximal element whose removal leaves P connected, chosen as
/// the least-label leaf of the BFS spanning tree of the bipartite min/max
/// comparability graph.
Index removable_extremal(const Poset& p);

}  // namespace pf
