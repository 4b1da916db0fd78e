#pragma once

// Thin representations of incidence algebras I(P, K): a basis m_x for x in
// a closed subposet S, with f_xy m_y = alpha_xy m_x when x <=_S y and all
// other basis actions zero.

#include <map>
#include <optional>
#include <vector>

#include "posetforge/cocycles.hpp"
#include "posetforge/field.hpp"
#include "posetforge/poset.hpp"

namespace pf {

class ThinRep {
 public:
  /// alpha holds a value for every x <_S y (parent indices); diagonal
  /// entries may be given and must be 1.  NotMultiplicative when
  /// alpha_xz != alpha_xy alpha_yz; MissingValue, InvalidArgument,
  /// SymbolicFieldUnsupported.
  ThinRep(ClosedSubposet support, Field field, std::map<IndexPair, Scalar> alpha);

  const Poset& parent() const noexcept { return support_.parent(); }
  const PosetPtr& parent_ptr() const noexcept { return support_.parent_ptr(); }
  const Field& field() const noexcept { return field_; }
  const ClosedSubposet& support() const noexcept { return support_; }
  std::size_t dimension() const noexcept { return support_.size(); }
  bool is_zero() const noexcept { return support_.is_empty(); }
  /// 1 at members of the support, 0 elsewhere.
  std::vector<int> dimension_vector() const;
  /// alpha_xy for x <=_S y (1 on the diagonal), 0 otherwise.
  Scalar alpha(Index x, Index y) const;
  /// Values on the strict pairs of the support.
  const std::map<IndexPair, Scalar>& alpha_values() const noexcept { return alpha_; }

  /// The support as a standalone poset and alpha as a strict 1-cochain on it.
  PosetPtr support_poset() const;
  MultCochain local_cochain(const PosetPtr& support_poset) const;

  friend bool operator==(const ThinRep& a, const ThinRep& b) {
    return a.support_ == b.support_ && a.field_ == b.field_ && a.alpha_ == b.alpha_;
  }

 private:
  ClosedSubposet support_;
  Field field_;
  std::map<IndexPair, Scalar> alpha_;
};

ThinRep defining_representation(const PosetPtr& p, const Field& f);
ThinRep make_thin(const PosetPtr& p, const ClosedSubposet& s, const std::map<IndexPair, Scalar>& alpha,
                  const Field& f);

/// Matrices of f_xy for every x <= y of the parent on the basis m_z, z in
/// the support (member order).
struct ActionTable {
  PosetPtr parent;
  Field field;
  std::vector<Index> basis;
  std::map<IndexPair, FieldMatrix> action;
};

ActionTable action_table(const ThinRep& m);
/// NotClosed when the table does not come from a thin representation.
ClosedSubposet annihilator_support(const ActionTable& t);

/// theta over parent indices (1 off the support) with
/// alpha_xy / beta_xy = theta_x^-1 theta_y; m_x -> theta_x n_x is then an
/// isomorphism M -> N.  InvalidArgument when parents or fields differ.
std::optional<std::vector<Scalar>> reps_isomorphic(const ThinRep& m, const ThinRep& n);

/// dim Hom_A(M, N), solved from the commutation equations.
std::size_t hom_dimension(const ThinRep& m, const ThinRep& n);

struct ThinClassEntry {
  ThinRep rep;
  /// Canonical exponent vector of the class (mod q-1) over the strict pairs
  /// of the support.
  std::vector<mpz_class> class_key;
};

struct ThinCatalogue {
  std::vector<ThinClassEntry> entries;
  /// |H^1(Delta(S), F_q^*)| per closed subposet, in closed_subposets order.
  std::vector<std::pair<ClosedSubposet, std::size_t>> per_support;
};

/// One representative per isomorphism class of thin representations over a
/// finite field.  InvalidField for infinite fields.
ThinCatalogue classify_thin(const PosetPtr& p, const Field& f);

struct RebaseCertificate {
  /// e_xy = algebra_scale[(x,y)] f_xy for x <=_S y; e_xy e_yz = e_xz and
  /// e_xy m_y = m_x.
  std::map<IndexPair, Scalar> algebra_scale;
  /// When [alpha] is trivial: m'_x = module_scale[x] m_x makes the action of
  /// the original basis defining (f_xy m'_y = m'_x).
  std::optional<std::vector<Scalar>> module_scale;
};

RebaseCertificate rebase_to_defining(const ThinRep& m);

/// ZeroRep on the zero representation; the connectivity answer is checked
/// against dim End(M) = number of components.
bool is_indecomposable(const ThinRep& m);
std::size_t endomorphism_dimension(const ThinRep& m);

struct AccessStep {
  enum class Kind { Start, Submodule, Quotient };
  ThinRep rep;
  Kind kind = Kind::Start;
  /// Parent index removed from the previous support (-1 for the start).
  Index removed = -1;
  /// Inclusion rep -> previous (Submodule) or projection previous -> rep
  /// (Quotient), on the member bases; verified to commute with every f_xy.
  FieldMatrix map;
};

/// M = M_k, ..., M_1 with each step one dimension smaller.
/// NotIndecomposable; ZeroRep.
std::vector<AccessStep> accessibility_chain(const ThinRep& m);

struct SubmoduleLattice {
  Index top = -1;
  /// Down-closed subsets of {z : z <= top}, by size then lexicographically.
  std::vector<std::vector<Index>> elements;
  /// leq[i * n + j]: elements[i] is contained in elements[j].
  std::vector<std::uint8_t> leq;
  bool distributive = false;
};

/// Submodules of the projective P_x = I(P,K) f_xx.
SubmoduleLattice submodule_lattice(const PosetPtr& p, Index x);

}  // namespace pf
