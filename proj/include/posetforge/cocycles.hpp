#pragma once

// Cochains of the order complex with values in the unit group K* of a field,
// the multiplicative coboundary, triviality decisions and the universal
// coefficient description of H^n(Delta(P), K*).

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "posetforge/chain_complex.hpp"
#include "posetforge/field.hpp"
#include "posetforge/poset.hpp"

namespace pf {

/// Degree-n cochain: a unit for every chain of n+1 entries in its domain.
/// Degree-2 cochains on the weak domain are the deformation data lambda;
/// lambda(x,y,z) multiplies f_xy f_yz.
class MultCochain {
 public:
  MultCochain(PosetPtr poset, Field field, int degree, ChainDomain domain);
  static MultCochain constant(PosetPtr poset, Field field, int degree, ChainDomain domain,
                              const Scalar& value = 1);

  const Poset& poset() const noexcept { return *poset_; }
  const PosetPtr& poset_ptr() const noexcept { return poset_; }
  const Field& field() const noexcept { return field_; }
  int degree() const noexcept { return degree_; }
  ChainDomain domain() const noexcept { return domain_; }
  const std::map<Chain, Scalar>& values() const noexcept { return values_; }

  /// Rejects chains outside the domain (InvalidArgument) and zero or
  /// foreign values (NotInvertible / InvalidArgument).
  void set(const Chain& c, const Scalar& v);
  bool has(const Chain& c) const { return values_.count(c) != 0; }
  /// MissingValue when unset.
  const Scalar& at(const Chain& c) const;

  /// Every chain the cochain must be defined on, lexicographic.
  std::vector<Chain> required_chains() const;
  /// MissingValue naming the first unset chain.
  void require_complete() const;

  friend bool operator==(const MultCochain& a, const MultCochain& b) {
    return a.degree_ == b.degree_ && a.domain_ == b.domain_ && a.field_ == b.field_ &&
           *a.poset_ == *b.poset_ && a.values_ == b.values_;
  }

 private:
  PosetPtr poset_;
  Field field_;
  int degree_;
  ChainDomain domain_;
  std::map<Chain, Scalar> values_;
};

/// Pointwise product and inverse.
MultCochain multiply(const MultCochain& a, const MultCochain& b);
MultCochain inverse(const MultCochain& a);
/// Strict cochain extended by 1 on degenerate chains (the weak domain).
MultCochain extend_to_weak(const MultCochain& a);
/// Restriction of a weak cochain to the strict chains.
MultCochain restrict_to_strict(const MultCochain& a);
/// (sigma^* c)(s_0..s_n) = c(sigma s_0, ..., sigma s_n) for an automorphism sigma.
MultCochain pullback(const MultCochain& c, const Permutation& sigma);

/// Multiplicative coordinates of K*: coordinate k lives in Z/moduli[k]
/// (0 = Z).  F_q*: discrete log to the least primitive root.  Q*: sign bit
/// plus exponents over a multiplicatively independent base of the values
/// seen (pairwise coprime, none a perfect power).
class UnitModel {
 public:
  static UnitModel build(const Field& f, const std::vector<Scalar>& values);
  const std::vector<mpz_class>& moduli() const noexcept { return moduli_; }
  std::vector<mpz_class> encode(const Scalar& a) const;
  Scalar decode(const std::vector<mpz_class>& coords) const;
  /// The positive base integers of the Q* model.
  const std::vector<mpz_class>& base() const noexcept { return base_; }

 private:
  Field field_;
  std::vector<mpz_class> moduli_;
  std::vector<mpz_class> base_;
};

/// (delta a)(s_0..s_{n+1}) = prod_i a(face_i s)^((-1)^i).
MultCochain coboundary(const MultCochain& a);
/// delta c == 1 on every chain of degree n+1 in the domain.  On the weak
/// domain in degree 2 this is lambda(x,y,z) lambda(x,z,t) = lambda(x,y,t)
/// lambda(y,z,t) for all x <= y <= z <= t.
bool is_cocycle(const MultCochain& c);

struct Normalization {
  MultCochain mu;
  MultCochain alpha;
};

/// alpha_xy = lambda(x,x,y)^-1 and mu = lambda * delta(alpha), so that
/// mu(x,x,x) = mu(x,x,y) = mu(x,y,y) = 1.  Strict input is first extended
/// to the weak domain.  NotACocycle.
Normalization normalize_2cocycle(const MultCochain& lambda);

struct TrivialityReport {
  bool trivial = false;
  /// delta(witness) == c, verified pointwise; absent in degree 0.
  std::optional<MultCochain> witness;
  /// Canonical cocycle of the class of c.
  MultCochain representative;
  /// Class coordinates, coordinate block by unit coordinate.
  std::vector<mpz_class> class_coordinates;
  std::vector<mpz_class> class_moduli;
};

/// Decides whether c = delta(a) by taking unit coordinates and solving the
/// integer system (transpose of the boundary) through its Smith form.
/// NotACocycle; SymbolicFieldUnsupported.
TrivialityReport reduce_modulo_coboundaries(const MultCochain& c);

struct ClassComparison {
  bool same = false;
  /// delta(witness) == c1 / c2 when same (and degree > 0).
  std::optional<MultCochain> witness;
};

ClassComparison same_class(const MultCochain& c1, const MultCochain& c2);

/// One summand of a formal abelian group expression.
struct GroupFactor {
  enum class Kind {
    Cyclic,          ///< (Z/order)^multiplicity
    UnitGroup,       ///< (K*)^multiplicity for an infinite field K
    CyclicInfinite,  ///< countably infinite direct sum of Z/order
  };
  Kind kind = Kind::Cyclic;
  mpz_class order = 1;
  std::size_t multiplicity = 1;

  friend bool operator==(const GroupFactor&, const GroupFactor&) = default;
};

/// H^n(Delta, K*) = Hom(H_n, K*) + Ext(H_{n-1}, K*).
struct FormalGroupExpr {
  std::vector<GroupFactor> hom_part;
  std::vector<GroupFactor> ext_part;

  /// Finite order, or nullopt for an infinite group.
  std::optional<mpz_class> order() const;
  std::string to_string() const;
};

/// NotInvertible-free structural query; symbolic fields must be
/// algebraically closed (SymbolicFieldUnsupported otherwise).
FormalGroupExpr cohomology_structure(const Poset& p, int n, const Field& f);
/// Same from given homology groups H_n and H_{n-1}.
FormalGroupExpr cohomology_structure(const FinAbGroup& hn, const FinAbGroup& hn_minus_1, const Field& f);

}  // namespace pf
