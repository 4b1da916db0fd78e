#pragma once

// Deformed incidence algebras I_lambda(P, K): basis f_xy for x <= y with
// f_xy f_yz = lambda(x,y,z) f_xz and all other products zero.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "posetforge/cocycles.hpp"
#include "posetforge/field.hpp"
#include "posetforge/poset.hpp"

namespace pf {

/// Sparse vector over the basis: basis index -> nonzero coefficient.
using SparseVec = std::map<std::size_t, Scalar>;

class DeformedAlgebra {
 public:
  const Poset& poset() const noexcept { return lambda_.poset(); }
  const PosetPtr& poset_ptr() const noexcept { return lambda_.poset_ptr(); }
  const Field& field() const noexcept { return lambda_.field(); }
  /// Weak-domain 2-cocycle.
  const MultCochain& lambda() const noexcept { return lambda_; }
  const Normalization& normalization() const noexcept { return norm_; }

  std::size_t dimension() const noexcept { return basis_.size(); }
  /// Basis pairs (x, y), x <= y, row-major.
  const std::vector<IndexPair>& basis() const noexcept { return basis_; }
  /// Position of f_xy, or -1 when x is not below y.
  long basis_index(Index x, Index y) const noexcept;
  std::string basis_label(std::size_t i) const;

  /// Product of two basis vectors: nullopt when zero.
  std::optional<std::pair<std::size_t, Scalar>> product(std::size_t i, std::size_t j) const;
  SparseVec multiply(const SparseVec& a, const SparseVec& b) const;
  /// sum_x alpha_xx f_xx.
  SparseVec unit() const;

 private:
  friend DeformedAlgebra build_deformed(const MultCochain& lambda);
  DeformedAlgebra(MultCochain lambda, Normalization norm);

  MultCochain lambda_;
  Normalization norm_;
  std::vector<IndexPair> basis_;
  std::vector<long> index_;  // n*n
};

/// NotACocycle; the associativity of the table is re-checked on every
/// triple of basis vectors.  Strict input is extended to the weak domain.
DeformedAlgebra build_deformed(const MultCochain& lambda);
/// InvalidArgument when poset or field differ from those of lambda.
DeformedAlgebra build_deformed(const PosetPtr& p, const MultCochain& lambda, const Field& f);

struct TrivialDeformation {
  bool trivial = false;
  /// r with (r_xy f_xy)(r_yz f_yz) = r_xz f_xz, checked on the table.
  std::optional<MultCochain> rescaling;
};

TrivialDeformation is_trivial_deformation(const DeformedAlgebra& a);

struct DeformationIso {
  Permutation sigma;
  /// pullback(lambda_A, sigma) / lambda_B = delta(alpha); the algebra map
  /// B -> A is g_xy -> alpha_xy^-1 f_{sigma x, sigma y}.
  MultCochain alpha;
};

/// Tries automorphisms in automorphism_group order.
std::optional<DeformationIso> deformations_isomorphic(const DeformedAlgebra& a, const DeformedAlgebra& b);

/// f_basis[i] -> coeff[i] f_basis[image[i]].
struct BasisMap {
  std::vector<std::size_t> image;
  std::vector<Scalar> coeff;
};

/// Applies a basis map linearly.
SparseVec apply(const BasisMap& m, const SparseVec& v, const Field& f);
/// phi(b_i) phi(b_j) == phi(b_i b_j) for all basis pairs.
bool is_homomorphism(const DeformedAlgebra& from, const DeformedAlgebra& to, const BasisMap& m);
bool is_multiplicative(const DeformedAlgebra& a, const BasisMap& m);

/// With tau = sigma^-1: f_xy -> gamma_xy alpha_xy f_{tau x, tau y}, where
/// delta(gamma) = lambda / (lambda o tau) is the class-correcting rescaling.
/// ClassNotFixed when no such gamma exists; NotMultiplicative when alpha
/// (extended by 1 on degenerate pairs if strict) is not a 1-cocycle.
BasisMap standard_automorphism(const DeformedAlgebra& a, const Permutation& sigma, const MultCochain& alpha);

/// Algebra given by structure constants: products of basis vectors as
/// dense coefficient vectors, plus a designated set of idempotents.
struct StructureConstantAlgebra {
  Field field;
  std::vector<std::string> basis;
  std::vector<std::size_t> idempotents;
  /// table[i * n + j] = b_i b_j, length n each.
  std::vector<std::vector<Scalar>> table;

  std::size_t dimension() const noexcept { return basis.size(); }
  const std::vector<Scalar>& product(std::size_t i, std::size_t j) const { return table[i * basis.size() + j]; }
  /// InvalidArgument unless the table has n*n entries of length n with
  /// field elements, and idempotent indices are distinct and in range.
  void validate() const;
};

/// Table of the normalized algebra (basis alpha_xy f_xy multiplying by mu),
/// labels f[x:y], idempotents f[x:x].
StructureConstantAlgebra to_structure_constants(const DeformedAlgebra& a);

struct Recognition {
  /// Points are the idempotents in the given order, labelled x when the
  /// idempotent is named f[x:x], by its basis label otherwise.
  Preorder order;
  bool is_poset = false;
  /// The poset and the extracted cocycle when the relation is antisymmetric.
  std::optional<PosetPtr> poset;
  std::optional<MultCochain> lambda;
  /// b_ij b_jk = structure[(i,j,k)] b_ik for i <= j <= k, over the preorder.
  std::map<Chain, Scalar> structure;
  /// Block (i, j) of each basis vector.
  std::vector<IndexPair> block;
};

struct RecognitionResult {
  std::optional<Recognition> recognized;
  /// Why recognition failed.
  std::string reason;
};

/// MalformedBasis when the designated idempotents are not orthogonal
/// idempotents or a basis vector is not supported in a single e_i A e_j.
RecognitionResult recognize_incidence(const StructureConstantAlgebra& a);

struct TwoSidedIdeal {
  /// Spanned by f_xy for these pairs, row-major.
  std::vector<IndexPair> span;
  /// The remaining pairs: a family of intervals closed under subintervals.
  std::vector<IndexPair> complement;
  /// The complement as a closed subposet when it is transitive; exactly
  /// these ideals are annihilators of thin representations.
  std::optional<ClosedSubposet> closed;
};

/// Every two-sided ideal of I(P, K), ordered by decreasing dimension of the
/// quotient, then by complement.  TooLarge beyond closed_subposet_limit()
/// elements or one million ideals.
std::vector<TwoSidedIdeal> two_sided_ideals(const PosetPtr& p);

}  // namespace pf
