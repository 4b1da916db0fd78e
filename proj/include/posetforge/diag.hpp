#pragma once

// Square matrices up to conjugation by invertible diagonal matrices
// A -> D A D^-1.  The orbit is fixed by the zero pattern together with the
// cycle holonomies of the pattern digraph.

#include <optional>
#include <vector>

#include "posetforge/field.hpp"
#include "posetforge/poset.hpp"

namespace pf {

struct PatternMatrix {
  /// InvalidArgument unless square with entries in the field; the field
  /// must be concrete.
  PatternMatrix(Field field, FieldMatrix entries);

  Field field;
  FieldMatrix entries;

  std::size_t size() const noexcept { return entries.rows(); }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries(i, j); }

  friend bool operator==(const PatternMatrix& a, const PatternMatrix& b) {
    return a.field == b.field && a.entries == b.entries;
  }
};

/// Arrow i -> j for every nonzero (i, j), loops included, row-major.
struct Digraph {
  std::size_t n = 0;
  std::vector<IndexPair> arrows;

  friend bool operator==(const Digraph&, const Digraph&) = default;
};

struct SpanningStructure {
  /// Components of the underlying undirected graph, sorted, by least vertex.
  std::vector<std::vector<Index>> components;
  /// Retained arrows per component, row-major.
  std::vector<std::vector<IndexPair>> trees;
  /// Removed arrows in removal (ascending row-major) order.
  std::vector<IndexPair> eliminated;
};

struct CanonicalPair {
  PatternMatrix c;
  /// Diagonal of D with D A D^-1 = C.
  std::vector<Scalar> d;
};

struct OrbitInvariant {
  Digraph graph;
  /// Entry of C at each eliminated arrow, in elimination order.
  std::vector<Scalar> holonomy;

  friend bool operator==(const OrbitInvariant&, const OrbitInvariant&) = default;
};

Digraph pattern_graph(const PatternMatrix& a);
/// Removes the least arrow lying on an undirected cycle (a loop is a cycle)
/// until none is left.
SpanningStructure spanning_structure(const Digraph& g);
CanonicalPair canonical_form(const PatternMatrix& a);
OrbitInvariant orbit_invariant(const PatternMatrix& a);
/// Diagonal of some D with D A D^-1 = B, if any.  InvalidArgument for
/// different sizes or fields.
std::optional<std::vector<Scalar>> diag_conjugate_test(const PatternMatrix& a, const PatternMatrix& b);
/// i <= j iff Gamma has a path from i to j; labels "1".."n".
Preorder quiver_quotient_preorder(const PatternMatrix& a);

/// D A D^-1 for a diagonal D.
PatternMatrix conjugate(const PatternMatrix& a, const std::vector<Scalar>& d);

}  // namespace pf
