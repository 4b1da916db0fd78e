#pragma once

// Order complex of a poset, its integral boundary maps and homology.

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "posetforge/int_matrix.hpp"
#include "posetforge/poset.hpp"

namespace pf {

/// Chain x_0 <= x_1 <= ... <= x_n of element indices.
using Chain = std::vector<Index>;

enum class ChainDomain {
  Strict,  ///< x_0 < x_1 < ... : the simplices of the order complex
  Weak,    ///< x_0 <= x_1 <= ... : degenerate chains included
};

class OrderComplex {
 public:
  /// Strict chains of every length, or weak chains up to max_degree.
  OrderComplex(const Poset& p, ChainDomain domain, int max_degree);

  ChainDomain domain() const noexcept { return domain_; }
  /// Highest degree with at least one chain (-1 for the empty poset).
  int top_degree() const noexcept { return static_cast<int>(chains_.size()) - 1; }
  /// Chains of degree n (n+1 entries) in lexicographic index order; empty
  /// outside [0, top_degree].
  const std::vector<Chain>& chains(int n) const;
  std::size_t count(int n) const { return chains(n).size(); }
  /// Position of a chain inside chains(chain.size() - 1), or -1.
  long position(const Chain& c) const;

 private:
  ChainDomain domain_;
  std::vector<std::vector<Chain>> chains_;
  std::vector<std::map<Chain, std::size_t>> index_;
};

/// Strict order complex.
OrderComplex order_complex(const Poset& p);
/// Weak chains in degrees 0..max_degree.
OrderComplex weak_complex(const Poset& p, int max_degree);

/// Face i of a chain: entry i removed.
Chain face(const Chain& c, std::size_t i);

/// Matrix of d_n : C_n -> C_{n-1}, d(s_0..s_n) = sum (-1)^i (face i).
/// Rows index degree n-1 chains, columns degree n chains.
/// DegreeOutOfRange unless 1 <= n <= top degree.
IntMatrix boundary_matrix(const OrderComplex& k, int n);

/// Finitely generated abelian group Z^b + Z/d_1 + ... with d_i | d_{i+1}, d_i >= 2.
struct FinAbGroup {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  /// "0", "Z", "Z^2 + Z/2", ...
  std::string to_string() const;
  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;
};

/// Keeps the divisors >= 2 of a Smith diagonal.
FinAbGroup make_group(std::size_t free_rank, const std::vector<mpz_class>& divisors);

/// H_n of a chain complex; trivial above the top degree.
FinAbGroup homology(const OrderComplex& k, int n);
FinAbGroup homology(const Poset& p, int n);

}  // namespace pf
