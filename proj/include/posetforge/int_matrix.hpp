#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace pf {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transposed() const;
  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

/// Determinant by fraction-free (Bareiss) elimination.
mpz_class determinant(const IntMatrix& m);

/// S = U * M * V with U, V unimodular and S diagonal, d_1 | d_2 | ... and
/// every d_i positive.
struct SmithForm {
  IntMatrix u;
  IntMatrix s;
  IntMatrix v;
  std::size_t rank = 0;
  /// The nonzero diagonal entries d_1 | d_2 | ... | d_rank.
  std::vector<mpz_class> divisors;

  friend bool operator==(const SmithForm&, const SmithForm&) = default;
};

enum class SmithEngine { Auto, SmallInt, BigInt };

/// Smith normal form.  Pivot: least nonzero absolute value in the active
/// submatrix, ties to the lowest row then column.  Auto runs the bounded
/// int64 engine and restarts with GMP integers when an entry leaves the
/// int64 bound; both engines perform the identical sequence of operations.
SmithForm smith_normal_form(const IntMatrix& m, SmithEngine engine = SmithEngine::Auto);

/// Diagonal only (no transforms); cheaper for homology.
std::vector<mpz_class> smith_divisors(const IntMatrix& m, SmithEngine engine = SmithEngine::Auto);

/// Inverse of a unimodular matrix (exact; InvalidArgument otherwise).
IntMatrix inverse_unimodular(const IntMatrix& m);

/// Solves a x = c (mod m) through the Smith form of a; m = 0 means over Z.
/// With U a V = S, the class of c modulo image(a) + m Z^rows is recorded by
/// the residues of U c: mod gcd(s_i, m) for i < rank, mod m beyond.
class CongruenceSolver {
 public:
  explicit CongruenceSolver(const IntMatrix& a);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const SmithForm& smith() const noexcept { return snf_; }

  std::optional<std::vector<mpz_class>> solve(const std::vector<mpz_class>& c, const mpz_class& m) const;
  /// Residues of U c and their moduli (0 = free integer coordinate).
  std::vector<mpz_class> coordinates(const std::vector<mpz_class>& c, const mpz_class& m) const;
  std::vector<mpz_class> coordinate_moduli(const mpz_class& m) const;
  /// Canonical member of the class of c: U^-1 applied to the residues,
  /// entries reduced mod m when m > 0.
  std::vector<mpz_class> reduce(const std::vector<mpz_class>& c, const mpz_class& m) const;
  /// Generators of {x : a x = 0 (mod m)}.
  std::vector<std::vector<mpz_class>> kernel_generators(const mpz_class& m) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  SmithForm snf_;
  IntMatrix uinv_;
};

}  // namespace pf
