#pragma once

// Coefficient fields.  Elements of every field are carried as mpq_class:
// rationals are themselves, finite-field elements are integer codes in
// [0, q) (base-p digits of the polynomial coordinates for q = p^k).

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace pf {

using Scalar = mpq_class;

enum class FieldKind { Finite, Rational, Symbolic };

class Field {
 public:
  Field();  // Q

  /// F_q for a prime power 2 <= q <= 2^20; InvalidField otherwise.
  static Field finite(std::uint64_t q);
  static Field rationals();
  /// Only structural queries (cohomology_structure) accept these.
  static Field symbolic(std::uint64_t characteristic, bool algebraically_closed);
  /// "5", "F_9", "Q", "C", "closed:p", "closed:0", "symbolic:p".
  static Field parse(std::string_view text);

  FieldKind kind() const noexcept { return kind_; }
  bool is_concrete() const noexcept { return kind_ != FieldKind::Symbolic; }
  bool is_finite() const noexcept { return kind_ == FieldKind::Finite; }
  /// q for F_q, 0 otherwise.
  std::uint64_t order() const noexcept { return q_; }
  std::uint64_t characteristic() const noexcept { return p_; }
  bool algebraically_closed() const noexcept { return closed_; }
  std::string name() const;

  Scalar zero() const { return 0; }
  Scalar one() const { return 1; }
  bool is_zero(const Scalar& a) const { return a == 0; }
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  /// NotInvertible on zero.
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  Scalar pow(const Scalar& a, long e) const;

  /// Image of an integer (through the prime subfield for F_q).
  Scalar from_integer(long n) const;
  /// Decimal integer (a residue, or a code in [0, q) when q is not prime)
  /// or, over Q, "a/b".
  Scalar parse_element(std::string_view text) const;
  std::string format(const Scalar& a) const;
  /// True when a is a legal element representation of this field.
  bool contains(const Scalar& a) const;

  /// Discrete logarithm to generator() for nonzero elements of F_q.
  std::uint64_t log(const Scalar& a) const;
  Scalar exp(std::uint64_t e) const;
  /// Least code whose powers exhaust F_q^*.
  Scalar generator() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.q_ == b.q_ && a.p_ == b.p_ && a.closed_ == b.closed_;
  }

  struct Tables;

 private:
  FieldKind kind_ = FieldKind::Rational;
  std::uint64_t q_ = 0;
  std::uint64_t p_ = 0;
  bool closed_ = false;
  std::shared_ptr<const Tables> tables_;

  void require_concrete() const;
  std::uint32_t code(const Scalar& a) const;
};

/// Dense matrix over a Field.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static FieldMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  bool is_zero() const;

  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

FieldMatrix multiply(const Field& f, const FieldMatrix& a, const FieldMatrix& b);
/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(const Field& f, FieldMatrix& m);
std::size_t rank(const Field& f, FieldMatrix m);
/// Basis of {x : m x = 0}.
std::vector<std::vector<Scalar>> nullspace(const Field& f, FieldMatrix m);

}  // namespace pf
