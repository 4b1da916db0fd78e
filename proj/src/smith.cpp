#include <algorithm>
#include <cstdint>
#include <span>
#include <sstream>
#include <utility>

#include "posetforge/int_matrix.hpp"
#include "posetforge/error.hpp"
#include "posetforge/kernels.hpp"

namespace pf {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const mpz_class& x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const mpz_class& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c).get_str();
    os << '\n';
  }
  return os.str();
}

mpz_class determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) return 0;
  if (n == 0) return 1;
  IntMatrix a = m;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(r, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

struct SmallIntOverflow {};

// ----- scalar-type adapters shared by both engines

inline bool is_zero(std::int64_t x) { return x == 0; }
inline bool is_zero(const mpz_class& x) { return x == 0; }
inline bool abs_less(std::int64_t a, std::int64_t b) { return (a < 0 ? -a : a) < (b < 0 ? -b : b); }
inline bool abs_less(const mpz_class& a, const mpz_class& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }
inline std::int64_t tdiv(std::int64_t a, std::int64_t b) { return a / b; }
inline mpz_class tdiv(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline bool divides(std::int64_t d, std::int64_t a) { return a % d == 0; }
inline bool divides(const mpz_class& d, const mpz_class& a) {
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}
inline bool negative(std::int64_t x) { return x < 0; }
inline bool negative(const mpz_class& x) { return sgn(x) < 0; }

void axpy(std::span<std::int64_t> dst, std::span<const std::int64_t> src, std::int64_t q) {
  if (!kernels::active().axpy_bounded(dst, src, q)) throw SmallIntOverflow{};
}
void axpy(std::span<mpz_class> dst, std::span<const mpz_class> src, const mpz_class& q) {
  for (std::size_t i = 0; i < dst.size(); ++i) mpz_submul(dst[i].get_mpz_t(), q.get_mpz_t(), src[i].get_mpz_t());
}

inline void submul_checked(std::int64_t& d, std::int64_t q, std::int64_t s) {
  d -= q * s;
  if (d > kernels::kBound || d < -kernels::kBound) throw SmallIntOverflow{};
}
inline void submul_checked(mpz_class& d, const mpz_class& q, const mpz_class& s) {
  mpz_submul(d.get_mpz_t(), q.get_mpz_t(), s.get_mpz_t());
}

std::size_t row_argmin(std::span<const std::int64_t> x) { return kernels::active().argmin_abs_nonzero(x); }
std::size_t row_argmin(std::span<const mpz_class> x) {
  std::size_t best = x.size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0 && (best == x.size() || mpz_cmpabs(x[i].get_mpz_t(), x[best].get_mpz_t()) < 0)) best = i;
  }
  return best;
}

template <class Num>
struct Dense {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Num> data;

  Dense(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  Num& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Num& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  std::span<Num> row(std::size_t r, std::size_t from = 0) {
    return {data.data() + r * cols + from, cols - from};
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(data.begin() + static_cast<std::ptrdiff_t>(a * cols),
                     data.begin() + static_cast<std::ptrdiff_t>((a + 1) * cols),
                     data.begin() + static_cast<std::ptrdiff_t>(b * cols));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows; ++r) std::swap(at(r, a), at(r, b));
  }
  void negate_row(std::size_t r) {
    for (auto& x : row(r)) x = -x;
  }
  static Dense identity(std::size_t n) {
    Dense d(n, n);
    for (std::size_t i = 0; i < n; ++i) d.at(i, i) = 1;
    return d;
  }
};

template <class Num>
struct Engine {
  Dense<Num> a;
  bool transforms;
  Dense<Num> u;   // rows x rows
  Dense<Num> vt;  // V transposed, so column operations on V are row operations

  Engine(Dense<Num> m, bool want)
      : a(std::move(m)), transforms(want),
        u(want ? Dense<Num>::identity(a.rows) : Dense<Num>(0, 0)),
        vt(want ? Dense<Num>::identity(a.cols) : Dense<Num>(0, 0)) {}

  void swap_rows(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    if (transforms) u.swap_rows(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    if (transforms) vt.swap_rows(i, j);
  }
  // row i -= q * row s; entries left of column t are zero in both rows
  void row_op(std::size_t i, std::size_t s, const Num& q, std::size_t t) {
    axpy(a.row(i, t), std::span<const Num>(a.row(s, t)), q);
    if (transforms) axpy(u.row(i), std::span<const Num>(u.row(s)), q);
  }
  // column j -= q * column t; only rows >= t are nonzero in column t
  void col_op(std::size_t j, std::size_t t, const Num& q) {
    for (std::size_t r = t; r < a.rows; ++r) {
      if (!is_zero(a.at(r, t))) submul_checked(a.at(r, j), q, a.at(r, t));
    }
    if (transforms) axpy(vt.row(j), std::span<const Num>(vt.row(t)), q);
  }

  void run() {
    const std::size_t m = a.rows;
    const std::size_t n = a.cols;
    const std::size_t lim = std::min(m, n);
    for (std::size_t t = 0; t < lim; ++t) {
      // global pivot: least |entry|, lowest row, then lowest column
      std::size_t pr = m;
      std::size_t pc = n;
      for (std::size_t r = t; r < m; ++r) {
        auto row = a.row(r, t);
        std::size_t c = row_argmin(std::span<const Num>(row));
        if (c == row.size()) continue;
        if (pr == m || abs_less(row[c], a.at(pr, pc))) {
          pr = r;
          pc = c + t;
        }
      }
      if (pr == m) break;
      swap_rows(t, pr);
      swap_cols(t, pc);

      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (is_zero(a.at(i, t))) continue;
          Num q = tdiv(a.at(i, t), a.at(t, t));
          if (!is_zero(q)) row_op(i, t, q, t);
          if (!is_zero(a.at(i, t))) clean = false;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (is_zero(a.at(t, j))) continue;
          Num q = tdiv(a.at(t, j), a.at(t, t));
          if (!is_zero(q)) col_op(j, t, q);
          if (!is_zero(a.at(t, j))) clean = false;
        }
        if (!clean) {
          // candidates in (row, col) order: (t,t), (t,j>t), (i>t,t)
          std::size_t br = t;
          std::size_t bc = t;
          for (std::size_t j = t + 1; j < n; ++j)
            if (!is_zero(a.at(t, j)) && abs_less(a.at(t, j), a.at(br, bc))) {
              br = t;
              bc = j;
            }
          for (std::size_t i = t + 1; i < m; ++i)
            if (!is_zero(a.at(i, t)) && abs_less(a.at(i, t), a.at(br, bc))) {
              br = i;
              bc = t;
            }
          swap_rows(t, br);
          swap_cols(t, bc);
          continue;
        }
        // divisor chain: pull in the first entry not divisible by the pivot
        std::size_t fr = m;
        for (std::size_t i = t + 1; i < m && fr == m; ++i)
          for (std::size_t j = t + 1; j < n; ++j)
            if (!divides(a.at(t, t), a.at(i, j))) {
              fr = i;
              break;
            }
        if (fr == m) break;
        row_op(t, fr, Num(-1), t);
      }
      if (negative(a.at(t, t))) {
        a.negate_row(t);
        if (transforms) u.negate_row(t);
      }
    }
  }
};

template <class Num>
Dense<Num> load(const IntMatrix& m) {
  Dense<Num> d(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if constexpr (std::is_same_v<Num, std::int64_t>) {
        const mpz_class& v = m(r, c);
        if (!mpz_fits_slong_p(v.get_mpz_t()) || mpz_cmpabs_ui(v.get_mpz_t(), static_cast<unsigned long>(kernels::kBound)) > 0) throw SmallIntOverflow{};
        d.at(r, c) = v.get_si();
      } else {
        d.at(r, c) = m(r, c);
      }
    }
  return d;
}

template <class Num>
IntMatrix store(const Dense<Num>& d, bool transpose = false) {
  IntMatrix m(transpose ? d.cols : d.rows, transpose ? d.rows : d.cols);
  for (std::size_t r = 0; r < d.rows; ++r)
    for (std::size_t c = 0; c < d.cols; ++c) {
      mpz_class v;
      if constexpr (std::is_same_v<Num, std::int64_t>) {
        v = static_cast<long>(d.at(r, c));
      } else {
        v = d.at(r, c);
      }
      if (transpose) m(c, r) = v; else m(r, c) = v;
    }
  return m;
}

template <class Num>
SmithForm run_engine(const IntMatrix& m, bool want) {
  Engine<Num> e(load<Num>(m), want);
  e.run();
  SmithForm out;
  out.s = store(e.a);
  if (want) {
    out.u = store(e.u);
    out.v = store(e.vt, true);
  }
  const std::size_t lim = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < lim && out.s(i, i) != 0; ++i) out.divisors.push_back(out.s(i, i));
  out.rank = out.divisors.size();
  return out;
}

SmithForm dispatch(const IntMatrix& m, SmithEngine engine, bool want) {
  switch (engine) {
    case SmithEngine::SmallInt:
      return run_engine<std::int64_t>(m, want);
    case SmithEngine::BigInt:
      return run_engine<mpz_class>(m, want);
    case SmithEngine::Auto:
      break;
  }
  try {
    return run_engine<std::int64_t>(m, want);
  } catch (const SmallIntOverflow&) {
    return run_engine<mpz_class>(m, want);
  }
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m, SmithEngine engine) {
  if (engine == SmithEngine::SmallInt) {
    try {
      return dispatch(m, engine, true);
    } catch (const SmallIntOverflow&) {
      throw std::overflow_error("small-integer Smith engine left the int64 bound");
    }
  }
  return dispatch(m, engine, true);
}

std::vector<mpz_class> smith_divisors(const IntMatrix& m, SmithEngine engine) {
  if (engine == SmithEngine::SmallInt) {
    try {
      return dispatch(m, engine, false).divisors;
    } catch (const SmallIntOverflow&) {
      throw std::overflow_error("small-integer Smith engine left the int64 bound");
    }
  }
  return dispatch(m, engine, false).divisors;
}

}  // namespace pf

namespace pf {

IntMatrix inverse_unimodular(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error(ErrorCode::InvalidArgument, "inverse of a non-square matrix");
  std::vector<mpq_class> a(n * 2 * n);
  auto at = [&](std::size_t r, std::size_t c) -> mpq_class& { return a[r * 2 * n + c]; };
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) at(r, c) = m(r, c);
    at(r, n + r) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && at(p, c) == 0) ++p;
    if (p == n) throw Error(ErrorCode::InvalidArgument, "singular matrix");
    if (p != c)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(at(p, j), at(c, j));
    const mpq_class pinv = 1 / at(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) at(c, j) *= pinv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || at(r, c) == 0) continue;
      const mpq_class f = at(r, c);
      for (std::size_t j = 0; j < 2 * n; ++j) at(r, j) -= f * at(c, j);
    }
  }
  IntMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const mpq_class& v = at(r, n + c);
      if (v.get_den() != 1) throw Error(ErrorCode::InvalidArgument, "matrix is not unimodular");
      out(r, c) = v.get_num();
    }
  return out;
}

namespace {

mpz_class gcd_mod(const mpz_class& s, const mpz_class& m) {
  if (m == 0) return s;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), s.get_mpz_t(), m.get_mpz_t());
  return g;
}

mpz_class residue(const mpz_class& x, const mpz_class& m) {
  if (m == 0) return x;
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::vector<mpz_class> mat_vec(const IntMatrix& a, const std::vector<mpz_class>& x) {
  std::vector<mpz_class> out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (x[c] != 0) out[r] += a(r, c) * x[c];
  return out;
}

}  // namespace

CongruenceSolver::CongruenceSolver(const IntMatrix& a)
    : rows_(a.rows()), cols_(a.cols()), snf_(smith_normal_form(a)), uinv_(inverse_unimodular(snf_.u)) {}

std::optional<std::vector<mpz_class>> CongruenceSolver::solve(const std::vector<mpz_class>& c,
                                                              const mpz_class& m) const {
  const auto cp = mat_vec(snf_.u, c);
  std::vector<mpz_class> y(cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i < snf_.rank) {
      const mpz_class& s = snf_.divisors[i];
      const mpz_class g = gcd_mod(s, m);
      if (!mpz_divisible_p(cp[i].get_mpz_t(), g.get_mpz_t())) return std::nullopt;
      if (m == 0) {
        y[i] = cp[i] / s;
        continue;
      }
      const mpz_class mg = m / g;
      if (mg == 1) continue;
      mpz_class inv;
      const mpz_class sg = residue(s / g, mg);
      mpz_invert(inv.get_mpz_t(), sg.get_mpz_t(), mg.get_mpz_t());
      y[i] = residue(mpz_class(cp[i] / g) * inv, mg);
    } else if (residue(cp[i], m) != 0) {
      return std::nullopt;
    }
  }
  auto x = mat_vec(snf_.v, y);
  for (auto& e : x) e = residue(e, m);
  return x;
}

std::vector<mpz_class> CongruenceSolver::coordinate_moduli(const mpz_class& m) const {
  std::vector<mpz_class> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = i < snf_.rank ? gcd_mod(snf_.divisors[i], m) : m;
  return out;
}

std::vector<mpz_class> CongruenceSolver::coordinates(const std::vector<mpz_class>& c, const mpz_class& m) const {
  auto cp = mat_vec(snf_.u, c);
  const auto mod = coordinate_moduli(m);
  for (std::size_t i = 0; i < rows_; ++i) cp[i] = residue(cp[i], mod[i]);
  return cp;
}

std::vector<mpz_class> CongruenceSolver::reduce(const std::vector<mpz_class>& c, const mpz_class& m) const {
  auto out = mat_vec(uinv_, coordinates(c, m));
  for (auto& e : out) e = residue(e, m);
  return out;
}

std::vector<std::vector<mpz_class>> CongruenceSolver::kernel_generators(const mpz_class& m) const {
  std::vector<std::vector<mpz_class>> out;
  for (std::size_t i = 0; i < cols_; ++i) {
    std::vector<mpz_class> y(cols_);
    if (i < snf_.rank) {
      if (m == 0) continue;
      y[i] = m / gcd_mod(snf_.divisors[i], m);
    } else {
      y[i] = 1;
    }
    auto x = mat_vec(snf_.v, y);
    for (auto& e : x) e = residue(e, m);
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace pf
