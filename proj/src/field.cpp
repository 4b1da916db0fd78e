#include "posetforge/field.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>

#include "posetforge/error.hpp"

namespace pf {

struct Field::Tables {
  std::uint64_t q = 0;
  std::uint64_t p = 0;
  unsigned k = 1;
  std::uint32_t generator = 0;
  std::vector<std::uint32_t> exp;  // exp[i] = g^i, i in [0, q-1)
  std::vector<std::uint32_t> log;  // log[code], code != 0
};

namespace {

constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

using Poly = std::vector<std::uint32_t>;  // little-endian coefficients mod p

Poly decode(std::uint64_t code, std::uint64_t p, unsigned k) {
  Poly out(k);
  for (unsigned i = 0; i < k; ++i) {
    out[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return out;
}

std::uint64_t encode(const Poly& a, std::uint64_t p) {
  std::uint64_t code = 0;
  for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
  return code;
}

// a * b mod monic f (f has degree k, stored with k+1 coefficients)
Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  const std::size_t k = f.size() - 1;
  std::vector<std::uint64_t> prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  for (std::size_t d = 2 * k; d-- > k;) {
    const std::uint64_t c = prod[d];
    if (!c) continue;
    for (std::size_t i = 0; i <= k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - c) * f[i]) % p;
  }
  Poly out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

// remainder of a by monic g, coefficients mod p
bool divides_monic(const Poly& g, Poly a, std::uint64_t p) {
  const std::size_t dg = g.size() - 1;
  for (std::size_t d = a.size(); d-- > dg;) {
    const std::uint64_t c = a[d];
    if (!c) continue;
    for (std::size_t i = 0; i <= dg; ++i)
      a[d - dg + i] = static_cast<std::uint32_t>((a[d - dg + i] + (p - c) * g[i]) % p);
  }
  return std::all_of(a.begin(), a.end(), [](std::uint32_t x) { return x == 0; });
}

bool irreducible(const Poly& f, std::uint64_t p) {
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= k; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g = decode(c, p, d);
      g.push_back(1);
      if (divides_monic(g, f, p)) return false;
    }
  }
  return true;
}

std::shared_ptr<const Field::Tables> build_tables(std::uint64_t q, std::uint64_t p, unsigned k) {
  auto t = std::make_shared<Field::Tables>();
  t->q = q;
  t->p = p;
  t->k = k;
  Poly f;
  if (k > 1) {
    std::uint64_t lower = 1;
    for (unsigned i = 0; i < k; ++i) lower *= p;
    for (std::uint64_t c = 0; c < lower; ++c) {
      f = decode(c, p, k);
      f.push_back(1);
      if (irreducible(f, p)) break;
    }
  }
  auto mul = [&](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
    if (k == 1) return (a * b) % p;
    return encode(mulmod(decode(a, p, k), decode(b, p, k), f, p), p);
  };
  auto power = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  };
  const auto factors = prime_factors(q - 1);
  std::uint64_t g = 1;
  for (std::uint64_t c = 1; c < q; ++c) {
    bool primitive = true;
    for (auto r : factors)
      if (power(c, (q - 1) / r) == 1) {
        primitive = false;
        break;
      }
    if (primitive) {
      g = c;
      break;
    }
  }
  t->generator = static_cast<std::uint32_t>(g);
  t->exp.resize(q - 1);
  t->log.assign(q, 0);
  std::uint64_t x = 1;
  for (std::uint64_t i = 0; i + 1 < q; ++i) {
    t->exp[i] = static_cast<std::uint32_t>(x);
    t->log[x] = static_cast<std::uint32_t>(i);
    x = mul(x, g);
  }
  return t;
}

std::shared_ptr<const Field::Tables> tables_for(std::uint64_t q, std::uint64_t p, unsigned k) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::shared_ptr<const Field::Tables>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[q];
  if (!slot) slot = build_tables(q, p, k);
  return slot;
}

bool parse_u64(std::string_view s, std::uint64_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

Field::Field() = default;

Field Field::finite(std::uint64_t q) {
  if (q < 2) throw Error(ErrorCode::InvalidField, "field order must be at least 2");
  if (q > kMaxFieldOrder) throw Error(ErrorCode::InvalidField, "field order exceeds 2^20");
  const auto factors = prime_factors(q);
  if (factors.size() != 1) throw Error(ErrorCode::InvalidField, std::to_string(q) + " is not a prime power");
  Field f;
  f.kind_ = FieldKind::Finite;
  f.q_ = q;
  f.p_ = factors[0];
  unsigned k = 0;
  for (std::uint64_t x = q; x > 1; x /= f.p_) ++k;
  f.tables_ = tables_for(q, f.p_, k);
  return f;
}

Field Field::rationals() { return Field(); }

Field Field::symbolic(std::uint64_t characteristic, bool algebraically_closed) {
  if (characteristic != 0 && prime_factors(characteristic) != std::vector<std::uint64_t>{characteristic})
    throw Error(ErrorCode::InvalidField, "characteristic must be 0 or a prime");
  Field f;
  f.kind_ = FieldKind::Symbolic;
  f.p_ = characteristic;
  f.closed_ = algebraically_closed;
  return f;
}

Field Field::parse(std::string_view text) {
  std::uint64_t n = 0;
  if (text == "Q") return rationals();
  if (text == "C") return symbolic(0, true);
  if (text.starts_with("F_") && parse_u64(text.substr(2), n)) return finite(n);
  if (text.starts_with("closed:") && parse_u64(text.substr(7), n)) return symbolic(n, true);
  if (text.starts_with("symbolic:") && parse_u64(text.substr(9), n)) return symbolic(n, false);
  if (parse_u64(text, n)) return finite(n);
  throw Error(ErrorCode::InvalidField, "unrecognised field '" + std::string(text) + "'");
}

std::string Field::name() const {
  switch (kind_) {
    case FieldKind::Finite: return "F_" + std::to_string(q_);
    case FieldKind::Rational: return "Q";
    case FieldKind::Symbolic:
      return (closed_ ? "closed:" : "symbolic:") + std::to_string(p_);
  }
  return "?";
}

void Field::require_concrete() const {
  if (kind_ == FieldKind::Symbolic)
    throw Error(ErrorCode::SymbolicFieldUnsupported, "element arithmetic over " + name());
}

std::uint32_t Field::code(const Scalar& a) const {
  return static_cast<std::uint32_t>(a.get_num().get_ui());
}

bool Field::contains(const Scalar& value) const {
  if (kind_ == FieldKind::Rational) return true;
  if (kind_ == FieldKind::Symbolic) return false;
  Scalar a = value;
  a.canonicalize();
  return a.get_den() == 1 && a.get_num() >= 0 && a.get_num() < static_cast<unsigned long>(q_);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  require_concrete();
  if (kind_ == FieldKind::Rational) return a + b;
  if (tables_->k == 1) return static_cast<unsigned long>((std::uint64_t{code(a)} + code(b)) % p_);
  std::uint64_t x = code(a), y = code(b), out = 0, scale = 1;
  for (unsigned i = 0; i < tables_->k; ++i) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return static_cast<unsigned long>(out);
}

Scalar Field::neg(const Scalar& a) const {
  require_concrete();
  if (kind_ == FieldKind::Rational) return -a;
  std::uint64_t x = code(a), out = 0, scale = 1;
  for (unsigned i = 0; i < tables_->k; ++i) {
    out += ((p_ - x % p_) % p_) * scale;
    x /= p_;
    scale *= p_;
  }
  return static_cast<unsigned long>(out);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  require_concrete();
  if (kind_ == FieldKind::Rational) return a * b;
  if (a == 0 || b == 0) return 0;
  const auto& t = *tables_;
  return static_cast<unsigned long>(t.exp[(std::uint64_t{t.log[code(a)]} + t.log[code(b)]) % (q_ - 1)]);
}

Scalar Field::inv(const Scalar& a) const {
  require_concrete();
  if (a == 0) throw Error(ErrorCode::NotInvertible, "zero has no inverse");
  if (kind_ == FieldKind::Rational) return 1 / a;
  const auto& t = *tables_;
  return static_cast<unsigned long>(t.exp[(q_ - 1 - t.log[code(a)]) % (q_ - 1)]);
}

Scalar Field::pow(const Scalar& a, long e) const {
  require_concrete();
  if (e < 0) return pow(inv(a), -e);
  if (kind_ == FieldKind::Finite) {
    if (a == 0) return e == 0 ? 1 : 0;
    return exp(static_cast<std::uint64_t>((static_cast<unsigned __int128>(log(a)) * static_cast<unsigned long>(e)) % (q_ - 1)));
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), a.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), a.get_den_mpz_t(), static_cast<unsigned long>(e));
  Scalar r(num, den);
  r.canonicalize();
  return r;
}

Scalar Field::from_integer(long n) const {
  require_concrete();
  if (kind_ == FieldKind::Rational) return n;
  long r = n % static_cast<long>(p_);
  if (r < 0) r += static_cast<long>(p_);
  return r;
}

Scalar Field::parse_element(std::string_view text) const {
  require_concrete();
  std::string s(text);
  if (kind_ == FieldKind::Rational) {
    Scalar v;
    if (v.set_str(s, 10) != 0 || v.get_den() == 0)
      throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
    v.canonicalize();
    return v;
  }
  mpz_class v;
  if (s.empty() || v.set_str(s, 10) != 0) throw Error(ErrorCode::ParseError, "bad field element '" + s + "'");
  if (tables_->k == 1) {
    mpz_class r = v % static_cast<unsigned long>(q_);
    if (r < 0) r += static_cast<unsigned long>(q_);
    return Scalar(r);
  }
  if (v < 0 || v >= static_cast<unsigned long>(q_))
    throw Error(ErrorCode::ParseError, "element code '" + s + "' outside [0, " + std::to_string(q_) + ")");
  return Scalar(v);
}

std::string Field::format(const Scalar& a) const { return a.get_str(); }

std::uint64_t Field::log(const Scalar& a) const {
  if (kind_ != FieldKind::Finite) throw Error(ErrorCode::InvalidField, "discrete log needs a finite field");
  if (a == 0) throw Error(ErrorCode::NotInvertible, "log of zero");
  return tables_->log[code(a)];
}

Scalar Field::exp(std::uint64_t e) const {
  if (kind_ != FieldKind::Finite) throw Error(ErrorCode::InvalidField, "exp needs a finite field");
  return static_cast<unsigned long>(tables_->exp[e % (q_ - 1)]);
}

Scalar Field::generator() const {
  if (kind_ != FieldKind::Finite) throw Error(ErrorCode::InvalidField, "generator needs a finite field");
  return static_cast<unsigned long>(tables_->generator);
}

// ----- linear algebra

FieldMatrix FieldMatrix::identity(std::size_t n) {
  FieldMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool FieldMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x == 0; });
}

FieldMatrix multiply(const Field& f, const FieldMatrix& a, const FieldMatrix& b) {
  FieldMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) out(i, j) = f.add(out(i, j), f.mul(a(i, k), b(k, j)));
    }
  return out;
}

std::vector<std::size_t> row_reduce(const Field& f, FieldMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t s = r;
    while (s < m.rows() && m(s, c) == 0) ++s;
    if (s == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(s, j));
    const Scalar pinv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), pinv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Scalar factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const Field& f, FieldMatrix m) { return row_reduce(f, m).size(); }

std::vector<std::vector<Scalar>> nullspace(const Field& f, FieldMatrix m) {
  const auto pivots = row_reduce(f, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), Scalar(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(m(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace pf
