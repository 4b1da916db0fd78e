#include "posetforge/cocycles.hpp"

#include <algorithm>
#include <stdexcept>

#include "posetforge/error.hpp"

namespace pf {

namespace {

OrderComplex complex_for(const Poset& p, ChainDomain domain, int max_degree) {
  if (domain == ChainDomain::Strict) return order_complex(p);
  return weak_complex(p, std::max(max_degree, 0));
}

std::string chain_text(const Poset& p, const Chain& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + p.label(c[i]);
  return out + ")";
}

void require_same_shape(const MultCochain& a, const MultCochain& b) {
  if (a.degree() != b.degree() || a.domain() != b.domain() || !(a.field() == b.field()) ||
      !(a.poset() == b.poset()))
    throw Error(ErrorCode::InvalidArgument, "cochains differ in poset, field, degree or domain");
}

// delta_{n-1} in exponent coordinates: rows are degree-n chains, columns
// degree n-1 chains
IntMatrix coboundary_matrix(const OrderComplex& k, int n) {
  const auto& rows = k.chains(n);
  IntMatrix a(rows.size(), n >= 1 ? k.count(n - 1) : 0);
  if (n < 1) return a;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t i = 0; i < rows[r].size(); ++i)
      a(r, static_cast<std::size_t>(k.position(face(rows[r], i)))) += (i % 2 == 0) ? 1 : -1;
  return a;
}

}  // namespace

// ----- MultCochain

MultCochain::MultCochain(PosetPtr poset, Field field, int degree, ChainDomain domain)
    : poset_(std::move(poset)), field_(std::move(field)), degree_(degree), domain_(domain) {
  if (degree < 0) throw Error(ErrorCode::DegreeOutOfRange, "negative cochain degree");
}

MultCochain MultCochain::constant(PosetPtr poset, Field field, int degree, ChainDomain domain,
                                  const Scalar& value) {
  MultCochain c(std::move(poset), std::move(field), degree, domain);
  for (const auto& ch : c.required_chains()) c.set(ch, value);
  return c;
}

void MultCochain::set(const Chain& c, const Scalar& value) {
  Scalar v = value;
  v.canonicalize();
  const auto& p = *poset_;
  if (c.size() != static_cast<std::size_t>(degree_) + 1)
    throw Error(ErrorCode::InvalidArgument, "chain length does not match degree " + std::to_string(degree_));
  for (auto x : c)
    if (x < 0 || static_cast<std::size_t>(x) >= p.size()) throw Error(ErrorCode::UnknownElement, "chain entry");
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    const bool ok = domain_ == ChainDomain::Strict ? p.lt(c[i], c[i + 1]) : p.leq(c[i], c[i + 1]);
    if (!ok) throw Error(ErrorCode::InvalidArgument, chain_text(p, c) + " is not a chain of the domain");
  }
  if (!field_.contains(v)) throw Error(ErrorCode::InvalidArgument, "value " + v.get_str() + " not in " + field_.name());
  if (v == 0) throw Error(ErrorCode::NotInvertible, "zero value at " + chain_text(p, c));
  values_[c] = std::move(v);
}

const Scalar& MultCochain::at(const Chain& c) const {
  auto it = values_.find(c);
  if (it == values_.end()) throw Error(ErrorCode::MissingValue, "no value at " + chain_text(*poset_, c));
  return it->second;
}

std::vector<Chain> MultCochain::required_chains() const {
  return complex_for(*poset_, domain_, degree_).chains(degree_);
}

void MultCochain::require_complete() const {
  for (const auto& c : required_chains())
    if (!has(c)) throw Error(ErrorCode::MissingValue, "no value at " + chain_text(*poset_, c));
}

MultCochain multiply(const MultCochain& a, const MultCochain& b) {
  require_same_shape(a, b);
  MultCochain out(a.poset_ptr(), a.field(), a.degree(), a.domain());
  for (const auto& [c, v] : a.values()) out.set(c, a.field().mul(v, b.at(c)));
  return out;
}

MultCochain inverse(const MultCochain& a) {
  MultCochain out(a.poset_ptr(), a.field(), a.degree(), a.domain());
  for (const auto& [c, v] : a.values()) out.set(c, a.field().inv(v));
  return out;
}

MultCochain extend_to_weak(const MultCochain& a) {
  if (a.domain() == ChainDomain::Weak) return a;
  MultCochain out(a.poset_ptr(), a.field(), a.degree(), ChainDomain::Weak);
  for (const auto& c : out.required_chains()) {
    const bool strict = std::adjacent_find(c.begin(), c.end()) == c.end();
    out.set(c, strict ? a.at(c) : Scalar(1));
  }
  return out;
}

MultCochain restrict_to_strict(const MultCochain& a) {
  if (a.domain() == ChainDomain::Strict) return a;
  MultCochain out(a.poset_ptr(), a.field(), a.degree(), ChainDomain::Strict);
  for (const auto& c : out.required_chains()) out.set(c, a.at(c));
  return out;
}

MultCochain pullback(const MultCochain& c, const Permutation& sigma) {
  if (!is_automorphism(c.poset(), sigma)) throw Error(ErrorCode::InvalidArgument, "not an automorphism");
  MultCochain out(c.poset_ptr(), c.field(), c.degree(), c.domain());
  for (const auto& ch : out.required_chains()) {
    Chain image(ch.size());
    for (std::size_t i = 0; i < ch.size(); ++i) image[i] = sigma[static_cast<std::size_t>(ch[i])];
    out.set(ch, c.at(image));
  }
  return out;
}

// ----- unit coordinates

namespace {

void insert_coprime(std::vector<mpz_class>& base, mpz_class x) {
  std::vector<mpz_class> work{std::move(x)};
  while (!work.empty()) {
    mpz_class v = std::move(work.back());
    work.pop_back();
    if (v == 1) continue;
    bool split = false;
    for (std::size_t i = 0; i < base.size(); ++i) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), v.get_mpz_t(), base[i].get_mpz_t());
      if (g == 1) continue;
      mpz_class b = base[i];
      base.erase(base.begin() + static_cast<std::ptrdiff_t>(i));
      work.push_back(b / g);
      work.push_back(g);
      work.push_back(v / g);
      split = true;
      break;
    }
    if (!split) base.push_back(v);
  }
}

mpz_class primitive_root_of(mpz_class b) {
  for (bool changed = true; changed;) {
    changed = false;
    const unsigned long bits = mpz_sizeinbase(b.get_mpz_t(), 2);
    for (unsigned long k = bits; k >= 2; --k) {
      mpz_class r;
      if (mpz_root(r.get_mpz_t(), b.get_mpz_t(), k) != 0 && r > 1) {
        b = r;
        changed = true;
        break;
      }
    }
  }
  return b;
}

}  // namespace

UnitModel UnitModel::build(const Field& f, const std::vector<Scalar>& values) {
  if (!f.is_concrete()) throw Error(ErrorCode::SymbolicFieldUnsupported, "unit coordinates over " + f.name());
  UnitModel m;
  m.field_ = f;
  if (f.is_finite()) {
    m.moduli_ = {mpz_class(static_cast<unsigned long>(f.order() - 1))};
    return m;
  }
  std::vector<mpz_class> base;
  for (const auto& v : values) {
    if (v == 0) throw Error(ErrorCode::NotInvertible, "zero has no unit coordinates");
    insert_coprime(base, abs(v.get_num()));
    insert_coprime(base, v.get_den());
  }
  // insertion keeps the base pairwise coprime; dropping perfect powers keeps
  // it so and makes the generated subgroup pure in Q*
  for (auto& b : base) b = primitive_root_of(b);
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  m.base_ = std::move(base);
  m.moduli_.assign(1, mpz_class(2));
  m.moduli_.resize(1 + m.base_.size(), mpz_class(0));
  return m;
}

std::vector<mpz_class> UnitModel::encode(const Scalar& a) const {
  if (a == 0) throw Error(ErrorCode::NotInvertible, "zero has no unit coordinates");
  if (field_.is_finite()) return {mpz_class(static_cast<unsigned long>(field_.log(a)))};
  std::vector<mpz_class> out(moduli_.size());
  out[0] = a < 0 ? 1 : 0;
  mpz_class num = abs(a.get_num());
  mpz_class den = a.get_den();
  for (std::size_t i = 0; i < base_.size(); ++i) {
    const mpz_class& b = base_[i];
    while (mpz_divisible_p(num.get_mpz_t(), b.get_mpz_t())) {
      num /= b;
      ++out[i + 1];
    }
    while (mpz_divisible_p(den.get_mpz_t(), b.get_mpz_t())) {
      den /= b;
      --out[i + 1];
    }
  }
  if (num != 1 || den != 1) throw Error(ErrorCode::InvalidArgument, a.get_str() + " outside the unit model");
  return out;
}

Scalar UnitModel::decode(const std::vector<mpz_class>& coords) const {
  if (field_.is_finite()) {
    mpz_class e;
    mpz_fdiv_r(e.get_mpz_t(), coords[0].get_mpz_t(), moduli_[0].get_mpz_t());
    return field_.exp(e.get_ui());
  }
  mpz_class num = 1, den = 1;
  for (std::size_t i = 0; i < base_.size(); ++i) {
    const mpz_class& e = coords[i + 1];
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), base_[i].get_mpz_t(), mpz_class(abs(e)).get_ui());
    if (e > 0) num *= pw;
    else if (e < 0) den *= pw;
  }
  Scalar out(num, den);
  out.canonicalize();
  if (mpz_odd_p(coords[0].get_mpz_t())) out = -out;
  return out;
}

// ----- coboundary

MultCochain coboundary(const MultCochain& a) {
  a.require_complete();
  const Field& f = a.field();
  const int n = a.degree() + 1;
  const auto k = complex_for(a.poset(), a.domain(), n);
  MultCochain out(a.poset_ptr(), f, n, a.domain());
  for (const auto& s : k.chains(n)) {
    Scalar v = 1;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const Scalar& x = a.at(face(s, i));
      v = f.mul(v, i % 2 == 0 ? x : f.inv(x));
    }
    out.set(s, v);
  }
  return out;
}

bool is_cocycle(const MultCochain& c) {
  const auto d = coboundary(c);
  return std::all_of(d.values().begin(), d.values().end(), [](const auto& kv) { return kv.second == 1; });
}

Normalization normalize_2cocycle(const MultCochain& lambda_in) {
  if (lambda_in.degree() != 2) throw Error(ErrorCode::InvalidArgument, "normalization needs a degree-2 cochain");
  if (!is_cocycle(lambda_in)) throw Error(ErrorCode::NotACocycle, "normalization needs a 2-cocycle");
  const MultCochain lambda = extend_to_weak(lambda_in);
  const Field& f = lambda.field();
  MultCochain alpha(lambda.poset_ptr(), f, 1, ChainDomain::Weak);
  for (const auto& c : alpha.required_chains()) alpha.set(c, f.inv(lambda.at({c[0], c[0], c[1]})));
  MultCochain mu = multiply(lambda, coboundary(alpha));
  return {std::move(mu), std::move(alpha)};
}

// ----- triviality

TrivialityReport reduce_modulo_coboundaries(const MultCochain& c) {
  if (!c.field().is_concrete())
    throw Error(ErrorCode::SymbolicFieldUnsupported, "triviality over " + c.field().name());
  if (!is_cocycle(c)) throw Error(ErrorCode::NotACocycle, "input is not a cocycle");
  const int n = c.degree();
  const Field& f = c.field();
  const auto k = complex_for(c.poset(), c.domain(), n);
  const auto& rows = k.chains(n);
  const auto& cols = k.chains(n - 1);

  std::vector<Scalar> vals;
  for (const auto& [ch, v] : c.values()) vals.push_back(v);
  const UnitModel model = UnitModel::build(f, vals);
  const std::size_t ncoord = model.moduli().size();

  std::vector<std::vector<mpz_class>> enc(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) enc[r] = model.encode(c.at(rows[r]));

  const CongruenceSolver solver(coboundary_matrix(k, n));
  TrivialityReport rep{true, std::nullopt, MultCochain(c.poset_ptr(), f, n, c.domain()), {}, {}};
  std::vector<std::vector<mpz_class>> witness(cols.size(), std::vector<mpz_class>(ncoord));
  std::vector<std::vector<mpz_class>> canon(rows.size(), std::vector<mpz_class>(ncoord));
  for (std::size_t j = 0; j < ncoord; ++j) {
    const mpz_class& m = model.moduli()[j];
    std::vector<mpz_class> rhs(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) rhs[r] = enc[r][j];
    const auto coords = solver.coordinates(rhs, m);
    const auto mods = solver.coordinate_moduli(m);
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (mods[i] != 1) {
        rep.class_coordinates.push_back(coords[i]);
        rep.class_moduli.push_back(mods[i]);
      }
    const auto red = solver.reduce(rhs, m);
    for (std::size_t r = 0; r < rows.size(); ++r) canon[r][j] = red[r];
    if (auto x = solver.solve(rhs, m)) {
      for (std::size_t col = 0; col < cols.size(); ++col) witness[col][j] = (*x)[col];
    } else {
      rep.trivial = false;
    }
  }
  for (std::size_t r = 0; r < rows.size(); ++r) rep.representative.set(rows[r], model.decode(canon[r]));

  if (rep.trivial && n >= 1) {
    MultCochain a(c.poset_ptr(), f, n - 1, c.domain());
    for (std::size_t col = 0; col < cols.size(); ++col) a.set(cols[col], model.decode(witness[col]));
    if (!(coboundary(a) == c)) throw std::logic_error("coboundary witness failed verification");
    rep.witness = std::move(a);
  }
  return rep;
}

ClassComparison same_class(const MultCochain& c1, const MultCochain& c2) {
  require_same_shape(c1, c2);
  auto rep = reduce_modulo_coboundaries(multiply(c1, inverse(c2)));
  return {rep.trivial, std::move(rep.witness)};
}

// ----- universal coefficients

namespace {

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

mpz_class prime_to_part(mpz_class d, std::uint64_t p) {
  if (p == 0) return d;
  while (mpz_divisible_ui_p(d.get_mpz_t(), p)) d /= static_cast<unsigned long>(p);
  return d;
}

void push_cyclic(std::vector<GroupFactor>& out, const mpz_class& order, std::size_t mult = 1) {
  if (order > 1 && mult > 0) out.push_back({GroupFactor::Kind::Cyclic, order, mult});
}

}  // namespace

std::optional<mpz_class> FormalGroupExpr::order() const {
  mpz_class total = 1;
  for (const auto* part : {&hom_part, &ext_part})
    for (const auto& g : *part) {
      if (g.kind != GroupFactor::Kind::Cyclic) return std::nullopt;
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), g.order.get_mpz_t(), g.multiplicity);
      total *= pw;
    }
  return total;
}

std::string FormalGroupExpr::to_string() const {
  std::string out;
  for (const auto* part : {&hom_part, &ext_part})
    for (const auto& g : *part) {
      if (!out.empty()) out += " + ";
      const std::string mult = g.multiplicity == 1 ? "" : "^" + std::to_string(g.multiplicity);
      switch (g.kind) {
        case GroupFactor::Kind::Cyclic:
          out += (mult.empty() ? "Z/" + g.order.get_str() : "(Z/" + g.order.get_str() + ")" + mult);
          break;
        case GroupFactor::Kind::UnitGroup:
          out += mult.empty() ? "K*" : "(K*)" + mult;
          break;
        case GroupFactor::Kind::CyclicInfinite:
          out += "(Z/" + g.order.get_str() + ")^inf";
          break;
      }
    }
  return out.empty() ? "0" : out;
}

FormalGroupExpr cohomology_structure(const FinAbGroup& hn, const FinAbGroup& hm, const Field& f) {
  FormalGroupExpr e;
  switch (f.kind()) {
    case FieldKind::Finite: {
      const mpz_class units = static_cast<unsigned long>(f.order() - 1);
      push_cyclic(e.hom_part, units, hn.free_rank);
      for (const auto& d : hn.torsion) push_cyclic(e.hom_part, gcd(d, units));
      for (const auto& d : hm.torsion) push_cyclic(e.ext_part, gcd(d, units));
      break;
    }
    case FieldKind::Rational:
      // Q* = Z/2 + free abelian of countable rank
      if (hn.free_rank) e.hom_part.push_back({GroupFactor::Kind::UnitGroup, 0, hn.free_rank});
      for (const auto& d : hn.torsion) push_cyclic(e.hom_part, gcd(d, 2));
      for (const auto& d : hm.torsion) {
        push_cyclic(e.ext_part, gcd(d, 2));
        e.ext_part.push_back({GroupFactor::Kind::CyclicInfinite, d, 1});
      }
      break;
    case FieldKind::Symbolic:
      if (!f.algebraically_closed())
        throw Error(ErrorCode::SymbolicFieldUnsupported, "structure over a non-closed symbolic field");
      // K* divisible: Ext vanishes; torsion of K* is the prime-to-p roots of unity
      if (hn.free_rank) e.hom_part.push_back({GroupFactor::Kind::UnitGroup, 0, hn.free_rank});
      for (const auto& d : hn.torsion) push_cyclic(e.hom_part, prime_to_part(d, f.characteristic()));
      break;
  }
  return e;
}

FormalGroupExpr cohomology_structure(const Poset& p, int n, const Field& f) {
  if (n < 0) throw Error(ErrorCode::DegreeOutOfRange, "negative degree");
  return cohomology_structure(homology(p, n), homology(p, n - 1), f);
}

}  // namespace pf
