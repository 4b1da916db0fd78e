#pragma once

#include <random>

#include "posetforge/chain_complex.hpp"
#include "posetforge/cocycles.hpp"
#include "posetforge/int_matrix.hpp"

namespace rnd {

inline pf::Scalar unit(std::mt19937_64& rng, const pf::Field& f) {
  if (f.is_finite()) return f.exp(rng() % (f.order() - 1));
  const long vals[] = {1, 2, 3, 5, 7};
  pf::Scalar v(vals[rng() % 5], vals[rng() % 5]);
  v.canonicalize();
  return rng() % 2 ? pf::Scalar(-v) : v;
}

inline pf::MultCochain cochain(std::mt19937_64& rng, const pf::PosetPtr& p, const pf::Field& f, int degree,
                               pf::ChainDomain domain) {
  pf::MultCochain c(p, f, degree, domain);
  for (const auto& ch : c.required_chains()) c.set(ch, unit(rng, f));
  return c;
}

// uniform-ish cocycle over F_q: random combination of the kernel
// generators of delta in exponent coordinates mod q-1
inline pf::MultCochain cocycle(std::mt19937_64& rng, const pf::PosetPtr& p, const pf::Field& f, int degree,
                               pf::ChainDomain domain) {
  const pf::OrderComplex k = domain == pf::ChainDomain::Weak ? pf::weak_complex(*p, degree + 1)
                                                             : pf::order_complex(*p);
  if (k.count(degree + 1) == 0) return cochain(rng, p, f, degree, domain);
  const mpz_class m = static_cast<unsigned long>(f.order() - 1);
  const pf::CongruenceSolver s(pf::boundary_matrix(k, degree + 1).transposed());
  std::vector<mpz_class> e(s.cols());
  for (const auto& g : s.kernel_generators(m)) {
    const unsigned long t = rng() % (f.order() - 1);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += g[i] * t;
  }
  pf::MultCochain c(p, f, degree, domain);
  const auto& chains = k.chains(degree);
  for (std::size_t i = 0; i < chains.size(); ++i) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), e[i].get_mpz_t(), m.get_mpz_t());
    c.set(chains[i], f.exp(r.get_ui()));
  }
  return c;
}

}  // namespace rnd
