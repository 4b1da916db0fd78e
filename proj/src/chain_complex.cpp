#include "posetforge/chain_complex.hpp"

#include <algorithm>
#include <functional>

#include "posetforge/error.hpp"

namespace pf {

namespace {

const std::vector<Chain> kNoChains;

}  // namespace

OrderComplex::OrderComplex(const Poset& p, ChainDomain domain, int max_degree) : domain_(domain) {
  const Index n = static_cast<Index>(p.size());
  const bool strict = domain == ChainDomain::Strict;
  Chain cur;
  // depth-first extension in ascending index order yields lexicographic
  // order inside each length
  std::function<void()> extend = [&]() {
    const std::size_t deg = cur.size() - 1;
    if (chains_.size() <= deg) chains_.resize(deg + 1);
    chains_[deg].push_back(cur);
    if (max_degree >= 0 && static_cast<int>(deg) >= max_degree) return;
    const Index last = cur.back();
    for (Index y = 0; y < n; ++y) {
      if (!p.leq(last, y) || (strict && y == last)) continue;
      cur.push_back(y);
      extend();
      cur.pop_back();
    }
  };
  for (Index x = 0; x < n; ++x) {
    cur.assign(1, x);
    extend();
  }
  for (auto& level : chains_) std::sort(level.begin(), level.end());
  index_.resize(chains_.size());
  for (std::size_t d = 0; d < chains_.size(); ++d)
    for (std::size_t i = 0; i < chains_[d].size(); ++i) index_[d].emplace(chains_[d][i], i);
}

const std::vector<Chain>& OrderComplex::chains(int n) const {
  if (n < 0 || n > top_degree()) return kNoChains;
  return chains_[static_cast<std::size_t>(n)];
}

long OrderComplex::position(const Chain& c) const {
  if (c.empty() || c.size() > chains_.size()) return -1;
  const auto& idx = index_[c.size() - 1];
  auto it = idx.find(c);
  return it == idx.end() ? -1 : static_cast<long>(it->second);
}

OrderComplex order_complex(const Poset& p) { return OrderComplex(p, ChainDomain::Strict, -1); }

OrderComplex weak_complex(const Poset& p, int max_degree) {
  if (max_degree < 0) throw Error(ErrorCode::DegreeOutOfRange, "weak complex needs a degree bound");
  return OrderComplex(p, ChainDomain::Weak, max_degree);
}

Chain face(const Chain& c, std::size_t i) {
  Chain out;
  out.reserve(c.size() - 1);
  for (std::size_t j = 0; j < c.size(); ++j)
    if (j != i) out.push_back(c[j]);
  return out;
}

IntMatrix boundary_matrix(const OrderComplex& k, int n) {
  if (n < 1 || n > k.top_degree())
    throw Error(ErrorCode::DegreeOutOfRange,
                "degree " + std::to_string(n) + " outside [1, " + std::to_string(k.top_degree()) + "]");
  const auto& cols = k.chains(n);
  IntMatrix m(k.count(n - 1), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) {
      const long r = k.position(face(cols[j], i));
      m(static_cast<std::size_t>(r), j) += (i % 2 == 0) ? 1 : -1;
    }
  return m;
}

std::string FinAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  if (free_rank == 1) out = "Z";
  else if (free_rank > 1) out = "Z^" + std::to_string(free_rank);
  for (const auto& d : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + d.get_str();
  }
  return out;
}

FinAbGroup make_group(std::size_t free_rank, const std::vector<mpz_class>& divisors) {
  FinAbGroup g;
  g.free_rank = free_rank;
  for (const auto& d : divisors)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

FinAbGroup homology(const OrderComplex& k, int n) {
  if (n < 0 || n > k.top_degree()) return {};
  const std::size_t dim = k.count(n);
  const std::size_t rank_out = n >= 1 ? smith_divisors(boundary_matrix(k, n)).size() : 0;
  std::vector<mpz_class> in;
  if (n + 1 <= k.top_degree()) in = smith_divisors(boundary_matrix(k, n + 1));
  return make_group(dim - rank_out - in.size(), in);
}

FinAbGroup homology(const Poset& p, int n) {
  if (n < 0) return {};
  return homology(order_complex(p), n);
}

}  // namespace pf
