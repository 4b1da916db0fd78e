#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "posetforge/poset.hpp"

namespace fx {

inline pf::PosetPtr from_text(const std::string& text) { return pf::share(pf::parse_poset(text)); }

inline pf::PosetPtr chain(int n) {
  std::vector<std::string> labels;
  std::vector<pf::IndexPair> pairs;
  for (int i = 0; i < n; ++i) {
    labels.push_back(std::string(1, static_cast<char>('a' + i)));
    if (i) pairs.emplace_back(i - 1, i);
  }
  return pf::share(pf::Poset::from_pairs(labels, pairs));
}

inline pf::PosetPtr antichain(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  return pf::share(pf::Poset::from_pairs(labels, {}));
}

inline pf::PosetPtr crown4() { return from_text("elements: a b c d\ncovers: a<c a<d b<c b<d\n"); }

// the 2n-point generalised crown: a_i < c_j whenever |i - j| <= 1
inline pf::PosetPtr crown(int n) {
  std::vector<std::string> labels;
  std::vector<pf::IndexPair> pairs;
  for (int i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i)
    for (int j = std::max(0, i - 1); j <= std::min(n - 1, i + 1); ++j) pairs.emplace_back(i, n + j);
  return pf::share(pf::Poset::from_pairs(labels, pairs));
}

inline pf::PosetPtr sphere() {
  return from_text("elements: 1 2 3 4 5 6\ncovers: 1<3 1<4 2<3 2<4 3<5 3<6 4<5 4<6\n");
}

// b > a < c, declared in the order b a c
inline pf::PosetPtr a3() { return from_text("elements: b a c\ncovers: a<b a<c\n"); }

inline pf::PosetPtr five() { return from_text("elements: x y z t s\ncovers: x<y x<z y<t y<s z<t z<s\n"); }

}  // namespace fx
