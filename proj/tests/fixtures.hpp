#pragma once

#include <vector>

#include "ogroup/constructions.hpp"
#include "ogroup/group.hpp"

namespace fixture {

using namespace ogroup;

inline Group cyclic(std::size_t n) { return build_named(NamedKind::cyclic, n); }
inline Group sym(std::size_t n) { return build_named(NamedKind::symmetric, n); }
inline Group alt(std::size_t n) { return build_named(NamedKind::alternating, n); }
inline Group dihedral(std::size_t n) { return build_named(NamedKind::dihedral, n); }
inline Group klein4() { return build_named(NamedKind::klein4, 0); }

inline Group product(std::vector<Group> gs, const Limits &limits = {}) {
  return direct_product(gs, limits).product;
}

inline Group q8() {
  return build_from_table({{0, 1, 2, 3, 4, 5, 6, 7},
                           {1, 0, 3, 2, 5, 4, 7, 6},
                           {2, 3, 1, 0, 6, 7, 5, 4},
                           {3, 2, 0, 1, 7, 6, 4, 5},
                           {4, 5, 7, 6, 1, 0, 2, 3},
                           {5, 4, 6, 7, 0, 1, 3, 2},
                           {6, 7, 4, 5, 3, 2, 1, 0},
                           {7, 6, 5, 4, 2, 3, 0, 1}},
                          {}, "q8");
}

inline Group dic3() {
  std::vector<std::vector<Element>> t(12, std::vector<Element>(12));
  for (Element a = 0; a < 12; ++a)
    for (Element b = 0; b < 12; ++b) {
      unsigned k = a % 6, e = a / 6, m = b % 6, f = b / 6;
      unsigned kk = (k + (e ? 6 - m : m)) % 6, ee = e + f;
      if (ee == 2) {
        ee = 0;
        kk = (kk + 3) % 6;
      }
      t[a][b] = ee * 6 + kk;
    }
  return build_from_table(t, {}, "dic3");
}

/// Every group of order at most 12 up to isomorphism, no operators.
inline std::vector<Group> small_groups() {
  std::vector<Group> out;
  for (std::size_t n = 1; n <= 12; ++n)
    out.push_back(cyclic(n));
  out.push_back(klein4());
  out.push_back(sym(3));
  out.push_back(product({cyclic(4), cyclic(2)}));
  out.push_back(product({cyclic(2), cyclic(2), cyclic(2)}));
  out.push_back(dihedral(4));
  out.push_back(q8());
  out.push_back(product({cyclic(3), cyclic(3)}));
  out.push_back(dihedral(5));
  out.push_back(product({cyclic(6), cyclic(2)}));
  out.push_back(dihedral(6));
  out.push_back(alt(4));
  out.push_back(dic3());
  return out;
}

/// A few groups carrying operators.
inline std::vector<Group> operator_groups() {
  std::vector<Group> out;
  out.push_back(with_operator(klein4(), {"rot", {0, 2, 3, 1}}));
  out.push_back(with_operator(klein4(), {"swap", {0, 2, 1, 3}}));
  out.push_back(with_operator(product({cyclic(2), cyclic(2), cyclic(2)}),
                              {"f", {0, 2, 4, 6, 3, 1, 7, 5}}));
  out.push_back(with_operator(product({cyclic(3), cyclic(3)}),
                              {"f", {0, 6, 3, 1, 7, 4, 2, 8, 5}}));
  out.push_back(with_inner_operators(sym(3)));
  out.push_back(with_inner_operators(dihedral(4)));
  out.push_back(with_inner_operators(q8()));
  out.push_back(with_operator(cyclic(3), {"z", {0, 0, 0}}));
  out.push_back(with_operator(cyclic(4), {"p", {0, 3, 2, 1}}));
  return out;
}

} // namespace fixture
