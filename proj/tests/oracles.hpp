#pragma once

// Brute-force reference implementations used only by tests. They share no
// code with the library beyond the Group accessors.

#include <functional>
#include <vector>

#include "ogroup/group.hpp"

namespace oracle {

using ogroup::Element;
using ogroup::Group;

inline bool op_compatible(const Group &g, const Group &h, const std::vector<Element> &map,
                          const std::vector<bool> &assigned, Element x) {
  for (const auto &op : g.operators()) {
    const auto *other = h.find_operator(op.label);
    if (!other)
      return false;
    for (Element y = 0; y < g.order(); ++y) {
      if (!assigned[y] || !assigned[op.action[y]])
        continue;
      if (y != x && op.action[y] != x)
        continue;
      if (map[op.action[y]] != other->action[map[y]])
        return false;
    }
  }
  return true;
}

// Checks every product relation and operator relation that involves x and
// only assigned elements.
inline bool consistent(const Group &g, const Group &h, const std::vector<Element> &map,
                       const std::vector<bool> &assigned, Element x) {
  for (Element y = 0; y < g.order(); ++y) {
    if (!assigned[y])
      continue;
    Element xy = g.multiply(x, y), yx = g.multiply(y, x);
    if (assigned[xy] && map[xy] != h.multiply(map[x], map[y]))
      return false;
    if (assigned[yx] && map[yx] != h.multiply(map[y], map[x]))
      return false;
    for (Element z = 0; z < g.order(); ++z) {
      if (!assigned[z])
        continue;
      Element w = g.multiply(y, z);
      if (w == x && map[x] != h.multiply(map[y], map[z]))
        return false;
    }
  }
  return op_compatible(g, h, map, assigned, x);
}

// Visits every map g -> h (bijections only if `bijective`) that preserves
// products and operators, assigning elements in index order.
inline void for_each_map(const Group &g, const Group &h, bool bijective,
                         const std::function<bool(const std::vector<Element> &)> &visit) {
  std::size_t n = g.order();
  if (g.labels() != h.labels())
    return;
  if (bijective && n != h.order())
    return;
  std::vector<Element> map(n, 0);
  std::vector<bool> assigned(n, false), used(h.order(), false);
  bool stop = false;
  auto rec = [&](auto &&self, Element x) -> void {
    if (stop)
      return;
    if (x == n) {
      if (!visit(map))
        stop = true;
      return;
    }
    for (Element y = 0; y < h.order(); ++y) {
      if (bijective && used[y])
        continue;
      map[x] = y;
      assigned[x] = true;
      if (consistent(g, h, map, assigned, x)) {
        used[y] = true;
        self(self, x + 1);
        used[y] = false;
      }
      assigned[x] = false;
    }
  };
  rec(rec, 0);
}

inline bool isomorphic(const Group &g, const Group &h) {
  bool found = false;
  for_each_map(g, h, true, [&](const std::vector<Element> &) {
    found = true;
    return false;
  });
  return found;
}

inline std::vector<std::vector<Element>> homs(const Group &g, const Group &h) {
  std::vector<std::vector<Element>> out;
  for_each_map(g, h, false, [&](const std::vector<Element> &m) {
    out.push_back(m);
    return true;
  });
  return out;
}

inline bool closed(const Group &g, const std::vector<bool> &s) {
  if (!s[0])
    return false;
  for (Element a = 0; a < g.order(); ++a) {
    if (!s[a])
      continue;
    if (!s[g.inverse(a)])
      return false;
    for (Element b = 0; b < g.order(); ++b)
      if (s[b] && !s[g.multiply(a, b)])
        return false;
    for (const auto &op : g.operators())
      if (!s[op.action[a]])
        return false;
  }
  return true;
}

inline bool normal(const Group &g, const std::vector<bool> &s) {
  for (Element a = 0; a < g.order(); ++a)
    if (s[a])
      for (Element x = 0; x < g.order(); ++x)
        if (!s[g.conjugate(x, a)])
          return false;
  return true;
}

// Every operator subgroup, by testing all subsets containing 0.
inline std::vector<std::vector<bool>> subgroups(const Group &g) {
  std::size_t n = g.order();
  std::vector<std::vector<bool>> out;
  for (std::size_t bits = 0; bits < (std::size_t{1} << (n - 1)); ++bits) {
    std::vector<bool> s(n, false);
    s[0] = true;
    for (std::size_t i = 1; i < n; ++i)
      s[i] = (bits >> (i - 1)) & 1;
    if (closed(g, s))
      out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<Element> members(const std::vector<bool> &s) {
  std::vector<Element> out;
  for (Element i = 0; i < s.size(); ++i)
    if (s[i])
      out.push_back(i);
  return out;
}

} // namespace oracle
