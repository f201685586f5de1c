#include "ogroup/detail/generators.hpp"

#include <limits>

namespace ogroup::detail {

namespace {

ElementSet plain_closure(const Group &g, const std::vector<Element> &gens) {
  ElementSet members(g.order());
  members.insert(0);
  std::vector<Element> list{0};
  for (std::size_t i = 0; i < list.size(); ++i)
    for (Element s : gens) {
      Element p = g.multiply(list[i], s);
      if (members.insert(p))
        list.push_back(p);
    }
  return members;
}

} // namespace

std::vector<Element> generating_sequence(const Group &g) {
  std::vector<Element> gens;
  ElementSet current = plain_closure(g, gens);
  while (current.count() < g.order()) {
    Element best = 0;
    std::size_t best_size = 0;
    for (Element x = 1; x < g.order(); ++x) {
      if (current.contains(x))
        continue;
      gens.push_back(x);
      std::size_t size = plain_closure(g, gens).count();
      gens.pop_back();
      if (size > best_size) {
        best_size = size;
        best = x;
      }
    }
    gens.push_back(best);
    current = plain_closure(g, gens);
  }
  return gens;
}

std::optional<std::vector<Element>> extend_to_hom(const Group &source,
                                                  const Group &target,
                                                  const std::vector<Element> &gens,
                                                  const std::vector<Element> &images) {
  constexpr Element unset = std::numeric_limits<Element>::max();
  std::vector<Element> map(source.order(), unset);
  map[0] = 0;
  std::vector<Element> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Element x = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Element y = source.multiply(x, gens[k]);
      Element v = target.multiply(map[x], images[k]);
      if (map[y] == unset) {
        map[y] = v;
        queue.push_back(y);
      } else if (map[y] != v) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != source.order())
    return std::nullopt;
  return map;
}

bool commutes_with_operators(const Group &source, const Group &target,
                             const std::vector<Element> &map) {
  for (const Operator &op : source.operators()) {
    const Operator *other = target.find_operator(op.label);
    if (!other)
      return false;
    for (Element x = 0; x < source.order(); ++x)
      if (map[op.action[x]] != other->action[map[x]])
        return false;
  }
  return true;
}

} // namespace ogroup::detail
