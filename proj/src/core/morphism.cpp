#include "ogroup/morphism.hpp"

#include <sstream>

#include "ogroup/errors.hpp"

namespace ogroup {

std::optional<std::string> morphism_defect(const Group &source,
                                           const Group &target,
                                           const std::vector<Element> &map) {
  if (source.labels() != target.labels())
    return "source and target carry different operator label sets";
  if (map.size() != source.order())
    return "map has length " + std::to_string(map.size()) + ", expected " +
           std::to_string(source.order());
  for (Element v : map)
    if (v >= target.order())
      return "map sends an element outside the target";
  if (map[0] != 0)
    return "identity is not mapped to the identity";
  for (Element x = 0; x < source.order(); ++x)
    for (Element y = 0; y < source.order(); ++y)
      if (map[source.multiply(x, y)] != target.multiply(map[x], map[y])) {
        std::ostringstream os;
        os << "map does not preserve the product of " << x << " and " << y;
        return os.str();
      }
  for (const Operator &op : source.operators()) {
    const Operator *other = target.find_operator(op.label);
    for (Element x = 0; x < source.order(); ++x)
      if (map[op.action[x]] != other->action[map[x]])
        return "map does not commute with operator '" + op.label + "'";
  }
  return std::nullopt;
}

OmegaMorphism::OmegaMorphism(Group source, Group target, std::vector<Element> map)
  : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (auto defect = morphism_defect(source_, target_, map_))
    throw PreconditionError("not an operator morphism: " + *defect);
}

OmegaMorphism OmegaMorphism::identity(const Group &g) {
  std::vector<Element> map(g.order());
  for (Element x = 0; x < g.order(); ++x)
    map[x] = x;
  return OmegaMorphism(Unchecked{}, g, g, std::move(map));
}

OmegaMorphism OmegaMorphism::null(const Group &source, const Group &target) {
  if (source.labels() != target.labels())
    throw PreconditionError("null morphism between groups with different labels");
  return OmegaMorphism(Unchecked{}, source, target,
                       std::vector<Element>(source.order(), 0));
}

bool OmegaMorphism::is_injective() const {
  ElementSet seen(target_.order());
  for (Element v : map_)
    if (!seen.insert(v))
      return false;
  return true;
}

bool OmegaMorphism::is_surjective() const {
  return image_of(ElementSet::full(source_.order())).count() == target_.order();
}

ElementSet OmegaMorphism::image_of(const ElementSet &xs) const {
  ElementSet out(target_.order());
  xs.for_each([&](Element x) { out.insert(map_[x]); });
  return out;
}

OmegaMorphism compose(const OmegaMorphism &g, const OmegaMorphism &f) {
  if (!(f.target() == g.source()))
    throw PreconditionError("cannot compose: target of f is not the source of g");
  std::vector<Element> map(f.source().order());
  for (Element x = 0; x < map.size(); ++x)
    map[x] = g(f(x));
  return OmegaMorphism(OmegaMorphism::Unchecked{}, f.source(), g.target(),
                       std::move(map));
}

std::optional<OmegaMorphism> invert(const OmegaMorphism &f) {
  if (!f.is_bijective())
    return std::nullopt;
  std::vector<Element> map(f.target().order());
  for (Element x = 0; x < f.source().order(); ++x)
    map[f(x)] = x;
  return OmegaMorphism(OmegaMorphism::Unchecked{}, f.target(), f.source(),
                       std::move(map));
}

} // namespace ogroup
