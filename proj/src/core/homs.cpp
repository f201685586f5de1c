#include "ogroup/homs.hpp"

#include <algorithm>

#include "ogroup/detail/generators.hpp"
#include "ogroup/errors.hpp"

namespace ogroup {

namespace {

void require_semisimple(const Decomposition &d, const char *what) {
  if (!d.socle.is_whole())
    throw PreconditionError(std::string(what) + ": group is not semisimple");
}

Embedding component(const Decomposition &d, const Certificate &s) {
  auto it = d.components.find(s);
  if (it == d.components.end())
    return as_group(Subgroup::trivial(d.parent));
  return as_group(it->second);
}

OmegaMorphism restrict_to_components(const OmegaMorphism &f, const Embedding &from,
                                     const Embedding &to) {
  auto targets = to.image.elements();
  std::vector<Element> map(from.group.order());
  for (Element i = 0; i < map.size(); ++i) {
    Element y = f(from.inclusion(i));
    auto it = std::lower_bound(targets.begin(), targets.end(), y);
    if (it == targets.end() || *it != y)
      throw InternalError("normal morphism does not map a component into the "
                          "matching component");
    map[i] = static_cast<Element>(it - targets.begin());
  }
  return OmegaMorphism(from.group, to.group, std::move(map));
}

} // namespace

std::size_t HomSet::normal_count() const {
  return static_cast<std::size_t>(std::count(normal.begin(), normal.end(), true));
}

HomSet enumerate_homs(const Group &source, const Group &target, const Limits &limits) {
  if (source.order() > limits.hom)
    throw CapExceeded("hom", limits.hom, source.order());
  if (source.labels() != target.labels())
    throw PreconditionError("enumerate_homs: operator label sets differ");

  auto gens = detail::generating_sequence(source);
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    std::size_t ord = source.element_order(gens[k]);
    for (Element y = 0; y < target.order(); ++y)
      if (ord % target.element_order(y) == 0)
        candidates[k].push_back(y);
  }

  std::vector<std::vector<Element>> maps;
  std::vector<Element> images(gens.size());
  auto search = [&](auto &&self, std::size_t k) -> void {
    if (k == gens.size()) {
      auto map = detail::extend_to_hom(source, target, gens, images);
      if (map && detail::commutes_with_operators(source, target, *map))
        maps.push_back(std::move(*map));
      return;
    }
    for (Element y : candidates[k]) {
      images[k] = y;
      self(self, k + 1);
    }
  };
  search(search, 0);
  std::sort(maps.begin(), maps.end());

  SubgroupFamily normals = enumerate_normal_omega_subgroups(source, limits);
  HomSet out{source, target, {}, {}};
  for (auto &m : maps) {
    OmegaMorphism f(source, target, std::move(m));
    out.normal.push_back(is_normal_morphism(f, normals));
    out.morphisms.push_back(std::move(f));
  }
  return out;
}

bool is_normal_morphism(const OmegaMorphism &f, const SubgroupFamily &source_normal) {
  if (!(source_normal.parent() == f.source()))
    throw PreconditionError("is_normal_morphism: family is not in the source");
  for (const Subgroup &h : source_normal)
    if (!is_normal(image(f, h)))
      return false;
  return true;
}

bool is_normal_morphism(const OmegaMorphism &f, const Limits &limits) {
  return is_normal_morphism(f, enumerate_normal_omega_subgroups(f.source(), limits));
}

OmegaMorphism component_of_morphism(const OmegaMorphism &f, const Certificate &s,
                                    const Limits &limits) {
  if (!is_normal_morphism(f, limits))
    throw PreconditionError("component_of_morphism: morphism is not normal");
  Embedding from = as_group(isotypical_component(f.source(), s, limits));
  Embedding to = as_group(isotypical_component(f.target(), s, limits));
  return restrict_to_components(f, from, to);
}

namespace {

ComponentVector phi_with(const Decomposition &d1, const Decomposition &d2,
                         const OmegaMorphism &f) {
  ComponentVector v;
  for (const auto &[s, h] : d1.components)
    if (d2.components.count(s))
      v.entries.emplace(s, restrict_to_components(f, component(d1, s), component(d2, s)));
  return v;
}

OmegaMorphism phi_inverse_with(const Decomposition &d1, const Decomposition &d2,
                               const ComponentVector &v, const Limits &limits) {
  Theta th = theta(d1.component_family(), limits);
  auto back = invert(th.map);
  if (!back)
    throw InternalError("phi_inverse: components do not decompose the source directly");

  std::vector<const OmegaMorphism *> parts;
  std::vector<Embedding> into;
  for (const auto &[s, h] : d1.components) {
    auto it = v.entries.find(s);
    parts.push_back(it == v.entries.end() ? nullptr : &it->second);
    into.push_back(component(d2, s));
  }

  const Group &g2 = d2.parent;
  std::vector<Element> map(th.product.product.order());
  for (Element x = 0; x < map.size(); ++x) {
    auto tuple = th.product.tuple_of(x);
    Element y = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i)
      if (parts[i])
        y = g2.multiply(y, into[i].inclusion((*parts[i])(tuple[i])));
    map[x] = y;
  }
  OmegaMorphism h(th.product.product, g2, std::move(map));
  return compose(h, *back);
}

} // namespace

ComponentVector phi(const OmegaMorphism &f, const Limits &limits) {
  Decomposition d1 = decompose(f.source(), limits);
  Decomposition d2 = decompose(f.target(), limits);
  require_semisimple(d1, "phi");
  require_semisimple(d2, "phi");
  if (!is_normal_morphism(f, limits))
    throw PreconditionError("phi: morphism is not normal");
  return phi_with(d1, d2, f);
}

OmegaMorphism phi_inverse(const Group &g, const Group &g2, const ComponentVector &v,
                          const Limits &limits) {
  if (!g.has_labels_of(g2))
    throw PreconditionError("phi_inverse: operator label sets differ");
  Decomposition d1 = decompose(g, limits);
  Decomposition d2 = decompose(g2, limits);
  require_semisimple(d1, "phi_inverse");
  require_semisimple(d2, "phi_inverse");

  std::size_t common = 0;
  for (const auto &[s, h] : d1.components)
    if (d2.components.count(s)) {
      ++common;
      auto it = v.entries.find(s);
      if (it == v.entries.end())
        throw PreconditionError("phi_inverse: missing component in the common support");
      const OmegaMorphism &m = it->second;
      if (!(m.source() == component(d1, s).group) ||
          !(m.target() == component(d2, s).group))
        throw PreconditionError("phi_inverse: component morphism has the wrong "
                                "source or target");
      if (!is_normal_morphism(m, limits))
        throw PreconditionError("phi_inverse: component morphism is not normal");
    }
  if (v.entries.size() != common)
    throw PreconditionError("phi_inverse: component outside the common support");
  return phi_inverse_with(d1, d2, v, limits);
}

PhiCensus phi_census(const Group &g, const Group &g2, const Limits &limits) {
  Decomposition d1 = decompose(g, limits);
  Decomposition d2 = decompose(g2, limits);
  require_semisimple(d1, "phi_census");
  require_semisimple(d2, "phi_census");

  HomSet all = enumerate_homs(g, g2, limits);
  std::vector<const OmegaMorphism *> normal;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all.normal[i])
      normal.push_back(&all.morphisms[i]);

  PhiCensus c;
  c.normal_homs = normal.size();

  struct Slot {
    Certificate cls;
    std::vector<OmegaMorphism> homs;
    SubgroupFamily normals;
  };
  std::vector<Slot> slots;
  c.vectors = 1;
  for (const auto &[s, h] : d1.components) {
    if (!d2.components.count(s))
      continue;
    Group a = component(d1, s).group, b = component(d2, s).group;
    HomSet hs = enumerate_homs(a, b, limits);
    Slot slot{s, {}, enumerate_normal_omega_subgroups(a, limits)};
    for (std::size_t i = 0; i < hs.size(); ++i)
      if (hs.normal[i])
        slot.homs.push_back(hs.morphisms[i]);
    c.component_counts[s] = slot.homs.size();
    c.vectors *= slot.homs.size();
    slots.push_back(std::move(slot));
  }

  std::map<std::vector<Element>, ComponentVector> image;
  for (const OmegaMorphism *f : normal) {
    ComponentVector v = phi_with(d1, d2, *f);
    for (std::size_t i = 0; i < slots.size(); ++i) {
      ++c.components_checked;
      if (is_normal_morphism(v.entries.at(slots[i].cls), slots[i].normals))
        ++c.normal_components;
    }
    if (phi_inverse_with(d1, d2, v, limits) == *f)
      ++c.forward_round_trips;
    image.emplace(f->map(), std::move(v));
  }

  SubgroupFamily source_normals = enumerate_normal_omega_subgroups(g, limits);
  std::vector<std::size_t> digits(slots.size(), 0);
  for (std::size_t k = 0; k < c.vectors; ++k) {
    ComponentVector v;
    for (std::size_t i = 0; i < slots.size(); ++i)
      v.entries.emplace(slots[i].cls, slots[i].homs[digits[i]]);
    OmegaMorphism f = phi_inverse_with(d1, d2, v, limits);
    if (is_normal_morphism(f, source_normals) && phi_with(d1, d2, f) == v)
      ++c.backward_round_trips;
    for (std::size_t i = slots.size(); i-- > 0;) {
      if (++digits[i] < slots[i].homs.size())
        break;
      digits[i] = 0;
    }
  }

  if (g == g2) {
    bool ok = true;
    for (const OmegaMorphism *f : normal) {
      const ComponentVector &vf = image.at(f->map());
      for (const OmegaMorphism *h : normal) {
        const ComponentVector &vh = image.at(h->map());
        auto it = image.find(compose(*h, *f).map());
        if (it == image.end()) {
          ok = false;
          continue;
        }
        for (const auto &[s, m] : it->second.entries)
          if (!(m == compose(vh.entries.at(s), vf.entries.at(s))))
            ok = false;
      }
    }
    c.respects_composition = ok;
  }
  return c;
}

} // namespace ogroup
