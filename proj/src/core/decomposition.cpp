#include "ogroup/decomposition.hpp"

#include "ogroup/errors.hpp"

namespace ogroup {

namespace {

struct Lattice {
  SubgroupFamily normal;
  SubgroupFamily simple;
  Subgroup socle;
};

Lattice lattice_of(const Group &g, const Limits &limits) {
  SubgroupFamily normal = enumerate_normal_omega_subgroups(g, limits);
  SubgroupFamily simple(g);
  for (const Subgroup &h : normal)
    if (is_simple(h))
      simple.push_back(h);
  Subgroup soc = join_normal(simple);
  return {std::move(normal), std::move(simple), std::move(soc)};
}

Certificate class_of(const Subgroup &h, const Limits &limits) {
  return certificate(as_group(h).group, limits);
}

bool is_trivial(const ElementSet &s) { return s.count() == 1; }

bool supplements(const Subgroup &f, const Subgroup &k) {
  const Group &g = f.parent();
  return is_trivial(f.members() & k.members()) &&
         setwise_product(g, f.members(), k.members()).count() == g.order();
}

// The upward scan of greedy_refine, without preconditions or verification.
std::vector<std::size_t> greedy_scan(const Subgroup &f, const SubgroupFamily &h) {
  const Group &g = f.parent();
  ElementSet current = f.members();
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!is_trivial(h[i].members() & current))
      continue;
    chosen.push_back(i);
    current = setwise_product(g, current, h[i].members());
  }
  return chosen;
}

SubgroupFamily pick(const Subgroup *first, const SubgroupFamily &h,
                    const std::vector<std::size_t> &indices) {
  SubgroupFamily out(h.parent());
  if (first)
    out.push_back(*first);
  for (std::size_t i : indices)
    out.push_back(h[i]);
  return out;
}

std::optional<Subgroup> supplementary_in(const Lattice &lat, const Subgroup &f) {
  std::optional<Subgroup> found;
  for (const Subgroup &k : lat.normal)
    if (supplements(f, k)) {
      found = k;
      break;
    }

  if (lat.socle.is_whole()) {
    auto chosen = greedy_scan(f, lat.simple);
    Subgroup built = join_normal(pick(nullptr, lat.simple, chosen));
    if (!supplements(f, built))
      throw InternalError("greedy construction did not produce a supplementary");
    if (!found)
      throw InternalError("semisimple group has a normal subgroup without a "
                          "supplementary in the exhaustive search");
  }
  return found;
}

} // namespace

Subgroup socle(const Group &g, const Limits &limits) {
  return lattice_of(g, limits).socle;
}

Subgroup isotypical_component(const Group &g, const Certificate &s,
                              const Limits &limits) {
  SubgroupFamily members(g);
  for (const Subgroup &h : simple_normal_subgroups(g, limits))
    if (h.order() == s.order() && class_of(h, limits) == s)
      members.push_back(h);
  return join_normal(members);
}

Subgroup isotypical_component(const Group &g, const Group &s, const Limits &limits) {
  if (!is_simple(s))
    throw PreconditionError("isotypical_component: the given group is not simple");
  if (!s.has_labels_of(g))
    throw PreconditionError("isotypical_component: operator labels differ");
  return isotypical_component(g, certificate(s, limits), limits);
}

SupportSet support(const Group &g, const Limits &limits) {
  SupportSet out;
  for (const Subgroup &h : simple_normal_subgroups(g, limits))
    out.insert(class_of(h, limits));
  return out;
}

bool check_cc(const SubgroupFamily &family) {
  const Group &g = family.parent();
  for (std::size_t i = 0; i < family.size(); ++i) {
    auto xs = family[i].elements();
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      auto ys = family[j].elements();
      for (Element x : xs)
        for (Element y : ys)
          if (g.multiply(x, y) != g.multiply(y, x))
            return false;
    }
  }
  return true;
}

Theta theta(const SubgroupFamily &family, const Limits &limits) {
  if (!check_cc(family))
    throw PreconditionError("theta: members of the family do not commute");
  const Group &g = family.parent();

  std::vector<Embedding> members;
  std::vector<Group> factors;
  for (const Subgroup &h : family) {
    members.push_back(as_group(h));
    factors.push_back(members.back().group);
  }
  ProductWitness product = direct_product(factors, limits, g.labels());

  std::vector<Element> map(product.product.order());
  for (Element x = 0; x < map.size(); ++x) {
    auto tuple = product.tuple_of(x);
    Element y = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i)
      y = g.multiply(y, members[i].inclusion(tuple[i]));
    map[x] = y;
  }
  OmegaMorphism m(product.product, g, std::move(map));
  return {std::move(product), std::move(members), std::move(m)};
}

SdrReport sdr_report(const SubgroupFamily &family, const Limits &limits) {
  return sdr_report(Subgroup::whole(family.parent()), family, limits);
}

SdrReport sdr_report(const Subgroup &ambient, const SubgroupFamily &family,
                     const Limits &limits) {
  const Group &g = family.parent();
  if (!(ambient.parent() == g))
    throw PreconditionError("sdr_report: ambient subgroup has a different parent");
  for (const Subgroup &h : family)
    if (!h.is_contained_in(ambient))
      throw PreconditionError("sdr_report: family member outside the ambient subgroup");

  SdrReport r{.ambient = ambient, .family = family, .theta = std::nullopt};
  r.cc_holds = check_cc(family);

  r.mi_holds = true;
  for (std::size_t i = 0; i < family.size() && r.mi_holds; ++i) {
    SubgroupFamily others(g);
    for (std::size_t j = 0; j < family.size(); ++j)
      if (j != i)
        others.push_back(family[j]);
    if (!is_trivial(family[i].members() & join(others).members()))
      r.mi_holds = false;
  }
  r.generates = join(family) == ambient;

  if (!r.cc_holds)
    return r;

  r.theta = theta(family, limits);
  r.injective = r.theta->map.is_injective();
  ElementSet img = r.theta->map.image_of(
    ElementSet::full(r.theta->product.product.order()));
  r.surjective = img == ambient.members();
  r.bijective = r.injective && r.surjective;

  if (r.injective != r.mi_holds)
    throw InternalError("sdr_report: injectivity of theta disagrees with mutual "
                        "independence");
  if (r.surjective != r.generates)
    throw InternalError("sdr_report: image of theta disagrees with the "
                        "generated subgroup");
  return r;
}

std::optional<Subgroup> find_supplementary(const Subgroup &f, const Limits &limits) {
  if (!is_normal(f))
    throw PreconditionError("find_supplementary: subgroup is not normal");
  return supplementary_in(lattice_of(f.parent(), limits), f);
}

SemisimplicityEvidence is_semisimple(const Group &g, const Limits &limits) {
  Lattice lat = lattice_of(g, limits);
  SemisimplicityEvidence e;
  e.socle_is_whole = lat.socle.is_whole();

  e.every_normal_is_summand = true;
  for (const Subgroup &f : lat.normal)
    if (!supplementary_in(lat, f)) {
      e.every_normal_is_summand = false;
      break;
    }

  Subgroup one = Subgroup::trivial(g);
  auto chosen = greedy_scan(one, lat.simple);
  e.simple_family_bijective =
    sdr_report(pick(nullptr, lat.simple, chosen), limits).bijective;
  return e;
}

std::vector<std::size_t> greedy_refine(const Subgroup &f, const SubgroupFamily &h,
                                       const Limits &limits) {
  const Group &g = f.parent();
  if (!(h.parent() == g))
    throw PreconditionError("greedy_refine: family has a different parent");
  if (!is_normal(f))
    throw PreconditionError("greedy_refine: F is not normal");
  for (const Subgroup &x : h)
    if (!is_normal(x) || !is_simple(x))
      throw PreconditionError("greedy_refine: family member is not a simple "
                              "normal subgroup");
  SubgroupFamily all(g);
  all.push_back(f);
  for (const Subgroup &x : h)
    all.push_back(x);
  if (!join(all).is_whole())
    throw PreconditionError("greedy_refine: F and the family do not generate G");

  auto chosen = greedy_scan(f, h);
  SdrReport r = sdr_report(pick(&f, h, chosen), limits);
  if (!r.bijective)
    throw InternalError("greedy_refine: selected family is not a direct "
                        "decomposition");
  return chosen;
}

SubgroupFamily Decomposition::component_family() const {
  SubgroupFamily out(parent);
  for (const auto &[cert, h] : components)
    out.push_back(h);
  return out;
}

Decomposition decompose(const Group &g, const Limits &limits) {
  Lattice lat = lattice_of(g, limits);

  std::map<Certificate, SubgroupFamily> classes;
  for (const Subgroup &h : lat.simple)
    classes.try_emplace(class_of(h, limits), g).first->second.push_back(h);

  Decomposition d{g, lat.socle, lat.simple, {}, {}};
  for (const auto &[cert, members] : classes) {
    d.components.emplace(cert, join_normal(members));
    d.support.insert(cert);
  }

  SubgroupFamily parts = d.component_family();
  SdrReport r = sdr_report(d.socle, parts, limits);
  if (!r.bijective)
    throw InternalError("decompose: components do not decompose the socle directly");
  return d;
}

} // namespace ogroup
