#include "ogroup/subgroup.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "ogroup/errors.hpp"

namespace ogroup {

namespace {

// Subgroup generated by seeds, saturating the seed worklist under the
// operators and under conjugation by `conjugators`. Conjugating only the
// generators that actually extend the subgroup is enough: every accepted
// generator has all its operator images and conjugates queued.
ElementSet saturate(const Group &g, std::vector<Element> worklist,
                    std::span<const Element> conjugators) {
  ElementSet members(g.order());
  members.insert(0);
  std::vector<Element> list{0};
  std::vector<Element> used;

  while (!worklist.empty()) {
    Element s = worklist.back();
    worklist.pop_back();
    if (members.contains(s))
      continue;
    used.push_back(s);
    for (const Operator &op : g.operators())
      worklist.push_back(op.action[s]);
    for (Element c : conjugators)
      worklist.push_back(g.conjugate(c, s));

    // Right-multiply everything by the generators until closed. In a finite
    // group this also yields inverses.
    for (std::size_t i = 0; i < list.size(); ++i)
      for (Element u : used) {
        Element p = g.multiply(list[i], u);
        if (members.insert(p))
          list.push_back(p);
      }
  }
  return members;
}

std::vector<Element> all_elements(std::size_t n) {
  std::vector<Element> out(n);
  std::iota(out.begin(), out.end(), Element{0});
  return out;
}

std::string closure_defect(const Group &g, const ElementSet &m) {
  if (m.universe() != g.order())
    return "mask size does not match the parent order";
  if (!m.contains(0))
    return "does not contain the identity";
  auto xs = m.elements();
  for (Element x : xs) {
    if (!m.contains(g.inverse(x)))
      return "not closed under inverses";
    for (Element y : xs)
      if (!m.contains(g.multiply(x, y)))
        return "not closed under the product";
    for (const Operator &op : g.operators())
      if (!m.contains(op.action[x]))
        return "not closed under operator '" + op.label + "'";
  }
  return {};
}

} // namespace

Subgroup::Subgroup(Group parent, ElementSet members)
  : parent_(std::move(parent)), members_(std::move(members)) {
  std::string defect = closure_defect(parent_, members_);
  if (!defect.empty())
    throw PreconditionError("not an operator subgroup: " + defect);
}

Subgroup Subgroup::trivial(const Group &g) {
  ElementSet m(g.order());
  m.insert(0);
  return Subgroup(Trusted{}, g, std::move(m));
}

Subgroup Subgroup::whole(const Group &g) {
  return Subgroup(Trusted{}, g, ElementSet::full(g.order()));
}

Subgroup trusted_subgroup(const Group &g, ElementSet members) {
  return Subgroup(Subgroup::Trusted{}, g, std::move(members));
}

SubgroupFamily::SubgroupFamily(Group parent, std::vector<Subgroup> entries)
  : parent_(std::move(parent)) {
  for (auto &h : entries)
    push_back(std::move(h));
}

void SubgroupFamily::push_back(Subgroup h) {
  if (!(h.parent() == parent_))
    throw PreconditionError("family members must share one parent group");
  entries_.push_back(std::move(h));
}

bool SubgroupFamily::contains(const Subgroup &h) const {
  return std::find(entries_.begin(), entries_.end(), h) != entries_.end();
}

Subgroup generated_subgroup(const Group &g, const ElementSet &xs) {
  return trusted_subgroup(g, saturate(g, xs.elements(), {}));
}

Subgroup generated_subgroup(const Group &g, std::span<const Element> xs) {
  return trusted_subgroup(g, saturate(g, {xs.begin(), xs.end()}, {}));
}

Subgroup normal_closure(const Group &g, const ElementSet &xs) {
  return trusted_subgroup(g, saturate(g, xs.elements(), all_elements(g.order())));
}

Subgroup normal_closure(const Group &g, std::span<const Element> xs) {
  return trusted_subgroup(g, saturate(g, {xs.begin(), xs.end()},
                                      all_elements(g.order())));
}

Subgroup normal_closure_within(const Subgroup &within, const ElementSet &xs) {
  if (!xs.is_subset_of(within.members()))
    throw PreconditionError("normal_closure_within: elements outside the subgroup");
  auto conj = within.elements();
  return trusted_subgroup(within.parent(),
                          saturate(within.parent(), xs.elements(), conj));
}

bool is_normal(const Subgroup &h) {
  const Group &g = h.parent();
  auto xs = h.elements();
  for (Element c = 1; c < g.order(); ++c)
    for (Element x : xs)
      if (!h.contains(g.conjugate(c, x)))
        return false;
  return true;
}

Subgroup Centralizer::subgroup(const Group &g) const {
  if (!operator_closed)
    throw PreconditionError("centralizer is not closed under the operators");
  return trusted_subgroup(g, members);
}

Centralizer centralizer(const Group &g, const ElementSet &xs) {
  ElementSet c(g.order());
  auto elems = xs.elements();
  for (Element y = 0; y < g.order(); ++y) {
    bool commutes = true;
    for (Element x : elems)
      if (g.multiply(y, x) != g.multiply(x, y)) {
        commutes = false;
        break;
      }
    if (commutes)
      c.insert(y);
  }
  bool closed = true;
  for (const Operator &op : g.operators())
    c.for_each([&](Element y) {
      if (!c.contains(op.action[y]))
        closed = false;
    });
  return {std::move(c), closed};
}

Subgroup commutator_subgroup(const Subgroup &h, const Subgroup &k) {
  const Group &g = h.parent();
  if (!(k.parent() == g))
    throw PreconditionError("commutator of subgroups of different groups");
  ElementSet comms(g.order());
  h.members().for_each([&](Element a) {
    k.members().for_each([&](Element b) {
      comms.insert(g.multiply(g.multiply(a, b),
                              g.multiply(g.inverse(a), g.inverse(b))));
    });
  });
  return generated_subgroup(g, comms);
}

Subgroup intersection(const Subgroup &a, const Subgroup &b) {
  if (!(a.parent() == b.parent()))
    throw PreconditionError("intersection of subgroups of different groups");
  return trusted_subgroup(a.parent(), a.members() & b.members());
}

ElementSet setwise_product(const Group &g, const ElementSet &a, const ElementSet &b) {
  ElementSet out(g.order());
  auto bs = b.elements();
  a.for_each([&](Element x) {
    for (Element y : bs)
      out.insert(g.multiply(x, y));
  });
  return out;
}

SubgroupFamily enumerate_omega_subgroups(const Group &g, const Limits &limits) {
  if (g.order() > limits.lattice)
    throw CapExceeded("lattice", limits.lattice, g.order());

  struct Node {
    ElementSet members;
    std::vector<Element> gens;
  };
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<Node> nodes;
  Subgroup one = Subgroup::trivial(g);
  seen.insert(one.members());
  nodes.push_back({one.members(), {}});

  for (std::size_t idx = 0; idx < nodes.size(); ++idx) {
    // Copy: nodes may reallocate below.
    ElementSet base = nodes[idx].members;
    std::vector<Element> gens = nodes[idx].gens;
    auto base_elems = base.elements();
    ElementSet skip = base;

    for (Element x = 1; x < g.order(); ++x) {
      if (skip.contains(x))
        continue;
      // <H, h x^k> = <H, x> for h in H and k prime to ord(x).
      std::size_t ord = g.element_order(x);
      Element xk = x;
      for (std::size_t k = 1; k < ord; ++k, xk = g.multiply(xk, x))
        if (std::gcd(k, ord) == 1)
          for (Element h : base_elems)
            skip.insert(g.multiply(h, xk));

      auto extended = gens;
      extended.push_back(x);
      ElementSet m = saturate(g, extended, {});
      if (seen.insert(m).second)
        nodes.push_back({std::move(m), std::move(extended)});
    }
  }

  std::vector<ElementSet> masks;
  masks.reserve(nodes.size());
  for (auto &n : nodes)
    masks.push_back(std::move(n.members));
  std::sort(masks.begin(), masks.end(), size_lex_less);

  SubgroupFamily out(g);
  for (auto &m : masks)
    out.push_back(trusted_subgroup(g, std::move(m)));
  return out;
}

SubgroupFamily enumerate_normal_omega_subgroups(const Group &g, const Limits &limits) {
  SubgroupFamily out(g);
  for (const Subgroup &h : enumerate_omega_subgroups(g, limits))
    if (is_normal(h))
      out.push_back(h);
  return out;
}

bool is_simple(const Subgroup &h) {
  if (h.is_trivial())
    return false;
  bool simple = true;
  ElementSet single(h.parent().order());
  h.members().for_each([&](Element x) {
    if (!simple || x == 0)
      return;
    single.insert(x);
    if (normal_closure_within(h, single).order() != h.order())
      simple = false;
    single.erase(x);
  });
  return simple;
}

bool is_simple(const Group &g) { return is_simple(Subgroup::whole(g)); }

SubgroupFamily simple_normal_subgroups(const Group &g, const Limits &limits) {
  SubgroupFamily out(g);
  for (const Subgroup &h : enumerate_normal_omega_subgroups(g, limits))
    if (is_simple(h))
      out.push_back(h);
  return out;
}

Subgroup join(const SubgroupFamily &family) {
  ElementSet all(family.parent().order());
  for (const Subgroup &h : family)
    all |= h.members();
  return generated_subgroup(family.parent(), all);
}

Subgroup join_normal(const SubgroupFamily &family) {
  const Group &g = family.parent();
  ElementSet product(g.order());
  product.insert(0);
  for (const Subgroup &h : family) {
    if (!is_normal(h))
      throw PreconditionError("join_normal: family member is not normal");
    product = setwise_product(g, product, h.members());
  }
  Subgroup closure = join(family);
  if (!(closure.members() == product))
    throw InternalError("join_normal: setwise product differs from generated subgroup");
  if (!is_normal(closure))
    throw InternalError("join_normal: join of normal subgroups is not normal");
  return closure;
}

Subgroup Embedding::lift(const Subgroup &in_group) const {
  if (!(in_group.parent() == group))
    throw PreconditionError("lift: subgroup does not belong to the embedded group");
  return trusted_subgroup(image.parent(), inclusion.image_of(in_group.members()));
}

Subgroup Embedding::restrict(const Subgroup &in_parent) const {
  if (!in_parent.is_contained_in(image))
    throw PreconditionError("restrict: subgroup is not inside the embedded subgroup");
  ElementSet out(group.order());
  const auto &map = inclusion.map();
  for (Element i = 0; i < map.size(); ++i)
    if (in_parent.contains(map[i]))
      out.insert(i);
  return trusted_subgroup(group, std::move(out));
}

Embedding as_group(const Subgroup &h) {
  const Group &g = h.parent();
  auto members = h.elements();
  std::size_t n = members.size();
  std::vector<Element> index(g.order(), 0);
  for (Element i = 0; i < n; ++i)
    index[members[i]] = i;

  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[i * n + j] = index[g.multiply(members[i], members[j])];

  std::vector<Operator> ops;
  for (const Operator &op : g.operators()) {
    Operator r{op.label, std::vector<Element>(n)};
    for (std::size_t i = 0; i < n; ++i)
      r.action[i] = index[op.action[members[i]]];
    ops.push_back(std::move(r));
  }
  Group sub = make_group(n, std::move(table), std::move(ops),
                         g.name().empty() ? "subgroup" : "subgroup of " + g.name());
  OmegaMorphism inc(sub, g, members);
  return {sub, std::move(inc), h};
}

Subgroup image(const OmegaMorphism &f, const Subgroup &h) {
  if (!(h.parent() == f.source()))
    throw PreconditionError("image: subgroup is not in the morphism's source");
  return trusted_subgroup(f.target(), f.image_of(h.members()));
}

Subgroup image(const OmegaMorphism &f) {
  return trusted_subgroup(f.target(), f.image_of(ElementSet::full(f.source().order())));
}

Subgroup kernel(const OmegaMorphism &f) {
  ElementSet k(f.source().order());
  for (Element x = 0; x < f.source().order(); ++x)
    if (f(x) == 0)
      k.insert(x);
  return trusted_subgroup(f.source(), std::move(k));
}

Subgroup preimage(const OmegaMorphism &f, const Subgroup &k) {
  if (!(k.parent() == f.target()))
    throw PreconditionError("preimage: subgroup is not in the morphism's target");
  ElementSet out(f.source().order());
  for (Element x = 0; x < f.source().order(); ++x)
    if (k.contains(f(x)))
      out.insert(x);
  return trusted_subgroup(f.source(), std::move(out));
}

} // namespace ogroup
