#include "ogroup/constructions.hpp"

#include <algorithm>

#include "ogroup/errors.hpp"

namespace ogroup {

Element ProductWitness::index_of(std::span<const Element> tuple) const {
  if (tuple.size() != factors.size())
    throw PreconditionError("tuple length does not match the number of factors");
  std::size_t x = 0;
  for (std::size_t i = 0; i < factors.size(); ++i)
    x = x * factors[i].order() + tuple[i];
  return static_cast<Element>(x);
}

std::vector<Element> ProductWitness::tuple_of(Element x) const {
  std::vector<Element> t(factors.size());
  std::size_t rest = x;
  for (std::size_t i = factors.size(); i-- > 0;) {
    t[i] = static_cast<Element>(rest % factors[i].order());
    rest /= factors[i].order();
  }
  return t;
}

Subgroup ProductWitness::product_of(std::span<const Subgroup> parts) const {
  if (parts.size() != factors.size())
    throw PreconditionError("product_of: one subgroup per factor required");
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (!(parts[i].parent() == factors[i]))
      throw PreconditionError("product_of: subgroup is not in the matching factor");
  ElementSet m(product.order());
  for (Element x = 0; x < product.order(); ++x) {
    auto t = tuple_of(x);
    bool inside = true;
    for (std::size_t i = 0; i < t.size() && inside; ++i)
      inside = parts[i].contains(t[i]);
    if (inside)
      m.insert(x);
  }
  return trusted_subgroup(product, std::move(m));
}

ProductWitness direct_product(std::span<const Group> family, const Limits &limits,
                              const std::vector<std::string> &empty_labels) {
  ProductWitness w;
  w.factors.assign(family.begin(), family.end());
  if (family.empty()) {
    w.product = trivial_group(empty_labels);
    return w;
  }

  auto labels = family[0].labels();
  std::size_t n = 1;
  for (const Group &f : family) {
    if (f.labels() != labels)
      throw PreconditionError("direct_product: factors carry different operator labels");
    n *= f.order();
    if (n > limits.construction)
      throw CapExceeded("construction", limits.construction, n);
  }

  // Tuples are decoded once; multiplication is componentwise.
  std::vector<std::vector<Element>> tuples(n);
  {
    ProductWitness shape;
    shape.factors = w.factors;
    for (Element x = 0; x < n; ++x)
      tuples[x] = shape.tuple_of(x);
  }
  auto encode = [&](const std::vector<Element> &t) {
    std::size_t x = 0;
    for (std::size_t i = 0; i < family.size(); ++i)
      x = x * family[i].order() + t[i];
    return static_cast<Element>(x);
  };

  std::vector<Element> table(n * n);
  std::vector<Element> scratch(family.size());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < family.size(); ++i)
        scratch[i] = family[i].multiply(tuples[a][i], tuples[b][i]);
      table[static_cast<std::size_t>(a) * n + b] = encode(scratch);
    }

  std::vector<Operator> ops;
  for (const Operator &op0 : family[0].operators()) {
    Operator op{op0.label, std::vector<Element>(n)};
    for (Element a = 0; a < n; ++a) {
      for (std::size_t i = 0; i < family.size(); ++i)
        scratch[i] = family[i].find_operator(op.label)->action[tuples[a][i]];
      op.action[a] = encode(scratch);
    }
    ops.push_back(std::move(op));
  }

  std::string name;
  for (const Group &f : family)
    name += (name.empty() ? "" : " x ") + (f.name().empty() ? "?" : f.name());
  w.product = make_group(n, std::move(table), std::move(ops), "(" + name + ")");

  for (std::size_t i = 0; i < family.size(); ++i) {
    std::vector<Element> inj(family[i].order());
    std::vector<Element> t(family.size(), 0);
    for (Element x = 0; x < family[i].order(); ++x) {
      t[i] = x;
      inj[x] = encode(t);
    }
    std::vector<Element> proj(n);
    for (Element a = 0; a < n; ++a)
      proj[a] = tuples[a][i];
    w.injections.emplace_back(family[i], w.product, std::move(inj));
    w.projections.emplace_back(w.product, family[i], std::move(proj));
  }
  return w;
}

Quotient quotient(const Subgroup &n) {
  const Group &g = n.parent();
  if (!is_normal(n))
    throw PreconditionError("quotient: subgroup is not normal");

  // Cosets xN, numbered by first appearance in ascending element order, which
  // is the order of their minimal members.
  std::vector<Element> coset_of(g.order(), 0);
  std::vector<Element> reps;
  ElementSet assigned(g.order());
  auto ns = n.elements();
  for (Element x = 0; x < g.order(); ++x) {
    if (assigned.contains(x))
      continue;
    Element id = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element m : ns) {
      Element y = g.multiply(x, m);
      assigned.insert(y);
      coset_of[y] = id;
    }
  }

  std::size_t q = reps.size();
  std::vector<Element> table(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      table[i * q + j] = coset_of[g.multiply(reps[i], reps[j])];

  std::vector<Operator> ops;
  for (const Operator &op : g.operators()) {
    Operator d{op.label, std::vector<Element>(q)};
    for (std::size_t i = 0; i < q; ++i)
      d.action[i] = coset_of[op.action[reps[i]]];
    ops.push_back(std::move(d));
  }
  Group qg = make_group(q, std::move(table), std::move(ops),
                        g.name().empty() ? "quotient" : g.name() + " / N");
  OmegaMorphism proj(g, qg, coset_of);
  return {qg, std::move(proj)};
}

} // namespace ogroup
