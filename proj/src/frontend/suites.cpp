#include "ogroup/frontend/suites.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <thread>

#include "ogroup/decomposition.hpp"
#include "ogroup/errors.hpp"
#include "ogroup/homs.hpp"

namespace ogroup::frontend {

namespace {

constexpr std::size_t max_failures = 5;

void expect(CheckResult &r, bool ok, const std::string &what) {
  ++r.checks;
  if (ok)
    return;
  ++r.violations;
  if (r.failures.size() < max_failures)
    r.failures.push_back(what);
}

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)> &fn) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < n;)
      fn(i);
  };
  unsigned count = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < count; ++t)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();
}

using Task = std::function<void(CheckResult &)>;

CheckResult run_tasks(const std::string &suite, const std::string &check,
                      const std::vector<Task> &tasks, unsigned jobs) {
  std::vector<CheckResult> parts(tasks.size());
  parallel_for(tasks.size(), jobs, [&](std::size_t i) {
    try {
      tasks[i](parts[i]);
    } catch (const CapExceeded &) {
      ++parts[i].skipped;
    } catch (const std::exception &e) {
      ++parts[i].checks;
      ++parts[i].violations;
      parts[i].failures.push_back(std::string("exception: ") + e.what());
    }
  });
  CheckResult out{.suite = suite, .check = check, .failures = {}};
  for (auto &p : parts) {
    out.checks += p.checks;
    out.violations += p.violations;
    out.skipped += p.skipped;
    for (auto &f : p.failures)
      if (out.failures.size() < max_failures)
        out.failures.push_back(std::move(f));
  }
  return out;
}

struct Member {
  std::string name;
  Group g;
  SubgroupFamily all;
  SubgroupFamily normal;
  Decomposition d;

  bool semisimple() const { return d.socle.is_whole(); }
  std::vector<Subgroup> nontrivial_normal() const {
    std::vector<Subgroup> out;
    for (const Subgroup &n : normal)
      if (!n.is_trivial())
        out.push_back(n);
    return out;
  }
};

struct Context {
  SuiteOptions options;
  std::vector<Member> members;
  std::vector<CorpusEntry> excluded;
  /// Classes of the simple corpus members.
  std::vector<Certificate> simple_classes;

  const Limits &limits() const { return options.limits; }
  std::size_t product_cap() const {
    return std::min(options.max_order, options.limits.lattice);
  }
};

Context prepare(const std::vector<CorpusEntry> &corpus, const SuiteOptions &options) {
  Context ctx{options, {}, {}, {}};
  std::vector<std::optional<Member>> slots(corpus.size());
  parallel_for(corpus.size(), options.jobs, [&](std::size_t i) {
    const CorpusEntry &e = corpus[i];
    if (e.group.order() > options.max_order)
      return;
    try {
      SubgroupFamily all = enumerate_omega_subgroups(e.group, options.limits);
      SubgroupFamily normal(e.group);
      for (const Subgroup &h : all)
        if (is_normal(h))
          normal.push_back(h);
      slots[i] = Member{e.name, e.group, std::move(all), std::move(normal),
                        decompose(e.group, options.limits)};
    } catch (const CapExceeded &) {
    }
  });
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (corpus[i].group.order() > options.max_order)
      continue;
    if (!slots[i]) {
      ctx.excluded.push_back(corpus[i]);
      continue;
    }
    Member &m = *slots[i];
    if (is_simple(m.g) && m.g.order() <= options.limits.certificate) {
      Certificate c = certificate(m.g, options.limits);
      if (std::find(ctx.simple_classes.begin(), ctx.simple_classes.end(), c) ==
          ctx.simple_classes.end())
        ctx.simple_classes.push_back(c);
    }
    ctx.members.push_back(std::move(m));
  }
  return ctx;
}

Subgroup component_or_trivial(const Decomposition &d, const Certificate &s) {
  auto it = d.components.find(s);
  return it == d.components.end() ? Subgroup::trivial(d.parent) : it->second;
}

std::string pair_name(const Member &a, const Member &b) { return a.name + " -> " + b.name; }

std::vector<Task> per_member(const Context &ctx,
                             std::function<void(const Member &, CheckResult &)> fn) {
  std::vector<Task> tasks;
  for (const Member &m : ctx.members)
    tasks.push_back([&m, fn](CheckResult &r) { fn(m, r); });
  return tasks;
}

/// Ordered pairs with matching operator labels whose source passes `keep`.
std::vector<Task> per_pair(const Context &ctx, bool unordered,
                           std::function<bool(const Member &, const Member &)> keep,
                           std::function<void(const Member &, const Member &, CheckResult &)> fn) {
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < ctx.members.size(); ++i)
    for (std::size_t j = unordered ? i : 0; j < ctx.members.size(); ++j) {
      const Member &a = ctx.members[i], &b = ctx.members[j];
      if (a.g.labels() != b.g.labels() || !keep(a, b))
        continue;
      tasks.push_back([&a, &b, fn](CheckResult &r) { fn(a, b, r); });
    }
  return tasks;
}

SubgroupFamily family_of(const Group &g, std::vector<Subgroup> members) {
  return SubgroupFamily(g, std::move(members));
}

std::mt19937 rng_for(const Context &ctx, std::size_t salt) {
  std::seed_seq seq{ctx.options.seed, static_cast<std::uint32_t>(salt),
                    static_cast<std::uint32_t>(salt >> 32)};
  return std::mt19937(seq);
}

std::size_t name_salt(const std::string &s) {
  std::size_t h = 1469598103934665603ull;
  for (unsigned char c : s)
    h = (h ^ c) * 1099511628211ull;
  return h;
}

// ---------------------------------------------------------------- prop2

CheckResult check_components_independent(const Context &ctx) {
  auto tasks = per_member(ctx, [&ctx](const Member &m, CheckResult &r) {
    std::vector<Certificate> classes(m.d.support.begin(), m.d.support.end());
    std::size_t absent = 0;
    for (const Certificate &c : ctx.simple_classes)
      if (absent < 2 && !m.d.support.count(c) && c.group().labels() == m.g.labels()) {
        classes.push_back(c);
        ++absent;
      }
    std::size_t n = std::min<std::size_t>(classes.size(), 6);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      if (std::popcount(mask) > 4)
        continue;
      std::vector<Subgroup> parts;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1)
          parts.push_back(component_or_trivial(m.d, classes[i]));
      SubgroupFamily fam = family_of(m.g, parts);
      bool ok = check_cc(fam) && sdr_report(fam, ctx.limits()).injective;
      expect(r, ok, m.name + ": components of distinct classes are not independent");
    }
  });
  return run_tasks("prop2", "components-independent", tasks, ctx.options.jobs);
}

CheckResult check_socle_decomposes(const Context &ctx) {
  auto tasks = per_member(ctx, [&ctx](const Member &m, CheckResult &r) {
    SubgroupFamily fam = m.d.component_family();
    expect(r, sdr_report(m.d.socle, fam, ctx.limits()).bijective,
           m.name + ": components do not decompose the socle");
    expect(r, join_normal(fam) == m.d.socle, m.name + ": components do not generate the socle");
  });
  return run_tasks("prop2", "socle-decomposes", tasks, ctx.options.jobs);
}

CheckResult check_normal_images(const Context &ctx) {
  auto keep = [&ctx](const Member &a, const Member &) {
    return a.g.order() <= ctx.limits().hom;
  };
  auto tasks = per_pair(ctx, false, keep, [&ctx](const Member &a, const Member &b,
                                                 CheckResult &r) {
    HomSet hs = enumerate_homs(a.g, b.g, ctx.limits());
    for (std::size_t i = 0; i < hs.size(); ++i) {
      if (!hs.normal[i])
        continue;
      const OmegaMorphism &f = hs.morphisms[i];
      expect(r, image(f, a.d.socle).is_contained_in(b.d.socle),
             pair_name(a, b) + ": normal morphism moves the socle outside the socle");
      for (const auto &[s, h] : a.d.components)
        expect(r, image(f, h).is_contained_in(component_or_trivial(b.d, s)),
               pair_name(a, b) + ": normal morphism moves a component");
    }
  });
  return run_tasks("prop2", "normal-images", tasks, ctx.options.jobs);
}

CheckResult check_products(const Context &ctx) {
  auto keep = [&ctx](const Member &a, const Member &b) {
    return a.g.order() * b.g.order() <= ctx.product_cap();
  };
  auto tasks = per_pair(ctx, true, keep, [&ctx](const Member &a, const Member &b,
                                                CheckResult &r) {
    std::array<Group, 2> factors{a.g, b.g};
    ProductWitness w = direct_product(factors, ctx.limits());
    Decomposition dp = decompose(w.product, ctx.limits());
    std::string name = a.name + " x " + b.name;

    std::array<Subgroup, 2> socles{a.d.socle, b.d.socle};
    expect(r, dp.socle == w.product_of(socles), name + ": socle is not the product of socles");

    SupportSet joint = a.d.support;
    joint.insert(b.d.support.begin(), b.d.support.end());
    expect(r, dp.support == joint, name + ": support is not the union of supports");
    for (const Certificate &s : joint) {
      std::array<Subgroup, 2> parts{component_or_trivial(a.d, s), component_or_trivial(b.d, s)};
      expect(r, component_or_trivial(dp, s) == w.product_of(parts),
             name + ": component is not the product of components");
    }
  });
  return run_tasks("prop2", "products", tasks, ctx.options.jobs);
}

// -------------------------------------------------------------- theorem

std::vector<SubgroupFamily> bijective_families(const Member &m, const Limits &limits) {
  std::vector<SubgroupFamily> out;
  out.push_back(family_of(m.g, {Subgroup::whole(m.g)}));
  auto nt = m.nontrivial_normal();
  std::size_t n = nt.size(), order = m.g.order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (nt[i].order() * nt[j].order() != order ||
          !intersection(nt[i], nt[j]).is_trivial())
        continue;
      SubgroupFamily fam = family_of(m.g, {nt[i], nt[j]});
      if (sdr_report(fam, limits).bijective)
        out.push_back(std::move(fam));
    }
  if (n > 40)
    return out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        if (nt[i].order() * nt[j].order() * nt[k].order() != order)
          continue;
        SubgroupFamily fam = family_of(m.g, {nt[i], nt[j], nt[k]});
        if (sdr_report(fam, limits).bijective)
          out.push_back(std::move(fam));
      }
  return out;
}

CheckResult check_summands(const Context &ctx) {
  auto tasks = per_member(ctx, [&ctx](const Member &m, CheckResult &r) {
    const Limits &lim = ctx.limits();
    for (const SubgroupFamily &h : bijective_families(m, lim)) {
      std::vector<Embedding> emb;
      std::vector<Decomposition> dec;
      SupportSet joint;
      for (const Subgroup &x : h) {
        emb.push_back(as_group(x));
        dec.push_back(decompose(emb.back().group, lim));
        joint.insert(dec.back().support.begin(), dec.back().support.end());
      }
      std::vector<Subgroup> socles;
      for (std::size_t i = 0; i < emb.size(); ++i)
        socles.push_back(emb[i].lift(dec[i].socle));
      expect(r, sdr_report(m.d.socle, family_of(m.g, socles), lim).bijective,
             m.name + ": socles of summands do not decompose the socle");

      SupportSet classes = joint;
      classes.insert(m.d.support.begin(), m.d.support.end());
      for (const Certificate &s : classes) {
        std::vector<Subgroup> parts;
        for (std::size_t i = 0; i < emb.size(); ++i)
          parts.push_back(emb[i].lift(component_or_trivial(dec[i], s)));
        expect(r, sdr_report(component_or_trivial(m.d, s), family_of(m.g, parts), lim).bijective,
               m.name + ": components of summands do not decompose the component");
      }
      expect(r, joint == m.d.support, m.name + ": support is not the union over summands");
    }
  });
  return run_tasks("theorem", "summands", tasks, ctx.options.jobs);
}

CheckResult check_socle_of_socle(const Context &ctx) {
  auto tasks = per_member(ctx, [&ctx](const Member &m, CheckResult &r) {
    Embedding e = as_group(m.d.socle);
    Decomposition ds = decompose(e.group, ctx.limits());
    expect(r, ds.socle.is_whole(), m.name + ": socle is not semisimple");
    expect(r, ds.support == m.d.support, m.name + ": socle has a different support");
    for (const Certificate &s : m.d.support)
      expect(r, e.lift(component_or_trivial(ds, s)) == component_or_trivial(m.d, s),
             m.name + ": component of the socle differs");
  });
  return run_tasks("theorem", "socle-components", tasks, ctx.options.jobs);
}

std::vector<Task> semisimple_pairs(const Context &ctx,
                                   std::function<void(const PhiCensus &, const std::string &,
                                                      CheckResult &)> fn) {
  auto keep = [&ctx](const Member &a, const Member &b) {
    return a.semisimple() && b.semisimple() && a.g.order() <= ctx.limits().hom;
  };
  return per_pair(ctx, false, keep, [&ctx, fn](const Member &a, const Member &b,
                                               CheckResult &r) {
    fn(phi_census(a.g, b.g, ctx.limits()), pair_name(a, b), r);
  });
}

CheckResult check_phi(const Context &ctx) {
  auto tasks = semisimple_pairs(ctx, [](const PhiCensus &c, const std::string &name,
                                        CheckResult &r) {
    expect(r, c.vectors == c.normal_homs, name + ": normal hom count differs from vector count");
    expect(r, c.forward_round_trips == c.normal_homs, name + ": phi then inverse is not identity");
    expect(r, c.backward_round_trips == c.vectors, name + ": inverse then phi is not identity");
  });
  return run_tasks("theorem", "phi-bijection", tasks, ctx.options.jobs);
}

CheckResult check_component_morphisms(const Context &ctx) {
  auto tasks = semisimple_pairs(ctx, [](const PhiCensus &c, const std::string &name,
                                        CheckResult &r) {
    expect(r, c.normal_components == c.components_checked,
           name + ": a component of a normal morphism is not normal");
  });
  return run_tasks("theorem", "component-morphisms", tasks, ctx.options.jobs);
}

// --------------------------------------------------------------- sie-ns

CheckResult check_sie(const Context &ctx) {
  auto tasks = per_member(ctx, [&ctx](const Member &m, CheckResult &r) {
    const Limits &lim = ctx.limits();
    auto nt = m.nontrivial_normal();
    std::vector<std::vector<Subgroup>> families;
    for (std::size_t i = 0; i < nt.size(); ++i) {
      families.push_back({nt[i]});
      for (std::size_t j = i + 1; j < nt.size(); ++j)
        if (intersection(nt[i], nt[j]).is_trivial())
          families.push_back({nt[i], nt[j]});
    }
    for (const auto &h : families) {
      if (!sdr_report(family_of(m.g, h), lim).injective)
        continue;
      std::vector<std::vector<Subgroup>> inside(h.size());
      for (std::size_t i = 0; i < h.size(); ++i)
        for (const Subgroup &k : m.all)
          if (k.is_contained_in(h[i]))
            inside[i].push_back(k);
      std::size_t combos = 1;
      for (const auto &v : inside)
        combos *= v.size();
      for (std::size_t c = 0; c < std::min<std::size_t>(combos, 400); ++c) {
        std::vector<Subgroup> k;
        std::size_t rest = c;
        for (const auto &v : inside) {
          k.push_back(v[rest % v.size()]);
          rest /= v.size();
        }
        bool surjective = sdr_report(family_of(m.g, k), lim).surjective;
        expect(r, !surjective || k == h,
               m.name + ": smaller family inside an injective one is surjective");
      }
    }
  });
  return run_tasks("sie-ns", "sie", tasks, ctx.options.jobs);
}

CheckResult check_ns(const Context &ctx) {
  auto tasks = per_member(ctx, [&ctx](const Member &m, CheckResult &r) {
    for (const Subgroup &f : m.normal) {
      if (f.is_trivial() || f.is_whole() || !find_supplementary(f, ctx.limits()))
        continue;
      Embedding e = as_group(f);
      for (const Subgroup &k : m.all)
        if (k.is_contained_in(f) && is_normal(e.restrict(k)))
          expect(r, is_normal(k),
                 m.name + ": normal subgroup of a direct summand is not normal");
    }
  });
  return run_tasks("sie-ns", "ns", tasks, ctx.options.jobs);
}

// ---------------------------------------------------------------- lemma

CheckResult check_normal_joins(const Context &ctx) {
  auto tasks = per_member(ctx, [&ctx](const Member &m, CheckResult &r) {
    auto nt = m.nontrivial_normal();
    std::vector<std::vector<Subgroup>> families;
    for (std::size_t i = 0; i < nt.size(); ++i)
      for (std::size_t j = i + 1; j < nt.size(); ++j)
        families.push_back({nt[i], nt[j]});
    if (nt.size() >= 3) {
      auto rng = rng_for(ctx, name_salt(m.name));
      std::uniform_int_distribution<std::size_t> pick(0, nt.size() - 1);
      for (int t = 0; t < 200; ++t)
        families.push_back({nt[pick(rng)], nt[pick(rng)], nt[pick(rng)]});
    }
    for (auto h : families) {
      Subgroup j = join_normal(family_of(m.g, h));
      expect(r, is_normal(j), m.name + ": join of normal subgroups is not normal");
      expect(r, j == join(family_of(m.g, h)), m.name + ": product differs from join");
      std::reverse(h.begin(), h.end());
      expect(r, join_normal(family_of(m.g, h)) == j,
             m.name + ": product of normal subgroups depends on the order");
    }
  });
  return run_tasks("lemma", "normal-joins", tasks, ctx.options.jobs);
}

CheckResult check_quotient_closure(const Context &ctx) {
  auto tasks = per_member(ctx, [&ctx](const Member &m, CheckResult &r) {
    if (!m.semisimple())
      return;
    for (const Subgroup &n : m.normal) {
      expect(r, socle(quotient(n).group, ctx.limits()).is_whole(),
             m.name + ": quotient of a semisimple group is not semisimple");
      expect(r, socle(as_group(n).group, ctx.limits()).is_whole(),
             m.name + ": normal subgroup of a semisimple group is not semisimple");
    }
  });
  return run_tasks("lemma", "quotient-closure", tasks, ctx.options.jobs);
}

// ---------------------------------------------------------- equivalence

bool independent(const SubgroupFamily &fam) {
  for (std::size_t i = 0; i < fam.size(); ++i) {
    SubgroupFamily others(fam.parent());
    for (std::size_t j = 0; j < fam.size(); ++j)
      if (j != i)
        others.push_back(fam[j]);
    if (!intersection(fam[i], join(others)).is_trivial())
      return false;
  }
  return true;
}

CheckResult check_mi_theta(const Context &ctx) {
  auto tasks = per_member(ctx, [&ctx](const Member &m, CheckResult &r) {
    std::vector<Subgroup> nt;
    for (const Subgroup &h : m.all)
      if (!h.is_trivial())
        nt.push_back(h);
    std::vector<std::vector<Subgroup>> families;
    for (std::size_t i = 0; i < nt.size(); ++i)
      for (std::size_t j = i + 1; j < nt.size(); ++j)
        families.push_back({nt[i], nt[j]});
    if (nt.size() >= 3) {
      auto rng = rng_for(ctx, name_salt(m.name) + 1);
      std::uniform_int_distribution<std::size_t> pick(0, nt.size() - 1);
      for (int t = 0; t < 300; ++t)
        families.push_back({nt[pick(rng)], nt[pick(rng)], nt[pick(rng)]});
    }
    for (const auto &h : families) {
      SubgroupFamily fam = family_of(m.g, h);
      if (!check_cc(fam))
        continue;
      try {
        SdrReport rep = sdr_report(fam, ctx.limits());
        expect(r, rep.injective == independent(fam),
               m.name + ": injectivity of theta differs from independence");
      } catch (const CapExceeded &) {
        ++r.skipped;
      }
    }
  });
  return run_tasks("equivalence", "mi-theta", tasks, ctx.options.jobs);
}

CheckResult check_criteria(const Context &ctx) {
  auto tasks = per_member(ctx, [&ctx](const Member &m, CheckResult &r) {
    SemisimplicityEvidence e = is_semisimple(m.g, ctx.limits());
    expect(r, e.consistent(), m.name + ": semisimplicity criteria disagree");
    expect(r, e.semisimple() == m.semisimple(), m.name + ": verdict differs from the socle");
  });
  return run_tasks("equivalence", "criteria", tasks, ctx.options.jobs);
}

// ---------------------------------------------------------------- prop1

void greedy_instances(const Context &ctx, const std::string &name, const Group &g,
                      CheckResult &r) {
  const Limits &lim = ctx.limits();
  SubgroupFamily normal = enumerate_normal_omega_subgroups(g, lim);
  SubgroupFamily sz = simple_normal_subgroups(g, lim);
  auto rng = rng_for(ctx, name_salt(name) + 2);

  for (const Subgroup &f : normal) {
    SubgroupFamily all(g, sz.entries());
    all.push_back(f);
    if (!join(all).is_whole())
      continue;
    std::vector<std::vector<Subgroup>> orders{sz.entries()};
    for (int t = 0; t < 4 && sz.size() > 1; ++t) {
      auto shuffled = sz.entries();
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      orders.push_back(std::move(shuffled));
    }
    for (const auto &h : orders) {
      SubgroupFamily fam(g, h);
      auto picked = greedy_refine(f, fam, lim);
      bool ascending = std::adjacent_find(picked.begin(), picked.end(),
                                          std::greater_equal<>()) == picked.end();
      SubgroupFamily result(g, {f});
      for (std::size_t i : picked)
        result.push_back(h[i]);
      expect(r, ascending && sdr_report(result, lim).bijective,
             name + ": greedy refinement is not a direct decomposition");
    }
  }
}

CheckResult check_greedy(const Context &ctx) {
  std::vector<Task> tasks = per_member(ctx, [&ctx](const Member &m, CheckResult &r) {
    greedy_instances(ctx, m.name, m.g, r);
  });
  auto keep = [&ctx](const Member &a, const Member &b) {
    return a.g.order() * b.g.order() <= ctx.product_cap() && a.g.order() > 1 &&
           b.g.order() > 1;
  };
  auto products = per_pair(ctx, true, keep, [&ctx](const Member &a, const Member &b,
                                                   CheckResult &r) {
    std::array<Group, 2> factors{a.g, b.g};
    greedy_instances(ctx, a.name + " x " + b.name,
                     direct_product(factors, ctx.limits()).product, r);
  });
  tasks.insert(tasks.end(), products.begin(), products.end());
  return run_tasks("prop1", "greedy", tasks, ctx.options.jobs);
}

// ------------------------------------------------------------ morphisms

std::vector<const OmegaMorphism *> normal_only(const HomSet &hs) {
  std::vector<const OmegaMorphism *> out;
  for (std::size_t i = 0; i < hs.size(); ++i)
    if (hs.normal[i])
      out.push_back(&hs.morphisms[i]);
  return out;
}

CheckResult check_composition(const Context &ctx) {
  auto keep = [&ctx](const Member &a, const Member &b) {
    return a.g.order() <= ctx.limits().hom && b.g.order() <= ctx.limits().hom;
  };
  auto tasks = per_pair(ctx, false, keep, [&ctx](const Member &a, const Member &b,
                                                 CheckResult &r) {
    HomSet ab = enumerate_homs(a.g, b.g, ctx.limits());
    HomSet ba = enumerate_homs(b.g, a.g, ctx.limits());
    auto f = normal_only(ab), g = normal_only(ba);
    if (f.empty() || g.empty())
      return;
    auto rng = rng_for(ctx, name_salt(pair_name(a, b)));
    std::size_t total = f.size() * g.size();
    std::uniform_int_distribution<std::size_t> pick(0, total - 1);
    for (std::size_t t = 0; t < std::min<std::size_t>(total, 200); ++t) {
      std::size_t k = total <= 200 ? t : pick(rng);
      OmegaMorphism c = compose(*g[k / f.size()], *f[k % f.size()]);
      expect(r, is_normal_morphism(c, a.normal),
             pair_name(a, b) + ": composite of normal morphisms is not normal");
    }
  });
  return run_tasks("morphisms", "composition", tasks, ctx.options.jobs);
}

CheckResult check_summand_images(const Context &ctx) {
  auto keep = [&ctx](const Member &a, const Member &) {
    return a.g.order() <= ctx.limits().hom;
  };
  auto tasks = per_pair(ctx, false, keep, [&ctx](const Member &a, const Member &b,
                                                 CheckResult &r) {
    HomSet hs = enumerate_homs(a.g, b.g, ctx.limits());
    std::map<std::vector<Element>, bool> summand;
    for (std::size_t i = 0; i < hs.size(); ++i) {
      Subgroup im = image(hs.morphisms[i]);
      auto [it, fresh] = summand.emplace(im.elements(), false);
      if (fresh)
        it->second = is_normal(im) && find_supplementary(im, ctx.limits()).has_value();
      if (it->second)
        expect(r, hs.normal[i],
               pair_name(a, b) + ": morphism onto a direct summand is not normal");
    }
  });
  return run_tasks("morphisms", "summand-images", tasks, ctx.options.jobs);
}

// ------------------------------------------------------- counterexample

CheckResult check_reproduction(const Context &ctx) {
  std::vector<Task> tasks{[&ctx](CheckResult &r) {
    CounterexampleReport rep = reproduce_counterexample(ctx.limits());
    expect(r, rep.socle_order == 3 && rep.socle_is_alternating,
           "socle of the symmetric group is not the alternating subgroup");
    expect(r, rep.product_socle_order == 9 && rep.product_socle_is_square,
           "socle of the square is not the square of the socle");
    expect(r, rep.diagonal_simple_normal_in_socle,
           "diagonal is not simple normal in the socle");
    expect(r, !rep.diagonal_normal_in_product, "diagonal is normal in the square");
  }};
  return run_tasks("counterexample", "reproduction", tasks, ctx.options.jobs);
}

CheckResult check_diagonals(const Context &ctx) {
  auto tasks = per_member(ctx, [&ctx](const Member &m, CheckResult &r) {
    Limits lim = ctx.limits();
    lim.construction = std::max(lim.construction, m.g.order() * m.g.order());
    std::array<Group, 2> factors{m.g, m.g};
    ProductWitness w = direct_product(factors, lim);
    ElementSet center = centralizer(m.g, ElementSet::full(m.g.order())).members;
    for (const Subgroup &a : m.all) {
      ElementSet diag(w.product.order());
      for (Element x : a.elements()) {
        std::array<Element, 2> t{x, x};
        diag.insert(w.index_of(t));
      }
      Subgroup d(w.product, diag);
      expect(r, is_normal(d) == a.members().is_subset_of(center),
             m.name + ": diagonal normality differs from centrality");
    }
  });
  return run_tasks("counterexample", "diagonals", tasks, ctx.options.jobs);
}

using Check = CheckResult (*)(const Context &);

const std::vector<std::pair<std::string, std::vector<Check>>> &registry() {
  static const std::vector<std::pair<std::string, std::vector<Check>>> r{
    {"prop2", {check_components_independent, check_socle_decomposes, check_normal_images,
               check_products}},
    {"theorem", {check_summands, check_socle_of_socle, check_phi, check_component_morphisms}},
    {"sie-ns", {check_sie, check_ns}},
    {"lemma", {check_normal_joins, check_quotient_closure}},
    {"equivalence", {check_mi_theta, check_criteria}},
    {"prop1", {check_greedy}},
    {"morphisms", {check_composition, check_summand_images}},
    {"counterexample", {check_reproduction, check_diagonals}},
  };
  return r;
}

} // namespace

const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto &[name, checks] : registry())
      out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<CheckResult> run_suite(const std::string &name,
                                   const std::vector<CorpusEntry> &corpus,
                                   const SuiteOptions &options) {
  const auto &reg = registry();
  bool all = name == "all";
  if (!all && std::none_of(reg.begin(), reg.end(), [&](const auto &e) { return e.first == name; }))
    throw PreconditionError("unknown suite '" + name + "'");

  Context ctx = prepare(corpus, options);
  std::vector<CheckResult> out;
  CheckResult members{.suite = "corpus", .check = "members", .failures = {}};
  members.checks = ctx.members.size();
  members.skipped = ctx.excluded.size();
  out.push_back(std::move(members));
  for (const auto &[suite, checks] : reg)
    if (all || suite == name)
      for (Check c : checks)
        out.push_back(c(ctx));
  return out;
}

CounterexampleReport reproduce_counterexample(const Limits &limits) {
  Limits lim = limits;
  lim.lattice = std::max<std::size_t>(lim.lattice, 36);
  lim.construction = std::max<std::size_t>(lim.construction, 36);

  Group s3 = build_named(NamedKind::symmetric, 3, lim);
  Decomposition d = decompose(s3, lim);
  Subgroup whole = Subgroup::whole(s3);
  Subgroup derived = commutator_subgroup(whole, whole);

  CounterexampleReport rep;
  rep.socle_order = d.socle.order();
  rep.socle_is_alternating = d.socle == derived && derived.order() == 3;

  std::array<Group, 2> factors{s3, s3};
  ProductWitness w = direct_product(factors, lim);
  Decomposition dp = decompose(w.product, lim);
  std::array<Subgroup, 2> squares{derived, derived};
  rep.product_socle_order = dp.socle.order();
  rep.product_socle_is_square = dp.socle == w.product_of(squares);
  rep.product_socle = dp.socle.elements();

  ElementSet diag(w.product.order());
  for (Element x : derived.elements()) {
    std::array<Element, 2> t{x, x};
    diag.insert(w.index_of(t));
  }
  Subgroup delta(w.product, diag);
  rep.diagonal = delta.elements();
  rep.diagonal_normal_in_product = is_normal(delta);
  if (delta.is_contained_in(dp.socle)) {
    Subgroup inside = as_group(dp.socle).restrict(delta);
    rep.diagonal_simple_normal_in_socle = is_normal(inside) && is_simple(inside);
  }
  return rep;
}

} // namespace ogroup::frontend
