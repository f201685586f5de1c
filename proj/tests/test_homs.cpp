#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "ogroup/errors.hpp"
#include "ogroup/homs.hpp"
#include "oracles.hpp"

using namespace ogroup;
using namespace fixture;

namespace {

std::vector<std::vector<Element>> maps(const HomSet &h) {
  std::vector<std::vector<Element>> out;
  for (const auto &m : h.morphisms)
    out.push_back(m.map());
  return out;
}

} // namespace

TEST(Homs, SymmetricThreeEndomorphisms) {
  HomSet h = enumerate_homs(sym(3), sym(3));
  EXPECT_EQ(h.size(), 10u);
  EXPECT_EQ(h.normal_count(), 7u);
}

TEST(Homs, CyclicSix) {
  HomSet h = enumerate_homs(cyclic(6), cyclic(6));
  EXPECT_EQ(h.size(), 6u);
  EXPECT_EQ(h.normal_count(), 6u);
  EXPECT_EQ(enumerate_homs(Group(), sym(3)).size(), 1u);
}

TEST(Homs, AgreesWithAllMapsOracle) {
  auto gs = small_groups();
  auto ops = operator_groups();
  gs.insert(gs.end(), ops.begin(), ops.end());
  for (const Group &a : gs) {
    if (a.order() > 8)
      continue;
    for (const Group &b : gs) {
      if (a.labels() != b.labels())
        continue;
      auto want = oracle::homs(a, b);
      std::sort(want.begin(), want.end());
      EXPECT_EQ(maps(enumerate_homs(a, b)), want) << a.name() << " -> " << b.name();
    }
  }
}

TEST(Homs, CapAndLabels) {
  Limits small;
  small.hom = 5;
  EXPECT_THROW(enumerate_homs(cyclic(6), cyclic(2), small), CapExceeded);
  EXPECT_THROW(enumerate_homs(with_operator(cyclic(3), {"z", {0, 0, 0}}), cyclic(3)),
               PreconditionError);
}

TEST(NormalMorphism, Examples) {
  Group s = sym(3);
  Subgroup a3 = generated_subgroup(s, std::vector<Element>{3});
  Subgroup c2 = generated_subgroup(s, std::vector<Element>{1});
  EXPECT_TRUE(is_normal_morphism(as_group(a3).inclusion));
  EXPECT_FALSE(is_normal_morphism(as_group(c2).inclusion));
  OmegaMorphism sign(s, cyclic(2), {0, 1, 1, 0, 0, 1});
  EXPECT_TRUE(is_normal_morphism(sign));
}

TEST(Components, OfCyclicSixEndomorphisms) {
  Group c6 = cyclic(6);
  Certificate two = certificate(cyclic(2)), three = certificate(cyclic(3));
  OmegaMorphism id = OmegaMorphism::identity(c6);
  OmegaMorphism id2 = component_of_morphism(id, two);
  EXPECT_EQ(id2, OmegaMorphism::identity(id2.source()));

  OmegaMorphism cube(c6, c6, {0, 3, 0, 3, 0, 3});
  OmegaMorphism c3 = component_of_morphism(cube, three);
  EXPECT_EQ(c3, OmegaMorphism::null(c3.source(), c3.target()));

  HomSet all = enumerate_homs(c6, c6);
  for (const auto &f : all.morphisms)
    for (const auto &g : all.morphisms)
      EXPECT_EQ(component_of_morphism(compose(g, f), two),
                compose(component_of_morphism(g, two), component_of_morphism(f, two)));

  Group s = sym(3);
  OmegaMorphism proj(s, s, {0, 1, 1, 0, 0, 1});
  EXPECT_THROW(component_of_morphism(proj, two), PreconditionError);
}

TEST(Phi, RoundTripsOnCyclicSix) {
  Group c6 = cyclic(6);
  HomSet all = enumerate_homs(c6, c6);
  for (const auto &f : all.morphisms) {
    ComponentVector v = phi(f);
    EXPECT_EQ(v.entries.size(), 2u);
    EXPECT_EQ(phi_inverse(c6, c6, v), f);
  }
  ComponentVector ids;
  for (const auto &[s, h] : decompose(c6).components) {
    Group comp = as_group(h).group;
    ids.entries.emplace(s, OmegaMorphism::identity(comp));
  }
  EXPECT_EQ(phi_inverse(c6, c6, ids), OmegaMorphism::identity(c6));
}

TEST(Phi, CyclicSixToTwo) {
  Group c6 = cyclic(6), c2 = cyclic(2);
  HomSet all = enumerate_homs(c6, c2);
  EXPECT_EQ(all.normal_count(), 2u);
  for (const auto &f : all.morphisms) {
    ComponentVector v = phi(f);
    ASSERT_EQ(v.entries.size(), 1u);
    EXPECT_EQ(v.entries.begin()->first, certificate(c2));
    EXPECT_EQ(phi_inverse(c6, c2, v), f);
  }
}

TEST(Phi, RejectsNonSemisimple) {
  Group c4 = cyclic(4);
  EXPECT_THROW(phi(OmegaMorphism::identity(c4)), PreconditionError);
  EXPECT_THROW(phi_inverse(c4, c4, {}), PreconditionError);
  Group c6 = cyclic(6);
  EXPECT_THROW(phi_inverse(c6, c6, {}), PreconditionError);
}

namespace {

// Normal morphisms counted with the subset oracles only.
std::size_t oracle_normal_homs(const Group &a, const Group &b) {
  auto subs = oracle::subgroups(a);
  std::size_t count = 0;
  for (const auto &m : oracle::homs(a, b)) {
    bool ok = true;
    for (const auto &s : subs) {
      if (!oracle::normal(a, s))
        continue;
      std::vector<bool> img(b.order(), false);
      for (Element x = 0; x < a.order(); ++x)
        if (s[x])
          img[m[x]] = true;
      ok = ok && oracle::normal(b, img);
    }
    count += ok;
  }
  return count;
}

} // namespace

TEST(Phi, CensusMatchesOracleCounts) {
  Group c6 = cyclic(6), c2 = cyclic(2);
  EXPECT_EQ(oracle_normal_homs(c6, c6), 6u);
  PhiCensus a = phi_census(c6, c6);
  EXPECT_EQ(a.normal_homs, 6u);
  EXPECT_EQ(a.vectors, 6u);
  EXPECT_TRUE(a.bijective());
  ASSERT_TRUE(a.respects_composition.has_value());
  EXPECT_EQ(a.normal_components, a.components_checked);

  EXPECT_EQ(oracle_normal_homs(c6, c2), 2u);
  PhiCensus b = phi_census(c6, c2);
  EXPECT_EQ(b.normal_homs, 2u);
  EXPECT_EQ(b.vectors, 2u);
  EXPECT_TRUE(b.bijective());
  EXPECT_FALSE(b.respects_composition.has_value());

  Group v = klein4();
  EXPECT_EQ(oracle_normal_homs(v, v), 16u);
  EXPECT_TRUE(phi_census(v, v).bijective());
  EXPECT_EQ(oracle_normal_homs(sym(3), sym(3)), 7u);
}
