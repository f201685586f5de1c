#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ogroup/decomposition.hpp"
#include "ogroup/errors.hpp"

using namespace ogroup;
using namespace fixture;

namespace {

Subgroup gen(const Group &g, std::vector<Element> xs) {
  return generated_subgroup(g, xs);
}

const Limits wide{.lattice = 64};

} // namespace

TEST(Decomposition, CyclicSix) {
  Group c6 = cyclic(6);
  Decomposition d = decompose(c6);
  EXPECT_TRUE(d.socle.is_whole());
  ASSERT_EQ(d.components.size(), 2u);
  EXPECT_EQ(d.components.at(certificate(cyclic(2))), gen(c6, {3}));
  EXPECT_EQ(d.components.at(certificate(cyclic(3))), gen(c6, {2}));
  SdrReport r = sdr_report(d.socle, d.component_family());
  EXPECT_TRUE(r.bijective);
  EXPECT_EQ(d.support, (SupportSet{certificate(cyclic(2)), certificate(cyclic(3))}));
}

TEST(Decomposition, AlternatingFourHasTrivialSocle) {
  Decomposition d = decompose(alt(4));
  EXPECT_TRUE(d.socle.is_trivial());
  EXPECT_TRUE(d.components.empty());
  EXPECT_TRUE(d.support.empty());
  EXPECT_FALSE(is_semisimple(alt(4)).semisimple());
}

TEST(Decomposition, TrivialGroup) {
  Decomposition d = decompose(Group());
  EXPECT_TRUE(d.socle.is_whole());
  EXPECT_TRUE(d.components.empty());
  EXPECT_TRUE(d.support.empty());
  auto e = is_semisimple(Group());
  EXPECT_TRUE(e.semisimple());
  EXPECT_TRUE(e.consistent());
}

TEST(Decomposition, SocleOfSymmetricThree) {
  Group s = sym(3);
  EXPECT_EQ(socle(s), gen(s, {3}));
  Group s2 = product({s, s});
  Subgroup soc = socle(s2, wide);
  EXPECT_EQ(soc.order(), 9u);
  EXPECT_EQ(support(s2, wide), SupportSet{certificate(cyclic(3))});
  EXPECT_EQ(isotypical_component(s2, cyclic(3), wide), soc);
  EXPECT_THROW(isotypical_component(s2, cyclic(4), wide), PreconditionError);
  EXPECT_THROW(socle(s2), CapExceeded);
}

TEST(Decomposition, DiagonalCounterexample) {
  Group s = sym(3);
  ProductWitness w = direct_product(std::vector<Group>{s, s});
  Group g = w.product;
  Subgroup soc = socle(g, wide);
  ElementSet diag(g.order());
  for (Element a : {0u, 3u, 4u})
    diag.insert(w.index_of(std::vector<Element>{a, a}));
  Subgroup delta(g, diag);
  EXPECT_FALSE(is_normal(delta));

  Embedding e = as_group(soc);
  Subgroup inside = e.restrict(delta);
  EXPECT_TRUE(simple_normal_subgroups(e.group).contains(inside));
}

TEST(Decomposition, OperatorsChangeTheSocle) {
  Group v = with_operator(klein4(), {"rot", {0, 2, 3, 1}});
  Decomposition d = decompose(v);
  EXPECT_EQ(d.simple_normal.size(), 1u);
  EXPECT_TRUE(d.simple_normal[0].is_whole());
  ASSERT_EQ(d.components.size(), 1u);
  EXPECT_EQ(d.components.begin()->first.order(), 4u);

  Group inner = with_inner_operators(sym(3));
  EXPECT_EQ(socle(inner).order(), 3u);
}

TEST(Sdr, EmptyFamily) {
  Group g = cyclic(4);
  SdrReport r = sdr_report(SubgroupFamily(g));
  EXPECT_TRUE(r.cc_holds);
  EXPECT_TRUE(r.injective);
  EXPECT_FALSE(r.surjective);
  EXPECT_TRUE(sdr_report(SubgroupFamily(Group())).bijective);
}

TEST(Sdr, NonCommutingFamily) {
  Group s = sym(3);
  SubgroupFamily fam(s, {gen(s, {1}), gen(s, {2})});
  SdrReport r = sdr_report(fam);
  EXPECT_FALSE(r.cc_holds);
  EXPECT_FALSE(r.theta.has_value());
  EXPECT_THROW(theta(fam), PreconditionError);
}

TEST(Sdr, KleinAsTwoFactors) {
  Group v = klein4();
  SubgroupFamily two(v, {gen(v, {1}), gen(v, {2})});
  SdrReport r = sdr_report(two);
  EXPECT_TRUE(r.bijective);
  EXPECT_TRUE(r.mi_holds);

  SubgroupFamily three(v, {gen(v, {1}), gen(v, {2}), gen(v, {3})});
  SdrReport q = sdr_report(three);
  EXPECT_TRUE(q.cc_holds);
  EXPECT_FALSE(q.injective);
  EXPECT_FALSE(q.mi_holds);
  EXPECT_TRUE(q.surjective);
}

TEST(Sdr, ThetaRestrictsToInclusions) {
  Group g = product({cyclic(2), cyclic(3), cyclic(5)});
  SubgroupFamily fam = simple_normal_subgroups(g, wide);
  Theta t = theta(fam);
  EXPECT_TRUE(t.map.is_bijective());
  for (std::size_t i = 0; i < fam.size(); ++i)
    EXPECT_EQ(compose(t.map, t.product.injections[i]), t.members[i].inclusion);
}

TEST(Supplementary, CyclicGroups) {
  Group c6 = cyclic(6);
  auto k = find_supplementary(gen(c6, {2}));
  ASSERT_TRUE(k);
  EXPECT_EQ(*k, gen(c6, {3}));
  Group c4 = cyclic(4);
  EXPECT_FALSE(find_supplementary(gen(c4, {2})));
  EXPECT_TRUE(find_supplementary(Subgroup::whole(c4)));
  EXPECT_THROW(find_supplementary(gen(sym(3), {1})), PreconditionError);
}

TEST(Semisimple, EvidenceIsConsistent) {
  auto gs = small_groups();
  auto ops = operator_groups();
  gs.insert(gs.end(), ops.begin(), ops.end());
  for (const Group &g : gs) {
    auto e = is_semisimple(g);
    EXPECT_TRUE(e.consistent()) << g.name();
  }
  EXPECT_TRUE(is_semisimple(product({cyclic(2), cyclic(2), cyclic(3)})).semisimple());
  EXPECT_FALSE(is_semisimple(cyclic(4)).semisimple());
  EXPECT_FALSE(is_semisimple(sym(3)).semisimple());
}

TEST(Greedy, RefinesKleinCube) {
  Group g = product({cyclic(2), cyclic(2), cyclic(2)});
  SubgroupFamily sz = simple_normal_subgroups(g);
  EXPECT_EQ(sz.size(), 7u);
  Subgroup f = gen(g, {1});
  auto j = greedy_refine(f, sz);
  EXPECT_EQ(j.size(), 2u);
  SubgroupFamily fam(g);
  fam.push_back(f);
  for (auto i : j)
    fam.push_back(sz[i]);
  EXPECT_TRUE(sdr_report(fam).bijective);
}

TEST(Greedy, Preconditions) {
  Group c4 = cyclic(4);
  SubgroupFamily sz = simple_normal_subgroups(c4);
  EXPECT_THROW(greedy_refine(Subgroup::trivial(c4), sz), PreconditionError);
  Group s = sym(3);
  SubgroupFamily bad(s, {gen(s, {1})});
  EXPECT_THROW(greedy_refine(Subgroup::whole(s), bad), PreconditionError);
}
