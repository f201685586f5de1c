#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "ogroup/errors.hpp"
#include "ogroup/subgroup.hpp"
#include "oracles.hpp"

using namespace ogroup;
using namespace fixture;

namespace {

std::vector<std::size_t> orders(const SubgroupFamily &f) {
  std::vector<std::size_t> out;
  for (const Subgroup &h : f)
    out.push_back(h.order());
  return out;
}

std::vector<std::vector<Element>> member_lists(const SubgroupFamily &f) {
  std::vector<std::vector<Element>> out;
  for (const Subgroup &h : f)
    out.push_back(h.elements());
  return out;
}

} // namespace

TEST(Subgroup, SymmetricThree) {
  Group s = sym(3);
  auto all = enumerate_omega_subgroups(s);
  EXPECT_EQ(all.size(), 6u);
  auto normal = enumerate_normal_omega_subgroups(s);
  EXPECT_EQ(orders(normal), (std::vector<std::size_t>{1, 3, 6}));
  auto sz = simple_normal_subgroups(s);
  ASSERT_EQ(sz.size(), 1u);
  EXPECT_EQ(sz[0].elements(), (std::vector<Element>{0, 3, 4}));
}

TEST(Subgroup, AlternatingFour) {
  Group a = alt(4);
  EXPECT_EQ(orders(enumerate_normal_omega_subgroups(a)),
            (std::vector<std::size_t>{1, 4, 12}));
  // V4 is minimal normal but not simple.
  EXPECT_TRUE(simple_normal_subgroups(a).empty());
  EXPECT_FALSE(is_simple(a));
}

TEST(Subgroup, OperatorsShrinkTheLattice) {
  Group v = with_operator(klein4(), {"rot", {0, 2, 3, 1}});
  EXPECT_EQ(enumerate_omega_subgroups(v).size(), 2u);
  EXPECT_TRUE(is_simple(v));
  EXPECT_EQ(enumerate_omega_subgroups(klein4()).size(), 5u);
  Group z = with_operator(cyclic(3), {"z", {0, 0, 0}});
  EXPECT_TRUE(is_simple(z));
}

TEST(Subgroup, EnumerationMatchesSubsetOracle) {
  auto groups = small_groups();
  auto extra = operator_groups();
  groups.insert(groups.end(), extra.begin(), extra.end());
  for (const Group &g : groups) {
    auto expected = oracle::subgroups(g);
    std::vector<std::vector<Element>> want;
    for (const auto &s : expected)
      want.push_back(oracle::members(s));
    auto got = member_lists(enumerate_omega_subgroups(g));
    std::sort(want.begin(), want.end());
    auto sorted = got;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, want) << g.name();

    std::vector<std::vector<Element>> want_normal;
    for (const auto &s : expected)
      if (oracle::normal(g, s))
        want_normal.push_back(oracle::members(s));
    auto got_normal = member_lists(enumerate_normal_omega_subgroups(g));
    std::sort(want_normal.begin(), want_normal.end());
    std::sort(got_normal.begin(), got_normal.end());
    EXPECT_EQ(got_normal, want_normal) << g.name();

    for (std::size_t i = 1; i < got.size(); ++i)
      EXPECT_TRUE(got[i - 1].size() < got[i].size() ||
                  (got[i - 1].size() == got[i].size() && got[i - 1] < got[i]));
  }
}

TEST(Subgroup, LatticeCap) {
  Limits small;
  small.lattice = 8;
  EXPECT_THROW(enumerate_omega_subgroups(cyclic(9), small), CapExceeded);
  EXPECT_NO_THROW(enumerate_omega_subgroups(cyclic(8), small));
}

TEST(Subgroup, ClosuresAndCentralizers) {
  Group s = sym(3);
  EXPECT_EQ(generated_subgroup(s, std::vector<Element>{1}).order(), 2u);
  EXPECT_TRUE(normal_closure(s, std::vector<Element>{1}).is_whole());
  EXPECT_EQ(normal_closure(s, std::vector<Element>{3}).order(), 3u);

  Centralizer c = centralizer(s, ElementSet::of(6, {3}));
  EXPECT_EQ(c.members.elements(), (std::vector<Element>{0, 3, 4}));
  EXPECT_TRUE(c.operator_closed);

  Subgroup whole = Subgroup::whole(s);
  EXPECT_EQ(commutator_subgroup(whole, whole).order(), 3u);
  EXPECT_TRUE(commutator_subgroup(Subgroup::whole(cyclic(6)),
                                  Subgroup::whole(cyclic(6))).is_trivial());
}

TEST(Subgroup, CentralizerMayFailOperatorClosure) {
  Group g = with_inner_operators(sym(3));
  Centralizer c = centralizer(g, ElementSet::of(6, {1}));
  EXPECT_EQ(c.members.elements(), (std::vector<Element>{0, 1}));
  EXPECT_FALSE(c.operator_closed);
  EXPECT_THROW(c.subgroup(g), PreconditionError);
  Group v = with_operator(klein4(), {"swap", {0, 2, 1, 3}});
  EXPECT_TRUE(centralizer(v, ElementSet::of(4, {1})).operator_closed);
}

TEST(Subgroup, ValidatesMasks) {
  Group s = sym(3);
  EXPECT_THROW(Subgroup(s, ElementSet::of(6, {0, 1, 2})), PreconditionError);
  EXPECT_THROW(Subgroup(s, ElementSet::of(6, {1})), PreconditionError);
  Group v = with_operator(klein4(), {"rot", {0, 2, 3, 1}});
  EXPECT_THROW(Subgroup(v, ElementSet::of(4, {0, 1})), PreconditionError);
}

TEST(Subgroup, JoinNormalIsSetwiseProduct) {
  Group g = product({sym(3), cyclic(2)});
  auto normal = enumerate_normal_omega_subgroups(g);
  for (const Subgroup &a : normal)
    for (const Subgroup &b : normal) {
      SubgroupFamily fam(g, {a, b});
      Subgroup j = join_normal(fam);
      EXPECT_TRUE(is_normal(j));
      EXPECT_EQ(j.members(), setwise_product(g, a.members(), b.members()));
    }
  SubgroupFamily bad(g, {generated_subgroup(g, std::vector<Element>{2})});
  EXPECT_THROW(join_normal(bad), PreconditionError);
  EXPECT_TRUE(join_normal(SubgroupFamily(g)).is_trivial());
}

TEST(Subgroup, EmbeddingRoundTrip) {
  Group g = dihedral(4);
  Subgroup h = generated_subgroup(g, std::vector<Element>{1});
  Embedding e = as_group(h);
  EXPECT_EQ(e.group.order(), 4u);
  EXPECT_TRUE(e.inclusion.is_injective());
  EXPECT_EQ(image(e.inclusion), h);
  Subgroup inner = generated_subgroup(g, std::vector<Element>{2});
  EXPECT_EQ(e.lift(e.restrict(inner)), inner);
}

TEST(Subgroup, ImagesKernelsPreimages) {
  Group c6 = cyclic(6), c3 = cyclic(3);
  OmegaMorphism f(c6, c3, {0, 1, 2, 0, 1, 2});
  EXPECT_EQ(kernel(f).elements(), (std::vector<Element>{0, 3}));
  EXPECT_TRUE(image(f).is_whole());
  EXPECT_EQ(preimage(f, Subgroup::trivial(c3)), kernel(f));
}
