#include <gtest/gtest.h>

#include "mspg/constructors.h"
#include "mspg/error.h"
#include "mspg/group.h"
#include "oracles.h"
#include "test_util.h"

using mspg::Group;
using testutil::group;
using testutil::perm;

TEST(Group, OrdersFromGenerators) {
  EXPECT_EQ(group(3, {"(1 2)", "(1 2 3)"}).order(), 6u);
  EXPECT_EQ(group(5, {}).order(), 1u);
  EXPECT_EQ(group(4, {"(1 2 3 4)", "(1 3)"}).order(), 8u);
  EXPECT_EQ(mspg::symmetric(4).order(), 24u);
  EXPECT_EQ(Group().order(), 1u);
  EXPECT_EQ(Group().degree(), 1u);
}

TEST(Group, MembershipMatchesParity) {
  auto a4 = mspg::alternating(4);
  EXPECT_FALSE(a4.contains(perm("(1 2)", 4)));
  for (auto const &x : oracle::elements(mspg::symmetric(4)))
    EXPECT_EQ(a4.contains(x), oracle::is_even(x)) << mspg::to_cycles(x);
  EXPECT_FALSE(a4.contains(perm("(1 2 3)", 5)));
}

TEST(Group, ElementsOfTrivialGroup) {
  auto e = Group::trivial(3).elements();
  ASSERT_EQ(e.size(), 1u);
  EXPECT_TRUE(e[0].is_identity());
}

TEST(Group, ElementsAreSortedAndMatchClosure) {
  auto g = mspg::dihedral(6);
  auto e = g.elements();
  EXPECT_TRUE(std::is_sorted(e.begin(), e.end()));
  EXPECT_TRUE(e.front().is_identity());
  auto o = oracle::elements(g);
  EXPECT_EQ(std::vector<mspg::Permutation>(o.begin(), o.end()), e);
}

TEST(Group, ElementCap) {
  EXPECT_THROW((void)mspg::symmetric(6).elements(100), mspg::CapExceeded);
}

TEST(Group, StabilizerChainOrderMatchesClosureOnCatalog) {
  for (auto const &entry : mspg::standard_catalog(60)) {
    auto const &g = entry.group;
    EXPECT_EQ(g.order(), oracle::elements(g).size()) << entry.name;
    std::uint64_t product = 1;
    for (auto s : g.transversal_sizes())
      product *= s;
    EXPECT_EQ(product, g.order()) << entry.name;
  }
}

TEST(Group, StrongGeneratorsGenerateTheGroup) {
  for (auto const &g : {mspg::symmetric(5), mspg::quaternion8(), mspg::dihedral(7)}) {
    EXPECT_TRUE(mspg::same_group(g, Group(g.degree(), g.strong_generators())));
  }
}

TEST(Group, DeterministicChain) {
  auto a = mspg::symmetric(5);
  auto b = mspg::symmetric(5);
  EXPECT_EQ(std::vector(a.base().begin(), a.base().end()),
            std::vector(b.base().begin(), b.base().end()));
  EXPECT_EQ(a.strong_generators(), b.strong_generators());
}

TEST(Group, DegreeMismatchOnConstruction) {
  EXPECT_THROW(Group(3, {perm("(1 2)", 2)}), mspg::DegreeMismatch);
}

TEST(Group, ContainsGroupAndSameGroup) {
  auto s4 = mspg::symmetric(4);
  EXPECT_TRUE(s4.contains_group(mspg::alternating(4)));
  EXPECT_FALSE(mspg::alternating(4).contains_group(s4));
  EXPECT_TRUE(mspg::same_group(group(3, {"(1 2 3)", "(1 2)"}), group(3, {"(1 2)", "(2 3)"})));
  EXPECT_FALSE(mspg::same_group(group(3, {"(1 2 3)"}), group(3, {"(1 2)"})));
}

TEST(Group, GeneratedSubgroup) {
  auto s4 = mspg::symmetric(4);
  auto h = mspg::generated_subgroup(s4, {perm("(1 2)(3 4)", 4), perm("(1 3)(2 4)", 4)});
  EXPECT_EQ(h.order(), 4u);
  EXPECT_THROW(mspg::generated_subgroup(mspg::alternating(4), {perm("(1 2)", 4)}),
               mspg::PreconditionError);
}

TEST(Group, CommutatorSubgroupExamples) {
  auto c6 = mspg::cyclic(6);
  EXPECT_EQ(mspg::commutator_subgroup(c6, c6, c6).order(), 1u);
  auto s3 = mspg::symmetric(3);
  auto d = mspg::commutator_subgroup(s3, s3, s3);
  EXPECT_EQ(d.order(), 3u);
  EXPECT_EQ(d.order(), oracle::derived(oracle::elements(s3)).size());
  auto s4 = mspg::symmetric(4);
  EXPECT_EQ(mspg::commutator_subgroup(s4, group(4, {"(1 2)"}), group(4, {"(3 4)"})).order(), 1u);
}

TEST(Group, CommutatorSubgroupMatchesOracle) {
  for (auto const &g : {mspg::symmetric(4), mspg::alternating(5), mspg::quaternion8(),
                        mspg::cyclic_semidirect(7, 6, 3).group}) {
    EXPECT_EQ(mspg::commutator_subgroup(g, g, g).order(), oracle::derived(oracle::elements(g)).size());
  }
}
