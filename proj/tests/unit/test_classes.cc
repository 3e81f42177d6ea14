#include <gtest/gtest.h>

#include <deque>

#include "mspg/classes.h"
#include "mspg/constructors.h"
#include "mspg/error.h"
#include "mspg/harness.h"
#include "mspg/number_theory.h"
#include "mspg/structure.h"
#include "oracles.h"
#include "test_util.h"

using mspg::ClassEvaluator;
using mspg::ClassId;
using mspg::ClassTag;
using mspg::NodeId;
using mspg::SubgroupLattice;

namespace {

/// h reaches g through a chain of subgroups with prime indices, searched
/// over explicit element sets.
bool oracle_p_subnormal(std::vector<oracle::Set> const &subs, oracle::Set const &h,
                        oracle::Set const &g) {
  std::set<oracle::Set> seen{h};
  std::deque<oracle::Set> queue{h};
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    if (x == g)
      return true;
    for (auto const &y : subs) {
      if (y.size() > x.size() && mspg::is_prime(y.size() / x.size()) &&
          y.size() % x.size() == 0 && oracle::subset(x, y) && seen.insert(y).second)
        queue.push_back(y);
    }
  }
  return false;
}

struct OracleClasses {
  bool u, wu, vu;
};

OracleClasses oracle_classes(mspg::Group const &grp) {
  auto g = oracle::elements(grp);
  auto subs = oracle::all_subgroups(g);
  OracleClasses out{oracle::is_supersoluble(g), true, true};
  for (auto const &s : subs) {
    auto n = s.size();
    bool prime_power = n == 1 || mspg::is_prime_power(n);
    if (!prime_power)
      continue;
    bool sylow = n > 1 && mspg::p_part(g.size(), mspg::prime_divisors(n)[0]) == n;
    bool cyclic = std::any_of(s.begin(), s.end(),
                              [&](auto const &x) { return oracle::element_order(x) == n; });
    bool reach = oracle_p_subnormal(subs, s, g);
    if (sylow && !reach)
      out.wu = false;
    if (cyclic && !reach)
      out.vu = false;
  }
  return out;
}

}  // namespace

TEST(Classes, Names) {
  for (auto c : {mspg::kClassU, mspg::kClassWU, mspg::kClassVU, mspg::kClassD,
                 mspg::kClassSoluble, mspg::kClassNilpotent, ClassId{ClassTag::kMetanilpotent},
                 ClassId{ClassTag::kPClosed, 3}, ClassId{ClassTag::kPNilpotent, 2}}) {
    auto parsed = ClassId::parse(c.name());
    ASSERT_TRUE(parsed) << c.name();
    EXPECT_EQ(*parsed, c);
  }
  EXPECT_EQ(mspg::kClassWU.name(), "wU");
  EXPECT_FALSE(ClassId::parse("p-closed:4"));
  EXPECT_FALSE(ClassId::parse("X"));
}

TEST(Classes, SupersolubleExamples) {
  EXPECT_TRUE(mspg::is_supersoluble(mspg::symmetric(3)));
  EXPECT_FALSE(mspg::is_supersoluble(mspg::alternating(4)));
  EXPECT_TRUE(mspg::is_supersoluble(mspg::cyclic(30)));
  EXPECT_FALSE(mspg::is_supersoluble(mspg::symmetric(4)));
  EXPECT_TRUE(mspg::is_supersoluble(mspg::cyclic_semidirect(7, 6, 3).group));
}

TEST(Classes, PClosedPNilpotent) {
  auto s3 = mspg::symmetric(3);
  EXPECT_TRUE(mspg::is_p_closed(s3, 3));
  EXPECT_FALSE(mspg::is_p_closed(s3, 2));
  EXPECT_TRUE(mspg::is_p_nilpotent(s3, 2));
  EXPECT_FALSE(mspg::is_p_nilpotent(s3, 3));
  EXPECT_TRUE(mspg::is_p_closed(s3, 5));
  EXPECT_TRUE(mspg::is_p_nilpotent(s3, 5));
  EXPECT_THROW(mspg::is_p_closed(s3, 6), mspg::PreconditionError);
}

TEST(Classes, PSubnormal) {
  SubgroupLattice s3(mspg::symmetric(3));
  auto c2 = testutil::node(s3, {"(1 2)"});
  auto r = mspg::is_P_subnormal(s3, s3.top(), c2);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.chain.front(), c2);
  EXPECT_EQ(r.chain.back(), s3.top());
  EXPECT_TRUE(mspg::is_P_subnormal(s3, s3.top(), s3.top()).holds);

  SubgroupLattice a4(mspg::alternating(4));
  EXPECT_FALSE(mspg::is_P_subnormal(a4, a4.top(), testutil::node(a4, {"(1 2 3)"})).holds);
}

TEST(Classes, WideAndVeryWideExamples) {
  EXPECT_TRUE(mspg::is_wU(mspg::symmetric(3)));
  EXPECT_TRUE(mspg::is_vU(mspg::symmetric(3)));
  EXPECT_FALSE(mspg::is_wU(mspg::alternating(4)));
  EXPECT_FALSE(mspg::is_wU(mspg::symmetric(4)));
  EXPECT_FALSE(mspg::is_vU(mspg::alternating(4)));
}

TEST(Classes, AuxiliaryPredicates) {
  EXPECT_TRUE(mspg::is_metanilpotent(mspg::symmetric(3)));
  EXPECT_FALSE(mspg::is_metanilpotent(mspg::symmetric(4)));
  EXPECT_TRUE(mspg::is_biprimary(mspg::symmetric(4)));
  EXPECT_FALSE(mspg::is_biprimary(mspg::cyclic(30)));
  EXPECT_TRUE(mspg::is_primary_cyclic(mspg::cyclic(8)));
  EXPECT_FALSE(mspg::is_primary_cyclic(mspg::cyclic(6)));
  EXPECT_FALSE(mspg::is_primary_cyclic(mspg::elementary_abelian(2, 2)));
}

TEST(Classes, Membership) {
  EXPECT_TRUE(mspg::in_class(mspg::symmetric(3), mspg::kClassU));
  EXPECT_FALSE(mspg::in_class(mspg::alternating(5), mspg::kClassSoluble));
  for (auto c : {mspg::kClassU, mspg::kClassWU, mspg::kClassVU, mspg::kClassD,
                 mspg::kClassSoluble, mspg::kClassNilpotent, ClassId{ClassTag::kMetanilpotent},
                 ClassId{ClassTag::kPClosed, 2}, ClassId{ClassTag::kPNilpotent, 3}})
    EXPECT_TRUE(mspg::in_class(mspg::cyclic(1), c)) << c.name();
}

TEST(Classes, CharacterizationExamples) {
  EXPECT_TRUE(mspg::wU_characterization(mspg::symmetric(3)).metanilpotent_variant());
  EXPECT_TRUE(mspg::wU_characterization(mspg::symmetric(3)).biprimary_variant());
  EXPECT_FALSE(mspg::wU_characterization(mspg::alternating(4)).tower);
  EXPECT_TRUE(mspg::vU_characterization(mspg::symmetric(3)));
  EXPECT_FALSE(mspg::vU_characterization(mspg::alternating(4)));
}

TEST(Classes, MatchOracleDefinitions) {
  for (auto const &e : mspg::standard_catalog(24)) {
    auto o = oracle_classes(e.group);
    EXPECT_EQ(mspg::is_supersoluble(e.group), o.u) << e.name;
    EXPECT_EQ(mspg::is_wU(e.group), o.wu) << e.name;
    EXPECT_EQ(mspg::is_vU(e.group), o.vu) << e.name;
  }
}

TEST(Classes, InclusionChainAndCharacterizations) {
  for (auto const &e : mspg::standard_catalog(60)) {
    SubgroupLattice lat(e.group);
    ClassEvaluator ev(lat);
    for (NodeId h = 0; h < lat.size(); ++h) {
      bool u = ev.is_supersoluble(h), w = ev.is_wU(h), v = ev.is_vU(h), d = ev.has_tower(h);
      EXPECT_TRUE(!u || w) << e.name << " node " << h;
      EXPECT_TRUE(!w || v) << e.name << " node " << h;
      EXPECT_TRUE(!v || d) << e.name << " node " << h;
      EXPECT_TRUE(!d || ev.is_soluble(h)) << e.name << " node " << h;
      EXPECT_TRUE(!ev.is_nilpotent(h) || u) << e.name << " node " << h;
    }
    auto g = lat.top();
    auto wc = ev.wU_characterization(g);
    EXPECT_EQ(ev.is_wU(g), wc.metanilpotent_variant()) << e.name;
    EXPECT_EQ(ev.is_wU(g), wc.biprimary_variant()) << e.name;
    EXPECT_EQ(ev.is_wU(g), ev.is_wU_one_per_prime(g)) << e.name;
    EXPECT_EQ(ev.is_vU(g), ev.vU_characterization(g)) << e.name;
  }
}

TEST(Classes, SubgroupAndQuotientClosure) {
  for (auto const &e : mspg::standard_catalog(48)) {
    mspg::GroupContext ctx(e.name, e.group);
    auto const &lat = ctx.lattice();
    for (auto f : {mspg::kClassU, mspg::kClassWU, mspg::kClassVU}) {
      if (!ctx.classes().in_class(ctx.top(), f))
        continue;
      for (NodeId h = 0; h < lat.size(); ++h)
        EXPECT_TRUE(ctx.classes().in_class(h, f)) << e.name << " " << f.name();
      for (auto n : ctx.normal_subgroups())
        EXPECT_TRUE(ctx.quotient_in_class(n, f)) << e.name << " " << f.name();
    }
  }
}

TEST(Classes, PClosedMatchesNormalSylow) {
  for (auto const &e : mspg::standard_catalog(40)) {
    SubgroupLattice lat(e.group);
    ClassEvaluator ev(lat);
    for (auto p : mspg::prime_divisors(e.group.order())) {
      auto sylows = mspg::sylow_nodes(lat, lat.top(), p);
      EXPECT_EQ(ev.is_p_closed(lat.top(), p), sylows.size() == 1) << e.name;
      // p-nilpotent: a normal subgroup of index |G|_p exists
      bool found = false;
      for (auto n : mspg::normal_subgroups(lat, lat.top()))
        found = found || lat.order(n) * mspg::p_part(e.group.order(), p) == e.group.order();
      EXPECT_EQ(ev.is_p_nilpotent(lat.top(), p), found) << e.name;
    }
  }
}
