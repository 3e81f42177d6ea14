#include <gtest/gtest.h>

#include <algorithm>

#include "mspg/constructors.h"
#include "mspg/error.h"
#include "mspg/number_theory.h"
#include "mspg/structure.h"
#include "oracles.h"
#include "test_util.h"

using mspg::NodeId;
using mspg::SubgroupLattice;
using testutil::node;
using testutil::node_set;

TEST(Structure, CentreExamples) {
  EXPECT_EQ(mspg::center(mspg::quaternion8()).order(), 2u);
  EXPECT_EQ(mspg::center(mspg::dihedral(4)).order(), 2u);
  EXPECT_EQ(mspg::center(mspg::symmetric(3)).order(), 1u);
  EXPECT_EQ(mspg::center(mspg::cyclic_semidirect(5, 4, 2).group).order(), 1u);
}

TEST(Structure, CentreAndCentralizerMatchOracle) {
  for (auto const &e : mspg::standard_catalog(24)) {
    SubgroupLattice lat(e.group);
    auto all = oracle::elements(e.group);
    EXPECT_EQ(node_set(lat, mspg::center(lat, lat.top())), oracle::center(all)) << e.name;
    for (NodeId h = 0; h < lat.size(); h += 3) {
      auto s = node_set(lat, h);
      EXPECT_EQ(node_set(lat, mspg::centralizer(lat, lat.top(), lat.elements(h))),
                oracle::centralizer(all, s))
          << e.name;
      EXPECT_EQ(node_set(lat, mspg::normalizer(lat, lat.top(), h)), oracle::normalizer(all, s))
          << e.name;
      EXPECT_EQ(node_set(lat, mspg::core(lat, lat.top(), h)), oracle::core(all, s)) << e.name;
    }
  }
}

TEST(Structure, CentralizerOfAbelianGroupIsEverything) {
  SubgroupLattice lat(mspg::cyclic(12));
  for (NodeId h = 0; h < lat.size(); ++h)
    EXPECT_EQ(mspg::centralizer(lat, lat.top(), lat.elements(h)), lat.top());
}

TEST(Structure, NormalizerOfNormalSylow) {
  SubgroupLattice lat(mspg::symmetric(3));
  EXPECT_EQ(mspg::normalizer(lat, lat.top(), node(lat, {"(1 2 3)"})), lat.top());
}

TEST(Structure, DerivedSeries) {
  SubgroupLattice s4(mspg::symmetric(4));
  std::vector<std::uint64_t> orders;
  for (auto h : mspg::derived_series(s4, s4.top()))
    orders.push_back(s4.order(h));
  EXPECT_EQ(orders, (std::vector<std::uint64_t>{24, 12, 4, 1}));
  EXPECT_TRUE(mspg::is_soluble(s4, s4.top()));

  SubgroupLattice a5(mspg::alternating(5));
  EXPECT_EQ(mspg::derived_subgroup(a5, a5.top()), a5.top());
  EXPECT_FALSE(mspg::is_soluble(a5, a5.top()));

  SubgroupLattice c6(mspg::cyclic(6));
  EXPECT_EQ(mspg::derived_subgroup(c6, c6.top()), c6.trivial());
}

TEST(Structure, SolubleNilpotentMatchOracle) {
  for (auto const &e : mspg::standard_catalog(60)) {
    if (e.group.order() > 40 && e.name != "A5")
      continue;
    SubgroupLattice lat(e.group);
    auto all = oracle::elements(e.group);
    EXPECT_EQ(mspg::is_soluble(lat, lat.top()), oracle::is_soluble(all)) << e.name;
    EXPECT_EQ(mspg::is_nilpotent(lat, lat.top()), oracle::is_nilpotent(all)) << e.name;
    EXPECT_EQ(mspg::is_abelian(lat, lat.top()), oracle::is_abelian(all)) << e.name;
  }
}

TEST(Structure, FittingAndOp) {
  SubgroupLattice s4(mspg::symmetric(4));
  auto f = mspg::fitting(s4, s4.top());
  EXPECT_EQ(s4.order(f), 4u);
  EXPECT_EQ(f, node(s4, {"(1 2)(3 4)", "(1 3)(2 4)"}));

  SubgroupLattice d8(mspg::dihedral(4));
  EXPECT_EQ(mspg::fitting(d8, d8.top()), d8.top());

  SubgroupLattice s3(mspg::symmetric(3));
  EXPECT_EQ(s3.order(mspg::o_p(s3, s3.top(), 3)), 3u);
  EXPECT_EQ(s3.order(mspg::o_p(s3, s3.top(), 2)), 1u);
}

TEST(Structure, FittingTwoWays) {
  for (auto const &e : mspg::standard_catalog(60)) {
    SubgroupLattice lat(e.group);
    EXPECT_EQ(mspg::fitting(lat, lat.top()), mspg::fitting_by_scan(lat, lat.top())) << e.name;
  }
}

TEST(Structure, Frattini) {
  SubgroupLattice d8(mspg::dihedral(4));
  auto phi = mspg::frattini(d8, d8.top());
  EXPECT_EQ(d8.order(phi), 2u);
  EXPECT_EQ(phi, mspg::center(d8, d8.top()));
  SubgroupLattice s3(mspg::symmetric(3));
  EXPECT_EQ(mspg::frattini(s3, s3.top()), s3.trivial());
  for (auto const &e : mspg::standard_catalog(24)) {
    SubgroupLattice lat(e.group);
    auto all = oracle::elements(e.group);
    std::vector<oracle::Set> subs;
    for (NodeId h = 0; h < lat.size(); ++h)
      subs.push_back(node_set(lat, h));
    EXPECT_EQ(node_set(lat, mspg::frattini(lat, lat.top())), oracle::frattini(all, subs))
        << e.name;
  }
}

TEST(Structure, CoreExamples) {
  SubgroupLattice s3(mspg::symmetric(3));
  EXPECT_EQ(mspg::core(s3, s3.top(), node(s3, {"(1 2)"})), s3.trivial());
  for (auto const &e : mspg::standard_catalog(48)) {
    SubgroupLattice lat(e.group);
    for (NodeId h = 0; h < lat.size(); ++h)
      EXPECT_EQ(mspg::core(lat, lat.top(), h), mspg::core_by_normal_scan(lat, lat.top(), h));
  }
}

TEST(Structure, ChiefSeriesExamples) {
  EXPECT_EQ(mspg::chief_factor_orders(mspg::symmetric(4)),
            (std::vector<std::uint64_t>{4, 3, 2}));
  auto c6 = mspg::chief_factor_orders(mspg::cyclic(6));
  std::sort(c6.begin(), c6.end());
  EXPECT_EQ(c6, (std::vector<std::uint64_t>{2, 3}));
  EXPECT_EQ(mspg::chief_factor_orders(mspg::alternating(5)), (std::vector<std::uint64_t>{60}));
  EXPECT_TRUE(mspg::chief_factor_orders(mspg::cyclic(1)).empty());
}

TEST(Structure, ChiefSeriesProperties) {
  for (auto const &e : mspg::standard_catalog(60)) {
    SubgroupLattice lat(e.group);
    auto cs = mspg::chief_series(lat, lat.top());
    ASSERT_FALSE(cs.terms.empty());
    EXPECT_EQ(cs.terms.front(), lat.trivial());
    EXPECT_EQ(cs.terms.back(), lat.top());
    std::uint64_t product = 1;
    for (std::size_t i = 0; i + 1 < cs.terms.size(); ++i) {
      auto lo = cs.terms[i], hi = cs.terms[i + 1];
      EXPECT_TRUE(lat.is_normal(hi));
      EXPECT_TRUE(lat.contains(hi, lo));
      EXPECT_EQ(cs.factor_orders[i], lat.order(hi) / lat.order(lo));
      product *= cs.factor_orders[i];
      // no normal subgroup of G strictly between consecutive terms
      for (auto n : mspg::normal_subgroups(lat, lat.top())) {
        EXPECT_FALSE(n != lo && n != hi && lat.contains(hi, n) && lat.contains(n, lo)) << e.name;
      }
      // soluble groups have elementary abelian chief factors
      if (mspg::is_soluble(lat, lat.top()))
        EXPECT_TRUE(mspg::is_prime_power(cs.factor_orders[i])) << e.name;
    }
    EXPECT_EQ(product, e.group.order());
  }
}

TEST(Structure, MinimalNormalSubgroups) {
  EXPECT_EQ(mspg::minimal_normal_subgroups(mspg::symmetric(4)).size(), 1u);
  EXPECT_EQ(mspg::minimal_normal_subgroups(mspg::elementary_abelian(2, 2)).size(), 3u);
}

TEST(Structure, LowerCentralSeries) {
  SubgroupLattice d8(mspg::dihedral(4));
  auto lc = mspg::lower_central_series(d8, d8.top());
  EXPECT_EQ(d8.order(lc.back()), 1u);
  SubgroupLattice s3(mspg::symmetric(3));
  EXPECT_EQ(s3.order(mspg::lower_central_series(s3, s3.top()).back()), 3u);
  EXPECT_TRUE(mspg::is_quotient_nilpotent(s3, s3.top(), node(s3, {"(1 2 3)"})));
  EXPECT_FALSE(mspg::is_quotient_nilpotent(s3, s3.top(), s3.trivial()));
}

TEST(Structure, LatticeRelativeParent) {
  SubgroupLattice s4(mspg::symmetric(4));
  auto a4 = node(s4, {"(1 2 3)", "(1 2)(3 4)"});
  EXPECT_EQ(s4.order(a4), 12u);
  EXPECT_EQ(s4.order(mspg::derived_subgroup(s4, a4)), 4u);
  EXPECT_FALSE(mspg::is_nilpotent(s4, a4));
  auto c3 = node(s4, {"(1 2 3)"});
  EXPECT_FALSE(mspg::is_normal(s4, a4, c3));
  EXPECT_THROW(mspg::is_normal(s4, c3, a4), mspg::PreconditionError);
}

TEST(Structure, Primitivity) {
  SubgroupLattice s3(mspg::symmetric(3));
  auto r = mspg::is_primitive(s3, s3.top());
  EXPECT_TRUE(r.primitive);
  ASSERT_TRUE(r.primitivator);
  EXPECT_EQ(s3.order(*r.primitivator), 2u);

  SubgroupLattice c4(mspg::cyclic(4));
  EXPECT_FALSE(mspg::is_primitive(c4, c4.top()).primitive);

  auto f20 = mspg::cyclic_semidirect(5, 4, 2);
  SubgroupLattice lat(f20.group);
  EXPECT_TRUE(mspg::is_primitive(lat, lat.top()).primitive);
  EXPECT_EQ(lat.order(mspg::fitting(lat, lat.top())), 5u);
}

TEST(Structure, PrimitiveSolubleStructure) {
  SubgroupLattice s3(mspg::symmetric(3));
  auto c = mspg::verify_primitive_soluble_structure(s3, s3.top(), node(s3, {"(1 2)"}));
  EXPECT_TRUE(c.all_hold());
  EXPECT_EQ(c.p, 3u);
  EXPECT_EQ(c.n, 1u);

  auto f20 = mspg::cyclic_semidirect(5, 4, 2);
  SubgroupLattice l20(f20.group);
  for (auto m : mspg::primitivators(l20, l20.top())) {
    auto r = mspg::verify_primitive_soluble_structure(l20, l20.top(), m);
    EXPECT_TRUE(r.all_hold());
    EXPECT_EQ(r.p, 5u);
    EXPECT_EQ(r.n, 1u);
  }
  auto f21 = mspg::cyclic_semidirect(7, 3, 2);
  SubgroupLattice l21(f21.group);
  auto prims = mspg::primitivators(l21, l21.top());
  ASSERT_FALSE(prims.empty());
  auto r = mspg::verify_primitive_soluble_structure(l21, l21.top(), prims.front());
  EXPECT_TRUE(r.all_hold());
  EXPECT_EQ(r.p, 7u);

  // precondition fails for a non-primitivator
  auto bad = mspg::verify_primitive_soluble_structure(s3, s3.top(), node(s3, {"(1 2 3)"}));
  EXPECT_FALSE(bad.precondition);
}

TEST(Structure, PrimitiveSolubleStructureOnCatalog) {
  for (auto const &e : mspg::standard_catalog(60)) {
    SubgroupLattice lat(e.group);
    if (!mspg::is_soluble(lat, lat.top()))
      continue;
    for (auto m : mspg::primitivators(lat, lat.top()))
      EXPECT_TRUE(mspg::verify_primitive_soluble_structure(lat, lat.top(), m).all_hold()) << e.name;
  }
}
