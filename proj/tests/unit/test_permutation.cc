#include <gtest/gtest.h>

#include "mspg/error.h"
#include "mspg/permutation.h"
#include "oracles.h"
#include "test_util.h"

using mspg::Permutation;
using testutil::perm;

TEST(Permutation, ParsesThreeCycle) {
  auto p = perm("(1 2 3)", 3);
  EXPECT_EQ(p[0], 1u);
  EXPECT_EQ(p[1], 2u);
  EXPECT_EQ(p[2], 0u);
}

TEST(Permutation, EmptyTextIsIdentity) {
  auto p = perm("", 4);
  EXPECT_TRUE(p.is_identity());
  EXPECT_EQ(p.degree(), 4u);
  EXPECT_TRUE(perm("()", 4).is_identity());
}

TEST(Permutation, NonDisjointCyclesComposeLeftToRight) {
  // apply (1 2) first, then (1 3): 1 -> 2, 2 -> 1 -> 3, 3 -> 1
  auto p = perm("(1 2)(1 3)", 3);
  EXPECT_EQ(mspg::to_cycles(p), "(1 2 3)");
  EXPECT_EQ(p, mspg::compose(perm("(1 2)", 3), perm("(1 3)", 3)));
}

TEST(Permutation, ComposeExamples) {
  auto q = perm("(1 3)(2 4)", 4);
  EXPECT_EQ(mspg::compose(Permutation::identity(4), q), q);
  EXPECT_TRUE(mspg::compose(perm("(1 2)", 2), perm("(1 2)", 2)).is_identity());
  // p first: 1 -> 2 -> 1, 2 -> 3, 3 -> 1 -> 2
  EXPECT_EQ(mspg::to_cycles(mspg::compose(perm("(1 2 3)", 3), perm("(1 2)", 3))), "(2 3)");
}

TEST(Permutation, InverseConjugateCommutator) {
  EXPECT_EQ(mspg::inverse(perm("(1 2 3)", 3)), perm("(1 3 2)", 3));
  EXPECT_EQ(mspg::conjugate(perm("(1 2)", 3), perm("(1 2 3)", 3)), perm("(2 3)", 3));
  EXPECT_TRUE(mspg::commutator(perm("(1 2)", 4), perm("(3 4)", 4)).is_identity());
  EXPECT_TRUE(mspg::commutator(perm("(1 2 3)", 3), perm("(1 3 2)", 3)).is_identity());
}

TEST(Permutation, ConjugationRelabelsCycles) {
  // g^-1 p g sends g(i) to g(p(i))
  auto g = perm("(1 4 2)(3 5)", 5);
  auto p = perm("(1 2 3)", 5);
  EXPECT_EQ(mspg::conjugate(p, g), perm("(4 1 5)", 5));
}

TEST(Permutation, OrderIsLcmOfCycleLengths) {
  EXPECT_EQ(perm("(1 2 3)(4 5)", 5).order(), 6u);
  EXPECT_EQ(perm("", 3).order(), 1u);
  for (auto const &text : {"(1 2 3 4)", "(1 2)(3 4 5 6)", "(1 5 2)(3 6)"}) {
    auto p = perm(text, 6);
    EXPECT_EQ(p.order(), oracle::element_order(p)) << text;
  }
}

TEST(Permutation, ToCyclesIsCanonical) {
  EXPECT_EQ(mspg::to_cycles(perm("(3 1 2)", 3)), "(1 2 3)");
  EXPECT_EQ(mspg::to_cycles(perm("(4 5)(2 3)", 5)), "(2 3)(4 5)");
  EXPECT_EQ(mspg::to_cycles(perm("", 3)), "()");
}

TEST(Permutation, ToCyclesRoundTrips) {
  auto g = oracle::closure(5, {perm("(1 2 3 4 5)", 5), perm("(1 2)", 5)});
  ASSERT_EQ(g.size(), 120u);
  for (auto const &x : g)
    EXPECT_EQ(perm(mspg::to_cycles(x), 5), x);
}

TEST(Permutation, GroupAxiomsOnS4) {
  auto g = oracle::closure(4, {perm("(1 2 3 4)", 4), perm("(1 2)", 4)});
  std::vector<Permutation> xs(g.begin(), g.end());
  for (std::size_t i = 0; i < xs.size(); i += 5) {
    for (std::size_t j = 0; j < xs.size(); j += 3) {
      for (std::size_t k = 0; k < xs.size(); k += 7) {
        EXPECT_EQ((xs[i] * xs[j]) * xs[k], xs[i] * (xs[j] * xs[k]));
      }
    }
    EXPECT_TRUE((xs[i] * mspg::inverse(xs[i])).is_identity());
  }
}

TEST(Permutation, ParseErrors) {
  EXPECT_THROW(perm("(1 2", 3), mspg::ParseError);
  EXPECT_THROW(perm("(1 4)", 3), mspg::ParseError);
  EXPECT_THROW(perm("(1 1)", 3), mspg::ParseError);
  EXPECT_THROW(perm("1 2", 3), mspg::ParseError);
  EXPECT_THROW(perm("(0 1)", 3), mspg::ParseError);
  EXPECT_THROW(perm("(a b)", 3), mspg::ParseError);
}

TEST(Permutation, DegreeMismatch) {
  EXPECT_THROW(mspg::compose(perm("(1 2)", 2), perm("(1 2)", 3)), mspg::DegreeMismatch);
  EXPECT_THROW(mspg::conjugate(perm("(1 2)", 2), perm("(1 2)", 3)), mspg::DegreeMismatch);
}
