#include <gtest/gtest.h>

#include <random>

#include "garside/simple_braid.hpp"
#include "oracles.hpp"

using namespace garside;

namespace {

SimpleBraid w(int n, std::vector<int> letters) { return simple_from_word(StrandCount(n), letters); }

SimpleBraid from_perm(const oracle::Perm& p) {
  std::vector<int> images(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) images[i] = p[i] + 1;
  return SimpleBraid::from_images(images);
}

}  // namespace

TEST(SimpleFromWord, HalfTwist) {
  const SimpleBraid d = w(3, {1, 2, 1});
  EXPECT_EQ(d, SimpleBraid::delta(StrandCount(3)));
  EXPECT_EQ(d.images(), (std::vector<int>{3, 2, 1}));
}

TEST(SimpleFromWord, RejectsDoubleCrossing) {
  EXPECT_THROW(w(3, {1, 1}), NotReduced);
  EXPECT_THROW(w(4, {1, 2, 1, 2}), NotReduced);
}

TEST(SimpleFromWord, LettersComposeLeftToRight) {
  EXPECT_EQ(w(3, {1, 2}).images(), (std::vector<int>{3, 1, 2}));
}

TEST(SimpleFromWord, LetterOutOfRange) {
  EXPECT_THROW(w(3, {3}), LetterOutOfRange);
  EXPECT_THROW(w(3, {0}), LetterOutOfRange);
}

TEST(FromImages, RejectsNonBijection) {
  const std::vector<int> bad{1, 1, 2};
  EXPECT_THROW(SimpleBraid::from_images(bad), std::invalid_argument);
}

TEST(BoundarySets, Examples) {
  const auto d = boundary_sets(SimpleBraid::delta(StrandCount(3)));
  EXPECT_EQ(d.starting, (IndexSet{1, 2}));
  EXPECT_EQ(d.finishing, (IndexSet{1, 2}));
  const auto e = boundary_sets(SimpleBraid::identity(StrandCount(3)));
  EXPECT_TRUE(e.starting.empty());
  EXPECT_TRUE(e.finishing.empty());
  const auto s = boundary_sets(w(3, {1, 2}));
  EXPECT_EQ(s.starting, IndexSet{1});
  EXPECT_EQ(s.finishing, IndexSet{2});
}

TEST(Meet, Examples) {
  EXPECT_TRUE(meet(w(3, {1}), w(3, {2})).is_identity());
  EXPECT_EQ(meet(w(4, {1, 2}), w(4, {1, 3})), w(4, {1}));
  for (const auto& x : all_simples(StrandCount(4))) {
    EXPECT_EQ(meet(SimpleBraid::delta(StrandCount(4)), x), x);
  }
}

TEST(Join, Examples) {
  EXPECT_EQ(join(w(3, {1}), w(3, {2})), SimpleBraid::delta(StrandCount(3)));
  EXPECT_EQ(join(w(3, {1}), w(3, {1, 2})), w(3, {1, 2}));
  const SimpleBraid x = w(5, {2, 3, 1});
  EXPECT_EQ(join(x, x), x);
}

TEST(Complement, Examples) {
  const StrandCount n(3);
  EXPECT_EQ(right_complement(SimpleBraid::identity(n)), SimpleBraid::delta(n));
  EXPECT_TRUE(right_complement(SimpleBraid::delta(n)).is_identity());
  EXPECT_EQ(right_complement(w(3, {1})), w(3, {2, 1}));
  EXPECT_EQ(tau(w(3, {1})), w(3, {2}));
}

TEST(LeftWeightPair, Examples) {
  auto p = left_weight_pair(w(3, {1}), w(3, {1}));
  EXPECT_EQ(p.first, w(3, {1}));
  EXPECT_EQ(p.second, w(3, {1}));
  p = left_weight_pair(w(3, {1}), w(3, {2}));
  EXPECT_EQ(p.first, w(3, {1, 2}));
  EXPECT_TRUE(p.second.is_identity());
  p = left_weight_pair(w(3, {2, 1}), w(3, {1, 2}));
  EXPECT_EQ(p.first, w(3, {2, 1}));
  EXPECT_EQ(p.second, w(3, {1, 2}));
}

class LatticeOracle : public ::testing::TestWithParam<int> {};

TEST_P(LatticeOracle, BoundarySetsMatchDivisibility) {
  const int n = GetParam();
  for (const auto& p : oracle::all_perms(n)) {
    const SimpleBraid s = from_perm(p);
    IndexSet S, F;
    for (int i = 1; i < n; ++i) {
      if (oracle::divides_left(oracle::transposition(n, i), p)) S.insert(i);
      if (oracle::divides_right(oracle::transposition(n, i), p)) F.insert(i);
    }
    EXPECT_EQ(s.starting_set(), S);
    EXPECT_EQ(s.finishing_set(), F);
  }
}

TEST_P(LatticeOracle, MeetJoinPrefixAgreeWithExhaustiveSearch) {
  const int n = GetParam();
  const auto perms = oracle::all_perms(n);
  for (const auto& a : perms) {
    const SimpleBraid sa = from_perm(a);
    for (const auto& b : perms) {
      const SimpleBraid sb = from_perm(b);
      ASSERT_EQ(is_prefix(sa, sb), oracle::divides_left(a, b));
      ASSERT_EQ(is_suffix(sa, sb), oracle::divides_right(a, b));
      ASSERT_EQ(meet(sa, sb), from_perm(oracle::brute_meet(a, b, perms)));
      ASSERT_EQ(join(sa, sb), from_perm(oracle::brute_join(a, b, perms)));
    }
  }
}

TEST_P(LatticeOracle, LatticeLaws) {
  const auto all = all_simples(StrandCount(GetParam()));
  for (const auto& a : all) {
    EXPECT_EQ(meet(a, a), a);
    EXPECT_EQ(join(a, a), a);
    for (const auto& b : all) {
      const SimpleBraid m = meet(a, b), j = join(a, b);
      ASSERT_EQ(m, meet(b, a));
      ASSERT_EQ(j, join(b, a));
      ASSERT_EQ(meet(a, join(a, b)), a);
      ASSERT_EQ(join(a, meet(a, b)), a);
      ASSERT_EQ(is_prefix(a, b), m == a);
      ASSERT_EQ(is_prefix(a, b), j == b);
    }
  }
}

TEST_P(LatticeOracle, Associativity) {
  const auto all = all_simples(StrandCount(GetParam()));
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int t = 0; t < 3000; ++t) {
    const auto& a = all[pick(rng)];
    const auto& b = all[pick(rng)];
    const auto& c = all[pick(rng)];
    ASSERT_EQ(meet(meet(a, b), c), meet(a, meet(b, c)));
    ASSERT_EQ(join(join(a, b), c), join(a, join(b, c)));
  }
}

TEST_P(LatticeOracle, ComplementsAndTau) {
  const StrandCount n(GetParam());
  const SimpleBraid d = SimpleBraid::delta(n);
  const auto all = all_simples(n);
  for (const auto& s : all) {
    EXPECT_EQ(right_complement(right_complement(s)), tau(s));
    EXPECT_EQ(simple_product(s, right_complement(s)), d);
    EXPECT_EQ(simple_product(left_complement(s), s), d);
    EXPECT_EQ(tau(tau(s)), s);
    EXPECT_EQ(s.length(), oracle::inversions(oracle::perm_of(s)));
    EXPECT_EQ(simple_from_word(n, s.word()), s);
    EXPECT_EQ(static_cast<int>(s.word().size()), s.length());
  }
  for (const auto& a : all) {
    for (const auto& b : all) {
      ASSERT_EQ(tau(meet(a, b)), meet(tau(a), tau(b)));
      ASSERT_EQ(tau(join(a, b)), join(tau(a), tau(b)));
    }
  }
}

TEST_P(LatticeOracle, LeftWeightPairPreservesProductAndIsIdempotent) {
  const StrandCount n(GetParam());
  const auto all = all_simples(n);
  for (const auto& u : all) {
    for (const auto& v : all) {
      const auto p = left_weight_pair(u, v);
      ASSERT_EQ(oracle::compose(oracle::perm_of(p.first), oracle::perm_of(p.second)),
                oracle::compose(oracle::perm_of(u), oracle::perm_of(v)));
      ASSERT_EQ(p.first.length() + p.second.length(), u.length() + v.length());
      ASSERT_TRUE(p.first.finishing_set().includes(p.second.starting_set()));
      ASSERT_TRUE(is_left_weighted(p.first, p.second));
      const auto q = left_weight_pair(p.first, p.second);
      ASSERT_EQ(q.first, p.first);
      ASSERT_EQ(q.second, p.second);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallGroups, LatticeOracle, ::testing::Values(3, 4, 5));

TEST(SimpleBraid, LargeStrandCounts) {
  const StrandCount n(kMaxStrands);
  const SimpleBraid d = SimpleBraid::delta(n);
  EXPECT_EQ(d.length(), kMaxStrands * (kMaxStrands - 1) / 2);
  const SimpleBraid s = SimpleBraid::generator(n, 7);
  EXPECT_EQ(meet(d, s), s);
  EXPECT_EQ(join(s, SimpleBraid::generator(n, 20)).length(), 2);
  EXPECT_THROW(require_strands(kMaxStrands + 1), std::invalid_argument);
  EXPECT_THROW(require_strands(1), std::invalid_argument);
}
