#include "oracles.hpp"
#include "partcat/partition.hpp"

#include <gtest/gtest.h>

using namespace partcat;

namespace {

Partition W(const char* w) { return Partition::fromWord(w); }

Partition fromOracle(const oracle::TwoRow& t) { return Partition(t.upper, t.lower, t.labels); }

}  // namespace

TEST(Partition, BellMatchesTriangle) {
  const auto ref = oracle::bellTriangle(24);
  for (std::size_t n = 0; n <= 24; ++n) EXPECT_EQ(bell(n), ref[n]) << n;
}

TEST(Partition, EnumerationMatchesInsertionOracle) {
  for (std::size_t l = 0; l <= 8; ++l) {
    std::vector<std::string> got;
    for (auto& p : enumerate(l)) got.push_back(p.word());
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
    EXPECT_EQ(got, oracle::allWords(l)) << "length " << l;
  }
  EXPECT_EQ(enumerate(10).size(), oracle::bellTriangle(10)[10]);
  EXPECT_THROW(enumerate(13), CapacityError);
}

TEST(Partition, RankUnrankRoundTrip) {
  for (std::size_t l = 0; l <= 8; ++l) {
    auto all = enumerate(l);
    for (std::size_t i = 0; i < all.size(); ++i) {
      ASSERT_EQ(rank(all[i]), i);
      ASSERT_EQ(unrank(l, i), all[i]);
    }
  }
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    std::uniform_int_distribution<std::uint64_t> pick(0, bell(kRankCap) - 1);
    const auto r = pick(rng);
    EXPECT_EQ(rank(unrank(kRankCap, r)), r);
  }
}

TEST(Partition, CanonicalUnderRelabeling) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    auto two = oracle::randomTwoRow(2, 4, rng);
    std::vector<int> shifted;
    for (int x : two.labels) shifted.push_back(37 - 3 * x);
    EXPECT_EQ(Partition(2, 4, two.labels), Partition(2, 4, shifted));
    EXPECT_EQ(Partition(0, 6, two.labels).word(), oracle::canonicalWord(two.labels));
  }
}

TEST(Partition, MalformedInput) {
  EXPECT_THROW(Partition::fromWord("aB"), MalformedPartition);
  EXPECT_THROW(Partition::fromWord("a1"), MalformedPartition);
  EXPECT_EQ(Partition::fromWord("zzy").word(), "aab");
}

TEST(Partition, WordOperationGoldens) {
  EXPECT_EQ(ops::contract(W("abcadbc")).first.word(), W("cadac").word());
  EXPECT_FALSE(ops::contract(W("abcadbc")).second);
  auto [c, loop] = ops::contract(W("aabcdc"));
  EXPECT_EQ(c, W("bcdc"));
  EXPECT_TRUE(loop);
  EXPECT_EQ(ops::rotate(W("abcdebcc")), W("cabcdebc"));
  EXPECT_EQ(ops::reflect(W("abcdebcc")), W("ccbedcba"));
  EXPECT_EQ(ops::tensor(W("aaabaac"), W("abcdebcc")), W("aaabaacdefgheff"));
}

TEST(Partition, JoinedSingletonsCloseALoop) {
  // the merged block has no surviving point, a middle-only component
  auto [q, loop] = ops::contract(W("ab"));
  EXPECT_EQ(q.length(), 0u);
  EXPECT_TRUE(loop);
  auto [r, loop2] = ops::contract(W("abac"));
  EXPECT_EQ(r, W("ab"));
  EXPECT_FALSE(loop2);
}

TEST(Partition, CrossingMatchesFourPointScan) {
  for (std::size_t l = 0; l <= 7; ++l)
    for (auto& p : enumerate(l)) ASSERT_EQ(p.isNonCrossing(), !oracle::crosses(p.word())) << p.word();
  EXPECT_FALSE(W("abab").isNonCrossing());
  EXPECT_TRUE(W("abba").isNonCrossing());
  auto cp = W("abcacb").crossingPairs();
  EXPECT_EQ(cp, (std::vector<std::pair<int, int>>{{0, 1}, {0, 2}}));
  EXPECT_THROW(W("aab").crossingPairs(), std::domain_error);
}

TEST(Partition, ClassPredicatesMatchOracles) {
  for (std::size_t l = 0; l <= 7; ++l)
    for (auto& p : enumerate(l)) {
      ASSERT_EQ(p.isPairing(), oracle::isPairing(p.word()));
      ASSERT_EQ(p.hasSingleton(), oracle::hasSingleton(p.word()));
    }
}

TEST(Partition, DihedralRelations) {
  for (std::size_t l = 1; l <= 6; ++l)
    for (auto& p : enumerate(l)) {
      ASSERT_EQ(ops::rotate(p, static_cast<long>(l)), p);
      ASSERT_EQ(ops::rotate(ops::rotate(p, 2), -2), p);
      ASSERT_EQ(ops::reflect(ops::reflect(p)), p);
      ASSERT_EQ(ops::reflect(ops::rotate(p)), ops::rotate(ops::reflect(p), -1));
    }
}

TEST(Partition, ReflectionIdentitiesExhaustive) {
  for (std::size_t l = 3; l <= 5; ++l)
    for (auto& p : enumerate(l)) {
      // (Pi p)* = Pi R^2 p*: R^2 brings the reversed first two points to the front
      auto lhs = ops::reflect(ops::contract(p).first);
      auto rhs = ops::contract(ops::rotate(ops::reflect(p), 2)).first;
      ASSERT_EQ(lhs, rhs) << p.word();
      ASSERT_EQ(ops::contract(p).second, ops::contract(ops::rotate(ops::reflect(p), 2)).second);
    }
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b)
      for (auto& p : enumerate(a))
        for (auto& q : enumerate(b)) ASSERT_EQ(ops::reflect(ops::tensor(p, q)), ops::tensor(ops::reflect(q), ops::reflect(p)));
}

TEST(Partition, ContractAtIsConjugatedContraction) {
  for (std::size_t l = 2; l <= 6; ++l)
    for (auto& p : enumerate(l))
      for (std::size_t pos = 0; pos + 1 < l; ++pos) {
        auto direct = ops::contractAt(p, pos);
        auto viaR = ops::contract(ops::rotate(p, -static_cast<long>(pos)));
        ASSERT_EQ(direct.first, pos ? ops::rotate(viaR.first, static_cast<long>(pos)) : viaR.first) << p.word() << " @" << pos;
        ASSERT_EQ(direct.second, viaR.second);
      }
}

TEST(Partition, ComposeMatchesUnionFindOracle) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 500; ++t) {
    std::uniform_int_distribution<std::size_t> n(0, 3);
    std::size_t k = n(rng), m = n(rng), l = n(rng);
    auto p = oracle::randomTwoRow(k, m, rng), q = oracle::randomTwoRow(m, l, rng);
    auto ref = oracle::compose(q, p);
    auto [r, loops] = ops::compose(fromOracle(q), fromOracle(p));
    ASSERT_EQ(r, fromOracle(ref.result));
    ASSERT_EQ(loops, ref.loops);
  }
}

TEST(Partition, ComposeAssociatesAndInvolutionReverses) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 300; ++t) {
    std::uniform_int_distribution<std::size_t> n(0, 2);
    std::size_t a = n(rng), b = n(rng), c = n(rng), d = n(rng);
    auto p = fromOracle(oracle::randomTwoRow(a, b, rng));
    auto q = fromOracle(oracle::randomTwoRow(b, c, rng));
    auto r = fromOracle(oracle::randomTwoRow(c, d, rng));
    auto [rq, l1] = ops::compose(r, q);
    auto [left, l2] = ops::compose(rq, p);
    auto [qp, l3] = ops::compose(q, p);
    auto [right, l4] = ops::compose(r, qp);
    ASSERT_EQ(left, right);
    ASSERT_EQ(l1 + l2, l3 + l4);
    auto [inv, li] = ops::compose(ops::involution(p), ops::involution(q));
    ASSERT_EQ(inv, ops::involution(qp));
    ASSERT_EQ(li, l3);
  }
}

TEST(Partition, IdentityIsNeutral) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    auto p = fromOracle(oracle::randomTwoRow(2, 3, rng));
    EXPECT_EQ(ops::compose(Partition::identity(3), p).first, p);
    EXPECT_EQ(ops::compose(p, Partition::identity(2)).first, p);
  }
}

TEST(Partition, OneLineConversionsInvert) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    std::uniform_int_distribution<std::size_t> n(0, 4);
    std::size_t k = n(rng), l = n(rng);
    auto p = fromOracle(oracle::randomTwoRow(k, l, rng));
    EXPECT_EQ(ops::fromOneLine(ops::toOneLine(p), k), p);
    if (k) {
      EXPECT_EQ(ops::leftRotateInverse(ops::leftRotate(p)), p);
    }
    if (l) {
      EXPECT_EQ(ops::rightRotateInverse(ops::rightRotate(p)), p);
    }
  }
  EXPECT_EQ(ops::toOneLine(Partition::fromTwoRow("ab|ba")), W("baba"));
}

TEST(Partition, TensorHasEmptyUnitAndAssociates) {
  for (std::size_t l = 0; l <= 3; ++l)
    for (auto& p : enumerate(l)) {
      EXPECT_EQ(ops::tensor(p, Partition::empty()), p);
      EXPECT_EQ(ops::tensor(Partition::empty(), p), p);
      for (auto& q : enumerate(2))
        EXPECT_EQ(ops::tensor(ops::tensor(p, q), W("aba")), ops::tensor(p, ops::tensor(q, W("aba"))));
    }
}
