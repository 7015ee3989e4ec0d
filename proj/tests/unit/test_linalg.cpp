#include "oracles.hpp"
#include "partcat/linalg.hpp"
#include "partcat/text.hpp"

#include <gtest/gtest.h>

using namespace partcat;

namespace {

using V = LinComb<Rational>;

V randomVec(std::size_t l, std::mt19937_64& rng, int terms = 4) {
  std::uniform_int_distribution<std::uint64_t> pick(0, bell(l) - 1);
  std::uniform_int_distribution<long> coef(-3, 3);
  std::vector<V::Term> t;
  for (int i = 0; i < terms; ++i) t.emplace_back(static_cast<std::uint32_t>(pick(rng)), Rational(coef(rng)));
  return V::fromTerms(0, l, t);
}

std::size_t oracleRank(const std::vector<V>& vs, std::size_t l) {
  std::vector<std::vector<Rational>> rows;
  for (auto& v : vs) {
    std::vector<Rational> r(bell(l), Rational(0));
    for (auto& [idx, c] : v.terms()) r[idx] = c;
    rows.push_back(r);
  }
  return oracle::gaussRank(
      rows, bell(l), [](const Rational& x) { return x.is_zero(); },
      [](const Rational& a, const Rational& b) { return a / b; },
      [](const Rational& x, const Rational& f, const Rational& y) { return x - f * y; });
}

}  // namespace

TEST(LinComb, VectorSpaceLaws) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    V a = randomVec(4, rng), b = randomVec(4, rng), c = randomVec(4, rng);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_TRUE((a - a).is_zero());
    ASSERT_EQ(Rational(2) * a, a + a);
    ASSERT_TRUE((Rational(0) * a).is_zero());
    for (auto& term : (a + b).terms()) ASSERT_FALSE(term.second.is_zero());
  }
}

TEST(LinComb, ShapesMustAgree) {
  V a = V::basis(Partition::fromWord("ab")), b = V::basis(Partition::fromWord("abc"));
  EXPECT_THROW(a + b, ShapeMismatch);
  EXPECT_THROW(a.coefficientOf(Partition::fromWord("abc")), ShapeMismatch);
  EXPECT_EQ(a.coefficientOf(Partition::fromWord("ab")), Rational(1));
  EXPECT_EQ(a.coefficientOf(Partition::fromWord("aa")), Rational(0));
}

TEST(LinComb, PrintsHighestRankFirst) {
  auto v = parseLinComb("abab - 2*aaaa + d*abcd");
  EXPECT_EQ(v.str(), "d*abcd + 1*abab - 2*aaaa");
  EXPECT_EQ(LinComb<Coeff>(0, 3).str(), "0");
}

TEST(ModuleBasis, RowEchelonInvariants) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    ModuleBasis<Rational> m(5);
    std::vector<V> inserted;
    for (int i = 0; i < 12; ++i) {
      V v = randomVec(5, rng, 3);
      const std::size_t before = oracleRank(inserted, 5);
      inserted.push_back(v);
      ASSERT_EQ(m.insert(v), oracleRank(inserted, 5) > before);
    }
    ASSERT_EQ(m.dimension(), oracleRank(inserted, 5));
    for (auto& v : inserted) ASSERT_TRUE(m.contains(v));
    const auto& piv = m.pivots();
    ASSERT_TRUE(std::is_sorted(piv.begin(), piv.end()));
    for (std::size_t r = 0; r < m.rows().size(); ++r) {
      ASSERT_EQ(m.rows()[r].terms().front().first, piv[r]);
      ASSERT_EQ(m.rows()[r].terms().front().second, Rational(1));
      for (std::size_t o = 0; o < m.rows().size(); ++o)
        if (o != r) {
          ASSERT_TRUE(m.rows()[o].coefficientAt(piv[r]).is_zero());
        }
    }
  }
}

TEST(ModuleBasis, ReduceIsIdempotentAndLinear) {
  std::mt19937_64 rng(3);
  ModuleBasis<Rational> m(4);
  for (int i = 0; i < 5; ++i) m.insert(randomVec(4, rng));
  for (int t = 0; t < 100; ++t) {
    V a = randomVec(4, rng), b = randomVec(4, rng);
    ASSERT_EQ(m.reduce(m.reduce(a)), m.reduce(a));
    ASSERT_EQ(m.reduce(a + b), m.reduce(a) + m.reduce(b));
    ASSERT_TRUE(m.contains(a - m.reduce(a)));
  }
}

TEST(ModuleBasis, FullSpaceAndPlainSpans) {
  auto m = ModuleBasis<Rational>::ofPartitions(0, 3, {0, 1, 2, 3, 4});
  EXPECT_TRUE(m.full());
  EXPECT_TRUE(m.reduce(V::basis(Partition::fromWord("abc"))).is_zero());
  auto s = ModuleBasis<Rational>::ofPartitions(0, 3, {4, 0, 4});
  EXPECT_EQ(s.dimension(), 2u);
}

TEST(ModuleBasis, SymbolicCoefficients) {
  ModuleBasis<Coeff> m(2);
  const Coeff d = Coeff::delta();
  m.insert(parseLinComb("d*aa + ab"));
  EXPECT_TRUE(m.contains(parseLinComb("aa + 1/d*ab")));
  EXPECT_FALSE(m.contains(parseLinComb("aa + ab")));
  EXPECT_EQ(m.rows().front().coefficientOf(Partition::fromWord("ab")), Coeff(1) / d);
}

TEST(Conversions, SpecializeAndToRational) {
  auto v = parseLinComb("d^2*aaa - d*abb + 2*abc");
  Specialization s;
  s.bindings[vars::kDelta] = 3;
  auto r = toRational(specialize(v, s));
  EXPECT_EQ(r.coefficientOf(Partition::fromWord("aaa")), Rational(9));
  EXPECT_EQ(r.coefficientOf(Partition::fromWord("abb")), Rational(-3));
  EXPECT_THROW(toRational(v), std::domain_error);
  EXPECT_EQ(toCoeff(r), specialize(v, s));
}
