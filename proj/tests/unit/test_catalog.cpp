#include "oracles.hpp"
#include "partcat/catalog.hpp"

#include <gtest/gtest.h>

using namespace partcat;

namespace {

// pairings whose blocks join an odd and an even position
bool halfLib(const std::string& w) {
  if (!oracle::isPairing(w)) return false;
  std::map<char, int> parity;
  for (std::size_t i = 0; i < w.size(); ++i) parity[w[i]] += static_cast<int>(i % 2);
  for (auto& [c, n] : parity)
    if (n != 1) return false;
  return true;
}

bool oracleBelongs(EasyClass c, const std::string& w) {
  switch (c) {
    case EasyClass::All: return true;
    case EasyClass::NonCrossing: return !oracle::crosses(w);
    case EasyClass::NonCrossingEven: return !oracle::crosses(w) && w.size() % 2 == 0;  // even length, any blocks
    case EasyClass::Pairings: return oracle::isPairing(w);
    case EasyClass::NonCrossingPairings: return !oracle::crosses(w) && oracle::isPairing(w);
    case EasyClass::EvenBlocks: return oracle::allEven(w);
    case EasyClass::HalfLibPairings: return halfLib(w);
  }
  return false;
}

std::uint64_t factorial(std::size_t n) { return n ? n * factorial(n - 1) : 1; }

}  // namespace

TEST(Catalog, MembershipMatchesBruteForcePredicates) {
  for (EasyClass c : allClasses())
    for (std::size_t l = 0; l <= 8; ++l) {
      std::uint64_t count = 0;
      for (auto& w : oracle::allWords(l)) {
        const bool in = oracleBelongs(c, w);
        ASSERT_EQ(belongs(c, Partition(0, l, oracle::labelsOfWord(w))), in) << className(c) << " " << w;
        count += in;
      }
      ASSERT_EQ(classDimension(c, l), count) << className(c) << " length " << l;
      ASSERT_EQ(classRanks(c, l).size(), count);
    }
}

TEST(Catalog, ClosedFormCounts) {
  for (std::size_t l = 0; l <= 10; ++l) {
    EXPECT_EQ(classDimension(EasyClass::All, l), oracle::bellTriangle(l)[l]);
    EXPECT_EQ(classDimension(EasyClass::NonCrossing, l), oracle::catalan(l));
    EXPECT_EQ(classDimension(EasyClass::Pairings, l), oracle::doubleFactorialOdd(l));
    EXPECT_EQ(classDimension(EasyClass::NonCrossingPairings, l), l % 2 ? 0 : oracle::catalan(l / 2));
    EXPECT_EQ(classDimension(EasyClass::HalfLibPairings, l), l % 2 ? 0 : factorial(l / 2));
  }
}

TEST(Catalog, ClassesAreDihedrallyClosed) {
  for (EasyClass c : allClasses())
    for (std::size_t l = 1; l <= 7; ++l)
      for (auto& p : enumerate(l)) {
        if (!belongs(c, p)) continue;
        ASSERT_TRUE(belongs(c, ops::rotate(p))) << className(c) << " " << p.word();
        ASSERT_TRUE(belongs(c, ops::reflect(p))) << className(c) << " " << p.word();
      }
}

TEST(Catalog, NamesRoundTrip) {
  for (EasyClass c : allClasses()) EXPECT_EQ(parseEasyClass(className(c)), c);
  EXPECT_FALSE(parseEasyClass("bogus").has_value());
}

TEST(Catalog, SpansAreCapped) {
  EXPECT_EQ(spanAt<Rational>(EasyClass::NonCrossing, 4).dimension(), 14u);
  EXPECT_THROW(spanAt<Rational>(EasyClass::All, 11), CapacityError);
}
