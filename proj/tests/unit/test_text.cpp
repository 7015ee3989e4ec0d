#include "partcat/text.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace partcat;

namespace {

Coeff randomCoeff(std::mt19937_64& rng) {
  static const Coeff d = Coeff::delta();
  static const std::vector<Coeff> pool{Coeff(1),        Coeff(-2),           Coeff(Rational(3, 4)), d,
                                       -d * d,          d - Coeff(1),        Coeff(1) / d,          (d + Coeff(2)) / (d - Coeff(3)),
                                       Coeff(Rational(-5, 7)) * d * d * d};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  return pool[pick(rng)] + pool[pick(rng)];
}

}  // namespace

TEST(Text, PrintedVectorsParseBack) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 1000; ++t) {
    std::uniform_int_distribution<std::size_t> len(0, 5), terms(0, 4);
    const std::size_t l = len(rng);
    std::uniform_int_distribution<std::uint64_t> pick(0, bell(l) - 1);
    LinComb<Coeff> v(0, l);
    for (std::size_t i = terms(rng); i > 0; --i) v += randomCoeff(rng) * LinComb<Coeff>::basis(unrank(l, pick(rng)));
    if (v.is_zero()) continue;  // "0" carries no length
    const auto back = parseLinComb(v.str());
    ASSERT_EQ(back, v) << v.str();
  }
}

TEST(Text, TwoRowAndEmptyWords) {
  auto v = parseLinComb("2*ab|ba");
  EXPECT_EQ(v.upper(), 2u);
  EXPECT_EQ(v.lower(), 2u);
  auto e = parseLinComb("d*()");
  EXPECT_EQ(e.lower(), 0u);
  EXPECT_EQ(e.coefficientOf(Partition()), Coeff::delta());
}

TEST(Text, ErrorsCarryPositions) {
  try {
    parseLinComb("aa + 2*abc");
    FAIL() << "mixed lengths accepted";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("column"), std::string::npos);
  }
  try {
    parseLinComb("aa + (2*abc");
    FAIL() << "unbalanced parenthesis accepted";
  } catch (const ParseError& e) {
    EXPECT_GT(e.pos, 0u);
  }
  EXPECT_THROW(parseLinComb(""), ParseError);
  EXPECT_THROW(parseLinComb("aa +"), ParseError);
  EXPECT_THROW(parseLinComb("2*"), ParseError);
}

TEST(Text, StrictScopeRejectsUnknownSymbols) {
  SymbolScope scope{{"c"}, true};
  EXPECT_NO_THROW(parseLinComb("c*aa + d*ab", scope));
  EXPECT_THROW(parseLinComb("q*aa", scope), ParseError);
}

TEST(Text, GeneratorFiles) {
  auto spec = parseGeneratorFile(
      "# two generators\n"
      "params: c\n"
      "delta: 7\n"
      "c*aaa + abc\n"
      "\n"
      "abab - 2*aaaa   # trailing comment\n");
  EXPECT_EQ(spec.params, std::vector<std::string>{"c"});
  ASSERT_TRUE(spec.delta.has_value());
  EXPECT_EQ(*spec.delta, Rational(7));
  ASSERT_EQ(spec.generators.size(), 2u);
  EXPECT_EQ(spec.generators[1], parseLinComb("abab - 2*aaaa"));
  EXPECT_THROW(parseGeneratorFile("delta: x\naa"), std::invalid_argument);
  EXPECT_THROW(parseGeneratorFile("params: c\nq*aa"), std::invalid_argument);  // undeclared parameter
}

TEST(Text, PlansWithComments) {
  auto plan = parsePlan(
      "# ring of two; semicolons in comments are fine\n"
      "vertices 2\n"
      "edge 1.3-2.2; edge 1.4-2.1  # inner edges\n"
      "free 1.1,1.2,2.3,2.4\n");
  EXPECT_EQ(plan.vertexCount, 2);
  EXPECT_EQ(plan.edges.size(), 2u);
  try {
    parsePlan("vertices 2; edge 1.x-2.1");
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("not a number"), std::string::npos) << e.what();
  }
}
