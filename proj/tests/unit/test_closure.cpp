#include "oracles.hpp"
#include "partcat/catalog.hpp"
#include "partcat/closure.hpp"
#include "partcat/text.hpp"

#include <gtest/gtest.h>

using namespace partcat;

namespace {

using VR = LinComb<Rational>;

const char* kC1 = "d^2*aaa - d*abb - d*aab - d*aba + 2*abc";

ClosureOptions opts(std::size_t l0, unsigned jobs = 1, bool log = false) {
  ClosureOptions o;
  o.lengthBound = l0;
  o.jobs = jobs;
  o.log = log;
  return o;
}

VR at(const std::string& expr, long d) {
  Specialization s;
  s.bindings[vars::kDelta] = d;
  return toRational(specialize(parseLinComb(expr), s));
}

}  // namespace

TEST(Closure, PairAloneGivesNonCrossingPairings) {
  Closure<Coeff> run(Algebra<Coeff>(Coeff::delta()), opts(8));
  run.run({});
  const auto dims = run.approx().dims();
  for (std::size_t l = 0; l <= 8; ++l) EXPECT_EQ(dims[l], l % 2 ? 0 : oracle::catalan(l / 2)) << l;
}

TEST(Closure, CrossingGivesAllPairings) {
  // lengths near the bound are truncated: some pairings of 6 points need
  // intermediates of length 10, so compare 0..6 under l0 = 10
  const auto g = parseLinComb("abab");
  Closure<Coeff> run(Algebra<Coeff>(Coeff::delta()), opts(10));
  run.run({g});
  const auto dims = run.approx().dims();
  for (std::size_t l = 0; l <= 6; ++l) EXPECT_EQ(dims[l], oracle::doubleFactorialOdd(l)) << l;
  Closure<Coeff> shortRun(Algebra<Coeff>(Coeff::delta()), opts(6));
  shortRun.run({g});
  EXPECT_LT(shortRun.approx().dims()[6], 15u);
  auto rep = easinessReport(run, {g});
  EXPECT_TRUE(rep.easy());
  EXPECT_EQ(rep.verdict(), "EASY (proven)");
}

TEST(Closure, DimensionsGrowMonotonicallyPerPass) {
  Closure<Rational> run(Algebra<Rational>(Rational(7)), opts(6));
  run.run({at(kC1, 7)});
  const auto& hist = run.approx().dimsPerPass;
  ASSERT_GE(hist.size(), 2u);
  for (std::size_t p = 1; p < hist.size(); ++p)
    for (std::size_t l = 0; l < hist[p].size(); ++l) ASSERT_LE(hist[p - 1][l], hist[p][l]);
  EXPECT_EQ(hist[hist.size() - 1], hist[hist.size() - 2]);  // stopped at a fixed point
}

TEST(Closure, ResultIsClosedUnderEveryOperation) {
  const std::size_t l0 = 5;
  const Algebra<Rational> A(Rational(7));
  Closure<Rational> run(A, opts(l0));
  const VR g = at(kC1, 7);
  run.run({g});
  const auto& sp = run.approx().spaces;
  EXPECT_TRUE(sp[3].contains(g));
  for (std::size_t l = 0; l <= l0; ++l)
    for (auto& v : sp[l].rows()) {
      ASSERT_TRUE(sp[l].contains(A.reflect(v)));
      if (l == 0) continue;
      ASSERT_TRUE(sp[l].contains(A.rotate(v)));
      if (l >= 2) {
        ASSERT_TRUE(sp[l - 2].contains(A.contract(v)));
      }
      for (std::size_t k = 1; k + l <= l0; ++k)
        for (auto& u : sp[k].rows()) ASSERT_TRUE(sp[k + l].contains(A.tensor(u, v)));
    }
}

TEST(Closure, WorkerCountDoesNotChangeTheResult) {
  const VR g = at(kC1, 7);
  Closure<Rational> one(Algebra<Rational>(Rational(7)), opts(6, 1));
  Closure<Rational> four(Algebra<Rational>(Rational(7)), opts(6, 4));
  one.run({g});
  four.run({g});
  for (std::size_t l = 0; l <= 6; ++l) EXPECT_TRUE(one.approx().spaces[l] == four.approx().spaces[l]) << l;
  EXPECT_EQ(one.approx().dimsPerPass, four.approx().dimsPerPass);
}

TEST(Closure, LoggedRunReplays) {
  const auto g = parseLinComb(kC1);
  Closure<Coeff> run(Algebra<Coeff>(Coeff::delta()), opts(5, 1, true));
  run.run({g});
  auto rep = auditLog(run, {g});
  EXPECT_TRUE(rep.ok()) << (rep.failures.empty() ? "" : rep.failures.front());
  EXPECT_GT(rep.records, 0u);
  // an unlogged run is refused rather than passed
  Closure<Coeff> plain(Algebra<Coeff>(Coeff::delta()), opts(4));
  plain.run({g});
  EXPECT_FALSE(auditLog(plain, {g}).ok());
}

TEST(Closure, GenericRunReportsPivotLoci) {
  const auto g = parseLinComb(kC1);
  Closure<Coeff> run(Algebra<Coeff>(Coeff::delta()), opts(6));
  run.run({g});
  auto rep = easinessReport(run, {g});
  EXPECT_FALSE(rep.easy());
  EXPECT_EQ(rep.verdict(), "NON-EASY CANDIDATE up to l0=6");
  EXPECT_EQ(rep.loci, (std::vector<std::string>{"0", "2"}));
  // the loci really are special: the length-2 dimension drops there
  for (long d : {0L, 2L}) {
    Closure<Rational> r(Algebra<Rational>(Rational(d)), opts(4));
    r.run({at(kC1, d)});
    EXPECT_LT(r.approx().dims()[2], run.approx().dims()[2]) << "d=" << d;
  }
}

TEST(Closure, SingletonFreeCheck) {
  const Algebra<Coeff> A(Coeff::delta());
  EXPECT_TRUE(singletonFreeCheck(A, parseLinComb(kC1)));
  EXPECT_FALSE(singletonFreeCheck(A, parseLinComb("aaa")));
  EXPECT_FALSE(singletonFreeCheck(A, parseLinComb("abc")));
  EXPECT_THROW(singletonFreeCheck(A, parseLinComb("aaaa")), std::domain_error);
  EXPECT_THROW(singletonFreeCheck(A, parseLinComb("aab")), std::domain_error);  // not rotation invariant
}

TEST(Closure, LimitsAreEnforced) {
  ClosureOptions o = opts(6);
  o.passCap = 1;
  Closure<Coeff> run(Algebra<Coeff>(Coeff::delta()), o);
  EXPECT_THROW(run.run({parseLinComb("abab")}), PassLimitExceeded);
  Closure<Coeff> shortRun(Algebra<Coeff>(Coeff::delta()), opts(4));
  EXPECT_THROW(shortRun.run({parseLinComb("abcde")}), LengthBoundExceeded);
  EXPECT_THROW(Closure<Coeff>(Algebra<Coeff>(Coeff::delta()), opts(13)), CapacityError);
}

TEST(Closure, HalfLiberationMatchesItsPredicate) {
  auto chk = validateHalfLib(6);
  EXPECT_TRUE(chk.agree);
  EXPECT_EQ(chk.closureDims, chk.classDims);
}
