#pragma once

#include "partcat/closure.hpp"
#include "partcat/ops.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace partcat {

enum class MapKind { P, T, D, J, B, Vplus, Vminus };

MapKind parseMapKind(const std::string& name);  // "P", "T", "D", "J", "B", "V+", "V-"
std::string mapName(MapKind k);

// A vector together with the loop parameter its contractions must use.
// B and V land in the d-1 regime.
template <class F>
struct InContext {
  LinComb<F> vec;
  F loop;
};

namespace maps_detail {

// sum over basis terms of c * img(partition)
template <class F, class Fn>
LinComb<F> linearExtend(const LinComb<F>& v, std::size_t k, std::size_t l, Fn&& img) {
  std::vector<typename LinComb<F>::Term> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const F& c = v.terms()[i].second;
    const LinComb<F> image = img(v.partitionAt(i));
    for (auto& [r, x] : image.terms()) out.emplace_back(r, c * x);
  }
  return LinComb<F>::fromTerms(k, l, std::move(out));
}

inline std::vector<int> labelsOf(const Partition& p) { return {p.labels().begin(), p.labels().end()}; }

}  // namespace maps_detail

// x^{(x)n} p x^{(x)m} for x = id - t*(singleton-singleton), on every point of p.
// Cutting a point makes it a singleton; cutting every point of a block closes
// it into a loop worth `loop`.
template <class F>
LinComb<F> pointwiseConjugate(const LinComb<F>& v, const F& t, const F& loop) {
  return maps_detail::linearExtend(v, v.upper(), v.lower(), [&](const Partition& p) {
    const std::size_t n = p.length();
    if (n > 20) throw CapacityError("pointwise conjugation: too many points");
    const auto sizes = p.blockSizes();
    std::vector<typename LinComb<F>::Term> out;
    out.reserve(std::size_t{1} << n);
    std::vector<F> tpow{F(1)}, lpow{F(1)};
    for (std::size_t i = 0; i < n; ++i) tpow.push_back(tpow.back() * t);
    for (std::size_t i = 0; i < sizes.size(); ++i) lpow.push_back(lpow.back() * loop);
    std::vector<std::size_t> cutIn(sizes.size());
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> lab = maps_detail::labelsOf(p);
      std::fill(cutIn.begin(), cutIn.end(), 0);
      int fresh = static_cast<int>(sizes.size());
      std::size_t cuts = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1u) {
          ++cutIn[static_cast<std::size_t>(lab[i])];
          lab[i] = fresh++;
          ++cuts;
        }
      std::size_t closed = 0;
      for (std::size_t b = 0; b < sizes.size(); ++b) closed += cutIn[b] == sizes[b];
      out.emplace_back(rank(Partition(p.upper(), p.lower(), lab)), tpow[cuts] * lpow[closed]);
    }
    return LinComb<F>::fromTerms(p.upper(), p.lower(), std::move(out));
  });
}

// (1,1) vector id - t*(singleton pair)
template <class F>
LinComb<F> pointProjector(const F& t) {
  return LinComb<F>::basis(Partition::fromTwoRow("a|a")) - t * LinComb<F>::basis(Partition::fromTwoRow("a|b"));
}

template <class F>
void requireInvertibleDelta(const Algebra<F>& alg, const char* who) {
  if (alg.delta().is_zero()) throw std::domain_error(std::string(who) + ": needs d != 0");
}

template <class F>
LinComb<F> piVector(const Algebra<F>& alg) {
  requireInvertibleDelta(alg, "pi");
  return pointProjector(F(1) / alg.delta());
}
template <class F>
LinComb<F> tauVector(const Algebra<F>& alg) {
  requireInvertibleDelta(alg, "tau");
  return pointProjector(F(2) / alg.delta());
}

template <class F>
LinComb<F> projectP(const Algebra<F>& alg, const LinComb<F>& v) {
  requireInvertibleDelta(alg, "P");
  return pointwiseConjugate(v, -(F(1) / alg.delta()), alg.delta());
}

template <class F>
LinComb<F> conjugateT(const Algebra<F>& alg, const LinComb<F>& v) {
  requireInvertibleDelta(alg, "T");
  return pointwiseConjugate(v, -(F(2) / alg.delta()), alg.delta());
}

// every block of size s becomes block + (-1)^s * (s singletons)
template <class F>
LinComb<F> blockMapB(const LinComb<F>& v) {
  return maps_detail::linearExtend(v, v.upper(), v.lower(), [](const Partition& p) {
    const auto sizes = p.blockSizes();
    const std::size_t nb = sizes.size();
    std::vector<typename LinComb<F>::Term> out;
    for (std::uint32_t mask = 0; mask < (1u << nb); ++mask) {
      std::vector<int> lab = maps_detail::labelsOf(p);
      int fresh = static_cast<int>(nb);
      bool odd = false;
      for (std::size_t i = 0; i < lab.size(); ++i)
        if (mask >> lab[i] & 1u) lab[i] = fresh++;
      for (std::size_t b = 0; b < nb; ++b)
        if ((mask >> b & 1u) && sizes[b] % 2) odd = !odd;
      out.emplace_back(rank(Partition(p.upper(), p.lower(), lab)), F(odd ? -1 : 1));
    }
    return LinComb<F>::fromTerms(p.upper(), p.lower(), std::move(out));
  });
}

// exact square root of a non-negative rational, if it has one
std::optional<Rational> rationalSqrt(const Rational& q);

// V_{(d,+/-)}: B followed by pointwise conjugation with
// t = -(1/(d-1))(1 +/- 1/sqrt d) in the d-1 regime.
InContext<Rational> coisometryV(const Algebra<Rational>& alg, const LinComb<Rational>& v, bool plus);

// D and J act on pairings only
namespace maps_detail {
inline void requirePairing(const Partition& p, const char* who) {
  if (!p.isPairing()) throw std::domain_error(std::string(who) + ": input term " + p.word() + " is not a pairing");
}
}  // namespace maps_detail

// pair blocks with an odd number of points between their legs become pair - (2/d)*singletons
template <class F>
LinComb<F> disjoinD(const Algebra<F>& alg, const LinComb<F>& v) {
  requireInvertibleDelta(alg, "D");
  const F c = -(F(2) / alg.delta());
  return maps_detail::linearExtend(v, v.upper(), v.lower(), [&](const Partition& p) {
    maps_detail::requirePairing(p, "D");
    const Partition w = ops::toOneLine(p);
    std::vector<std::vector<std::size_t>> pos(w.blockCount());
    for (std::size_t i = 0; i < w.length(); ++i) pos[static_cast<std::size_t>(w.label(i))].push_back(i);
    std::vector<int> odd;
    for (std::size_t b = 0; b < pos.size(); ++b)
      if ((pos[b][1] - pos[b][0] - 1) % 2) odd.push_back(static_cast<int>(b));
    std::vector<typename LinComb<F>::Term> out;
    for (std::uint32_t mask = 0; mask < (1u << odd.size()); ++mask) {
      std::vector<int> lab = maps_detail::labelsOf(w);
      int fresh = static_cast<int>(w.blockCount());
      F coef(1);
      for (std::size_t j = 0; j < odd.size(); ++j)
        if (mask >> j & 1u) {
          for (auto i : pos[static_cast<std::size_t>(odd[j])]) lab[i] = fresh++;
          coef = coef * c;
        }
      out.emplace_back(rank(ops::fromOneLine(Partition(0, w.length(), lab), p.upper())), coef);
    }
    return LinComb<F>::fromTerms(p.upper(), p.lower(), std::move(out));
  });
}

// (-1)^{|X|} sum over subsets S of the crossing block pairs X of factor^{|S|} p_S,
// p_S with the pairs in S unified. factor is -2; other values exist for mutation tests.
template <class F>
LinComb<F> joinJ(const LinComb<F>& v, long factor = -2) {
  return maps_detail::linearExtend(v, v.upper(), v.lower(), [&](const Partition& p) {
    maps_detail::requirePairing(p, "J");
    const Partition w = ops::toOneLine(p);
    const auto X = w.crossingPairs();
    if (X.size() > 20) throw CapacityError("J: too many crossings");
    std::vector<typename LinComb<F>::Term> out;
    const F sign(X.size() % 2 ? -1 : 1);
    for (std::uint32_t mask = 0; mask < (1u << X.size()); ++mask) {
      std::vector<int> parent(w.blockCount());
      for (std::size_t b = 0; b < parent.size(); ++b) parent[b] = static_cast<int>(b);
      auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
      };
      F coef = sign;
      for (std::size_t j = 0; j < X.size(); ++j)
        if (mask >> j & 1u) {
          parent[static_cast<std::size_t>(find(X[j].first))] = find(X[j].second);
          coef = coef * F(factor);
        }
      std::vector<int> lab = maps_detail::labelsOf(w);
      for (auto& x : lab) x = find(x);
      out.emplace_back(rank(ops::fromOneLine(Partition(0, w.length(), lab), p.upper())), coef);
    }
    return LinComb<F>::fromTerms(p.upper(), p.lower(), std::move(out));
  });
}

// Applies a map by kind. Returns the image and the loop parameter it lives under.
InContext<Rational> applyMap(MapKind kind, const Algebra<Rational>& alg, const LinComb<Rational>& v);
InContext<Coeff> applyMap(MapKind kind, const Algebra<Coeff>& alg, const LinComb<Coeff>& v);

// ---- harnesses ----

struct HarnessReport {
  std::string name;
  std::size_t trials = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;  // counterexamples, verbatim
  bool ok() const { return failures.empty(); }
  std::string text() const;
};

// uniformly random perfect matching on n points (n even), one-line
Partition randomPairing(std::size_t n, std::mt19937_64& rng);

// D or J against tensor, rotation, reflection and contraction on random
// pairings of even length <= maxLen. Trial i uses seed (seed + i).
HarnessReport functorHarness(MapKind kind, const Rational& delta, std::size_t trials, std::size_t maxLen,
                             std::uint64_t seed = 1, long joinFactor = -2);

// V+/- at a square d: blockwise tensor, rotation, reflection, and the
// contraction identities Pi V b = V Pi P b on single blocks b_k and, at the
// junction, on b_k (x) b_l, for k, l in 2..maxBlock.
HarnessReport coisometryHarness(const Rational& delta, bool plus, std::size_t maxBlock = 5);

struct DimensionWitness {
  std::string label;
  std::size_t length = 0;
  std::size_t generated = 0;  // closure dimension
  std::size_t reference = 0;  // catalog dimension
  bool strict() const { return generated < reference; }
};

struct WitnessReport {
  std::vector<DimensionWitness> rows;
  std::vector<std::size_t> dimsP3, dimsP4;  // full closure dims of <P(aaa)>, <P(aaaa)>
  bool oddVanishesP4 = false;               // <P(aaaa)> has nothing at odd length
  bool oddPresentP3 = false;                // <P(aaa)> has something at odd length
  bool ok() const;
  std::string text() const;
};

// <P(3-block)> vs the non-crossing partitions at length 3, <P(4-block)> vs
// non-crossing partitions at length 4, and the V+/- images of the same
// blocks (at vDelta, closures in the d-1 regime).
WitnessReport dimensionWitness(const Rational& delta = Rational(7), std::size_t l0 = 6,
                               const Rational& vDelta = Rational(9), unsigned jobs = 1);

}  // namespace partcat
