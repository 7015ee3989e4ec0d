#include "partcat/catalog.hpp"

#include "partcat/closure.hpp"

namespace partcat {

const std::vector<EasyClass>& allClasses() {
  static const std::vector<EasyClass> v{EasyClass::All,        EasyClass::NonCrossing,         EasyClass::NonCrossingEven,
                                        EasyClass::Pairings,   EasyClass::NonCrossingPairings, EasyClass::EvenBlocks,
                                        EasyClass::HalfLibPairings};
  return v;
}

std::string className(EasyClass c) {
  switch (c) {
    case EasyClass::All: return "all";
    case EasyClass::NonCrossing: return "nonCrossing";
    case EasyClass::NonCrossingEven: return "nonCrossingEven";
    case EasyClass::Pairings: return "pairings";
    case EasyClass::NonCrossingPairings: return "nonCrossingPairings";
    case EasyClass::EvenBlocks: return "evenBlocks";
    case EasyClass::HalfLibPairings: return "halfLibPairings";
  }
  return "?";
}

std::optional<EasyClass> parseEasyClass(std::string_view name) {
  for (auto c : allClasses())
    if (className(c) == name) return c;
  return std::nullopt;
}

bool belongs(EasyClass c, const Partition& p) {
  switch (c) {
    case EasyClass::All: return true;
    case EasyClass::NonCrossing: return p.isNonCrossing();
    // non-crossing partitions of even length
    case EasyClass::NonCrossingEven: return p.length() % 2 == 0 && p.isNonCrossing();
    case EasyClass::Pairings: return p.isPairing();
    case EasyClass::NonCrossingPairings: return p.isPairing() && p.isNonCrossing();
    case EasyClass::EvenBlocks:
      for (auto s : p.blockSizes())
        if (s % 2) return false;
      return true;
    case EasyClass::HalfLibPairings: {
      if (!p.isPairing()) return false;
      std::vector<int> first(p.blockCount(), -1);
      for (std::size_t i = 0; i < p.length(); ++i) {
        int& f = first[static_cast<std::size_t>(p.label(i))];
        if (f < 0) f = static_cast<int>(i);
        else if ((static_cast<std::size_t>(f) + i) % 2 == 0) return false;
      }
      return true;
    }
  }
  return false;
}

std::vector<std::uint32_t> classRanks(EasyClass c, std::size_t l) {
  std::vector<std::uint32_t> out;
  const auto all = enumerate(l);
  for (std::size_t r = 0; r < all.size(); ++r)
    if (belongs(c, all[r])) out.push_back(static_cast<std::uint32_t>(r));
  return out;
}

std::uint64_t classDimension(EasyClass c, std::size_t l) {
  if (c == EasyClass::All) return bell(l);
  return classRanks(c, l).size();
}

HalfLibCheck validateHalfLib(std::size_t l0) {
  HalfLibCheck out;
  out.bound = std::max<std::size_t>(l0, 6);
  ClosureOptions opts;
  opts.lengthBound = out.bound;
  Closure<Coeff> run(Algebra<Coeff>(Coeff::delta()), opts);
  run.run({LinComb<Coeff>::basis(Partition::fromWord("abcabc"))});
  const auto dims = run.approx().dims();
  out.agree = true;
  for (std::size_t l = 0; l <= l0; ++l) {
    out.closureDims.push_back(dims[l]);
    out.classDims.push_back(classDimension(EasyClass::HalfLibPairings, l));
    if (out.closureDims.back() != out.classDims.back()) out.agree = false;
  }
  return out;
}

}  // namespace partcat
