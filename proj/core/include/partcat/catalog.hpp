#pragma once

#include "partcat/linalg.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace partcat {

// Known easy categories, described by a predicate on one-line partitions.
enum class EasyClass { All, NonCrossing, NonCrossingEven, Pairings, NonCrossingPairings, EvenBlocks, HalfLibPairings };

std::optional<EasyClass> parseEasyClass(std::string_view name);
std::string className(EasyClass c);
const std::vector<EasyClass>& allClasses();

bool belongs(EasyClass c, const Partition& p);
// number of length-l partitions in the class
std::uint64_t classDimension(EasyClass c, std::size_t l);
std::vector<std::uint32_t> classRanks(EasyClass c, std::size_t l);

inline constexpr std::size_t kCatalogCap = 10;

template <class F>
ModuleBasis<F> spanAt(EasyClass c, std::size_t l) {
  if (l > kCatalogCap) throw CapacityError("catalog spans capped at length 10");
  return ModuleBasis<F>::ofPartitions(0, l, classRanks(c, l));
}

struct HalfLibCheck {
  std::size_t bound = 0;                          // closure length bound actually used
  std::vector<std::size_t> closureDims, classDims;  // lengths 0..l0
  bool agree = false;
};
// Closure of the half-liberation generator abcabc at generic d versus the
// odd/even pairing predicate, compared on lengths 0..l0.
HalfLibCheck validateHalfLib(std::size_t l0);

}  // namespace partcat
