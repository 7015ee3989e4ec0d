#pragma once

#include "partcat/partition.hpp"

#include <cstdint>
#include <vector>

namespace partcat::tables {

// Per-length lookup tables over one-line ranks, built lazily once and shared.
struct OneLine {
  std::size_t length = 0;
  std::vector<std::uint32_t> rotate;       // R
  std::vector<std::uint32_t> rotateInv;    // R^-1
  std::vector<std::uint32_t> reflect;      // word reversal
  std::vector<std::uint32_t> contract;     // Pi, target rank at length-2
  std::vector<std::uint8_t> contractLoop;  // 1 if Pi closes a loop
};

const OneLine& oneLine(std::size_t l);

// rank of tensor(unrank(a, la), unrank(b, lb)) for one-line inputs
std::uint32_t tensorRank(std::size_t la, std::uint32_t a, std::size_t lb, std::uint32_t b);

// Builds the on-disk cache directory from PARTCAT_CACHE_DIR when set; returns
// true if tables for length l were loaded from or written to disk.
bool persistOneLine(std::size_t l);

}  // namespace partcat::tables
