#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace partcat {

struct MalformedPartition : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct CapacityError : std::length_error {
  using std::length_error::length_error;
};

inline constexpr std::size_t kEnumerationCap = 12;
// B_15 still fits the 32-bit rank type; vectors may hold such terms, tables may not
inline constexpr std::size_t kRankCap = 15;

// Set partition of k upper and l lower points. Labels are stored upper row
// left to right, then lower row left to right, as a restricted-growth string.
class Partition {
 public:
  Partition() = default;
  // labels may be arbitrary small integers; they get canonicalized
  Partition(std::size_t upper, std::size_t lower, const std::vector<int>& labels);

  // blocks of 1-based point numbers (1..k upper, k+1..k+l lower)
  static Partition canonicalize(const std::vector<std::vector<int>>& blocks, std::size_t k, std::size_t l);
  static Partition fromWord(std::string_view word);  // one-line, k = 0
  // "upper|lower"; shared letters join across the rows
  static Partition fromTwoRow(std::string_view text);
  static Partition identity(std::size_t n);  // n upper, n lower, vertical lines
  static Partition empty() { return Partition(); }

  std::size_t upper() const { return k_; }
  std::size_t lower() const { return l_; }
  std::size_t length() const { return labels_.size(); }
  std::size_t blockCount() const { return blocks_; }
  const std::vector<std::uint8_t>& labels() const { return labels_; }
  int label(std::size_t i) const { return labels_[i]; }
  std::vector<std::size_t> blockSizes() const;  // indexed by label

  bool isOneLine() const { return k_ == 0; }
  bool isPairing() const;
  bool hasSingleton() const;
  // linear-order crossing over all blocks (for two-row input the one-line form is used)
  bool isNonCrossing() const;
  // crossing block pairs (label pairs a<b) of a one-line pairing
  std::vector<std::pair<int, int>> crossingPairs() const;

  std::string word() const;  // "abca" or "ab|ba"

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.k_ == b.k_ && a.labels_ == b.labels_;
  }
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.k_ != b.k_ ? a.k_ < b.k_ : a.labels_ < b.labels_;
  }
  std::size_t hash() const;

 private:
  std::size_t k_ = 0, l_ = 0, blocks_ = 0;
  std::vector<std::uint8_t> labels_;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const { return p.hash(); }
};

// ---- enumeration and indexing (one-line and any shape: ranks depend only on the label string) ----

std::uint64_t bell(std::size_t n);  // exact for n <= 24
std::vector<Partition> enumerate(std::size_t l);  // lexicographic RGS order; capacity error above 12
std::uint32_t rank(const Partition& p);  // rank of the label string among RGS of its length
Partition unrank(std::size_t upper, std::size_t lower, std::uint64_t r);
inline Partition unrank(std::size_t l, std::uint64_t r) { return unrank(0, l, r); }

// ---- basis-level operations ----
namespace ops {

// Pi: merge the first two points and delete them; second = closed loop produced
std::pair<Partition, bool> contract(const Partition& p);
// contraction of points pos, pos+1 (0-based) of a one-line partition
std::pair<Partition, bool> contractAt(const Partition& p, std::size_t pos);
Partition rotate(const Partition& p, long times = 1);  // R^times: last letter to front
Partition reflect(const Partition& p);                 // reverse the word
Partition tensor(const Partition& p, const Partition& q);
// q after p (p's lower row glued to q's upper row); second = closed loop count
std::pair<Partition, int> compose(const Partition& q, const Partition& p);
Partition involution(const Partition& p);
Partition leftRotate(const Partition& p);   // leftmost upper point -> front of lower row
Partition rightRotate(const Partition& p);  // last lower point -> end of upper row
Partition leftRotateInverse(const Partition& p);
Partition rightRotateInverse(const Partition& p);
// two-row <-> one-line via left rotation of all upper points
Partition toOneLine(const Partition& p);
Partition fromOneLine(const Partition& w, std::size_t upper);

}  // namespace ops
}  // namespace partcat
