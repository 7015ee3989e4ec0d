#include "partcat/partition.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace partcat {

namespace {

constexpr std::size_t kRankMax = 24;

// completions[n][m]: number of RGS suffixes of n positions when m blocks are open
const std::array<std::array<std::uint64_t, kRankMax + 2>, kRankMax + 1>& completions() {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, kRankMax + 2>, kRankMax + 1> t{};
    for (std::size_t m = 0; m <= kRankMax + 1; ++m) t[0][m] = 1;
    for (std::size_t n = 1; n <= kRankMax; ++n)
      for (std::size_t m = 0; m + n <= kRankMax + 1; ++m)
        t[n][m] = m * t[n - 1][m] + (m + 1 <= kRankMax + 1 ? t[n - 1][m + 1] : 0);
    return t;
  }();
  return table;
}

std::vector<std::uint8_t> canonical_labels(const std::vector<int>& raw, std::size_t& blocks) {
  std::vector<std::uint8_t> out(raw.size());
  std::vector<std::pair<int, int>> seen;  // raw label -> canonical
  for (std::size_t i = 0; i < raw.size(); ++i) {
    int c = -1;
    for (auto& [r, v] : seen)
      if (r == raw[i]) {
        c = v;
        break;
      }
    if (c < 0) {
      c = static_cast<int>(seen.size());
      if (c > 255) throw CapacityError("more than 256 blocks");
      seen.emplace_back(raw[i], c);
    }
    out[i] = static_cast<std::uint8_t>(c);
  }
  blocks = seen.size();
  return out;
}

std::vector<int> as_ints(const std::vector<std::uint8_t>& v) { return std::vector<int>(v.begin(), v.end()); }

}  // namespace

Partition::Partition(std::size_t upper, std::size_t lower, const std::vector<int>& labels) : k_(upper), l_(lower) {
  if (labels.size() != upper + lower) throw MalformedPartition("label count does not match shape");
  labels_ = canonical_labels(labels, blocks_);
}

Partition Partition::canonicalize(const std::vector<std::vector<int>>& blocks, std::size_t k, std::size_t l) {
  std::size_t n = k + l;
  std::vector<int> lab(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw MalformedPartition("empty block");
    for (int pt : blocks[b]) {
      if (pt < 1 || static_cast<std::size_t>(pt) > n) throw MalformedPartition("point out of range");
      if (lab[pt - 1] >= 0) throw MalformedPartition("overlapping blocks");
      lab[pt - 1] = static_cast<int>(b);
    }
  }
  for (int x : lab)
    if (x < 0) throw MalformedPartition("point not covered");
  return Partition(k, l, lab);
}

Partition Partition::fromWord(std::string_view word) {
  if (word.empty()) throw MalformedPartition("empty word");
  std::vector<int> lab;
  for (char ch : word) {
    if (ch < 'a' || ch > 'z') throw MalformedPartition(std::string("bad letter in word: ") + ch);
    lab.push_back(ch);
  }
  return Partition(0, lab.size(), lab);
}

Partition Partition::fromTwoRow(std::string_view text) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos) return fromWord(text);
  std::vector<int> lab;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i == bar) continue;
    char ch = text[i];
    if (ch < 'a' || ch > 'z') throw MalformedPartition(std::string("bad letter in word: ") + ch);
    lab.push_back(ch);
  }
  return Partition(bar, text.size() - bar - 1, lab);
}

Partition Partition::identity(std::size_t n) {
  std::vector<int> lab(2 * n);
  for (std::size_t i = 0; i < n; ++i) lab[i] = lab[n + i] = static_cast<int>(i);
  return Partition(n, n, lab);
}

std::vector<std::size_t> Partition::blockSizes() const {
  std::vector<std::size_t> s(blocks_, 0);
  for (auto x : labels_) ++s[x];
  return s;
}

bool Partition::isPairing() const {
  for (auto s : blockSizes())
    if (s != 2) return false;
  return true;
}

bool Partition::hasSingleton() const {
  for (auto s : blockSizes())
    if (s == 1) return true;
  return false;
}

bool Partition::isNonCrossing() const {
  if (k_ != 0) return ops::toOneLine(*this).isNonCrossing();
  const std::size_t n = labels_.size();
  std::vector<int> first(blocks_, -1), last(blocks_, -1), prev(n, -1);
  std::vector<int> lastSeen(blocks_, -1);
  for (std::size_t i = 0; i < n; ++i) {
    int b = labels_[i];
    if (first[b] < 0) first[b] = static_cast<int>(i);
    last[b] = static_cast<int>(i);
    prev[i] = lastSeen[b];
    lastSeen[b] = static_cast<int>(i);
  }
  // every block meeting the gap between consecutive points of a block stays inside it
  for (std::size_t j = 0; j < n; ++j) {
    int i = prev[j];
    if (i < 0) continue;
    for (int x = i + 1; x < static_cast<int>(j); ++x) {
      int b = labels_[x];
      if (first[b] < i || last[b] > static_cast<int>(j)) return false;
    }
  }
  return true;
}

std::vector<std::pair<int, int>> Partition::crossingPairs() const {
  if (!isPairing()) throw std::domain_error("crossingPairs needs a pairing");
  std::vector<std::array<int, 2>> pos(blocks_, {-1, -1});
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    auto& p = pos[labels_[i]];
    (p[0] < 0 ? p[0] : p[1]) = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> out;
  for (std::size_t a = 0; a < blocks_; ++a)
    for (std::size_t b = a + 1; b < blocks_; ++b) {
      auto [a1, a2] = pos[a];
      auto [b1, b2] = pos[b];
      if ((a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2))
        out.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  return out;
}

std::string Partition::word() const {
  if (blocks_ > 26) throw CapacityError("more than 26 blocks cannot be written as a word");
  std::string s;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (k_ != 0 && i == k_) s += '|';
    s += static_cast<char>('a' + labels_[i]);
  }
  if (k_ != 0 && k_ == labels_.size()) s += '|';
  return s;
}

std::size_t Partition::hash() const {
  std::size_t h = k_ * 0x9e3779b97f4a7c15ull;
  for (auto x : labels_) h = (h ^ x) * 0x100000001b3ull;
  return h ^ labels_.size();
}

// ---- enumeration ----

std::uint64_t bell(std::size_t n) {
  if (n > kRankMax) throw CapacityError("Bell number beyond supported range");
  return completions()[n][0];
}

std::vector<Partition> enumerate(std::size_t l) {
  if (l > kEnumerationCap) throw CapacityError("enumeration capped at length 12");
  std::vector<Partition> out;
  out.reserve(bell(l));
  for (std::uint64_t r = 0; r < bell(l); ++r) out.push_back(unrank(0, l, r));
  return out;
}

std::uint32_t rank(const Partition& p) {
  std::size_t n = p.length();
  if (n > kRankCap) throw CapacityError("rank: length above 15");
  const auto& t = completions();
  std::uint64_t r = 0;
  std::size_t open = 0;
  const auto& lab = p.labels();
  for (std::size_t i = 0; i < n; ++i) {
    r += lab[i] * t[n - i - 1][open];
    if (lab[i] == open) ++open;
  }
  return static_cast<std::uint32_t>(r);
}

Partition unrank(std::size_t upper, std::size_t lower, std::uint64_t r) {
  std::size_t n = upper + lower;
  if (n > kRankCap) throw CapacityError("unrank: length above 15");
  if (r >= bell(n)) throw std::out_of_range("rank out of range");
  const auto& t = completions();
  std::vector<int> lab(n);
  std::size_t open = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t c = t[n - i - 1][open];
    std::uint64_t v = std::min<std::uint64_t>(r / c, open);
    r -= v * c;
    lab[i] = static_cast<int>(v);
    if (v == open) ++open;
  }
  return Partition(upper, lower, lab);
}

// ---- basis-level operations ----
namespace ops {

namespace {
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

void require_one_line(const Partition& p, const char* what) {
  if (!p.isOneLine()) throw std::domain_error(std::string(what) + " needs a one-line partition");
}
}  // namespace

std::pair<Partition, bool> contractAt(const Partition& p, std::size_t pos) {
  require_one_line(p, "contraction");
  const auto& lab = p.labels();
  if (lab.size() < 2 || pos + 1 >= lab.size()) throw std::domain_error("contraction: length < 2 or bad position");
  int a = lab[pos], b = lab[pos + 1];
  std::vector<int> out;
  out.reserve(lab.size() - 2);
  bool survives = false;
  for (std::size_t i = 0; i < lab.size(); ++i) {
    if (i == pos || i == pos + 1) continue;
    int x = lab[i] == b ? a : lab[i];
    if (x == a) survives = true;
    out.push_back(x);
  }
  return {Partition(0, out.size(), out), !survives};
}

std::pair<Partition, bool> contract(const Partition& p) { return contractAt(p, 0); }

Partition rotate(const Partition& p, long times) {
  require_one_line(p, "rotation");
  const auto& lab = p.labels();
  long n = static_cast<long>(lab.size());
  if (n == 0) throw std::domain_error("rotation of the empty partition");
  long s = ((times % n) + n) % n;
  std::vector<int> out(lab.size());
  for (long i = 0; i < n; ++i) out[(i + s) % n] = lab[i];
  return Partition(0, lab.size(), out);
}

Partition reflect(const Partition& p) {
  require_one_line(p, "reflection");
  auto v = as_ints(p.labels());
  std::reverse(v.begin(), v.end());
  return Partition(0, v.size(), v);
}

Partition tensor(const Partition& p, const Partition& q) {
  const auto& a = p.labels();
  const auto& b = q.labels();
  int shift = static_cast<int>(p.blockCount());
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  for (std::size_t i = 0; i < p.upper(); ++i) out.push_back(a[i]);
  for (std::size_t i = 0; i < q.upper(); ++i) out.push_back(b[i] + shift);
  for (std::size_t i = p.upper(); i < a.size(); ++i) out.push_back(a[i]);
  for (std::size_t i = q.upper(); i < b.size(); ++i) out.push_back(b[i] + shift);
  return Partition(p.upper() + q.upper(), p.lower() + q.lower(), out);
}

std::pair<Partition, int> compose(const Partition& q, const Partition& p) {
  if (p.lower() != q.upper()) throw std::domain_error("compose: shape mismatch");
  const std::size_t k = p.upper(), l = p.lower(), m = q.lower();
  // nodes: p blocks, then q blocks
  const int pb = static_cast<int>(p.blockCount()), qb = static_cast<int>(q.blockCount());
  UnionFind uf(static_cast<std::size_t>(pb + qb));
  for (std::size_t j = 0; j < l; ++j) uf.unite(p.label(k + j), pb + q.label(j));
  std::vector<char> touches(static_cast<std::size_t>(pb + qb), 0);
  std::vector<int> out;
  out.reserve(k + m);
  for (std::size_t i = 0; i < k; ++i) {
    int r = uf.find(p.label(i));
    touches[r] = 1;
    out.push_back(r);
  }
  for (std::size_t i = 0; i < m; ++i) {
    int r = uf.find(pb + q.label(l + i));
    touches[r] = 1;
    out.push_back(r);
  }
  int loops = 0;
  for (int v = 0; v < pb + qb; ++v)
    if (uf.find(v) == v && !touches[v]) ++loops;
  return {Partition(k, m, out), loops};
}

Partition involution(const Partition& p) {
  const auto& a = p.labels();
  std::vector<int> out;
  out.reserve(a.size());
  for (std::size_t i = p.upper(); i < a.size(); ++i) out.push_back(a[i]);
  for (std::size_t i = 0; i < p.upper(); ++i) out.push_back(a[i]);
  return Partition(p.lower(), p.upper(), out);
}

Partition leftRotate(const Partition& p) {
  if (p.upper() == 0) throw std::domain_error("left rotation needs an upper point");
  const auto& a = p.labels();
  std::vector<int> out;
  for (std::size_t i = 1; i < p.upper(); ++i) out.push_back(a[i]);
  out.push_back(a[0]);
  for (std::size_t i = p.upper(); i < a.size(); ++i) out.push_back(a[i]);
  return Partition(p.upper() - 1, p.lower() + 1, out);
}

Partition leftRotateInverse(const Partition& p) {
  if (p.lower() == 0) throw std::domain_error("inverse left rotation needs a lower point");
  const auto& a = p.labels();
  std::vector<int> out;
  out.push_back(a[p.upper()]);
  for (std::size_t i = 0; i < p.upper(); ++i) out.push_back(a[i]);
  for (std::size_t i = p.upper() + 1; i < a.size(); ++i) out.push_back(a[i]);
  return Partition(p.upper() + 1, p.lower() - 1, out);
}

Partition rightRotate(const Partition& p) {
  if (p.lower() == 0) throw std::domain_error("right rotation needs a lower point");
  const auto& a = p.labels();
  std::vector<int> out;
  for (std::size_t i = 0; i < p.upper(); ++i) out.push_back(a[i]);
  out.push_back(a.back());
  for (std::size_t i = p.upper(); i + 1 < a.size(); ++i) out.push_back(a[i]);
  return Partition(p.upper() + 1, p.lower() - 1, out);
}

Partition rightRotateInverse(const Partition& p) {
  if (p.upper() == 0) throw std::domain_error("inverse right rotation needs an upper point");
  const auto& a = p.labels();
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < p.upper(); ++i) out.push_back(a[i]);
  for (std::size_t i = p.upper(); i < a.size(); ++i) out.push_back(a[i]);
  out.push_back(a[p.upper() - 1]);
  return Partition(p.upper() - 1, p.lower() + 1, out);
}

Partition toOneLine(const Partition& p) {
  const auto& a = p.labels();
  std::vector<int> out;
  out.reserve(a.size());
  for (std::size_t i = p.upper(); i-- > 0;) out.push_back(a[i]);
  for (std::size_t i = p.upper(); i < a.size(); ++i) out.push_back(a[i]);
  return Partition(0, a.size(), out);
}

Partition fromOneLine(const Partition& w, std::size_t upper) {
  if (!w.isOneLine() || upper > w.length()) throw std::domain_error("fromOneLine: bad input");
  const auto& a = w.labels();
  std::vector<int> out;
  out.reserve(a.size());
  for (std::size_t i = upper; i-- > 0;) out.push_back(a[i]);
  for (std::size_t i = upper; i < a.size(); ++i) out.push_back(a[i]);
  return Partition(upper, a.size() - upper, out);
}

}  // namespace ops
}  // namespace partcat
