#pragma once
// Slow, obviously-correct reference implementations the library is tested against.
// None of them call into the library's enumeration, ranking or operation code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

// Bell numbers through the Bell triangle.
inline std::vector<std::uint64_t> bellTriangle(std::size_t n) {
  std::vector<std::uint64_t> out{1};
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto x : row) next.push_back(next.back() + x);
    out.push_back(next.front());
    row = next;
  }
  return out;
}

inline std::uint64_t catalan(std::size_t n) {
  std::uint64_t c = 1;
  for (std::size_t i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

inline std::uint64_t doubleFactorialOdd(std::size_t l) {  // (l-1)!! for even l, 0 for odd
  if (l % 2) return 0;
  std::uint64_t r = 1;
  for (std::size_t i = l; i > 1; i -= 2) r *= i - 1;
  return r;
}

// letters by first occurrence: any labelling -> canonical word
inline std::string canonicalWord(const std::vector<int>& labels) {
  std::map<int, char> seen;
  std::string w;
  for (int x : labels) {
    auto it = seen.find(x);
    if (it == seen.end()) it = seen.emplace(x, static_cast<char>('a' + seen.size())).first;
    w += it->second;
  }
  return w;
}

inline std::vector<int> labelsOfWord(const std::string& w) {
  std::vector<int> out;
  for (char ch : w) out.push_back(ch - 'a');
  return out;
}

// all set partitions of l points as canonical words, by inserting points into blocks
inline std::vector<std::string> allWords(std::size_t l) {
  std::vector<std::vector<std::vector<int>>> parts{{}};
  for (std::size_t i = 0; i < l; ++i) {
    std::vector<std::vector<std::vector<int>>> next;
    for (auto& p : parts) {
      for (std::size_t b = 0; b < p.size(); ++b) {
        auto q = p;
        q[b].push_back(static_cast<int>(i));
        next.push_back(q);
      }
      auto q = p;
      q.push_back({static_cast<int>(i)});
      next.push_back(q);
    }
    parts = std::move(next);
  }
  std::vector<std::string> out;
  for (auto& p : parts) {
    std::vector<int> lab(l);
    for (std::size_t b = 0; b < p.size(); ++b)
      for (int x : p[b]) lab[static_cast<std::size_t>(x)] = static_cast<int>(b);
    out.push_back(canonicalWord(lab));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// four-point scan: i < j < k < m with i,k in one block and j,m in another
inline bool crosses(const std::string& w) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t m = k + 1; m < n; ++m)
          if (w[i] == w[k] && w[j] == w[m] && w[i] != w[j]) return true;
  return false;
}

inline std::map<char, int> blockSizes(const std::string& w) {
  std::map<char, int> s;
  for (char c : w) ++s[c];
  return s;
}

inline bool isPairing(const std::string& w) {
  for (auto& [c, n] : blockSizes(w))
    if (n != 2) return false;
  return true;
}

inline bool allEven(const std::string& w) {
  for (auto& [c, n] : blockSizes(w))
    if (n % 2) return false;
  return true;
}

inline bool hasSingleton(const std::string& w) {
  for (auto& [c, n] : blockSizes(w))
    if (n == 1) return true;
  return false;
}

// Composition of two-row diagrams by union-find over all points. Points of p:
// upper 0..k-1, lower k..k+m-1; of q: upper 0..m-1, lower m..m+l-1.
struct TwoRow {
  std::size_t upper = 0, lower = 0;
  std::vector<int> labels;  // upper row then lower row
};

struct Composed {
  TwoRow result;
  int loops = 0;
};

inline Composed compose(const TwoRow& q, const TwoRow& p) {
  const std::size_t k = p.upper, m = p.lower, l = q.lower;
  // nodes: p points [0, k+m), q points [k+m, k+m+m+l); middle = p lower = q upper
  const std::size_t n = k + m + m + l;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
  for (std::size_t i = 0; i < k + m; ++i)
    for (std::size_t j = i + 1; j < k + m; ++j)
      if (p.labels[i] == p.labels[j]) unite(i, j);
  for (std::size_t i = 0; i < m + l; ++i)
    for (std::size_t j = i + 1; j < m + l; ++j)
      if (q.labels[i] == q.labels[j]) unite(k + m + i, k + m + j);
  for (std::size_t i = 0; i < m; ++i) unite(k + i, k + m + i);
  Composed out;
  out.result.upper = k;
  out.result.lower = l;
  std::set<std::size_t> outer;
  for (std::size_t i = 0; i < k; ++i) {
    out.result.labels.push_back(static_cast<int>(find(i)));
    outer.insert(find(i));
  }
  for (std::size_t i = 0; i < l; ++i) {
    out.result.labels.push_back(static_cast<int>(find(k + m + m + i)));
    outer.insert(find(k + m + m + i));
  }
  std::set<std::size_t> middle;
  for (std::size_t i = 0; i < m; ++i)
    if (!outer.count(find(k + i))) middle.insert(find(k + i));
  out.loops = static_cast<int>(middle.size());
  return out;
}

inline TwoRow randomTwoRow(std::size_t k, std::size_t l, std::mt19937_64& rng) {
  TwoRow t{k, l, {}};
  std::uniform_int_distribution<int> pick(0, static_cast<int>(k + l));
  for (std::size_t i = 0; i < k + l; ++i) t.labels.push_back(pick(rng));
  return t;
}

// textbook dense elimination; callers pass an exact field
template <class Row, class IsZero, class Div, class Sub>
std::size_t gaussRank(std::vector<Row> rows, std::size_t width, IsZero isZero, Div div, Sub sub) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && isZero(rows[piv][col])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || isZero(rows[r][col])) continue;
      auto f = div(rows[r][col], rows[rank][col]);
      for (std::size_t c = 0; c < width; ++c) rows[r][c] = sub(rows[r][c], f, rows[rank][c]);
    }
    ++rank;
  }
  return rank;
}

}  // namespace oracle
