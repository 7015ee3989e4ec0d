#pragma once

#include "partcat/coeff.hpp"
#include "partcat/partition.hpp"
#include "partcat/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace partcat {

struct ShapeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Sparse formal combination of same-shape partitions. Terms are keyed by the
// rank of the partition's label string and kept sorted by that rank.
template <class F>
class LinComb {
 public:
  using Term = std::pair<std::uint32_t, F>;

  LinComb() = default;
  LinComb(std::size_t upper, std::size_t lower) : k_(upper), l_(lower) {}

  static LinComb basis(const Partition& p, const F& c = F(1)) {
    LinComb v(p.upper(), p.lower());
    if (!c.is_zero()) v.t_.emplace_back(rank(p), c);
    return v;
  }
  static LinComb fromTerms(std::size_t upper, std::size_t lower, std::vector<Term> terms) {
    LinComb v(upper, lower);
    std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    for (auto& t : terms) {
      if (!v.t_.empty() && v.t_.back().first == t.first) {
        v.t_.back().second += t.second;
      } else {
        if (!v.t_.empty() && v.t_.back().second.is_zero()) v.t_.pop_back();
        v.t_.push_back(std::move(t));
      }
    }
    if (!v.t_.empty() && v.t_.back().second.is_zero()) v.t_.pop_back();
    return v;
  }

  std::size_t upper() const { return k_; }
  std::size_t lower() const { return l_; }
  std::size_t length() const { return k_ + l_; }
  bool sameShape(const LinComb& o) const { return k_ == o.k_ && l_ == o.l_; }
  const std::vector<Term>& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }

  Partition partitionAt(std::size_t i) const { return unrank(k_, l_, t_[i].first); }
  F coefficientAt(std::uint32_t idx) const {
    auto it = std::lower_bound(t_.begin(), t_.end(), idx, [](const Term& a, std::uint32_t x) { return a.first < x; });
    return (it != t_.end() && it->first == idx) ? it->second : F(0);
  }
  F coefficientOf(const Partition& p) const {
    if (p.upper() != k_ || p.lower() != l_) throw ShapeMismatch("coefficientOf: shape mismatch");
    return coefficientAt(rank(p));
  }

  LinComb operator-() const {
    LinComb r = *this;
    for (auto& t : r.t_) t.second = -t.second;
    return r;
  }
  friend LinComb operator+(const LinComb& a, const LinComb& b) { return combine(a, b, false); }
  friend LinComb operator-(const LinComb& a, const LinComb& b) { return combine(a, b, true); }
  LinComb& operator+=(const LinComb& o) { return *this = *this + o; }
  LinComb& operator-=(const LinComb& o) { return *this = *this - o; }
  friend LinComb operator*(const F& c, const LinComb& v) {
    LinComb r(v.k_, v.l_);
    if (c.is_zero()) return r;
    r.t_.reserve(v.t_.size());
    for (auto& t : v.t_) {
      F x = c * t.second;
      if (!x.is_zero()) r.t_.emplace_back(t.first, std::move(x));
    }
    return r;
  }
  friend bool operator==(const LinComb& a, const LinComb& b) {
    if (!a.sameShape(b) || a.t_.size() != b.t_.size()) return false;
    for (std::size_t i = 0; i < a.t_.size(); ++i)
      if (a.t_[i].first != b.t_[i].first || !(a.t_[i].second == b.t_[i].second)) return false;
    return true;
  }

  // Apply f to every coefficient (e.g. specialization); drops zeros.
  template <class G, class Fn>
  LinComb<G> mapCoeffs(Fn&& fn) const {
    std::vector<typename LinComb<G>::Term> out;
    out.reserve(t_.size());
    for (auto& t : t_) {
      G g = fn(t.second);
      if (!g.is_zero()) out.emplace_back(t.first, std::move(g));
    }
    return LinComb<G>::fromTerms(k_, l_, std::move(out));
  }

  // "c*word + ..." highest rank first; zero prints as "0"
  std::string str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (std::size_t n = t_.size(); n-- > 0;) {
      std::string c = t_[n].second.str();
      std::string w = partitionAt(n).word();
      if (w.empty()) w = "()";
      bool compound = c.find(' ') != std::string::npos || c.find("/(") != std::string::npos;
      if (s.empty()) {
        s = compound ? "(" + c + ")*" + w : c + "*" + w;
      } else if (!compound && c[0] == '-') {
        s += " - " + c.substr(1) + "*" + w;
      } else {
        s += " + " + (compound ? "(" + c + ")" : c) + "*" + w;
      }
    }
    return s;
  }

 private:
  static LinComb combine(const LinComb& a, const LinComb& b, bool subtract) {
    if (!a.sameShape(b)) {
      if (a.is_zero() && a.k_ == 0 && a.l_ == 0) return subtract ? -b : b;
      if (b.is_zero() && b.k_ == 0 && b.l_ == 0) return a;
      throw ShapeMismatch("linear combination of different shapes");
    }
    LinComb r(a.k_, a.l_);
    r.t_.reserve(a.t_.size() + b.t_.size());
    std::size_t i = 0, j = 0;
    while (i < a.t_.size() || j < b.t_.size()) {
      if (j == b.t_.size() || (i < a.t_.size() && a.t_[i].first < b.t_[j].first)) {
        r.t_.push_back(a.t_[i++]);
      } else if (i == a.t_.size() || b.t_[j].first < a.t_[i].first) {
        r.t_.emplace_back(b.t_[j].first, subtract ? -b.t_[j].second : b.t_[j].second);
        ++j;
      } else {
        F c = subtract ? a.t_[i].second - b.t_[j].second : a.t_[i].second + b.t_[j].second;
        if (!c.is_zero()) r.t_.emplace_back(a.t_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::size_t k_ = 0, l_ = 0;
  std::vector<Term> t_;
};

// Reduced row echelon basis of a subspace of one shape. Pivot of a row is its
// smallest index; pivot coefficients are 1 and pivot columns appear in no
// other row.
template <class F>
class ModuleBasis {
 public:
  ModuleBasis() = default;
  explicit ModuleBasis(std::size_t length) : l_(length) {}
  ModuleBasis(std::size_t upper, std::size_t lower) : k_(upper), l_(lower) {}

  // span of distinct plain partitions, given by rank
  static ModuleBasis ofPartitions(std::size_t upper, std::size_t lower, std::vector<std::uint32_t> ranks) {
    ModuleBasis m(upper, lower);
    std::sort(ranks.begin(), ranks.end());
    ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
    m.rows_.reserve(ranks.size());
    for (auto r : ranks) m.rows_.push_back(LinComb<F>::fromTerms(upper, lower, {{r, F(1)}}));
    m.pivots_ = std::move(ranks);
    return m;
  }

  std::size_t upper() const { return k_; }
  std::size_t lower() const { return l_; }
  std::size_t length() const { return k_ + l_; }
  std::size_t dimension() const { return rows_.size(); }
  const std::vector<LinComb<F>>& rows() const { return rows_; }
  const std::vector<std::uint32_t>& pivots() const { return pivots_; }
  bool full() const { return rows_.size() == bell(length()); }

  // observer sees each pivot coefficient before it is scaled to 1
  void setPivotObserver(std::function<void(const F&)> fn) { observer_ = std::move(fn); }

  LinComb<F> reduce(const LinComb<F>& v) const {
    check(v);
    if (v.is_zero() || full()) return LinComb<F>(k_, l_);
    std::vector<typename LinComb<F>::Term> acc;
    bool touched = false;
    for (auto& t : v.terms()) {
      auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), t.first);
      if (pos == pivots_.end() || *pos != t.first) continue;
      const auto& row = rows_[static_cast<std::size_t>(pos - pivots_.begin())];
      if (!touched) {
        acc.assign(v.terms().begin(), v.terms().end());
        touched = true;
      }
      for (auto& rt : row.terms()) acc.emplace_back(rt.first, -(t.second * rt.second));
    }
    if (!touched) return v;
    return LinComb<F>::fromTerms(k_, l_, std::move(acc));
  }

  bool contains(const LinComb<F>& v) const { return reduce(v).is_zero(); }

  // Returns true iff the span grew.
  bool insert(const LinComb<F>& v) {
    LinComb<F> r = reduce(v);
    if (r.is_zero()) return false;
    const std::uint32_t piv = r.terms().front().first;
    const F lead = r.terms().front().second;
    if (observer_) observer_(lead);
    if (!(lead == F(1))) r = (F(1) / lead) * r;
    for (auto& row : rows_) {
      F c = row.coefficientAt(piv);
      if (!c.is_zero()) row = row - c * r;
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    auto at = pos - pivots_.begin();
    pivots_.insert(pos, piv);
    rows_.insert(rows_.begin() + at, std::move(r));
    return true;
  }

  friend bool operator==(const ModuleBasis& a, const ModuleBasis& b) {
    return a.k_ == b.k_ && a.l_ == b.l_ && a.rows_ == b.rows_;
  }

  // one row per line, ascending pivot
  std::string dump() const {
    std::string s;
    for (auto& r : rows_) s += r.str() + "\n";
    return s;
  }

 private:
  void check(const LinComb<F>& v) const {
    if (v.upper() != k_ || v.lower() != l_) {
      if (v.is_zero()) return;
      throw ShapeMismatch("module basis: shape mismatch");
    }
  }
  std::size_t k_ = 0, l_ = 0;
  std::vector<LinComb<F>> rows_;
  std::vector<std::uint32_t> pivots_;
  std::function<void(const F&)> observer_;
};

template <class F>
struct CategoryApprox {
  std::size_t lengthBound = 0;
  std::vector<ModuleBasis<F>> spaces;  // index = length
  std::size_t passes = 0;
  std::vector<std::vector<std::size_t>> dimsPerPass;

  CategoryApprox() = default;
  explicit CategoryApprox(std::size_t l0) : lengthBound(l0) {
    for (std::size_t l = 0; l <= l0; ++l) spaces.emplace_back(l);
  }
  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> d;
    for (auto& s : spaces) d.push_back(s.dimension());
    return d;
  }
};

// Coefficient conversions used when moving between symbolic and specialized runs.
LinComb<Coeff> toCoeff(const LinComb<Rational>& v);
LinComb<Coeff> specialize(const LinComb<Coeff>& v, const Specialization& s);
// all coefficients must be constants
LinComb<Rational> toRational(const LinComb<Coeff>& v);

}  // namespace partcat
