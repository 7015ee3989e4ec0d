#pragma once

#include "partcat/linalg.hpp"
#include "partcat/tables.hpp"

#include <string>
#include <vector>

namespace partcat {

// Category and word operations on linear combinations, with loop parameter delta.
template <class F>
class Algebra {
 public:
  using Vec = LinComb<F>;

  explicit Algebra(F delta) : delta_(std::move(delta)) {}
  const F& delta() const { return delta_; }
  F deltaPow(int n) const {
    F r(1);
    for (int i = 0; i < n; ++i) r = r * delta_;
    return r;
  }

  // two singletons on one line / the pair, as one-line vectors
  static Vec pair() { return Vec::basis(Partition::fromWord("aa")); }
  static Vec unit() { return Vec::basis(Partition(0, 0, {})); }  // identity of the empty object
  static Vec word(const std::string& w, const F& c = F(1)) { return Vec::basis(Partition::fromTwoRow(w), c); }
  static Vec identity(std::size_t n) { return Vec::basis(Partition::identity(n)); }

  Vec tensor(const Vec& a, const Vec& b) const {
    std::vector<typename Vec::Term> out;
    out.reserve(a.size() * b.size());
    const bool flat = a.upper() == 0 && b.upper() == 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        std::uint32_t r = flat ? tables::tensorRank(a.lower(), a.terms()[i].first, b.lower(), b.terms()[j].first)
                               : rank(ops::tensor(a.partitionAt(i), b.partitionAt(j)));
        out.emplace_back(r, a.terms()[i].second * b.terms()[j].second);
      }
    }
    return Vec::fromTerms(a.upper() + b.upper(), a.lower() + b.lower(), std::move(out));
  }

  // q after p
  Vec compose(const Vec& q, const Vec& p) const {
    if (p.lower() != q.upper()) throw ShapeMismatch("compose: inner shapes differ");
    std::vector<typename Vec::Term> out;
    for (std::size_t i = 0; i < q.size(); ++i) {
      Partition qi = q.partitionAt(i);
      for (std::size_t j = 0; j < p.size(); ++j) {
        auto [r, loops] = ops::compose(qi, p.partitionAt(j));
        out.emplace_back(rank(r), q.terms()[i].second * p.terms()[j].second * deltaPow(loops));
      }
    }
    return Vec::fromTerms(p.upper(), q.lower(), std::move(out));
  }

  Vec involution(const Vec& p) const {
    return mapBasis(p, p.lower(), p.upper(), [](const Partition& x) { return ops::involution(x); });
  }

  Vec contract(const Vec& p) const { return contractAt(p, 0); }

  // merge points pos, pos+1 (0-based) and remove them
  Vec contractAt(const Vec& p, std::size_t pos) const {
    requireOneLine(p);
    if (p.lower() < 2 || pos + 1 >= p.lower()) throw std::domain_error("contraction needs two adjacent points");
    std::vector<typename Vec::Term> out;
    out.reserve(p.size());
    if (pos == 0) {
      const auto& tab = tables::oneLine(p.lower());
      for (auto& [idx, c] : p.terms())
        out.emplace_back(tab.contract[idx], tab.contractLoop[idx] ? c * delta_ : c);
    } else {
      for (std::size_t i = 0; i < p.size(); ++i) {
        auto [q, loop] = ops::contractAt(p.partitionAt(i), pos);
        const F& c = p.terms()[i].second;
        out.emplace_back(rank(q), loop ? c * delta_ : c);
      }
    }
    return Vec::fromTerms(0, p.lower() - 2, std::move(out));
  }

  Vec rotate(const Vec& p, long times = 1) const {
    requireOneLine(p);
    if (p.lower() == 0) {
      if (p.is_zero()) return p;
      throw std::domain_error("rotation of a length-0 vector");
    }
    long n = static_cast<long>(p.lower());
    long s = ((times % n) + n) % n;
    if (s == 0) return p;
    const auto& tab = tables::oneLine(p.lower());
    std::vector<typename Vec::Term> out(p.terms().begin(), p.terms().end());
    bool back = s > n / 2;
    long steps = back ? n - s : s;
    for (long k = 0; k < steps; ++k)
      for (auto& t : out) t.first = back ? tab.rotateInv[t.first] : tab.rotate[t.first];
    return Vec::fromTerms(0, p.lower(), std::move(out));
  }

  Vec reflect(const Vec& p) const {
    requireOneLine(p);
    const auto& tab = tables::oneLine(p.lower());
    std::vector<typename Vec::Term> out(p.terms().begin(), p.terms().end());
    for (auto& t : out) t.first = tab.reflect[t.first];
    return Vec::fromTerms(0, p.lower(), std::move(out));
  }

  Vec leftRotate(const Vec& p) const {
    return mapBasis(p, p.upper() - 1, p.lower() + 1, [](const Partition& x) { return ops::leftRotate(x); });
  }
  Vec rightRotate(const Vec& p) const {
    return mapBasis(p, p.upper() + 1, p.lower() - 1, [](const Partition& x) { return ops::rightRotate(x); });
  }
  Vec leftRotateInverse(const Vec& p) const {
    return mapBasis(p, p.upper() + 1, p.lower() - 1, [](const Partition& x) { return ops::leftRotateInverse(x); });
  }
  Vec rightRotateInverse(const Vec& p) const {
    return mapBasis(p, p.upper() - 1, p.lower() + 1, [](const Partition& x) { return ops::rightRotateInverse(x); });
  }
  Vec toOneLine(const Vec& p) const {
    return mapBasis(p, 0, p.length(), [](const Partition& x) { return ops::toOneLine(x); });
  }
  Vec fromOneLine(const Vec& p, std::size_t upper) const {
    requireOneLine(p);
    return mapBasis(p, upper, p.lower() - upper, [upper](const Partition& x) { return ops::fromOneLine(x, upper); });
  }

  // One-line form of (two-row q with l upper points) after (two-row p with k
  // upper points), computed purely with tensor and contractions at the junction.
  Vec composeViaWords(const Vec& q, const Vec& p, std::size_t k, std::size_t l, std::size_t m) const {
    requireOneLine(p);
    requireOneLine(q);
    if (p.lower() != k + l || q.lower() != l + m) throw ShapeMismatch("composeViaWords: lengths do not match k,l,m");
    Vec w = tensor(p, q);
    for (std::size_t j = 0; j < l; ++j) w = contractAt(w, k + l - 1 - j);
    return w;
  }

  // f(R) p for univariate f with rational coefficients
  Vec rotationPolynomial(const Poly& f, const Vec& p) const {
    requireOneLine(p);
    int v = f.single_var();
    if (v < 0 && !f.is_constant()) throw std::domain_error("rotationPolynomial: f must be univariate");
    Vec acc(0, p.lower());
    for (auto& t : f.terms()) {
      unsigned e = v < 0 ? 0 : t.m.exp(v);
      acc += F(Rational(t.c)) * rotate(p, static_cast<long>(e));
    }
    return acc;
  }

 private:
  static void requireOneLine(const Vec& p) {
    if (p.upper() != 0) throw std::domain_error("word operation on a two-row vector");
  }
  template <class Fn>
  Vec mapBasis(const Vec& p, std::size_t k, std::size_t l, Fn&& fn) const {
    std::vector<typename Vec::Term> out;
    out.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out.emplace_back(rank(fn(p.partitionAt(i))), p.terms()[i].second);
    return Vec::fromTerms(k, l, std::move(out));
  }

  F delta_;
};

// ---- planar contraction plans ----

struct Leg {
  int vertex = 0;  // 0-based
  int leg = 0;     // 0-based
  friend bool operator==(Leg a, Leg b) { return a.vertex == b.vertex && a.leg == b.leg; }
  std::string str() const { return std::to_string(vertex + 1) + "." + std::to_string(leg + 1); }
};

struct ContractionPlan {
  int vertexCount = 0;
  int legArity = 0;
  std::vector<std::pair<Leg, Leg>> edges;
  std::vector<Leg> freeLegs;

  void validate() const;  // throws std::invalid_argument on bad bookkeeping
  static ContractionPlan cycle(int copies);  // cycle of four-valent vertices, two free legs
};

struct PlanStep {
  enum Kind { Insert, Contract, Rotate } kind = Insert;
  int vertex = 0;       // Insert: which vertex
  int offset = 0;       // Insert: leg rotation (legs start at offset)
  std::size_t pos = 0;  // Insert: boundary position; Contract: first of the two positions (cyclic)
  long times = 0;       // Rotate: R^times to line up the free legs
};

struct PlannerFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class PlannerHeuristic { FirstFit, LastFit };

// Sequence of steps realizing the plan on a one-line boundary; throws
// PlannerFailure with the stuck boundary when none exists within length cap.
std::vector<PlanStep> planContraction(const ContractionPlan& plan, PlannerHeuristic h = PlannerHeuristic::FirstFit);

template <class F>
LinComb<F> executePlan(const Algebra<F>& alg, const ContractionPlan& plan, const LinComb<F>& gen,
                       PlannerHeuristic h = PlannerHeuristic::FirstFit) {
  plan.validate();
  if (gen.upper() != 0 || static_cast<int>(gen.lower()) != plan.legArity)
    throw ShapeMismatch("executePlan: generator length differs from leg arity");
  auto steps = planContraction(plan, h);
  LinComb<F> w(0, 0);
  bool started = false;
  for (auto& s : steps) {
    if (s.kind == PlanStep::Insert) {
      LinComb<F> g = alg.rotate(gen, -static_cast<long>(s.offset));
      if (!started) {
        w = g;
        started = true;
        continue;
      }
      const long n = static_cast<long>(w.lower());
      const long pos = static_cast<long>(s.pos);
      LinComb<F> moved = n ? alg.rotate(w, -pos) : w;
      LinComb<F> t = alg.tensor(moved, g);
      w = (n - pos) ? alg.rotate(t, -(n - pos)) : t;
    } else if (s.kind == PlanStep::Rotate) {
      if (w.lower()) w = alg.rotate(w, s.times);
    } else {
      const std::size_t n = w.lower();
      if (s.pos + 1 < n) {
        w = alg.contractAt(w, s.pos);
      } else {  // wrap-around pair (last, first)
        w = alg.contractAt(alg.rotate(w, 1), 0);
      }
    }
  }
  return w;
}

template <class F>
LinComb<F> cyclicContract(const Algebra<F>& alg, const LinComb<F>& gen, int copies) {
  if (copies < 1 || copies > 5) throw std::out_of_range("cyclicContract: copies must be 1..5");
  if (copies == 1) return alg.contract(gen);
  return executePlan(alg, ContractionPlan::cycle(copies), gen);
}

}  // namespace partcat
