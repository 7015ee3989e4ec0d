#pragma once

#include "partcat/ops.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

namespace partcat {

struct PassLimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct LengthBoundExceeded : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ClosureOptions {
  std::size_t lengthBound = 8;
  std::size_t passCap = 20;
  unsigned jobs = 1;
  bool trace = false;  // keep every vector offered to addParts, per length
  bool log = false;    // keep a replayable derivation of every accepted vector
};

// One accepted vector and how it was obtained.
template <class F>
struct OpRecord {
  enum Kind { Seed, Rotate, Contract, Tensor } kind = Seed;
  std::size_t length = 0;
  LinComb<F> vec;
  std::size_t parent = 0;   // Rotate / Contract: index of the source record
  LinComb<F> left, right;   // Tensor: factors; vec differs from left⊗right by an element already present
};

template <class F>
class Closure {
 public:
  using Vec = LinComb<F>;

  Closure(Algebra<F> alg, ClosureOptions opts) : alg_(std::move(alg)), opts_(opts), approx_(opts.lengthBound) {
    if (opts_.lengthBound > kEnumerationCap) throw CapacityError("length bound above 12");
    offered_.resize(opts_.lengthBound + 1);
    for (auto& sp : approx_.spaces)
      sp.setPivotObserver([this](const F& lead) { leads_.push_back(lead); });
  }
  Closure(const Closure&) = delete;
  Closure& operator=(const Closure&) = delete;

  const Algebra<F>& algebra() const { return alg_; }
  const ClosureOptions& options() const { return opts_; }
  const CategoryApprox<F>& approx() const { return approx_; }
  const std::vector<std::vector<Vec>>& offered() const { return offered_; }
  const std::vector<OpRecord<F>>& log() const { return log_; }
  const std::vector<F>& pivotLeads() const { return leads_; }

  // Adds S with all rotations, and recursively their contractions.
  // A vector already in the span adds nothing: each space is kept closed
  // under rotation with contractions landing two lengths down.
  void addParts(std::size_t l, const std::vector<Vec>& S) {
    if (l > opts_.lengthBound) throw LengthBoundExceeded("addParts: length " + std::to_string(l) + " above bound");
    for (auto& v : S) addVec(l, v, OpRecord<F>::Seed, 0, nullptr, nullptr);
  }

  // One round over all pairs k <= l with k + l <= bound; true iff anything grew.
  bool addTensors() {
    const auto before = approx_.dims();
    const std::size_t l0 = opts_.lengthBound;
    for (std::size_t k = 1; k <= l0 / 2; ++k) {
      for (std::size_t l = k; l + k <= l0; ++l) {
        const std::vector<Vec> A = approx_.spaces[k].rows();
        const std::vector<Vec> B = approx_.spaces[l].rows();
        if (A.empty() || B.empty()) continue;
        auto cands = remainders(A, B, k + l);
        for (std::size_t idx = 0; idx < cands.size(); ++idx) {
          if (cands[idx].is_zero()) continue;
          const Vec& a = A[idx / B.size()];
          const Vec& b = B[idx % B.size()];
          addVec(k + l, cands[idx], OpRecord<F>::Tensor, 0, &a, &b);
        }
      }
    }
    return approx_.dims() != before;
  }

  void seed(const std::vector<Vec>& generators) {
    // the unit only matters at d = 0, where contracting the pair loses it
    addParts(0, {Algebra<F>::unit()});
    addParts(2, {Algebra<F>::pair()});
    for (auto& g : generators) {
      if (g.upper() != 0) throw std::invalid_argument("generators must be one-line");
      if (g.lower() > opts_.lengthBound)
        throw LengthBoundExceeded("generator of length " + std::to_string(g.lower()) + " exceeds the bound");
      addParts(g.lower(), {g});
      addParts(g.lower(), {alg_.reflect(g)});
    }
    record();
  }

  // Seeds and iterates addTensors until no space grows.
  void run(const std::vector<Vec>& generators) {
    seed(generators);
    for (;;) {
      if (approx_.passes >= opts_.passCap)
        throw PassLimitExceeded("no fixed point after " + std::to_string(opts_.passCap) + " passes; dims " +
                                dimsString(approx_.dims()));
      bool changed = addTensors();
      ++approx_.passes;
      record();
      if (!changed) return;
    }
  }

  static std::string dimsString(const std::vector<std::size_t>& d) {
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? " " : "") + std::to_string(d[i]);
    return s;
  }

 private:
  using Kind = typename OpRecord<F>::Kind;

  void record() { approx_.dimsPerPass.push_back(approx_.dims()); }

  void addVec(std::size_t l, const Vec& v, Kind kind, std::size_t parent, const Vec* left, const Vec* right) {
    if (opts_.trace) offered_[l].push_back(v);
    Vec cur = v;
    const std::size_t turns = l == 0 ? 1 : l;
    std::size_t prev = parent;  // record of the vector cur was derived from
    for (std::size_t j = 0; j < turns; ++j) {
      if (!approx_.spaces[l].insert(cur)) break;
      const std::size_t me = log_.size();
      if (opts_.log) {
        OpRecord<F> r;
        r.kind = j == 0 ? kind : OpRecord<F>::Rotate;
        r.length = l;
        r.vec = cur;
        r.parent = prev;
        if (j == 0 && kind == OpRecord<F>::Tensor) {
          r.left = *left;
          r.right = *right;
        }
        log_.push_back(std::move(r));
      }
      if (l >= 2) addVec(l - 2, alg_.contract(cur), OpRecord<F>::Contract, me, nullptr, nullptr);
      prev = me;
      if (j + 1 < turns) cur = alg_.rotate(cur);
    }
  }

  // tensor products of A x B reduced against the current space; zero when already present
  std::vector<Vec> remainders(const std::vector<Vec>& A, const std::vector<Vec>& B, std::size_t len) const {
    const std::size_t n = A.size() * B.size();
    std::vector<Vec> out(n);
    const auto& space = approx_.spaces[len];
    auto work = [&](std::size_t idx) { out[idx] = space.reduce(alg_.tensor(A[idx / B.size()], B[idx % B.size()])); };
    const unsigned jobs = std::max(1u, opts_.jobs);
    if (jobs == 1 || n < 8) {
      for (std::size_t i = 0; i < n; ++i) work(i);
      return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) work(i);
      });
    for (auto& th : pool) th.join();
    return out;
  }

  Algebra<F> alg_;
  ClosureOptions opts_;
  CategoryApprox<F> approx_;
  std::vector<std::vector<Vec>> offered_;
  std::vector<OpRecord<F>> log_;
  std::vector<F> leads_;
};

struct AuditReport {
  std::size_t records = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Replays a logged run: every record must follow from its parent (or its
// tensor factors plus vectors already present), and the replayed spans must
// equal the run's spaces.
template <class F>
AuditReport auditLog(const Closure<F>& run, const std::vector<LinComb<F>>& generators) {
  AuditReport rep;
  if (!run.options().log) {
    rep.failures.push_back("run was made without logging");
    return rep;
  }
  const auto& alg = run.algebra();
  const auto& log = run.log();
  CategoryApprox<F> replay(run.approx().lengthBound);
  std::vector<LinComb<F>> seeds{Algebra<F>::unit(), Algebra<F>::pair()};
  for (auto& g : generators) {
    seeds.push_back(g);
    seeds.push_back(alg.reflect(g));
  }
  using Rec = OpRecord<F>;
  for (std::size_t i = 0; i < log.size(); ++i) {
    const Rec& r = log[i];
    const std::string at = "record " + std::to_string(i) + " (length " + std::to_string(r.length) + ")";
    bool ok = true;
    if (r.vec.upper() != 0 || r.vec.lower() != r.length) {
      ok = false;
    } else if (r.kind == Rec::Seed) {
      ok = std::find(seeds.begin(), seeds.end(), r.vec) != seeds.end();
    } else if (r.kind == Rec::Rotate || r.kind == Rec::Contract) {
      ok = r.parent < i && r.vec == (r.kind == Rec::Rotate ? alg.rotate(log[r.parent].vec) : alg.contract(log[r.parent].vec));
    } else {
      ok = replay.spaces[r.left.lower()].contains(r.left) && replay.spaces[r.right.lower()].contains(r.right) &&
           replay.spaces[r.length].contains(alg.tensor(r.left, r.right) - r.vec);
    }
    if (!ok) rep.failures.push_back(at + ": derivation does not check");
    if (!replay.spaces[r.length].insert(r.vec)) rep.failures.push_back(at + ": adds nothing");
    ++rep.records;
  }
  for (std::size_t l = 0; l < replay.spaces.size(); ++l)
    if (!(replay.spaces[l] == run.approx().spaces[l]))
      rep.failures.push_back("length " + std::to_string(l) + ": replayed span differs from the run");
  return rep;
}

struct SummandStatus {
  std::string word;
  bool contained = false;
};

struct GeneratorVerdict {
  std::string expression;
  std::vector<SummandStatus> summands;
  std::size_t containedCount() const;
  bool easy() const { return containedCount() == summands.size(); }
};

// Plain-text plus key=value summary of a finished closure run.
struct EasinessReport {
  std::size_t lengthBound = 0;
  std::size_t passes = 0;
  std::vector<std::size_t> dims;
  std::vector<std::vector<std::size_t>> dimsPerPass;
  std::vector<GeneratorVerdict> generators;
  std::string specialization = "generic";
  std::vector<std::string> loci;  // rational d values where some pivot vanishes
  std::optional<double> seconds;

  bool easy() const;
  std::string verdict() const;  // "EASY (proven)" or "NON-EASY CANDIDATE up to l0=N"
  std::string text() const;
};

// Rational roots in d of the d-only content of each pivot numerator.
std::vector<std::string> deltaLoci(const std::vector<Coeff>& leads);

template <class F>
EasinessReport easinessReport(const Closure<F>& run, const std::vector<LinComb<F>>& generators) {
  EasinessReport rep;
  const auto& ap = run.approx();
  rep.lengthBound = ap.lengthBound;
  rep.passes = ap.passes;
  rep.dims = ap.dims();
  rep.dimsPerPass = ap.dimsPerPass;
  for (auto& g : generators) {
    GeneratorVerdict gv;
    gv.expression = g.str();
    for (std::size_t i = g.size(); i-- > 0;) {
      Partition p = g.partitionAt(i);
      gv.summands.push_back({p.word(), ap.spaces[g.lower()].contains(LinComb<F>::basis(p))});
    }
    rep.generators.push_back(std::move(gv));
  }
  if constexpr (std::is_same_v<F, Coeff>) rep.loci = deltaLoci(run.pivotLeads());
  return rep;
}

// For odd-length p: (id ⊗ q) p = 0 for every partition q of l-1 upper points
// and no lower points. At length 3 these are the checks against the upper
// pair and the two upper singletons. True iff all vanish.
template <class F>
bool singletonFreeCheck(const Algebra<F>& alg, const LinComb<F>& p) {
  if (p.upper() != 0 || p.lower() % 2 == 0) throw std::domain_error("singletonFreeCheck: needs a one-line vector of odd length");
  if (p.is_zero()) return true;
  if (!(alg.rotate(p) == p) || !(alg.reflect(p) == p))
    throw std::domain_error("singletonFreeCheck: generator must be rotation and reflection invariant");
  const std::size_t l = p.lower();
  for (const Partition& q : enumerate(l - 1)) {
    std::vector<int> labels{0, 0};  // point 1 upper joined to the lower point
    for (std::size_t i = 0; i + 1 < l; ++i) labels.insert(labels.begin() + 1 + static_cast<long>(i), q.label(i) + 1);
    // labels: upper row = [0, q+1 ...], lower row = [0]
    Partition down(l, 1, labels);
    auto img = alg.compose(LinComb<F>::basis(down), alg.fromOneLine(p, 0));
    if (!img.is_zero()) return false;
  }
  return true;
}

}  // namespace partcat
