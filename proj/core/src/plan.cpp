#include "partcat/ops.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace partcat {

void ContractionPlan::validate() const {
  if (vertexCount < 1 || legArity < 1) throw std::invalid_argument("plan: need at least one vertex and one leg");
  std::vector<int> seen(static_cast<std::size_t>(vertexCount * legArity), 0);
  auto mark = [&](Leg g) {
    if (g.vertex < 0 || g.vertex >= vertexCount || g.leg < 0 || g.leg >= legArity)
      throw std::invalid_argument("plan: leg " + g.str() + " out of range");
    if (seen[static_cast<std::size_t>(g.vertex * legArity + g.leg)]++)
      throw std::invalid_argument("plan: leg " + g.str() + " used twice");
  };
  for (auto& [a, b] : edges) {
    mark(a);
    mark(b);
  }
  for (auto g : freeLegs) mark(g);
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) {
      Leg g{static_cast<int>(i) / legArity, static_cast<int>(i) % legArity};
      throw std::invalid_argument("plan: leg " + g.str() + " neither glued nor free");
    }
}

ContractionPlan ContractionPlan::cycle(int copies) {
  if (copies < 2) throw std::out_of_range("cycle plan needs at least two copies");
  ContractionPlan p;
  p.vertexCount = copies;
  p.legArity = 4;
  // double bonds along the chain, nested: leg 4 -> next leg 1, leg 3 -> next leg 2
  for (int i = 0; i + 1 < copies; ++i) {
    p.edges.push_back({Leg{i, 3}, Leg{i + 1, 0}});
    p.edges.push_back({Leg{i, 2}, Leg{i + 1, 1}});
  }
  // single bond closing the ring; its two endpoints keep one free leg each
  p.edges.push_back({Leg{copies - 1, 3}, Leg{0, 0}});
  p.freeLegs = {Leg{0, 1}, Leg{copies - 1, 2}};
  return p;
}

namespace {

struct Planner {
  const ContractionPlan& plan;
  PlannerHeuristic h;
  std::vector<int> partner;  // leg id -> glued leg id or -1
  std::size_t cap = 0;
  std::vector<PlanStep> steps;
  std::vector<Leg> stuck;

  int id(Leg g) const { return g.vertex * plan.legArity + g.leg; }

  // index i such that (i, i+1 mod n) is an edge; -1 if none
  long adjacentEdge(const std::vector<Leg>& b) const {
    const long n = static_cast<long>(b.size());
    if (n < 2) return -1;
    const long pairs = n == 2 ? 1 : n;
    std::vector<long> order(static_cast<std::size_t>(pairs));
    for (long i = 0; i < pairs; ++i) order[static_cast<std::size_t>(i)] = i;
    if (h == PlannerHeuristic::LastFit) std::reverse(order.begin(), order.end());
    for (long i : order)
      if (partner[static_cast<std::size_t>(id(b[static_cast<std::size_t>(i)]))] ==
          id(b[static_cast<std::size_t>((i + 1) % n)]))
        return i;
    return -1;
  }

  bool finish(const std::vector<Leg>& b) {
    const auto& fl = plan.freeLegs;
    if (b.size() != fl.size()) return false;
    if (b.empty()) return true;
    const std::size_t n = b.size();
    for (std::size_t s = 0; s < n; ++s) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) ok = b[(i + s) % n] == fl[i];
      if (ok) {
        // current b[s] must end up at position 0: move it left by s, i.e. R^-s
        if (s) steps.push_back(PlanStep{PlanStep::Rotate, 0, 0, 0, -static_cast<long>(s)});
        return true;
      }
    }
    return false;
  }

  bool dfs(std::vector<Leg> b, std::vector<char> placed) {
    std::size_t mark = steps.size();
    for (long i; (i = adjacentEdge(b)) >= 0;) {
      const std::size_t n = b.size();
      steps.push_back(PlanStep{PlanStep::Contract, 0, 0, static_cast<std::size_t>(i), 0});
      if (static_cast<std::size_t>(i) + 1 < n) {
        b.erase(b.begin() + i, b.begin() + i + 2);
      } else {
        b.erase(b.begin() + static_cast<long>(n) - 1);
        b.erase(b.begin());
      }
    }
    bool all = std::all_of(placed.begin(), placed.end(), [](char c) { return c != 0; });
    if (all) {
      if (finish(b)) return true;
      if (stuck.empty() || b.size() < stuck.size()) stuck = b;
      steps.resize(mark);
      return false;
    }
    std::vector<int> cands;
    for (int v = 0; v < plan.vertexCount; ++v) {
      if (placed[static_cast<std::size_t>(v)]) continue;
      bool linked = b.empty();
      for (int g = 0; g < plan.legArity && !linked; ++g) {
        int p = partner[static_cast<std::size_t>(id(Leg{v, g}))];
        if (p < 0) continue;
        for (auto& x : b)
          if (id(x) == p) linked = true;
      }
      if (linked) cands.push_back(v);
      if (b.empty()) break;
    }
    if (h == PlannerHeuristic::LastFit) std::reverse(cands.begin(), cands.end());
    const std::size_t n = b.size();
    for (int v : cands) {
      const std::size_t positions = n == 0 ? 1 : n;
      const int offsets = n == 0 ? 1 : plan.legArity;
      for (std::size_t pos0 = 0; pos0 < positions; ++pos0) {
        std::size_t pos = h == PlannerHeuristic::LastFit ? positions - 1 - pos0 : pos0;
        for (int off = 0; off < offsets; ++off) {
          if (n + static_cast<std::size_t>(plan.legArity) > cap) continue;
          std::vector<Leg> nb(b.begin(), b.begin() + static_cast<long>(pos));
          for (int g = 0; g < plan.legArity; ++g) nb.push_back(Leg{v, (off + g) % plan.legArity});
          nb.insert(nb.end(), b.begin() + static_cast<long>(pos), b.end());
          if (n > 0 && adjacentEdge(nb) < 0) continue;
          auto np = placed;
          np[static_cast<std::size_t>(v)] = 1;
          steps.push_back(PlanStep{PlanStep::Insert, v, off, pos, 0});
          if (dfs(nb, np)) return true;
          steps.pop_back();
        }
      }
    }
    if (stuck.empty() || b.size() < stuck.size()) stuck = b;
    steps.resize(mark);
    return false;
  }
};

}  // namespace

std::vector<PlanStep> planContraction(const ContractionPlan& plan, PlannerHeuristic h) {
  plan.validate();
  Planner pl{plan, h, std::vector<int>(static_cast<std::size_t>(plan.vertexCount * plan.legArity), -1), 0, {}, {}};
  for (auto& [a, b] : plan.edges) {
    pl.partner[static_cast<std::size_t>(pl.id(a))] = pl.id(b);
    pl.partner[static_cast<std::size_t>(pl.id(b))] = pl.id(a);
  }
  for (std::size_t c = static_cast<std::size_t>(plan.legArity); c <= kEnumerationCap; ++c) {
    pl.cap = c;
    pl.steps.clear();
    std::vector<char> placed(static_cast<std::size_t>(plan.vertexCount), 0);
    if (pl.dfs({}, placed)) return pl.steps;
  }
  std::ostringstream os;
  os << "no planar contraction order found; stuck boundary:";
  for (auto& g : pl.stuck) os << " " << g.str();
  throw PlannerFailure(os.str());
}

}  // namespace partcat
