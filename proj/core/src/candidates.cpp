#include "partcat/candidates.hpp"

#include "partcat/maps.hpp"
#include "partcat/text.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace partcat {

const std::vector<CandidateRow>& builtinCandidates() {
  // one-singleton class of a 4-block: aaab abbb abaa aaba; two-singleton class: the six words below
  // 3-point root rows: b = (1 +/- s) c and a = -(2+d) b - d c with c = 1, the
  // only choice for which the length-1 space stays empty
  static const std::vector<CandidateRow> rows = {
      {"C1", "d^2*aaa - d*abb - d*aab - d*aba + 2*abc", "P image of the 3-block", false},
      {"C1+", "(-2*(1+d) - (2+d)*s)*aaa + (1+s)*abb + (1+s)*aab + (1+s)*aba + abc",
       "V image of the 3-block, root 1+s", true},
      {"C1-", "(-2*(1+d) + (2+d)*s)*aaa + (1-s)*abb + (1-s)*aab + (1-s)*aba + abc",
       "V image of the 3-block, root 1-s", true},
      {"C2",
       "d^3*aaaa - 2*d^2*aaab - 2*d^2*abbb - 2*d^2*abaa - 2*d^2*aaba"
       " + 4*d*aabc + 4*d*abac + 4*d*abbc + 4*d*abca + 4*d*abcb + 4*d*abcc - 16*abcd",
       "T image of the 4-block", false},
      {"C2+",
       "d^3*(d+1)*aaaa - d^2*(d+1+s)*aaab - d^2*(d+1+s)*abbb - d^2*(d+1+s)*abaa - d^2*(d+1+s)*aaba"
       " + d*(d+2+2*s)*aabc + d*(d+2+2*s)*abac + d*(d+2+2*s)*abbc + d*(d+2+2*s)*abca"
       " + d*(d+2+2*s)*abcb + d*(d+2+2*s)*abcc + (d^2-4*d-8-8*s)*abcd",
       "V image of the 4-block, root +s", true},
      {"C2-",
       "d^3*(d+1)*aaaa - d^2*(d+1-s)*aaab - d^2*(d+1-s)*abbb - d^2*(d+1-s)*abaa - d^2*(d+1-s)*aaba"
       " + d*(d+2-2*s)*aabc + d*(d+2-2*s)*abac + d*(d+2-2*s)*abbc + d*(d+2-2*s)*abca"
       " + d*(d+2-2*s)*abcb + d*(d+2-2*s)*abcc + (d^2-4*d-8+8*s)*abcd",
       "V image of the 4-block, root -s", true},
      {"C3a", "d^2*abab - 2*d*abac - 2*d*abcb + 4*abcd", "D image of the crossing", false},
      {"C3b", "abab - 2*aaaa", "J image of the crossing", false},
      {"C4", "d^2*aaaa - d*aaab - d*abbb - d*abaa - d*aaba + abac + abcb",
       "P image of the 4-block, shortened", false},
  };
  return rows;
}

std::string CandidateInstance::label() const {
  return id + " @ " + (delta ? "d=" + delta->str() : std::string("generic d"));
}

CandidateInstance instantiate(const CandidateRow& row, std::optional<Rational> delta) {
  CandidateInstance inst{row.id, row.role, delta, parseLinComb(row.expression, {{"s"}, row.needsRoot})};
  Specialization sp;
  if (delta) sp.bindings[vars::kDelta] = delta->value();
  if (row.needsRoot) {
    if (!delta) throw std::domain_error(row.id + ": needs a specialized d with d+1 a rational square");
    auto s = rationalSqrt(*delta + Rational(1));
    if (!s) throw std::domain_error(row.id + ": sqrt(d+1) is irrational at d=" + delta->str());
    sp.bindings[vars::index("s")] = s->value();
  }
  if (!sp.bindings.empty()) inst.generator = specialize(inst.generator, sp);
  return inst;
}

bool CandidateCheck::passed() const {
  if (report.easy()) return false;
  for (auto& g : report.generators)
    if (g.containedCount() != 0) return false;
  return true;
}

CandidateCheck checkCandidate(const CandidateInstance& inst, std::size_t l0, unsigned jobs) {
  ClosureOptions opts;
  opts.lengthBound = l0;
  opts.jobs = jobs;
  CandidateCheck out{inst, {}};
  if (inst.delta) {
    Closure<Rational> run(Algebra<Rational>(*inst.delta), opts);
    const auto g = toRational(inst.generator);
    run.run({g});
    out.report = easinessReport(run, {g});
    out.report.specialization = "d=" + inst.delta->str();
  } else {
    Closure<Coeff> run(Algebra<Coeff>(Coeff::delta()), opts);
    run.run({inst.generator});
    out.report = easinessReport(run, {inst.generator});
  }
  return out;
}

std::vector<CandidateInstance> table1Instances(std::optional<Rational> delta) {
  std::vector<CandidateInstance> out;
  for (auto& row : builtinCandidates()) {
    if (!row.needsRoot) {
      if (delta) {
        out.push_back(instantiate(row, delta));
      } else {
        out.push_back(instantiate(row, std::nullopt));
        out.push_back(instantiate(row, Rational(7)));
      }
      continue;
    }
    if (delta) {
      const bool square = rationalSqrt(*delta + Rational(1)).has_value();
      out.push_back(instantiate(row, square ? *delta : Rational(8)));
    } else {
      for (long d : {8, 15, 24}) out.push_back(instantiate(row, Rational(d)));
    }
  }
  return out;
}

}  // namespace partcat

namespace partcat {

namespace {

bool sameMultiset(std::vector<Coeff> a, std::vector<Coeff> b) {
  if (a.size() != b.size()) return false;
  for (auto& x : a) {
    auto it = std::find(b.begin(), b.end(), x);
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}

LinComb<Rational> branchGenerator(const Rational& d, const Rational& c) {
  auto w = [](const char* s) { return LinComb<Rational>::basis(Partition::fromWord(s)); };
  const Rational a = -(Rational(2) + d) - d * c;
  return a * w("aaa") + w("aab") + w("abb") + w("aba") + c * w("abc");
}

}  // namespace

bool ThreePointDerivation::ok() const {
  if (!partsMatch || !numeratorFactor) return false;
  for (auto& s : samples)
    if (!s.agrees()) return false;
  return true;
}

std::string ThreePointDerivation::text() const {
  std::ostringstream os;
  os << "three-point derivation\n  singleton coefficients from seeding:\n";
  for (auto& c : fromParts) os << "    " << c.str() << "\n";
  os << "  match expected linear forms: " << (partsMatch ? "yes" : "no") << "\n";
  os << "  after one tensor pass (b = 1): " << onePass.str() << "\n";
  os << "  target: " << target.str() << "\n";
  os << "  numerator / target: " << (numeratorFactor ? numeratorFactor->str() : "not a constant") << "\n";
  std::size_t on = 0, bad = 0;
  for (auto& s : samples) {
    on += s.targetVanishes;
    bad += !s.agrees();
  }
  os << "  locus samples: " << samples.size() << " (" << on << " on the zero set), disagreements " << bad << "\n";
  for (auto& s : samples)
    if (!s.agrees())
      os << "    d=" << s.delta << " c=" << s.c << ": target " << (s.targetVanishes ? "vanishes" : "nonzero")
         << ", singleton dim " << s.singletonDim << "\n";
  return os.str();
}

ThreePointDerivation deriveThreePoint(std::size_t l0) {
  const auto t0 = std::chrono::steady_clock::now();
  ThreePointDerivation out;
  const SymbolScope scope{{"a", "b1", "b2", "b3", "c"}, true};
  ClosureOptions opts;
  opts.lengthBound = l0;
  opts.trace = true;

  {
    Closure<Coeff> run(Algebra<Coeff>(Coeff::delta()), opts);
    run.addParts(3, {parseLinComb("a*aaa + b1*aab + b2*abb + b3*aba + c*abc", scope)});
    for (auto& v : run.offered()[1])
      if (!v.is_zero()) out.fromParts.push_back(v.terms().front().second);
    for (const char* e : {"a + b1 + b2 + d*b3 + d*c", "a + b1 + d*b2 + b3 + d*c", "a + d*b1 + b2 + b3 + d*c"})
      out.expected.push_back(parseCoeff(e, scope));
    out.partsMatch = sameMultiset(out.fromParts, out.expected);
  }

  out.target = parseCoeff("(d-1)*(d-2)*(d*c+2)*(d*c^2+2*c-1)", scope);
  {
    Closure<Coeff> run(Algebra<Coeff>(Coeff::delta()), opts);
    run.seed({parseLinComb("(-(2+d) - d*c)*aaa + aab + abb + aba + c*abc", scope)});
    const std::size_t before = run.offered()[1].size();
    run.addTensors();
    for (std::size_t i = before; i < run.offered()[1].size(); ++i) {
      const auto& v = run.offered()[1][i];
      if (v.is_zero()) continue;
      out.onePass = v.terms().front().second;
      Poly q;
      if (Poly::try_divide(out.onePass.num(), out.target.num(), q) && q.is_constant() && !q.is_zero())
        out.numeratorFactor = Rational(q.constant_value());
      break;
    }
  }

  // the zero set of the singleton after one pass, sampled at rational points
  const std::vector<Rational> cs = {Rational(-2),    Rational(-1),    Rational(-1, 2), Rational(-1, 3), Rational(-1, 4),
                                    Rational(-2, 3), Rational(-2, 15), Rational(0),     Rational(1, 5),  Rational(1, 4),
                                    Rational(1, 3),  Rational(1, 2),   Rational(1),     Rational(2),     Rational(3)};
  ClosureOptions plain;
  plain.lengthBound = l0;
  const int cIdx = vars::index("c");
  for (long d : {1, 2, 3, 7, 8, 15}) {
    for (auto& c : cs) {
      Substitution sub{{vars::kDelta, Rational(d).value()}, {cIdx, c.value()}};
      LocusSample s{Rational(d), c, out.target.num().substitute(sub).is_zero(), 0};
      Closure<Rational> run(Algebra<Rational>(Rational(d)), plain);
      run.seed({branchGenerator(Rational(d), c)});
      run.addTensors();
      s.singletonDim = run.approx().spaces[1].dimension();
      out.samples.push_back(s);
    }
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace partcat
