#include "partcat/maps.hpp"

#include "partcat/catalog.hpp"

#include <sstream>

namespace partcat {

MapKind parseMapKind(const std::string& name) {
  if (name == "P") return MapKind::P;
  if (name == "T") return MapKind::T;
  if (name == "D") return MapKind::D;
  if (name == "J") return MapKind::J;
  if (name == "B") return MapKind::B;
  if (name == "V+") return MapKind::Vplus;
  if (name == "V-") return MapKind::Vminus;
  throw std::invalid_argument("unknown map '" + name + "' (expected P, T, D, J, B, V+ or V-)");
}

std::string mapName(MapKind k) {
  switch (k) {
    case MapKind::P: return "P";
    case MapKind::T: return "T";
    case MapKind::D: return "D";
    case MapKind::J: return "J";
    case MapKind::B: return "B";
    case MapKind::Vplus: return "V+";
    case MapKind::Vminus: return "V-";
  }
  return "?";
}

std::optional<Rational> rationalSqrt(const Rational& q) {
  if (q.sign() < 0) return std::nullopt;
  mpz_class n = q.value().get_num(), d = q.value().get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn = sqrt(n), rd = sqrt(d);
  return Rational(mpq_class(rn, rd));
}

InContext<Rational> coisometryV(const Algebra<Rational>& alg, const LinComb<Rational>& v, bool plus) {
  const Rational& d = alg.delta();
  if (d == Rational(0) || d == Rational(1)) throw std::domain_error("V: needs d outside {0, 1}");
  auto s = rationalSqrt(d);
  if (!s) throw std::domain_error("V: d = " + d.str() + " has no rational square root; use 9, 16, 25, ...");
  const Rational loop = d - Rational(1);
  const Rational inv = Rational(1) / *s;
  const Rational t = -(Rational(1) / loop) * (plus ? Rational(1) + inv : Rational(1) - inv);
  return {pointwiseConjugate(blockMapB(v), t, loop), loop};
}

InContext<Rational> applyMap(MapKind kind, const Algebra<Rational>& alg, const LinComb<Rational>& v) {
  switch (kind) {
    case MapKind::P: return {projectP(alg, v), alg.delta()};
    case MapKind::T: return {conjugateT(alg, v), alg.delta()};
    case MapKind::D: return {disjoinD(alg, v), alg.delta()};
    case MapKind::J: return {joinJ(v), alg.delta()};
    case MapKind::B: return {blockMapB(v), alg.delta() - Rational(1)};
    case MapKind::Vplus: return coisometryV(alg, v, true);
    case MapKind::Vminus: return coisometryV(alg, v, false);
  }
  throw std::logic_error("applyMap: bad kind");
}

InContext<Coeff> applyMap(MapKind kind, const Algebra<Coeff>& alg, const LinComb<Coeff>& v) {
  switch (kind) {
    case MapKind::P: return {projectP(alg, v), alg.delta()};
    case MapKind::T: return {conjugateT(alg, v), alg.delta()};
    case MapKind::D: return {disjoinD(alg, v), alg.delta()};
    case MapKind::J: return {joinJ(v), alg.delta()};
    case MapKind::B: return {blockMapB(v), alg.delta() - Coeff(1)};
    case MapKind::Vplus:
    case MapKind::Vminus: {
      if (!alg.delta().is_constant()) throw std::domain_error("V: needs a specialized d (a rational square)");
      Algebra<Rational> ra(alg.delta().constant());
      auto r = coisometryV(ra, toRational(v), kind == MapKind::Vplus);
      return {toCoeff(r.vec), Coeff(r.loop)};
    }
  }
  throw std::logic_error("applyMap: bad kind");
}

// ---- harnesses ----

std::string HarnessReport::text() const {
  std::ostringstream os;
  os << "harness " << name << "\n";
  os << "trials: " << trials << "\nchecks: " << checks << "\nfailures: " << failures.size() << "\n";
  for (auto& f : failures) os << "  " << f << "\n";
  os << "\n[summary]\nharness=" << name << "\ntrials=" << trials << "\nchecks=" << checks
     << "\nfailures=" << failures.size() << "\nverdict=" << (ok() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

Partition randomPairing(std::size_t n, std::mt19937_64& rng) {
  if (n % 2) throw std::invalid_argument("randomPairing: odd length");
  std::vector<int> pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[i] = static_cast<int>(i);
  std::shuffle(pts.begin(), pts.end(), rng);
  std::vector<int> lab(n);
  for (std::size_t i = 0; i < n; i += 2) lab[static_cast<std::size_t>(pts[i])] = lab[static_cast<std::size_t>(pts[i + 1])] = static_cast<int>(i / 2);
  return Partition(0, n, lab);
}

namespace {

using RVec = LinComb<Rational>;

struct Checker {
  HarnessReport& rep;
  void expect(bool ok, const std::string& what) {
    ++rep.checks;
    if (!ok) rep.failures.push_back(what);
  }
};

}  // namespace

HarnessReport functorHarness(MapKind kind, const Rational& delta, std::size_t trials, std::size_t maxLen,
                             std::uint64_t seed, long joinFactor) {
  if (kind != MapKind::D && kind != MapKind::J) throw std::invalid_argument("functorHarness: D or J only");
  if (maxLen < 2 || maxLen > 10) throw CapacityError("functorHarness: maxLen must be in 2..10");
  HarnessReport rep;
  rep.name = mapName(kind) + (kind == MapKind::J && joinFactor != -2 ? "(factor " + std::to_string(joinFactor) + ")" : "");
  rep.trials = trials;
  Algebra<Rational> alg(delta);
  auto M = [&](const RVec& v) { return kind == MapKind::D ? disjoinD(alg, v) : joinJ(v, joinFactor); };
  Checker ck{rep};
  for (std::size_t i = 0; i < trials; ++i) {
    std::mt19937_64 rng(seed + i);
    const std::size_t n = 2 * std::uniform_int_distribution<std::size_t>(1, maxLen / 2)(rng);
    const Partition p = randomPairing(n, rng);
    // second tensor factor of length 2 or 4 keeps ranks within range
    const Partition q = randomPairing(2 * std::uniform_int_distribution<std::size_t>(1, 2)(rng), rng);
    const RVec P = RVec::basis(p), Q = RVec::basis(q);
    const RVec MP = M(P);
    const std::string tag = "trial " + std::to_string(i) + " p=" + p.word();
    ck.expect(M(alg.tensor(P, Q)) == alg.tensor(MP, M(Q)), tag + " q=" + q.word() + ": M(p(x)q) != M(p)(x)M(q)");
    ck.expect(M(alg.rotate(P)) == alg.rotate(MP), tag + ": M(Rp) != R M(p)");
    ck.expect(M(alg.reflect(P)) == alg.reflect(MP), tag + ": M(p*) != M(p)*");
    ck.expect(M(alg.contract(P)) == alg.contract(MP), tag + ": M(Pi p) != Pi M(p)");
  }
  return rep;
}

HarnessReport coisometryHarness(const Rational& delta, bool plus, std::size_t maxBlock) {
  if (maxBlock < 2 || maxBlock > 6) throw CapacityError("coisometryHarness: maxBlock must be in 2..6");
  HarnessReport rep;
  rep.name = std::string(plus ? "V+" : "V-") + " at d=" + delta.str();
  Algebra<Rational> src(delta);
  Algebra<Rational> dst(delta - Rational(1));
  auto V = [&](const RVec& v) { return coisometryV(src, v, plus).vec; };
  auto block = [](std::size_t k) { return RVec::basis(Partition::fromWord(std::string(k, 'a'))); };
  Checker ck{rep};
  for (std::size_t k = 2; k <= maxBlock; ++k) {
    const RVec b = block(k);
    const std::string tag = "b" + std::to_string(k);
    ck.expect(dst.contract(V(b)) == V(src.contract(projectP(src, b))), tag + ": Pi V b != V Pi P b");
    ck.expect(V(src.rotate(b)) == dst.rotate(V(b)), tag + ": rotation");
    ck.expect(V(src.reflect(b)) == dst.reflect(V(b)), tag + ": reflection");
    ++rep.trials;
  }
  for (std::size_t k = 1; k <= maxBlock; ++k)
    for (std::size_t l = 1; l <= maxBlock; ++l) {
      const RVec bb = src.tensor(block(k), block(l));
      const std::string tag = "b" + std::to_string(k) + "(x)b" + std::to_string(l);
      ck.expect(dst.contractAt(V(bb), k - 1) == V(src.contractAt(projectP(src, bb), k - 1)),
                tag + ": Pi at the junction, V side != V Pi P side");
      ck.expect(V(bb) == dst.tensor(V(block(k)), V(block(l))), tag + ": V not monoidal");
      ++rep.trials;
    }
  return rep;
}

bool WitnessReport::ok() const {
  for (auto& r : rows)
    if (!r.strict()) return false;
  return oddVanishesP4 && oddPresentP3;
}

std::string WitnessReport::text() const {
  std::ostringstream os;
  os << "dimension witnesses\n";
  for (auto& r : rows)
    os << "  dim " << r.label << " at length " << r.length << " = " << r.generated << (r.strict() ? " < " : " >= ")
       << r.reference << "\n";
  os << "  <P(aaa)> dims: " << Closure<Rational>::dimsString(dimsP3) << "\n";
  os << "  <P(aaaa)> dims: " << Closure<Rational>::dimsString(dimsP4) << "\n";
  os << "  <P(aaa)> has odd-length elements: " << (oddPresentP3 ? "yes" : "no") << "\n";
  os << "  <P(aaaa)> vanishes at odd length: " << (oddVanishesP4 ? "yes" : "no") << "\n";
  os << "\n[summary]\n";
  for (auto& r : rows) os << "witness." << r.label << "=" << r.generated << "/" << r.reference << "\n";
  os << "verdict=" << (ok() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

WitnessReport dimensionWitness(const Rational& delta, std::size_t l0, const Rational& vDelta, unsigned jobs) {
  WitnessReport rep;
  ClosureOptions opts;
  opts.lengthBound = l0;
  opts.jobs = jobs;
  auto dimsOf = [&](const Rational& loop, const RVec& g) {
    Closure<Rational> c(Algebra<Rational>(loop), opts);
    c.run({g});
    return c.approx().dims();
  };
  const RVec b3 = RVec::basis(Partition::fromWord("aaa"));
  const RVec b4 = RVec::basis(Partition::fromWord("aaaa"));
  Algebra<Rational> alg(delta);
  rep.dimsP3 = dimsOf(delta, projectP(alg, b3));
  rep.dimsP4 = dimsOf(delta, projectP(alg, b4));
  const std::size_t nc3 = classDimension(EasyClass::NonCrossing, 3);
  const std::size_t nc4 = classDimension(EasyClass::NonCrossingEven, 4);
  rep.rows.push_back({"<P(aaa)>", 3, rep.dimsP3[3], nc3});
  rep.rows.push_back({"<P(aaaa)>", 4, rep.dimsP4[4], nc4});
  rep.oddVanishesP4 = true;
  for (std::size_t l = 1; l < rep.dimsP4.size(); l += 2) rep.oddVanishesP4 = rep.oddVanishesP4 && rep.dimsP4[l] == 0;
  rep.oddPresentP3 = rep.dimsP3[3] > 0;
  Algebra<Rational> valg(vDelta);
  for (bool plus : {true, false}) {
    const std::string s = plus ? "+" : "-";
    auto v3 = coisometryV(valg, b3, plus);
    auto v4 = coisometryV(valg, b4, plus);
    rep.rows.push_back({"<V" + s + "(aaa)>", 3, dimsOf(v3.loop, v3.vec)[3], nc3});
    rep.rows.push_back({"<V" + s + "(aaaa)>", 4, dimsOf(v4.loop, v4.vec)[4], nc4});
  }
  return rep;
}

}  // namespace partcat
