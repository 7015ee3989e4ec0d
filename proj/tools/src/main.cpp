// partcat: batch front end for closures, candidate checks, maps and matrices.
// Exit codes: 0 ok, 1 a check failed, 2 usage or input error, 3 capacity or pole.

#include "partcat/candidates.hpp"
#include "partcat/catalog.hpp"
#include "partcat/closure.hpp"
#include "partcat/maps.hpp"
#include "partcat/tensor_rep.hpp"
#include "partcat/text.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace partcat;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kCapacity = 3 };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string readFile(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<Rational> parseDelta(const std::string& text) {
  if (text.empty()) return std::nullopt;
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError("--delta must be an exact rational p/q, got '" + text + "'");
  }
}

struct Input {
  GeneratorSpec spec;
  std::optional<Rational> delta;  // command line wins over the file
};

Input loadInput(const std::string& path, const std::string& deltaText) {
  Input in{parseGeneratorFile(readFile(path)), parseDelta(deltaText)};
  if (!in.delta) in.delta = in.spec.delta;
  if (in.spec.generators.empty()) throw UsageError(path + ": no generators");
  return in;
}

std::vector<LinComb<Coeff>> bindDelta(const std::vector<LinComb<Coeff>>& gens, const std::optional<Rational>& delta) {
  if (!delta) return gens;
  Specialization sp;
  sp.bindings[vars::kDelta] = delta->value();
  std::vector<LinComb<Coeff>> out;
  for (auto& g : gens) out.push_back(specialize(g, sp));
  return out;
}

bool allConstant(const std::vector<LinComb<Coeff>>& gens) {
  for (auto& g : gens)
    for (auto& t : g.terms())
      if (!t.second.is_constant()) return false;
  return true;
}

void emit(const std::string& text, const std::string& reportPath) {
  std::cout << text;
  if (!reportPath.empty()) {
    std::ofstream out(reportPath);
    if (!out) throw UsageError("cannot write " + reportPath);
    out << text;
  }
}

double secondsSince(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- closure ----

struct ClosureArgs {
  std::string file, delta, report;
  std::size_t l0 = 8, passes = 20;
  bool rerunLoci = false;
};

template <class F>
EasinessReport runClosure(Algebra<F> alg, const std::vector<LinComb<F>>& gens, const ClosureOptions& opts) {
  Closure<F> run(std::move(alg), opts);
  run.run(gens);
  return easinessReport(run, gens);
}

EasinessReport closureAt(const std::vector<LinComb<Coeff>>& raw, const std::optional<Rational>& delta,
                         const ClosureOptions& opts) {
  auto gens = bindDelta(raw, delta);
  EasinessReport rep;
  if (delta && allConstant(gens)) {
    std::vector<LinComb<Rational>> rg;
    for (auto& g : gens) rg.push_back(toRational(g));
    rep = runClosure(Algebra<Rational>(*delta), rg, opts);
  } else {
    rep = runClosure(Algebra<Coeff>(delta ? Coeff(*delta) : Coeff::delta()), gens, opts);
  }
  if (delta) rep.specialization = "d=" + delta->str();
  return rep;
}

int cmdClosure(const ClosureArgs& a, unsigned jobs, bool timing) {
  if (a.l0 > 10) std::cerr << "warning: l0 = " << a.l0 << " needs B_" << a.l0 << " sized tables; expect heavy memory use\n";
  Input in = loadInput(a.file, a.delta);
  ClosureOptions opts;
  opts.lengthBound = a.l0;
  opts.passCap = a.passes;
  opts.jobs = jobs;
  const auto t0 = std::chrono::steady_clock::now();
  EasinessReport rep = closureAt(in.spec.generators, in.delta, opts);
  if (!in.spec.params.empty()) {
    std::string p;
    for (auto& s : in.spec.params) p += (p.empty() ? "" : ",") + s;
    rep.specialization += "; symbols " + p;
  }
  if (timing) rep.seconds = secondsSince(t0);
  std::string text = rep.text();
  if (a.rerunLoci && !in.delta) {
    std::ostringstream os;
    os << "\n[loci reruns]\n";
    if (rep.loci.empty()) os << "(none)\n";
    for (auto& locus : rep.loci) {
      const Rational d = Rational::parse(locus);
      try {
        EasinessReport r = closureAt(in.spec.generators, d, opts);
        os << "d=" << locus << ": " << r.verdict() << "; dims " << Closure<Rational>::dimsString(r.dims) << "\n";
      } catch (const PoleError& e) {
        os << "d=" << locus << ": pole (" << e.what() << ")\n";
      }
    }
    text += os.str();
  }
  emit(text, a.report);
  return kOk;
}

// ---- check-table1 ----

int cmdCheckTable1(const std::string& deltaText, std::size_t l0, unsigned jobs, bool timing) {
  const auto delta = parseDelta(deltaText);
  const auto t0 = std::chrono::steady_clock::now();
  bool allOk = true;
  std::cout << "candidate checks at l0=" << l0 << "\n";
  for (auto& inst : table1Instances(delta)) {
    auto c = checkCandidate(inst, l0, jobs);
    const auto& g = c.report.generators.front();
    std::cout << "  " << inst.label() << " [" << inst.role << "]: " << c.report.verdict() << "; summands contained "
              << g.containedCount() << "/" << g.summands.size() << "; dims "
              << Closure<Rational>::dimsString(c.report.dims) << (c.passed() ? "" : "  <-- FAILED") << "\n";
    allOk = allOk && c.passed();
  }
  WitnessReport w = dimensionWitness(delta.value_or(Rational(7)), l0, Rational(9), jobs);
  std::cout << "\n" << w.text();
  allOk = allOk && w.ok();
  std::cout << "\n[summary]\ntable1=" << (allOk ? "PASS" : "FAIL") << "\n";
  if (timing) std::cerr << "wall time: " << secondsSince(t0) << " s\n";
  return allOk ? kOk : kCheckFailed;
}

// ---- apply-map ----

int cmdApplyMap(const std::string& kindText, const std::string& file, const std::string& deltaText) {
  MapKind kind;
  try {
    kind = parseMapKind(kindText);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Input in = loadInput(file, deltaText);
  Algebra<Coeff> alg(in.delta ? Coeff(*in.delta) : Coeff::delta());
  for (auto& g : bindDelta(in.spec.generators, in.delta)) {
    InContext<Coeff> img = applyMap(kind, alg, g);
    if (kind == MapKind::B || kind == MapKind::Vplus || kind == MapKind::Vminus)
      std::cout << "# loop parameter of the image: " << img.loop.str() << "\n";
    std::cout << img.vec.str() << "\n";
  }
  return kOk;
}

// ---- tensor-rep ----

int cmdTensorRep(const std::string& file, std::size_t N, const std::string& sigmaText, std::size_t trials) {
  Input in = loadInput(file, "");
  if (N < 1) throw UsageError("--N must be at least 1");
  std::optional<SignMatrix> sigma;
  if (!sigmaText.empty()) {
    try {
      sigma = SignMatrix::parse(sigmaText, N);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  const Rational dN(static_cast<long>(N));
  for (std::size_t i = 0; i < in.spec.generators.size(); ++i) {
    const auto g = toRational(bindDelta({in.spec.generators[i]}, dN).front());
    std::cout << "# " << in.spec.sources[i] << "\n" << matrixOf(g, N).dump();
    if (sigma) std::cout << "# twisted by " << sigmaText << "\n" << twistedMatrixOf(g, N, *sigma).dump();
  }
  FunctorCheck plain = matrixFunctorCheck(N, nullptr, trials);
  std::cout << "\nfunctor check (T): " << plain.checks << " checks, " << plain.failures.size() << " failures\n";
  for (auto& f : plain.failures) std::cout << "  " << f << "\n";
  bool ok = plain.ok();
  if (sigma) {
    FunctorCheck tw = matrixFunctorCheck(N, &*sigma, trials);
    std::cout << "functor check (T^sigma, even blocks): " << tw.checks << " checks, " << tw.failures.size()
              << " failures\n";
    for (auto& f : tw.failures) std::cout << "  " << f << "\n";
    ok = ok && tw.ok();
  }
  return ok ? kOk : kCheckFailed;
}

// ---- dims ----

int cmdDims(const std::string& cls, std::size_t upto) {
  auto c = parseEasyClass(cls);
  if (!c) {
    std::string names;
    for (auto x : allClasses()) names += (names.empty() ? "" : ", ") + className(x);
    throw UsageError("unknown class '" + cls + "' (one of: " + names + ")");
  }
  std::string line;
  for (std::size_t l = 0; l <= upto; ++l) line += (l ? " " : "") + std::to_string(classDimension(*c, l));
  std::cout << line << "\n";
  return kOk;
}

// ---- plan ----

int cmdPlan(const std::string& file, const std::string& planFile, const std::string& deltaText,
            const std::string& heuristic) {
  Input in = loadInput(file, deltaText);
  ContractionPlan plan = parsePlan(readFile(planFile));
  PlannerHeuristic h = heuristic == "last" ? PlannerHeuristic::LastFit : PlannerHeuristic::FirstFit;
  Algebra<Coeff> alg(in.delta ? Coeff(*in.delta) : Coeff::delta());
  for (auto& g : bindDelta(in.spec.generators, in.delta)) std::cout << executePlan(alg, plan, g, h).str() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partcat: linear categories of partitions"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned jobs = 1;
  bool timing = false;
  app.add_option("--jobs", jobs, "worker threads for tensor batches (results do not depend on it)")
      ->check(CLI::Range(1u, 256u));
  app.add_flag("--timing", timing, "report wall time");

  ClosureArgs ca;
  auto* closure = app.add_subcommand("closure", "closure of the generators in FILE and an easiness report");
  closure->add_option("FILE", ca.file, "generator file ('-' for stdin)")->required();
  closure->add_option("--l0", ca.l0, "length bound")->check(CLI::Range(std::size_t{2}, kEnumerationCap));
  closure->add_option("--delta", ca.delta, "loop parameter as p/q (default: generic)");
  closure->add_option("--passes", ca.passes, "pass cap")->check(CLI::Range(std::size_t{1}, std::size_t{1000}));
  closure->add_option("--report", ca.report, "also write the report to PATH");
  closure->add_flag("--rerun-loci", ca.rerunLoci, "rerun at every rational d where a pivot vanished");

  std::string t1Delta;
  std::size_t t1L0 = 6;
  auto* table1 = app.add_subcommand("check-table1", "verify every built-in non-easy generator");
  table1->add_option("--delta", t1Delta, "loop parameter as p/q");
  table1->add_option("--l0", t1L0, "length bound")->check(CLI::Range(std::size_t{4}, std::size_t{10}));

  std::string mapKind, mapFile, mapDelta;
  auto* applyMap = app.add_subcommand("apply-map", "print the image of each generator under a map");
  applyMap->add_option("MAP", mapKind, "P, T, D, J, B, V+ or V-")->required();
  applyMap->add_option("FILE", mapFile, "generator file")->required();
  applyMap->add_option("--delta", mapDelta, "loop parameter as p/q");

  std::string trFile, trSigma;
  std::size_t trN = 2, trTrials = 200;
  auto* tensorRep = app.add_subcommand("tensor-rep", "matrices T_p (and T^sigma_p) at d = N");
  tensorRep->add_option("FILE", trFile, "generator file")->required();
  tensorRep->add_option("--N", trN, "matrix size")->required();
  tensorRep->add_option("--sigma", trSigma, "qdef or grad:n");
  tensorRep->add_option("--trials", trTrials, "random pairs for the functor check");

  std::string dimsClass;
  std::size_t dimsUpto = 8;
  auto* dims = app.add_subcommand("dims", "dimensions of a known easy category per length");
  dims->add_option("--class", dimsClass, "all, nonCrossing, nonCrossingEven, pairings, nonCrossingPairings, evenBlocks, halfLibPairings")->required();
  dims->add_option("--upto", dimsUpto, "largest length")->required();

  std::string planGen, planFile, planDelta, planHeuristic = "first";
  auto* plan = app.add_subcommand("plan", "contract copies of a generator along a planar plan");
  plan->add_option("FILE", planGen, "generator file")->required();
  plan->add_option("--plan", planFile, "plan file")->required();
  plan->add_option("--delta", planDelta, "loop parameter as p/q");
  plan->add_option("--heuristic", planHeuristic, "first or last")->check(CLI::IsMember({"first", "last"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*closure) return cmdClosure(ca, jobs, timing);
    if (*table1) return cmdCheckTable1(t1Delta, t1L0, jobs, timing);
    if (*applyMap) return cmdApplyMap(mapKind, mapFile, mapDelta);
    if (*tensorRep) return cmdTensorRep(trFile, trN, trSigma, trTrials);
    if (*dims) return cmdDims(dimsClass, dimsUpto);
    if (*plan) return cmdPlan(planGen, planFile, planDelta, planHeuristic);
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kCapacity;
  } catch (const PoleError& e) {
    std::cerr << "pole: " << e.what() << "\n";
    return kCapacity;
  } catch (const PassLimitExceeded& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kCapacity;
  } catch (const PlannerFailure& e) {
    std::cerr << "plan: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}
