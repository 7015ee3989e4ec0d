#pragma once

#include "partcat/closure.hpp"

#include <optional>
#include <string>
#include <vector>

namespace partcat {

// A known non-easy generator. Rows with `needsRoot` mention s = sqrt(d+1)
// and are only usable at d where d+1 is a rational square.
struct CandidateRow {
  std::string id;
  std::string expression;
  std::string role;  // which map the generator is an image of
  bool needsRoot = false;
};

const std::vector<CandidateRow>& builtinCandidates();

struct CandidateInstance {
  std::string id;
  std::string role;
  std::optional<Rational> delta;  // empty = symbolic d
  LinComb<Coeff> generator;
  std::string label() const;  // "C1 @ d=7", "C1 @ generic d"
};

// Parses the row and binds d (and s for root rows). Throws std::domain_error
// when a root row gets a d with irrational sqrt(d+1) or no d at all.
CandidateInstance instantiate(const CandidateRow& row, std::optional<Rational> delta);

struct CandidateCheck {
  CandidateInstance instance;
  EasinessReport report;
  // fixed point reached, verdict NON-EASY CANDIDATE, no summand contained
  bool passed() const;
};

CandidateCheck checkCandidate(const CandidateInstance& inst, std::size_t l0, unsigned jobs = 1);

// With a d: plain rows at d, root rows at d when d+1 is a square, else at 8.
// Without: plain rows at generic d and at 7, root rows at 8, 15 and 24.
std::vector<CandidateInstance> table1Instances(std::optional<Rational> delta);

// Three-point parametric run: a*aaa + b1*aab + b2*abb + b3*aba + c*abc with
// every coefficient symbolic, then the branch b1 = b2 = b3 = b,
// a = -(2+d)b - dc dehomogenized at b = 1 (the generator is linear in b, c).
struct LocusSample {
  Rational delta, c;
  bool targetVanishes = false;
  std::size_t singletonDim = 0;  // dim of length 1 after one tensor pass
  bool agrees() const { return targetVanishes == (singletonDim == 0); }
};

struct ThreePointDerivation {
  std::vector<Coeff> fromParts;  // singleton coefficients offered while seeding the general generator
  std::vector<Coeff> expected;   // a + b1 + b2 + d*b3 + d*c and its rotations
  bool partsMatch = false;
  Coeff onePass;                 // first nonzero singleton coefficient offered by one tensor pass
  Coeff target;                  // (d-1)(d-2)(d*c+2)(d*c^2+2*c-1)
  std::optional<Rational> numeratorFactor;  // numerator of onePass over target, when a nonzero constant
  std::vector<LocusSample> samples;
  double seconds = 0;

  bool ok() const;
  std::string text() const;
};

// l0 = 7 is the least bound at which one pass reaches length 1 (p tensor a length-4 element).
ThreePointDerivation deriveThreePoint(std::size_t l0 = 7);

}  // namespace partcat
