#pragma once

#include "partcat/linalg.hpp"
#include "partcat/ops.hpp"

#include <random>
#include <string>
#include <vector>

namespace partcat {

// Dense N^l x N^k matrix of a (k,l) vector at d = N. Rows are lower
// multi-indices, columns upper ones; the first index varies fastest.
struct IntertwinerMatrix {
  std::size_t upper = 0, lower = 0, N = 0;
  std::size_t rows = 1, cols = 1;
  std::vector<Rational> entries;  // row-major

  IntertwinerMatrix() = default;
  IntertwinerMatrix(std::size_t k, std::size_t l, std::size_t n);

  Rational& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

  friend bool operator==(const IntertwinerMatrix& a, const IntertwinerMatrix& b) {
    return a.upper == b.upper && a.lower == b.lower && a.N == b.N && a.entries == b.entries;
  }
  IntertwinerMatrix operator*(const IntertwinerMatrix& o) const;  // this after o
  IntertwinerMatrix operator+(const IntertwinerMatrix& o) const;
  IntertwinerMatrix scaled(const Rational& c) const;
  IntertwinerMatrix transpose() const;
  std::string dump() const;  // "T (k,l) N=.. rows x cols" then one row per line
};

inline constexpr std::size_t kMatrixCap = 6561;  // N^(k+l)

std::size_t intPow(std::size_t base, std::size_t e);

// matrix of (p (x) q) under the index order above: kron(T_q, T_p)
IntertwinerMatrix tensorMatrix(const IntertwinerMatrix& p, const IntertwinerMatrix& q);

IntertwinerMatrix matrixOf(const Partition& p, std::size_t N);
IntertwinerMatrix matrixOf(const LinComb<Rational>& v, std::size_t N);

struct SignMatrix {
  std::size_t N = 0;
  std::vector<int> s;  // N x N, entries +1/-1, 0-based
  int operator()(std::size_t i, std::size_t j) const { return s[i * N + j]; }

  static SignMatrix qdef(std::size_t N);               // -1 iff i < j
  static SignMatrix grad(std::size_t N, std::size_t n);  // s_i s_j for i < j, s_i = +1 iff i <= n
  static SignMatrix parse(const std::string& spec, std::size_t N);  // "qdef" or "grad:n"
};

// product over m < n of sigma(i_m, i_n); indices 0-based
int sigmaProduct(const SignMatrix& sigma, const std::vector<std::size_t>& idx);

IntertwinerMatrix twistedMatrixOf(const LinComb<Rational>& v, std::size_t N, const SignMatrix& sigma);

// rank over Q of the vectorized T_p for one-line partitions p of a common length
std::size_t rankOfSpan(const std::vector<Partition>& parts, std::size_t N);

// random (k,l) partition whose blocks all have even size (k + l even)
Partition randomEvenBlock(std::size_t k, std::size_t l, std::mt19937_64& rng);

struct FunctorCheck {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// T (or T^sigma when twisted) against composition, tensor and involution on
// random even-block pairs with at most maxPoints per row. Trial i seeds seed + i.
FunctorCheck matrixFunctorCheck(std::size_t N, const SignMatrix* sigma, std::size_t trials, std::size_t maxPoints = 3,
                                std::uint64_t seed = 1);

}  // namespace partcat
