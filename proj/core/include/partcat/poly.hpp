#pragma once

#include "partcat/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace partcat {

// Global symbol table. Variable 0 is always the loop parameter, printed "d".
// Parameters get registered on first use; at most kMaxVars in total.
namespace vars {
inline constexpr int kMaxVars = 8;
inline constexpr int kDelta = 0;
int index(const std::string& name);      // registers if new
int find(const std::string& name);       // -1 if unknown
const std::string& name(int idx);
int count();
}  // namespace vars

// Monomial: eight 8-bit exponents packed into one word, variable 0 in the
// most significant byte so raw comparison is lex order with delta first.
struct Mono {
  std::uint64_t bits = 0;

  static Mono var(int v, unsigned e = 1);
  unsigned exp(int v) const { return static_cast<unsigned>((bits >> (56 - 8 * v)) & 0xffu); }
  unsigned degree() const;
  bool divides(Mono o) const;
  Mono operator*(Mono o) const;  // throws on exponent overflow
  Mono operator/(Mono o) const;  // caller guarantees divisibility
  Mono without(int v) const { return Mono{bits & ~(std::uint64_t{0xff} << (56 - 8 * v))}; }
  bool is_one() const { return bits == 0; }
  friend bool operator==(Mono a, Mono b) { return a.bits == b.bits; }
};

// graded lex, larger first
inline bool mono_greater(Mono a, Mono b) {
  unsigned da = a.degree(), db = b.degree();
  return da != db ? da > db : a.bits > b.bits;
}

using Substitution = std::map<int, mpq_class>;

class Poly {
 public:
  struct Term {
    Mono m;
    mpq_class c;
  };

  Poly() = default;
  Poly(long c);  // NOLINT
  explicit Poly(const mpq_class& c);
  static Poly var(int v, unsigned e = 1);
  static Poly from_terms(std::vector<Term> terms);  // sorts and merges

  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
  mpq_class constant_value() const;  // only if is_constant
  const Term& lead() const { return t_.front(); }
  unsigned total_degree() const { return t_.empty() ? 0 : t_.front().m.degree(); }
  unsigned degree_in(int v) const;
  std::uint8_t var_mask() const;  // bit v set if variable v occurs
  int single_var() const;         // the only variable, -1 if none or several

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const mpq_class& c) const;
  Poly times_mono(Mono m, const mpq_class& c) const;
  friend bool operator==(const Poly& a, const Poly& b);

  // Exact quotient; throws std::domain_error if b does not divide a.
  static Poly divide_exact(const Poly& a, const Poly& b);
  // Try exact division; false if not exact.
  static bool try_divide(const Poly& a, const Poly& b, Poly& q);

  // coefficients with respect to variable v, indexed by power
  std::vector<Poly> coeffs_in(int v) const;
  static Poly from_coeffs_in(int v, const std::vector<Poly>& cs);

  Poly substitute(const Substitution& s) const;
  Poly pow(unsigned e) const;

  // leading coefficient made 1 (zero stays zero)
  Poly monic() const;

  std::string str() const;

 private:
  std::vector<Term> t_;  // sorted by mono_greater, no zero coefficients
  friend class PolyBuilder;
};

// Monic gcd for polynomials in any number of variables. gcd(0,0)=0.
Poly gcd(const Poly& a, const Poly& b);
// Euclid over Q for univariate input; throws std::domain_error otherwise.
Poly gcd_univariate(const Poly& f, const Poly& g);
// Remainder of univariate division f mod g (same variable).
Poly rem_univariate(const Poly& f, const Poly& g);
// Distinct rational roots of a univariate polynomial (empty if not univariate
// or if coefficients are too large to search).
std::vector<mpq_class> rational_roots(const Poly& f);

}  // namespace partcat
