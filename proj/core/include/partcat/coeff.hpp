#pragma once

#include "partcat/poly.hpp"

#include <stdexcept>
#include <string>

namespace partcat {

struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

// Element of Q(d, params): canonical fraction num/den with gcd 1 and monic den.
class Coeff {
 public:
  Coeff() : den_(1) {}
  Coeff(long c) : num_(c), den_(1) {}  // NOLINT
  Coeff(const Rational& r) : num_(r.value()), den_(1) {}  // NOLINT
  Coeff(Poly p) : num_(std::move(p)), den_(1) {}  // NOLINT
  Coeff(Poly num, Poly den);  // normalizes; throws on zero den

  static Coeff delta() { return Coeff(Poly::var(vars::kDelta)); }
  static Coeff symbol(const std::string& name) { return Coeff(Poly::var(vars::index(name))); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant() const;  // throws unless is_constant

  Coeff operator-() const;
  friend Coeff operator+(const Coeff& a, const Coeff& b);
  friend Coeff operator-(const Coeff& a, const Coeff& b);
  friend Coeff operator*(const Coeff& a, const Coeff& b);
  friend Coeff operator/(const Coeff& a, const Coeff& b);
  Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
  Coeff& operator-=(const Coeff& o) { return *this = *this - o; }
  Coeff& operator*=(const Coeff& o) { return *this = *this * o; }
  Coeff& operator/=(const Coeff& o) { return *this = *this / o; }
  friend bool operator==(const Coeff& a, const Coeff& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  // throws PoleError naming the binding when the denominator vanishes
  Coeff specialize(const Substitution& s) const;

  std::string str() const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

std::ostream& operator<<(std::ostream& os, const Coeff& c);

// Binding of symbols to rationals.
struct Specialization {
  Substitution bindings;  // variable index -> value
  bool binds_delta() const { return bindings.count(vars::kDelta) > 0; }
  std::string str() const;
};

}  // namespace partcat
