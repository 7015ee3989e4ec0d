#include "partcat/coeff.hpp"

#include <ostream>
#include <sstream>

namespace partcat {

Coeff::Coeff(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw PoleError("zero denominator");
  normalize();
}

void Coeff::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = Poly::divide_exact(num_, g);
      den_ = Poly::divide_exact(den_, g);
    }
  }
  const mpq_class& lc = den_.lead().c;
  if (lc != 1) {
    mpq_class inv = 1 / lc;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

Rational Coeff::constant() const {
  if (!is_constant()) throw std::domain_error("coefficient is not constant: " + str());
  return Rational(mpq_class(num_.constant_value() / den_.constant_value()));
}

Coeff Coeff::operator-() const {
  Coeff r = *this;
  r.num_ = -r.num_;
  return r;
}

namespace {
Coeff raw(Poly n, Poly d) { return Coeff(std::move(n), std::move(d)); }
}  // namespace

Coeff operator+(const Coeff& a, const Coeff& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_constant()) {
      Coeff r;
      r.num_ = a.num_ + b.num_;
      if (r.num_.is_zero()) return Coeff();
      r.den_ = a.den_;
      return r;
    }
    return raw(a.num_ + b.num_, a.den_);
  }
  if (a.den_.is_constant() && b.den_.is_constant()) {
    Coeff r;
    r.num_ = a.num_ + b.num_;  // both dens are 1 after normalization
    r.den_ = Poly(1);
    if (r.num_.is_zero()) return Coeff();
    return r;
  }
  Poly g = gcd(a.den_, b.den_);
  if (g.is_constant()) return raw(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  Poly ad = Poly::divide_exact(a.den_, g), bd = Poly::divide_exact(b.den_, g);
  return raw(a.num_ * bd + b.num_ * ad, ad * b.den_);
}

Coeff operator-(const Coeff& a, const Coeff& b) { return a + (-b); }

Coeff operator*(const Coeff& a, const Coeff& b) {
  if (a.is_zero() || b.is_zero()) return Coeff();
  Coeff r;
  if (a.den_.is_constant() && b.den_.is_constant()) {
    r.num_ = a.num_ * b.num_;
    r.den_ = Poly(1);
    return r;
  }
  // cross cancellation keeps the result canonical without a final gcd
  Poly n1 = a.num_, d2 = b.den_, n2 = b.num_, d1 = a.den_;
  if (!d2.is_constant()) {
    Poly g = gcd(n1, d2);
    if (!g.is_constant()) {
      n1 = Poly::divide_exact(n1, g);
      d2 = Poly::divide_exact(d2, g);
    }
  }
  if (!d1.is_constant()) {
    Poly g = gcd(n2, d1);
    if (!g.is_constant()) {
      n2 = Poly::divide_exact(n2, g);
      d1 = Poly::divide_exact(d1, g);
    }
  }
  r.num_ = n1 * n2;
  r.den_ = d1 * d2;
  const mpq_class& lc = r.den_.lead().c;
  if (lc != 1) {
    mpq_class inv = 1 / lc;
    r.num_ = r.num_.scaled(inv);
    r.den_ = r.den_.scaled(inv);
  }
  return r;
}

Coeff operator/(const Coeff& a, const Coeff& b) {
  if (b.is_zero()) throw std::domain_error("division by zero coefficient");
  Coeff inv;
  inv.num_ = b.den_;
  inv.den_ = b.num_;
  const mpq_class& lc = inv.den_.lead().c;
  if (lc != 1) {
    mpq_class s = 1 / lc;
    inv.num_ = inv.num_.scaled(s);
    inv.den_ = inv.den_.scaled(s);
  }
  return a * inv;
}

Coeff Coeff::specialize(const Substitution& s) const {
  Poly d = den_.substitute(s);
  if (d.is_zero()) {
    Specialization sp{s};
    throw PoleError("denominator " + den_.str() + " vanishes at " + sp.str());
  }
  return Coeff(num_.substitute(s), d);
}

std::string Coeff::str() const {
  if (den_.is_constant()) {
    mpq_class d = den_.constant_value();
    if (d == 1) return num_.str();
    // constant denominators fold into the numerator coefficients
    return num_.scaled(1 / d).str();
  }
  std::string n = num_.str();
  bool wrap = num_.terms().size() > 1 || n.find('/') != std::string::npos;
  return (wrap ? "(" + n + ")" : n) + "/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const Coeff& c) { return os << c.str(); }

std::string Specialization::str() const {
  std::ostringstream os;
  bool first = true;
  for (auto& [v, val] : bindings) {
    if (!first) os << ", ";
    first = false;
    os << vars::name(v) << "=" << val.get_str();
  }
  return os.str();
}

}  // namespace partcat
