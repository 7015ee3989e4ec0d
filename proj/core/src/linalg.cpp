#include "partcat/linalg.hpp"

namespace partcat {

LinComb<Coeff> toCoeff(const LinComb<Rational>& v) {
  return v.mapCoeffs<Coeff>([](const Rational& r) { return Coeff(r); });
}

LinComb<Coeff> specialize(const LinComb<Coeff>& v, const Specialization& s) {
  return v.mapCoeffs<Coeff>([&](const Coeff& c) { return c.specialize(s.bindings); });
}

LinComb<Rational> toRational(const LinComb<Coeff>& v) {
  return v.mapCoeffs<Rational>([](const Coeff& c) { return c.constant(); });
}

}  // namespace partcat
