#include "partcat/poly.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

namespace partcat {

// ---- Rational bits that need a translation unit ----

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& x) {
    x.erase(0, x.find_first_not_of(" \t"));
    x.erase(x.find_last_not_of(" \t") + 1);
  };
  trim(s);
  if (s.empty()) throw std::invalid_argument("empty rational");
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    bool ok = std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || (i == 0 && (ch == '-' || ch == '+'));
    if (!ok) throw std::invalid_argument("not a rational: " + s);
  }
  if (s[0] == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
  if (s.find('/') != std::string::npos && sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator");
  q.canonicalize();
  return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

// ---- variable registry ----

namespace vars {
namespace {
std::shared_mutex& mtx() {
  static std::shared_mutex m;
  return m;
}
std::vector<std::string>& names() {
  static std::vector<std::string> n{"d"};
  return n;
}
}  // namespace

int find(const std::string& nm) {
  std::shared_lock lk(mtx());
  auto& n = names();
  for (std::size_t i = 0; i < n.size(); ++i)
    if (n[i] == nm) return static_cast<int>(i);
  return -1;
}

int index(const std::string& nm) {
  if (nm == "delta") return kDelta;
  if (int f = find(nm); f >= 0) return f;
  std::unique_lock lk(mtx());
  auto& n = names();
  for (std::size_t i = 0; i < n.size(); ++i)
    if (n[i] == nm) return static_cast<int>(i);
  if (static_cast<int>(n.size()) >= kMaxVars) throw std::length_error("too many symbols (max 8 including d)");
  n.push_back(nm);
  return static_cast<int>(n.size()) - 1;
}

const std::string& name(int idx) {
  std::shared_lock lk(mtx());
  return names().at(static_cast<std::size_t>(idx));
}

int count() {
  std::shared_lock lk(mtx());
  return static_cast<int>(names().size());
}
}  // namespace vars

// ---- monomials ----

namespace {
constexpr std::uint64_t kHigh = 0x8080808080808080ull;
}

Mono Mono::var(int v, unsigned e) {
  if (v < 0 || v >= vars::kMaxVars) throw std::out_of_range("variable index");
  if (e > 255) throw std::overflow_error("exponent overflow");
  return Mono{std::uint64_t{e} << (56 - 8 * v)};
}

unsigned Mono::degree() const {
  unsigned s = 0;
  std::uint64_t b = bits;
  while (b) {
    s += static_cast<unsigned>(b & 0xff);
    b >>= 8;
  }
  return s;
}

bool Mono::divides(Mono o) const {
  for (int v = 0; v < vars::kMaxVars; ++v)
    if (exp(v) > o.exp(v)) return false;
  return true;
}

Mono Mono::operator*(Mono o) const {
  if (((bits | o.bits) & kHigh) == 0) return Mono{bits + o.bits};
  std::uint64_t r = 0;
  for (int v = 0; v < vars::kMaxVars; ++v) {
    unsigned e = exp(v) + o.exp(v);
    if (e > 255) throw std::overflow_error("exponent overflow");
    r |= std::uint64_t{e} << (56 - 8 * v);
  }
  return Mono{r};
}

Mono Mono::operator/(Mono o) const { return Mono{bits - o.bits}; }

// ---- polynomials ----

namespace {
bool term_order(const Poly::Term& a, const Poly::Term& b) { return mono_greater(a.m, b.m); }
}  // namespace

Poly::Poly(long c) {
  if (c != 0) t_.push_back({Mono{}, mpq_class(c)});
}

Poly::Poly(const mpq_class& c) {
  if (sgn(c) != 0) t_.push_back({Mono{}, c});
}

Poly Poly::var(int v, unsigned e) {
  Poly p;
  p.t_.push_back({Mono::var(v, e), mpq_class(1)});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_order);
  Poly p;
  for (auto& t : terms) {
    if (!p.t_.empty() && p.t_.back().m == t.m) {
      p.t_.back().c += t.c;
    } else {
      if (!p.t_.empty() && sgn(p.t_.back().c) == 0) p.t_.pop_back();
      p.t_.push_back(std::move(t));
    }
  }
  if (!p.t_.empty() && sgn(p.t_.back().c) == 0) p.t_.pop_back();
  return p;
}

mpq_class Poly::constant_value() const {
  if (t_.empty()) return 0;
  if (!t_[0].m.is_one()) throw std::domain_error("not a constant polynomial");
  return t_[0].c;
}

unsigned Poly::degree_in(int v) const {
  unsigned d = 0;
  for (auto& t : t_) d = std::max(d, t.m.exp(v));
  return d;
}

std::uint8_t Poly::var_mask() const {
  std::uint8_t m = 0;
  for (auto& t : t_)
    for (int v = 0; v < vars::kMaxVars; ++v)
      if (t.m.exp(v)) m |= static_cast<std::uint8_t>(1u << v);
  return m;
}

int Poly::single_var() const {
  std::uint8_t m = var_mask();
  if (m == 0 || (m & (m - 1))) return -1;
  int v = 0;
  while (!(m & 1u)) {
    m >>= 1;
    ++v;
  }
  return v;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.t_) t.c = -t.c;
  return r;
}

namespace {
std::vector<Poly::Term> merge_add(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b, bool subtract) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && mono_greater(a[i].m, b[j].m))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || mono_greater(b[j].m, a[i].m)) {
      out.push_back({b[j].m, subtract ? mpq_class(-b[j].c) : b[j].c});
      ++j;
    } else {
      mpq_class c = subtract ? mpq_class(a[i].c - b[j].c) : mpq_class(a[i].c + b[j].c);
      if (sgn(c) != 0) out.push_back({a[i].m, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}
}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  if (o.t_.empty()) return *this;
  if (t_.empty()) return *this = o;
  t_ = merge_add(t_, o.t_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.t_.empty()) return *this;
  t_ = merge_add(t_, o.t_, true);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.t_.empty() || b.t_.empty()) return Poly();
  if (a.t_.size() == 1) return b.times_mono(a.t_[0].m, a.t_[0].c);
  if (b.t_.size() == 1) return a.times_mono(b.t_[0].m, b.t_[0].c);
  std::vector<Poly::Term> terms;
  terms.reserve(a.t_.size() * b.t_.size());
  for (auto& x : a.t_)
    for (auto& y : b.t_) terms.push_back({x.m * y.m, x.c * y.c});
  return Poly::from_terms(std::move(terms));
}

Poly Poly::scaled(const mpq_class& c) const {
  if (sgn(c) == 0) return Poly();
  Poly r = *this;
  for (auto& t : r.t_) t.c *= c;
  return r;
}

Poly Poly::times_mono(Mono m, const mpq_class& c) const {
  if (sgn(c) == 0) return Poly();
  Poly r;
  r.t_.reserve(t_.size());
  // multiplying by a monomial keeps graded-lex order
  for (auto& t : t_) r.t_.push_back({t.m * m, t.c * c});
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  for (std::size_t i = 0; i < a.t_.size(); ++i)
    if (!(a.t_[i].m == b.t_[i].m) || a.t_[i].c != b.t_[i].c) return false;
  return true;
}

bool Poly::try_divide(const Poly& a, const Poly& b, Poly& q) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  q = Poly();
  if (a.is_zero()) return true;
  if (b.t_.size() == 1) {
    const auto& bt = b.t_[0];
    std::vector<Term> out;
    out.reserve(a.t_.size());
    for (auto& t : a.t_) {
      if (!bt.m.divides(t.m)) return false;
      out.push_back({t.m / bt.m, t.c / bt.c});
    }
    q.t_ = std::move(out);  // dividing by a monomial preserves order
    return true;
  }
  Poly r = a;
  std::vector<Term> qt;
  const auto& lb = b.t_[0];
  while (!r.is_zero()) {
    const auto& lr = r.t_[0];
    if (!lb.m.divides(lr.m)) return false;
    if (r.total_degree() < b.total_degree()) return false;
    Mono m = lr.m / lb.m;
    mpq_class c = lr.c / lb.c;
    r -= b.times_mono(m, c);
    qt.push_back({m, std::move(c)});
  }
  q.t_ = std::move(qt);  // produced in decreasing order
  return true;
}

Poly Poly::divide_exact(const Poly& a, const Poly& b) {
  Poly q;
  if (!try_divide(a, b, q)) throw std::domain_error("inexact polynomial division");
  return q;
}

std::vector<Poly> Poly::coeffs_in(int v) const {
  std::vector<std::vector<Term>> buckets(degree_in(v) + 1);
  for (auto& t : t_) buckets[t.m.exp(v)].push_back({t.m.without(v), t.c});
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    Poly p;
    p.t_ = std::move(b);
    std::sort(p.t_.begin(), p.t_.end(), term_order);  // removing a variable can reorder
    out.push_back(std::move(p));
  }
  return out;
}

Poly Poly::from_coeffs_in(int v, const std::vector<Poly>& cs) {
  std::vector<Term> terms;
  for (std::size_t e = 0; e < cs.size(); ++e)
    for (auto& t : cs[e].t_) terms.push_back({t.m * Mono::var(v, static_cast<unsigned>(e)), t.c});
  return from_terms(std::move(terms));
}

Poly Poly::substitute(const Substitution& s) const {
  if (s.empty()) return *this;
  std::vector<Term> terms;
  terms.reserve(t_.size());
  for (auto& t : t_) {
    mpq_class c = t.c;
    Mono m = t.m;
    for (auto& [v, val] : s) {
      unsigned e = m.exp(v);
      if (!e) continue;
      mpq_class pw = 1;
      for (unsigned i = 0; i < e; ++i) pw *= val;
      c *= pw;
      m = m.without(v);
    }
    if (sgn(c) != 0) terms.push_back({m, std::move(c)});
  }
  return from_terms(std::move(terms));
}

Poly Poly::pow(unsigned e) const {
  Poly r(1);
  Poly b = *this;
  while (e) {
    if (e & 1u) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Poly Poly::monic() const {
  if (t_.empty() || t_[0].c == 1) return *this;
  mpq_class inv = 1 / t_[0].c;
  return scaled(inv);
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& t : t_) {
    mpq_class c = t.c;
    if (first) {
      if (sgn(c) < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    }
    first = false;
    bool unit = (c == 1);
    bool wrote = false;
    if (!unit || t.m.is_one()) {
      os << c.get_str();
      wrote = true;
    }
    for (int v = 0; v < vars::kMaxVars; ++v) {
      unsigned e = t.m.exp(v);
      if (!e) continue;
      if (wrote) os << "*";
      os << vars::name(v);
      if (e > 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

// ---- gcd machinery ----

Poly rem_univariate(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw std::domain_error("remainder by zero");
  int v = g.single_var();
  if (v < 0) {
    if (g.is_constant()) return Poly();
    throw std::domain_error("rem_univariate: multivariate divisor");
  }
  unsigned dg = g.degree_in(v);
  Poly r = f;
  const mpq_class& lg = g.lead().c;
  while (!r.is_zero()) {
    unsigned dr = r.degree_in(v);
    if (dr < dg) break;
    // leading term in graded lex equals highest power for univariate input
    mpq_class c = r.lead().c / lg;
    r -= g.times_mono(Mono::var(v, dr - dg), c);
  }
  return r;
}

Poly gcd_univariate(const Poly& f, const Poly& g) {
  std::uint8_t mask = static_cast<std::uint8_t>(f.var_mask() | g.var_mask());
  if (mask & (mask - 1)) throw std::domain_error("gcd_univariate: multivariate input");
  if (f.is_zero() && g.is_zero()) throw std::domain_error("gcd_univariate: both zero");
  Poly a = f.monic(), b = g.monic();
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_constant() || b.is_constant()) return Poly(1);
  while (!b.is_zero()) {
    Poly r = rem_univariate(a, b);
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

namespace {

Poly content_of(const std::vector<Poly>& cs);
Poly gcd_rec(const Poly& a, const Poly& b);

Poly prem(const Poly& a, const Poly& b, int x) {
  auto bc = b.coeffs_in(x);
  unsigned db = static_cast<unsigned>(bc.size() - 1);
  const Poly& lcb = bc.back();
  Poly r = a;
  while (!r.is_zero()) {
    unsigned dr = r.degree_in(x);
    if (dr < db) break;
    auto rc = r.coeffs_in(x);
    Poly shift = rc.back() * Poly::var(x, dr - db);
    r = lcb * r - shift * b;
  }
  return r;
}

Poly content_of(const std::vector<Poly>& cs) {
  Poly g;
  for (auto& c : cs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : gcd_rec(g, c);
    if (g.is_constant()) return Poly(1);
  }
  return g;
}

Poly primitive_in(const Poly& p, int x) {
  Poly c = content_of(p.coeffs_in(x));
  if (c.is_constant()) return p.monic();
  return Poly::divide_exact(p, c);
}

Poly gcd_rec(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a == b) return a.monic();
  std::uint8_t ma = a.var_mask(), mb = b.var_mask();
  std::uint8_t both = static_cast<std::uint8_t>(ma | mb);
  if (!(both & (both - 1))) return gcd_univariate(a, b);
  Poly q;
  if (a.terms().size() >= b.terms().size() && Poly::try_divide(a, b, q)) return b.monic();
  if (b.terms().size() >= a.terms().size() && Poly::try_divide(b, a, q)) return a.monic();

  // main variable: shared one of least degree, else any variable present
  int x = -1;
  unsigned best = ~0u;
  std::uint8_t shared = static_cast<std::uint8_t>(ma & mb);
  std::uint8_t pool = shared ? shared : both;
  for (int v = 0; v < vars::kMaxVars; ++v) {
    if (!(pool & (1u << v))) continue;
    unsigned d = std::max(a.degree_in(v), b.degree_in(v));
    if (d < best) {
      best = d;
      x = v;
    }
  }
  auto ac = a.coeffs_in(x), bc = b.coeffs_in(x);
  Poly ca = content_of(ac), cb = content_of(bc);
  Poly c = gcd_rec(ca, cb);
  Poly pa = ca.is_constant() ? a : Poly::divide_exact(a, ca);
  Poly pb = cb.is_constant() ? b : Poly::divide_exact(b, cb);
  if (pa.degree_in(x) == 0 || pb.degree_in(x) == 0) return c.monic();
  if (pa.degree_in(x) < pb.degree_in(x)) std::swap(pa, pb);
  Poly g;
  while (true) {
    Poly r = prem(pa, pb, x);
    if (r.is_zero()) {
      g = primitive_in(pb, x);
      break;
    }
    if (r.degree_in(x) == 0) {
      g = Poly(1);
      break;
    }
    pa = std::move(pb);
    pb = primitive_in(r, x);
  }
  return (c * g).monic();
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) { return gcd_rec(a, b); }

std::vector<mpq_class> rational_roots(const Poly& f) {
  std::vector<mpq_class> roots;
  int v = f.single_var();
  if (v < 0) return roots;
  // integer coefficients by clearing denominators
  unsigned deg = f.degree_in(v);
  std::vector<mpz_class> c(deg + 1, 0);
  mpz_class l = 1;
  for (auto& t : f.terms()) {
    mpz_class den = t.c.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  for (auto& t : f.terms()) {
    mpq_class s = t.c * l;
    c[t.m.exp(v)] = s.get_num();
  }
  std::size_t low = 0;
  while (low < c.size() && c[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  mpz_class a0 = abs(c[low]), an = abs(c[deg]);
  if (deg == low) return roots;
  const mpz_class cap("1000000000000");
  if (a0 > cap || an > cap) return roots;
  auto divisors = [](const mpz_class& n) {
    std::vector<mpz_class> ds;
    for (mpz_class i = 1; i * i <= n; ++i) {
      if (n % i == 0) {
        ds.push_back(i);
        if (i * i != n) ds.push_back(n / i);
      }
    }
    return ds;
  };
  auto ps = divisors(a0), qs = divisors(an);
  Poly g = f;
  for (auto& p : ps)
    for (auto& q : qs)
      for (int s : {1, -1}) {
        mpq_class r(p * s, q);
        r.canonicalize();
        if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
        Substitution sub{{v, r}};
        if (g.substitute(sub).is_zero()) roots.push_back(r);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace partcat
