#include "partcat/tensor_rep.hpp"

#include <sstream>

namespace partcat {

std::size_t intPow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > kMatrixCap) return r;  // already past any allowed size
    r *= base;
  }
  return r;
}

IntertwinerMatrix::IntertwinerMatrix(std::size_t k, std::size_t l, std::size_t n) : upper(k), lower(l), N(n) {
  if (n < 1) throw std::invalid_argument("matrix: N must be at least 1");
  if (intPow(n, k + l) > kMatrixCap)
    throw CapacityError("matrix: N^(k+l) = " + std::to_string(n) + "^" + std::to_string(k + l) + " above 6561");
  rows = intPow(n, l);
  cols = intPow(n, k);
  entries.assign(rows * cols, Rational(0));
}

IntertwinerMatrix IntertwinerMatrix::operator*(const IntertwinerMatrix& o) const {
  if (o.lower != upper || o.N != N) throw ShapeMismatch("matrix product: shapes differ");
  IntertwinerMatrix r(o.upper, lower, N);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t m = 0; m < cols; ++m) {
      const Rational& a = at(i, m);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols; ++j)
        if (!o.at(m, j).is_zero()) r.at(i, j) += a * o.at(m, j);
    }
  return r;
}

IntertwinerMatrix IntertwinerMatrix::operator+(const IntertwinerMatrix& o) const {
  if (o.upper != upper || o.lower != lower || o.N != N) throw ShapeMismatch("matrix sum: shapes differ");
  IntertwinerMatrix r = *this;
  for (std::size_t i = 0; i < entries.size(); ++i) r.entries[i] += o.entries[i];
  return r;
}

IntertwinerMatrix IntertwinerMatrix::scaled(const Rational& c) const {
  IntertwinerMatrix r = *this;
  for (auto& e : r.entries) e *= c;
  return r;
}

IntertwinerMatrix IntertwinerMatrix::transpose() const {
  IntertwinerMatrix r(lower, upper, N);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::string IntertwinerMatrix::dump() const {
  std::ostringstream os;
  os << "T (" << upper << "," << lower << ") N=" << N << " " << rows << "x" << cols << "\n";
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) os << (j ? " " : "") << at(i, j);
    os << "\n";
  }
  return os.str();
}

IntertwinerMatrix tensorMatrix(const IntertwinerMatrix& p, const IntertwinerMatrix& q) {
  if (p.N != q.N) throw ShapeMismatch("tensor: different N");
  IntertwinerMatrix r(p.upper + q.upper, p.lower + q.lower, p.N);
  // p's indices come first and vary fastest
  for (std::size_t i = 0; i < q.rows; ++i)
    for (std::size_t j = 0; j < q.cols; ++j) {
      const Rational& b = q.at(i, j);
      if (b.is_zero()) continue;
      for (std::size_t a = 0; a < p.rows; ++a)
        for (std::size_t c = 0; c < p.cols; ++c)
          if (!p.at(a, c).is_zero()) r.at(i * p.rows + a, j * p.cols + c) = b * p.at(a, c);
    }
  return r;
}

namespace {

// calls fn(row, col) for every entry where the labelling is constant on blocks
template <class Fn>
void forEachSupport(const Partition& p, std::size_t N, Fn&& fn) {
  const std::size_t k = p.upper(), n = p.length(), nb = p.blockCount();
  std::vector<std::size_t> val(nb, 0);
  for (;;) {
    std::size_t row = 0, col = 0, rw = 1, cw = 1;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t v = val[static_cast<std::size_t>(p.label(i))];
      if (i < k) {
        col += v * cw;
        cw *= N;
      } else {
        row += v * rw;
        rw *= N;
      }
    }
    fn(row, col);
    std::size_t b = 0;
    while (b < nb && ++val[b] == N) val[b++] = 0;
    if (b == nb) return;
  }
}

std::vector<std::size_t> digits(std::size_t x, std::size_t len, std::size_t N) {
  std::vector<std::size_t> d(len);
  for (std::size_t i = 0; i < len; ++i, x /= N) d[i] = x % N;
  return d;
}

}  // namespace

IntertwinerMatrix matrixOf(const Partition& p, std::size_t N) {
  IntertwinerMatrix m(p.upper(), p.lower(), N);
  forEachSupport(p, N, [&](std::size_t r, std::size_t c) { m.at(r, c) = Rational(1); });
  return m;
}

IntertwinerMatrix matrixOf(const LinComb<Rational>& v, std::size_t N) {
  IntertwinerMatrix m(v.upper(), v.lower(), N);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Rational& c = v.terms()[i].second;
    forEachSupport(v.partitionAt(i), N,
                   [&](std::size_t r, std::size_t col) { m.at(r, col) += c; });
  }
  return m;
}

SignMatrix SignMatrix::qdef(std::size_t N) {
  SignMatrix m{N, std::vector<int>(N * N, 1)};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) m.s[i * N + j] = -1;
  return m;
}

SignMatrix SignMatrix::grad(std::size_t N, std::size_t n) {
  if (n >= N) throw std::invalid_argument("grad sigma needs n < N");
  SignMatrix m{N, std::vector<int>(N * N, 1)};
  auto si = [&](std::size_t i) { return i + 1 <= n ? 1 : -1; };
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) m.s[i * N + j] = si(i) * si(j);
  return m;
}

SignMatrix SignMatrix::parse(const std::string& spec, std::size_t N) {
  if (spec == "qdef") return qdef(N);
  if (spec.rfind("grad:", 0) == 0) {
    std::size_t used = 0;
    unsigned long n = 0;
    try {
      n = std::stoul(spec.substr(5), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != spec.size() - 5) throw std::invalid_argument("bad sigma '" + spec + "'");
    return grad(N, n);
  }
  throw std::invalid_argument("unknown sigma '" + spec + "' (expected qdef or grad:n)");
}

int sigmaProduct(const SignMatrix& sigma, const std::vector<std::size_t>& idx) {
  int r = 1;
  for (std::size_t m = 0; m < idx.size(); ++m) {
    if (idx[m] >= sigma.N) throw std::out_of_range("sigmaProduct: index out of range");
    for (std::size_t n = m + 1; n < idx.size(); ++n) r *= sigma(idx[m], idx[n]);
  }
  return r;
}

IntertwinerMatrix twistedMatrixOf(const LinComb<Rational>& v, std::size_t N, const SignMatrix& sigma) {
  if (sigma.N != N) throw ShapeMismatch("twisted matrix: sigma size differs from N");
  IntertwinerMatrix m = matrixOf(v, N);
  std::vector<int> rowSign(m.rows), colSign(m.cols);
  for (std::size_t r = 0; r < m.rows; ++r) rowSign[r] = sigmaProduct(sigma, digits(r, m.lower, N));
  for (std::size_t c = 0; c < m.cols; ++c) colSign[c] = sigmaProduct(sigma, digits(c, m.upper, N));
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c)
      if (rowSign[r] * colSign[c] < 0) m.at(r, c) = -m.at(r, c);
  return m;
}

std::size_t rankOfSpan(const std::vector<Partition>& parts, std::size_t N) {
  if (parts.empty()) return 0;
  std::vector<std::vector<Rational>> rows;
  for (auto& p : parts) rows.push_back(matrixOf(p, N).entries);
  const std::size_t width = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < width; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

Partition randomEvenBlock(std::size_t k, std::size_t l, std::mt19937_64& rng) {
  const std::size_t n = k + l;
  if (n % 2) throw std::invalid_argument("randomEvenBlock: odd point count");
  std::vector<int> pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[i] = static_cast<int>(i);
  std::shuffle(pts.begin(), pts.end(), rng);
  // perfect matching, then merge random pairs of pairs
  std::vector<int> lab(n);
  const int pairs = static_cast<int>(n / 2);
  std::vector<int> merged(static_cast<std::size_t>(pairs));
  for (int b = 0; b < pairs; ++b)
    merged[static_cast<std::size_t>(b)] = std::uniform_int_distribution<int>(0, b)(rng);
  for (std::size_t i = 0; i < n; i += 2) {
    int b = merged[i / 2];
    while (merged[static_cast<std::size_t>(b)] != b) b = merged[static_cast<std::size_t>(b)];
    lab[static_cast<std::size_t>(pts[i])] = lab[static_cast<std::size_t>(pts[i + 1])] = b;
  }
  return Partition(k, l, lab);
}

FunctorCheck matrixFunctorCheck(std::size_t N, const SignMatrix* sigma, std::size_t trials, std::size_t maxPoints,
                                std::uint64_t seed) {
  FunctorCheck out;
  Algebra<Rational> alg{Rational(static_cast<long>(N))};
  auto T = [&](const LinComb<Rational>& v) { return sigma ? twistedMatrixOf(v, N, *sigma) : matrixOf(v, N); };
  auto expect = [&](bool ok, const std::string& what) {
    ++out.checks;
    if (!ok) out.failures.push_back(what);
  };
  for (std::size_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng(seed + t);
    std::uniform_int_distribution<std::size_t> pick(0, maxPoints);
    // k + m and m + l even keeps both factors even-block
    std::size_t k = pick(rng), m = pick(rng), l = pick(rng);
    if ((k + m) % 2) m = m ? m - 1 : 1;
    if ((m + l) % 2) l = l ? l - 1 : 1;
    const Partition p = randomEvenBlock(k, m, rng), q = randomEvenBlock(m, l, rng);
    const auto P = LinComb<Rational>::basis(p), Q = LinComb<Rational>::basis(q);
    const std::string tag = "trial " + std::to_string(t) + " p=" + p.word() + " q=" + q.word();
    expect(T(alg.compose(Q, P)) == T(Q) * T(P), tag + ": T(qp) != T(q)T(p)");
    if (intPow(N, p.length() + q.length()) <= kMatrixCap)
      expect(T(alg.tensor(P, Q)) == tensorMatrix(T(P), T(Q)), tag + ": T(p(x)q) != T(p)(x)T(q)");
    expect(T(alg.involution(P)) == T(P).transpose(), tag + ": T(p*) != T(p)^t");
  }
  return out;
}

}  // namespace partcat
