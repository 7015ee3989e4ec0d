#include "partcat/closure.hpp"

#include <iomanip>
#include <sstream>

namespace partcat {

std::size_t GeneratorVerdict::containedCount() const {
  std::size_t n = 0;
  for (auto& s : summands) n += s.contained ? 1 : 0;
  return n;
}

bool EasinessReport::easy() const {
  for (auto& g : generators)
    if (!g.easy()) return false;
  return true;
}

std::string EasinessReport::verdict() const {
  return easy() ? "EASY (proven)" : "NON-EASY CANDIDATE up to l0=" + std::to_string(lengthBound);
}

namespace {

std::string joined(const std::vector<std::size_t>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

// part of f depending on d alone: gcd of its coefficients as a polynomial in the other symbols
Poly deltaContent(const Poly& f) {
  if (f.is_zero()) return f;
  std::uint8_t others = f.var_mask() & static_cast<std::uint8_t>(~1u);
  if (!others) return f;
  int v = 1;
  while (!(others & (1u << v))) ++v;
  Poly g;
  for (auto& c : f.coeffs_in(v)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? deltaContent(c) : gcd(g, deltaContent(c));
    if (g.is_constant()) break;
  }
  return g;
}

}  // namespace

std::vector<std::string> deltaLoci(const std::vector<Coeff>& leads) {
  std::set<mpq_class> roots;
  for (auto& c : leads) {
    Poly content = deltaContent(c.num());
    if (content.is_constant() || content.single_var() != vars::kDelta) continue;
    for (auto& r : rational_roots(content)) roots.insert(r);
  }
  std::vector<std::string> out;
  for (auto& r : roots) out.push_back(r.get_str());
  return out;
}

std::string EasinessReport::text() const {
  std::ostringstream os;
  os << "closure report\n";
  os << "  length bound: " << lengthBound << "\n";
  os << "  specialization: " << specialization << "\n";
  os << "  passes: " << passes << "\n";
  for (std::size_t i = 0; i < dimsPerPass.size(); ++i)
    os << "  dims after " << (i == 0 ? std::string("seeding") : "pass " + std::to_string(i)) << ": "
       << joined(dimsPerPass[i], " ") << "\n";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& g = generators[i];
    os << "  generator " << i + 1 << ": " << g.expression << "\n";
    os << "    summands contained: " << g.containedCount() << " of " << g.summands.size() << "\n";
    for (auto& s : g.summands) os << "      " << s.word << ": " << (s.contained ? "contained" : "missing") << "\n";
  }
  os << "  verdict: " << verdict() << "\n";
  if (!loci.empty()) {
    os << "  pivot vanishing loci (d):";
    for (auto& l : loci) os << " " << l;
    os << "\n";
  }
  if (seconds) os << "  wall time: " << std::fixed << std::setprecision(3) << *seconds << " s\n";
  os << "[summary]\n";
  os << "l0=" << lengthBound << "\n";
  os << "specialization=" << specialization << "\n";
  os << "passes=" << passes << "\n";
  os << "dims=" << joined(dims, ",") << "\n";
  os << "verdict=" << verdict() << "\n";
  std::string contained;
  for (std::size_t i = 0; i < generators.size(); ++i)
    contained += (i ? "," : "") + std::to_string(generators[i].containedCount());
  os << "summands_contained=" << contained << "\n";
  std::string l;
  for (std::size_t i = 0; i < loci.size(); ++i) l += (i ? "," : "") + loci[i];
  os << "loci=" << l << "\n";
  if (seconds) os << "seconds=" << std::fixed << std::setprecision(3) << *seconds << "\n";
  return os.str();
}

}  // namespace partcat
