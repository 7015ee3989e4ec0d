#include "partcat/text.hpp"

#include <charconv>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace partcat {

namespace {

class CoeffParser {
 public:
  CoeffParser(std::string_view s, std::size_t base, const SymbolScope& scope) : s_(s), base_(base), scope_(scope) {}

  Coeff run() {
    Coeff v = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, base_ + i_); }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  Coeff expr() {
    Coeff v;
    if (eat('-')) {
      v = -term();
    } else {
      eat('+');
      v = term();
    }
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }
  Coeff term() {
    Coeff v = power();
    for (;;) {
      if (eat('*')) {
        v *= power();
      } else if (eat('/')) {
        std::size_t at = i_;
        Coeff d = power();
        if (d.is_zero()) throw ParseError("division by zero", base_ + at);
        v /= d;
      } else {
        return v;
      }
    }
  }
  Coeff power() {
    Coeff b = unary();
    if (!eat('^')) return b;
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("exponent must be a non-negative integer");
    unsigned long e = std::stoul(std::string(s_.substr(start, i_ - start)));
    if (e > 255) fail("exponent too large");
    Coeff r(1);
    for (unsigned long k = 0; k < e; ++k) r *= b;
    return r;
  }
  Coeff unary() {
    if (eat('-')) return -unary();
    return primary();
  }
  Coeff primary() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of coefficient");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      Coeff v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return Coeff(Rational(mpq_class(std::string(s_.substr(start, i_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      std::string name(s_.substr(start, i_ - start));
      if (name == "d" || name == "delta") return Coeff::delta();
      if (scope_.strict && std::find(scope_.declared.begin(), scope_.declared.end(), name) == scope_.declared.end())
        throw ParseError("unknown symbol '" + name + "'", base_ + start);
      try {
        return Coeff::symbol(name);
      } catch (const std::exception& e) {
        throw ParseError(e.what(), base_ + start);
      }
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t base_;
  const SymbolScope& scope_;
  std::size_t i_ = 0;
};

bool isWordFactor(std::string_view f) {
  if (f == "()") return true;
  if (f.empty() || std::count(f.begin(), f.end(), '|') > 1) return false;
  return std::all_of(f.begin(), f.end(), [](char c) { return c == '|' || (c >= 'a' && c <= 'z'); });
}

std::string_view trim(std::string_view s, std::size_t* offset = nullptr) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  if (offset) *offset += a;
  return s.substr(a, b - a);
}

Partition wordToPartition(std::string_view w) {
  if (w == "()") return Partition::empty();
  if (w.find('|') != std::string_view::npos) return Partition::fromTwoRow(w);
  return Partition::fromWord(w);
}

}  // namespace

Coeff parseCoeff(std::string_view text, const SymbolScope& scope) {
  if (trim(text).empty()) throw ParseError("empty coefficient", 0);
  return CoeffParser(text, 0, scope).run();
}

LinComb<Coeff> parseLinComb(std::string_view text, const SymbolScope& scope) {
  // split at top-level + and - that are binary (not after an operator)
  struct Piece {
    std::size_t at;
    bool negative;
    std::string_view body;
  };
  std::vector<Piece> pieces;
  int depth = 0;
  std::size_t start = 0;
  bool neg = false;
  char prev = 0;  // last non-space char of the current term, 0 at its start
  auto finish = [&](std::size_t end) {
    std::size_t off = start;
    std::string_view body = trim(text.substr(start, end - start), &off);
    if (body.empty()) throw ParseError("missing term", end);
    pieces.push_back({off, neg, body});
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')' && --depth < 0) throw ParseError("unbalanced ')'", i);
    if (depth == 0 && (c == '+' || c == '-')) {
      if (prev == 0) {  // sign in front of a term
        if (c == '-') neg = !neg;
        start = i + 1;
        continue;
      }
      if (prev != '*' && prev != '/' && prev != '^') {
        finish(i);
        neg = c == '-';
        start = i + 1;
        prev = 0;
        continue;
      }
    }
    if (!std::isspace(static_cast<unsigned char>(c))) prev = c;
  }
  if (depth != 0) throw ParseError("unbalanced '('", text.size());
  if (prev == 0) throw ParseError(pieces.empty() ? "empty expression" : "missing term", text.size());
  finish(text.size());

  std::optional<std::pair<std::size_t, std::size_t>> shape;
  std::vector<LinComb<Coeff>> parts;
  for (auto& pc : pieces) {
    // last top-level '*' separates the word
    int d = 0;
    std::size_t star = std::string_view::npos;
    for (std::size_t i = 0; i < pc.body.size(); ++i) {
      if (pc.body[i] == '(') ++d;
      else if (pc.body[i] == ')') --d;
      else if (pc.body[i] == '*' && d == 0) star = i;
    }
    std::size_t woff = pc.at + (star == std::string_view::npos ? 0 : star + 1);
    std::string_view word = trim(star == std::string_view::npos ? pc.body : pc.body.substr(star + 1), &woff);
    if (!isWordFactor(word)) throw ParseError("expected a word of letters a-z, got '" + std::string(word) + "'", woff);
    Partition p;
    try {
      p = wordToPartition(word);
    } catch (const std::exception& e) {
      throw ParseError(e.what(), woff);
    }
    Coeff c(1);
    if (star != std::string_view::npos) c = CoeffParser(pc.body.substr(0, star), pc.at, scope).run();
    if (pc.negative) c = -c;
    std::pair<std::size_t, std::size_t> sh{p.upper(), p.lower()};
    if (shape && *shape != sh)
      throw ParseError("mixed word lengths: '" + std::string(word) + "' does not match the first term", woff);
    shape = sh;
    parts.push_back(LinComb<Coeff>::basis(p, c));
  }
  LinComb<Coeff> out(shape->first, shape->second);
  for (auto& v : parts) out += v;
  return out;
}

GeneratorSpec parseGeneratorFile(std::string_view text) {
  GeneratorSpec spec;
  SymbolScope scope;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::string_view body = trim(line);
    if (body.empty()) continue;
    auto where = [&](const std::exception& e) {
      return std::invalid_argument("line " + std::to_string(lineNo) + ": " + e.what());
    };
    if (body.rfind("params:", 0) == 0) {
      std::string list(body.substr(7));
      std::replace(list.begin(), list.end(), ',', ' ');
      std::istringstream ps(list);
      for (std::string name; ps >> name;) {
        if (name == "d" || name == "delta") continue;
        spec.params.push_back(name);
        vars::index(name);
      }
      scope.declared = spec.params;
      scope.strict = true;
      continue;
    }
    if (body.rfind("delta:", 0) == 0) {
      try {
        spec.delta = Rational::parse(trim(body.substr(6)));
      } catch (const std::exception& e) {
        throw where(e);
      }
      continue;
    }
    try {
      spec.generators.push_back(parseLinComb(body, scope));
    } catch (const std::exception& e) {
      throw where(e);
    }
    spec.sources.emplace_back(body);
  }
  return spec;
}

ContractionPlan parsePlan(std::string_view text) {
  std::string flat;
  // comments run to the end of the line
  bool comment = false;
  for (char c : text) {
    if (c == '#') comment = true;
    if (c == '\n') comment = false;
    if (!comment) flat += (c == '\n') ? ';' : c;
  }
  const std::string& clean = flat;
  auto number = [](std::string_view s) {
    s = trim(s);
    int v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || end != s.data() + s.size())
      throw std::invalid_argument("plan: '" + std::string(s) + "' is not a number");
    return v;
  };
  auto leg = [&](std::string_view s) {
    s = trim(s);
    auto dot = s.find('.');
    if (dot == std::string_view::npos) throw std::invalid_argument("plan: leg '" + std::string(s) + "' is not v.l");
    return Leg{number(s.substr(0, dot)) - 1, number(s.substr(dot + 1)) - 1};
  };
  ContractionPlan plan;
  plan.legArity = 4;
  std::istringstream st(clean);
  for (std::string stmt; std::getline(st, stmt, ';');) {
    std::string_view s = trim(stmt);
    if (s.empty()) continue;
    auto sp = s.find(' ');
    std::string_view kw = s.substr(0, sp);
    std::string_view rest = sp == std::string_view::npos ? std::string_view{} : trim(s.substr(sp));
    try {
      if (kw == "vertices") {
        plan.vertexCount = number(rest);
      } else if (kw == "legs") {
        plan.legArity = number(rest);
      } else if (kw == "edge") {
        auto dash = rest.find('-');
        if (dash == std::string_view::npos) throw std::invalid_argument("plan: edge needs v.l-v.l");
        plan.edges.push_back({leg(rest.substr(0, dash)), leg(rest.substr(dash + 1))});
      } else if (kw == "free") {
        std::istringstream fs{std::string(rest)};
        for (std::string item; std::getline(fs, item, ',');)
          if (!trim(item).empty()) plan.freeLegs.push_back(leg(item));
      } else {
        throw std::invalid_argument("plan: unknown statement '" + std::string(kw) + "'");
      }
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(std::string(e.what()) + " in '" + std::string(s) + "'");
    }
  }
  plan.validate();
  return plan;
}

}  // namespace partcat
