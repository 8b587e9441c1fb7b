#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropinflect/polygon.hpp"

namespace tropinflect {

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(std::size_t pos, const std::string& what)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// Tropical (max-plus) polynomial in two variables: exponent -> coefficient.
/// Duplicate exponents resolve by max, matching the tropical sum.
struct TropicalPolynomial {
  std::map<IVec2, Rat> terms;

  bool empty() const { return terms.empty(); }

  void add_term(const IVec2& e, const Rat& c) {
    auto [it, fresh] = terms.emplace(e, c);
    if (!fresh && c > it->second) it->second = c;
  }

  friend bool operator==(const TropicalPolynomial& a, const TropicalPolynomial& b) {
    return a.terms == b.terms;
  }
};

inline LatticePolygon newton_polygon(const TropicalPolynomial& p) {
  std::vector<IVec2> pts;
  for (const auto& [e, c] : p.terms) pts.push_back(e);
  return LatticePolygon(pts);
}

/// Degree d with Newton polygon exactly T_d, if so.
inline std::optional<Int> degree_if_standard(const TropicalPolynomial& p) {
  LatticePolygon np = newton_polygon(p);
  Int d = 0;
  for (const auto& [e, c] : p.terms) d = std::max(d, Int(e.x + e.y));
  if (np == standard_triangle(d)) return d;
  return std::nullopt;
}

struct EvalResult {
  Rat value;
  std::vector<IVec2> argmax;  // exponents attaining the max, sorted
};

inline EvalResult eval(const TropicalPolynomial& p, const QVec2& x) {
  if (p.terms.empty()) throw std::invalid_argument("eval: empty polynomial");
  EvalResult r;
  bool first = true;
  for (const auto& [e, c] : p.terms) {
    Rat v = x.x * e.x + x.y * e.y + c;
    if (first || v > r.value) {
      r.value = v;
      r.argmax.clear();
      r.argmax.push_back(e);
      first = false;
    } else if (v == r.value) {
      r.argmax.push_back(e);
    }
  }
  return r;
}

inline bool on_curve(const TropicalPolynomial& p, const QVec2& x) {
  return eval(p, x).argmax.size() >= 2;
}

/// Max-plus convolution: coefficient of k is max over splits a_i + b_{k-i}.
inline TropicalPolynomial product(const TropicalPolynomial& p, const TropicalPolynomial& q) {
  if (p.terms.empty() || q.terms.empty()) throw std::invalid_argument("product: empty polynomial");
  TropicalPolynomial r;
  for (const auto& [e1, c1] : p.terms)
    for (const auto& [e2, c2] : q.terms) r.add_term(e1 + e2, c1 + c2);
  return r;
}

/// Polynomial of the curve translated by t: subtracts <t, i> per coefficient.
inline TropicalPolynomial translate_curve(const TropicalPolynomial& p, const QVec2& t) {
  TropicalPolynomial r;
  for (const auto& [e, c] : p.terms) r.add_term(e, c - dot(t, e));
  return r;
}

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(const std::string& s) : s_(s) {}

  TropicalPolynomial run() {
    TropicalPolynomial p;
    skip_ws();
    if (eof()) throw ParseError(pos_, "empty input");
    parse_term(p);
    skip_ws();
    while (!eof()) {
      expect('+');
      parse_term(p);
      skip_ws();
    }
    if (p.terms.empty()) throw ParseError(pos_, "no terms");
    return p;
  }

 private:
  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  void expect(char c) {
    skip_ws();
    if (eof() || peek() != c) throw ParseError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  // term := coeff? ('*'? var ('^' nat)?)*   with at least a coeff or a var
  void parse_term(TropicalPolynomial& p) {
    skip_ws();
    Rat coeff = 0;
    bool saw_anything = false;
    if (!eof() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '-' || peek() == '.')) {
      coeff = parse_number();
      saw_anything = true;
    }
    Int i = 0, j = 0;
    for (;;) {
      skip_ws();
      bool star = false;
      if (!eof() && peek() == '*') {
        if (!saw_anything) throw ParseError(pos_, "term cannot start with '*'");
        star = true;
        ++pos_;
        skip_ws();
      }
      if (eof() || (peek() != 'x' && peek() != 'y')) {
        if (star) throw ParseError(pos_, "expected a variable after '*'");
        break;
      }
      char var = peek();
      ++pos_;
      Int exp = 1;
      skip_ws();
      if (!eof() && peek() == '^') {
        ++pos_;
        exp = parse_nat();
      }
      (var == 'x' ? i : j) += exp;
      saw_anything = true;
    }
    if (!saw_anything) throw ParseError(pos_, "expected a term");
    p.add_term({i, j}, coeff);
  }

  Rat parse_number() {
    skip_ws();
    std::size_t start = pos_;
    if (!eof() && peek() == '-') ++pos_;
    while (!eof() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) ++pos_;
    if (!eof() && peek() == '/') {
      ++pos_;
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    if (pos_ == start) throw ParseError(start, "expected a number");
    try {
      return parse_rational(s_.substr(start, pos_ - start));
    } catch (const std::exception& e) {
      throw ParseError(start, e.what());
    }
  }

  Int parse_nat() {
    skip_ws();
    std::size_t start = pos_;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) throw ParseError(start, "expected an exponent");
    return Int(s_.substr(start, pos_ - start));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Grammar: terms `c`, `c*x^i*y^j`, abbreviations `x`, `y`, `2x`, joined by '+'.
/// Coefficients are decimal rationals or fractions p/q; omitted coefficient is 0.
inline TropicalPolynomial parse_tropical(const std::string& text) {
  return detail::PolyParser(text).run();
}

inline std::string to_string(const TropicalPolynomial& p) {
  std::string out;
  for (const auto& [e, c] : p.terms) {
    if (!out.empty()) out += " + ";
    std::string t;
    bool has_var = e.x != 0 || e.y != 0;
    if (!has_var || c != 0) t = rat_str(c);
    if (e.x != 0) {
      if (!t.empty()) t += "*";
      t += "x";
      if (e.x != 1) t += "^" + e.x.str();
    }
    if (e.y != 0) {
      if (!t.empty()) t += "*";
      t += "y";
      if (e.y != 1) t += "^" + e.y.str();
    }
    out += t;
  }
  return out;
}

}  // namespace tropinflect
