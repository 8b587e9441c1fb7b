#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

namespace tropinflect {

using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                           boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                          boost::multiprecision::et_off>;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int int_gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(Int a, Int b) { return boost::multiprecision::lcm(a, b); }

inline Int int_abs(const Int& a) { return a < 0 ? Int(-a) : a; }
inline Rat rat_abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }

/// Largest integer n with n <= r.
inline Int rat_floor(const Rat& r) {
  Int q = rat_num(r) / rat_den(r);
  if (r < 0 && q * rat_den(r) != rat_num(r)) --q;
  return q;
}

/// "p/q" when q != 1, plain "p" otherwise.
inline std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << rat_num(r);
  if (rat_den(r) != 1) os << "/" << rat_den(r);
  return os.str();
}

namespace detail {
/// Decimal digit string to integer; immune to the octal reading of "0…".
inline Int parse_digits(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("expected digits");
  Int v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument("expected digits");
    v = v * 10 + (c - '0');
  }
  return v;
}
}  // namespace detail

/// Parses "p", "p/q" or a decimal like "-1.25" into an exact rational.
inline Rat parse_rational(const std::string& str) {
  if (str.empty()) throw std::invalid_argument("empty rational literal");
  auto bad = [&] { throw std::invalid_argument("bad rational literal: '" + str + "'"); };
  std::string s = str;
  int sign = 1;
  if (s[0] == '+' || s[0] == '-') {
    if (s[0] == '-') sign = -1;
    s = s.substr(1);
  }
  try {
    std::size_t slash = s.find('/');
    if (slash != std::string::npos) {
      Int p = detail::parse_digits(s.substr(0, slash));
      Int q = detail::parse_digits(s.substr(slash + 1));
      if (q == 0) throw std::invalid_argument("zero denominator: '" + str + "'");
      return Rat(sign * p, q);
    }
    std::size_t dot = s.find('.');
    if (dot == std::string::npos) return Rat(sign * detail::parse_digits(s));
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad();
    Int p = whole.empty() ? Int(0) : detail::parse_digits(whole);
    Int q = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) q *= 10;
    Int f = frac.empty() ? Int(0) : detail::parse_digits(frac);
    return Rat(sign * (p * q + f), q);
  } catch (const std::invalid_argument& e) {
    if (std::string(e.what()).rfind("zero denominator", 0) == 0) throw;
    bad();
  }
  return 0;  // unreachable
}

/// Fixed-point decimal rendering (used by the SVG emitter; exact, deterministic).
inline std::string rat_decimal(const Rat& r, int places) {
  Int scale = 1;
  for (int k = 0; k < places; ++k) scale *= 10;
  bool neg = r < 0;
  Rat a = rat_abs(r);
  Int scaled = rat_floor(a * scale + Rat(1, 2));
  Int whole = scaled / scale;
  Int frac = scaled % scale;
  std::ostringstream os;
  if (neg && (whole != 0 || frac != 0)) os << '-';
  os << whole;
  if (places > 0) {
    std::string f = frac.str();
    os << '.' << std::string(places - f.size(), '0') << f;
  }
  return os.str();
}

}  // namespace tropinflect
