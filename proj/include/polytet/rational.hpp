#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "errors.hpp"

namespace polytet {

// All geometry in this library is exact: coordinates, predicates and
// volumes are arbitrary-precision rationals, never floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const Rat& r) { return r.sign(); }
inline int sign_of(const Int& r) { return r.sign(); }

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

// floor(r) as an integer (exact).
inline Int rat_floor(const Rat& r) {
  Int n = numerator(r), d = denominator(r);  // d > 0 by normalization
  Int q = n / d;                             // truncates toward zero
  if (n < 0 && q * d != n) --q;
  return q;
}

// ceil(r) as an integer (exact).
inline Int rat_ceil(const Rat& r) {
  Int n = numerator(r), d = denominator(r);
  Int q = n / d;
  if (n > 0 && q * d != n) ++q;
  return q;
}

// Canonical text form: "p" when the denominator is 1, else "p/q" with q > 0.
inline std::string rat_to_string(const Rat& r) {
  Int n = numerator(r), d = denominator(r);
  std::string s = n.str();
  if (d != 1) {
    s += "/";
    s += d.str();
  }
  return s;
}

namespace detail {

inline bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

// Int's string constructor follows C++ literal rules, so a leading zero
// would flip it into octal; strip them before converting.
inline Int digits_to_int(const std::string& s) {
  auto first = s.find_first_not_of('0');
  if (first == std::string::npos) return Int(0);
  return Int(s.substr(first));
}

// Parses an optionally signed integer-with-optional-decimal-point-and-
// exponent into an exact rational. Returns false on malformed input.
inline bool parse_decimal(const std::string& text, Rat& out) {
  std::string s = text;
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = (s[0] == '-');
    s.erase(0, 1);
  }
  long expo = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    std::string es = s.substr(epos + 1);
    s.erase(epos);
    bool eneg = false;
    if (!es.empty() && (es[0] == '+' || es[0] == '-')) {
      eneg = (es[0] == '-');
      es.erase(0, 1);
    }
    if (!all_digits(es) || es.size() > 6) return false;
    expo = std::stol(es);
    if (eneg) expo = -expo;
  }
  std::string digits = s;
  auto dot = s.find('.');
  long frac_len = 0;
  if (dot != std::string::npos) {
    digits = s.substr(0, dot) + s.substr(dot + 1);
    frac_len = static_cast<long>(s.size() - dot - 1);
  }
  if (!all_digits(digits)) return false;
  Int mantissa = digits_to_int(digits);
  if (neg) mantissa = -mantissa;
  long shift = expo - frac_len;
  Int num = mantissa, den = 1;
  if (shift >= 0) {
    num *= boost::multiprecision::pow(Int(10), static_cast<unsigned>(shift));
  } else {
    den = boost::multiprecision::pow(Int(10), static_cast<unsigned>(-shift));
  }
  out = Rat(num, den);
  return true;
}

}  // namespace detail

// Parses "p", "p/q", or a decimal literal (e.g. "-0.25", "1e3") into an
// exact rational. Throws InvalidParams on malformed input or zero
// denominator; callers that track source position wrap this in ParseError.
inline Rat parse_rational(const std::string& text) {
  auto bad = [&]() -> InvalidParams {
    return InvalidParams("malformed rational '" + text + "'");
  };
  if (text.empty()) throw bad();
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string ns = text.substr(0, slash), ds = text.substr(slash + 1);
    bool nneg = false;
    if (!ns.empty() && (ns[0] == '+' || ns[0] == '-')) {
      nneg = (ns[0] == '-');
      ns.erase(0, 1);
    }
    bool dneg = false;
    if (!ds.empty() && (ds[0] == '+' || ds[0] == '-')) {
      dneg = (ds[0] == '-');
      ds.erase(0, 1);
    }
    if (!detail::all_digits(ns) || !detail::all_digits(ds)) throw bad();
    Int num = detail::digits_to_int(ns), den = detail::digits_to_int(ds);
    if (den == 0) throw bad();
    if (nneg) num = -num;
    if (dneg) num = -num;
    return Rat(num, den);  // constructor normalizes to lowest terms
  }
  Rat r;
  if (!detail::parse_decimal(text, r)) throw bad();
  return r;
}

}  // namespace polytet
