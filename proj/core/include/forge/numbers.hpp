#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace forge {

// Arbitrary-precision integers and reduced rationals. cpp_rational keeps the
// canonical form (denominator > 0, gcd(num, den) = 1) after every operation.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }
inline Rat abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }

inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

inline double to_double(const Rat& q) { return q.convert_to<double>(); }
inline double to_double(const Int& n) { return n.convert_to<double>(); }

inline std::string to_string(const Int& n) { return n.str(); }

// "p" for integers, "p/q" otherwise; the CLI's rational wire format.
inline std::string to_string(const Rat& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline Int parse_int(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  return Int(s);
}

inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s));
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  return Rat(num, den);
}

// Floor division with sign convention floor(a/b), b != 0.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int floor_rat(const Rat& q) { return floor_div(numerator(q), denominator(q)); }
inline Int ceil_rat(const Rat& q) { return -floor_div(-numerator(q), denominator(q)); }

}  // namespace forge
