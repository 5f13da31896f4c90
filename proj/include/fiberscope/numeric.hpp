#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <string>

#include "fiberscope/error.hpp"

namespace fiberscope {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical "num/den" form, lowest terms, positive denominator. Used for
/// bit-exact JSON serialization of rational coordinates.
inline std::string to_fraction_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Accepts "num/den" or a bare integer.
inline Rational fraction_from_string(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw SyntaxError("zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw SyntaxError("bad rational '" + text + "': " + e.what());
  }
}

/// gcd on int64 values, result >= 0, gcd(0,0) = 0.
inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  auto abs64 = [](std::int64_t v) {
    return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
  };
  return static_cast<std::int64_t>(std::gcd(abs64(a), abs64(b)));
}

/// Checked narrowing from Int; the exact pipeline stays in cpp_int and this is
/// applied only where a result is known to be small (norm values, counts).
inline std::int64_t to_int64(const Int& v) {
  return v.convert_to<std::int64_t>();
}

}  // namespace fiberscope
