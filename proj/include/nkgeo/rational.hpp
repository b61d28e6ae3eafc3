#ifndef NKGEO_RATIONAL_HPP
#define NKGEO_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace nkgeo {

/// Exact arbitrary-precision fraction. Always canonical: positive
/// denominator, gcd(|num|, den) = 1. No rounding anywhere.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q" or "p" (decimal-free). Throws std::invalid_argument on
/// malformed input, including zero denominators.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  // shape: -?digits(/-?digits)?  with at least one digit on each side
  std::size_t i = 0, digits = 0;
  bool seen_slash = false;
  if (s[i] == '-') ++i;
  for (; i < s.size(); ++i) {
    if (s[i] >= '0' && s[i] <= '9') {
      ++digits;
    } else if (s[i] == '/' && !seen_slash && digits > 0) {
      seen_slash = true;
      digits = 0;
      if (i + 1 < s.size() && s[i + 1] == '-') ++i;
    } else {
      throw std::invalid_argument("bad rational literal: " + s);
    }
  }
  if (digits == 0) throw std::invalid_argument("bad rational literal: " + s);
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

/// Serializes as "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace nkgeo

#endif
