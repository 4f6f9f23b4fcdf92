#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "aap/error.hpp"

namespace aap {

/// Exact ratio used for every score (coverage, conformance, discoverability).
using Rational = boost::rational<std::int64_t>;

/// "n/d" in lowest terms, or "n" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  std::string out = std::to_string(r.numerator());
  if (r.denominator() != 1) out += "/" + std::to_string(r.denominator());
  return out;
}

inline Rational parse_rational(std::string_view s) {
  try {
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(std::stoll(std::string(s)));
    return Rational(std::stoll(std::string(s.substr(0, slash))), std::stoll(std::string(s.substr(slash + 1))));
  } catch (const std::exception&) {
    throw Error("invalid rational: " + std::string(s));
  }
}

inline double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

}  // namespace aap
