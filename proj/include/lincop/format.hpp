#pragma once

#include "lincop/density.hpp"

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <string>

namespace lincop {

/// "num/den" in lowest terms, or just "num" when the denominator is 1.
inline std::string fraction_string(const Rational& q) {
  Int num = numerator(q), den = denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Fixed-point decimal rendering, rounded half up. decimal_string(1/2, 6)
/// is "0.500000".
inline std::string decimal_string(const Rational& q, unsigned places = 6) {
  Int num = numerator(q), den = denominator(q);
  bool negative = num < 0;
  if (negative) num = -num;
  Int scale = 1;
  for (unsigned i = 0; i < places; ++i) scale *= 10;
  Int rounded = (2 * num * scale + den) / (2 * den);
  std::string out = Int(rounded / scale).str();
  if (places > 0) {
    std::string digits = Int(rounded % scale).str();
    digits.insert(0, places - digits.size(), '0');
    out += "." + digits;
  }
  return negative && rounded != 0 ? "-" + out : out;
}

/// Integers that fit in 64 bits are emitted as JSON numbers; anything
/// larger becomes a decimal string so no precision is lost on reparse.
inline nlohmann::ordered_json json_int(const Int& n) {
  static const Int kMin = std::numeric_limits<std::int64_t>::min();
  static const Int kMax = std::numeric_limits<std::int64_t>::max();
  if (n >= kMin && n <= kMax) {
    return nlohmann::ordered_json(static_cast<std::int64_t>(n));
  }
  return nlohmann::ordered_json(n.str());
}

/// Inverse of json_int: accepts a JSON number or decimal string.
inline Int int_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  return Int(j.get<std::int64_t>());
}

}  // namespace lincop
