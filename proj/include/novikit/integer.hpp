#pragma once

// Arbitrary-precision integers. Expression templates are switched off so the
// type behaves like a plain value inside Eigen expressions and `auto`.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace nk {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline bool is_unit(const Integer& a) { return a == 1 || a == -1; }

inline bool divides(const Integer& d, const Integer& a) {
  if (d == 0) return a == 0;
  return a % d == 0;
}

/// Value as int64 when it fits, used by the serializers.
inline std::optional<std::int64_t> to_int64(const Integer& a) {
  static const Integer lo(std::numeric_limits<std::int64_t>::min());
  static const Integer hi(std::numeric_limits<std::int64_t>::max());
  if (a < lo || a > hi) return std::nullopt;
  return a.convert_to<std::int64_t>();
}

inline std::string to_string(const Integer& a) { return a.str(); }

}  // namespace nk
