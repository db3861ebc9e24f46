#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <limits>
#include <string>

namespace starcount {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

inline double to_double(const BigInt& v) { return v.convert_to<double>(); }
inline long double to_long_double(const BigInt& v) { return v.convert_to<long double>(); }

inline bool fits_u64(const BigInt& v) {
  return v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max());
}

// ceil(log2(v)) for v >= 1.
inline std::uint64_t ceil_log2(const BigInt& v) {
  if (v <= 1) return 0;
  BigInt w = v - 1;
  return static_cast<std::uint64_t>(boost::multiprecision::msb(w)) + 1;
}

// Smallest c >= 0 with c^k >= v.
inline BigInt integer_root_ceil(const BigInt& v, unsigned k) {
  if (v <= 0) return 0;
  if (k <= 1) return v;
  BigInt lo = 0;
  BigInt hi = 1;
  while (boost::multiprecision::pow(hi, k) < v) hi <<= 1;
  while (lo + 1 < hi) {
    BigInt mid = (lo + hi) >> 1;
    if (boost::multiprecision::pow(mid, k) >= v) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace starcount
