#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace gnomon {

using i64 = std::int64_t;

// Overflow-checked signed arithmetic. Every quantity in this library is
// nonnegative and stays in i64 range for the supported inputs; these helpers
// turn the few places that could wrap on hostile inputs into exceptions
// instead of undefined behavior.

inline i64 checked_add(i64 lhs, i64 rhs) {
  i64 out = 0;
  if (__builtin_add_overflow(lhs, rhs, &out)) {
    throw std::overflow_error("checked_add: " + std::to_string(lhs) + " + " +
                              std::to_string(rhs) + " overflows int64");
  }
  return out;
}

inline i64 checked_mul(i64 lhs, i64 rhs) {
  i64 out = 0;
  if (__builtin_mul_overflow(lhs, rhs, &out)) {
    throw std::overflow_error("checked_mul: " + std::to_string(lhs) + " * " +
                              std::to_string(rhs) + " overflows int64");
  }
  return out;
}

inline i64 checked_sq(i64 v) { return checked_mul(v, v); }

// Floor square root for n >= 0. Comparisons run in __int128 so the probe
// (r+1)^2 cannot wrap near the top of the i64 range.
inline i64 isqrt(i64 n) {
  if (n < 0) {
    throw std::domain_error("isqrt: negative argument " + std::to_string(n));
  }
  if (n < 2) return n;
  auto sq = [](i64 v) { return static_cast<__int128>(v) * v; };
  i64 lo = 1;
  i64 hi = static_cast<i64>(1) << 32;  // (2^32)^2 > INT64_MAX
  while (lo + 1 < hi) {
    i64 mid = lo + (hi - lo) / 2;
    if (sq(mid) <= n) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

// Exact square root, or nullopt when n is not a perfect square.
inline std::optional<i64> exact_sqrt(i64 n) {
  if (n < 0) return std::nullopt;
  i64 r = isqrt(n);
  if (static_cast<__int128>(r) * r == n) return r;
  return std::nullopt;
}

}  // namespace gnomon
