#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "gnomon/arith.hpp"
#include "gnomon/triple.hpp"

namespace gnomon {

// Euclid's classical parametrization, kept as an independent cross-check:
// x = m^2 - n^2, y = 2mn, a = m^2 + n^2 over m > n >= 1, gcd(m,n) = 1,
// m - n odd. Nothing in this header touches the generating-square machinery;
// triples come straight from (m, n).

inline PrimitiveTriple euclid_triple(i64 m, i64 n) {
  i64 m2 = checked_sq(m);
  i64 n2 = checked_sq(n);
  return {m2 - n2, checked_mul(2, checked_mul(m, n)), checked_add(m2, n2)};
}

// All primitive triples with hypotenuse <= a_max, sorted, duplicate-free.
// Iterates m while m^2 + 1 <= a_max; simple and auditable over fast.
inline std::vector<PrimitiveTriple> euclid_enumerate(i64 a_max) {
  std::vector<PrimitiveTriple> out;
  for (i64 m = 2; checked_add(checked_sq(m), 1) <= a_max; ++m) {
    for (i64 n = 1 + m % 2; n < m; n += 2) {
      if (checked_sq(m) + checked_sq(n) > a_max) break;
      if (std::gcd(m, n) != 1) continue;
      out.push_back(euclid_triple(m, n));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All primitive triples with x + y - a <= deficit_max, sorted. The deficit of
// Euclid(m, n) is 2n(m - n), which for 1 <= n < m is at least 2(m - 1), so no
// m beyond deficit_max/2 + 1 can contribute; that bound keeps the scan flat in
// memory even when the hypotenuses involved are huge.
inline std::vector<PrimitiveTriple> euclid_enumerate_by_deficit(i64 deficit_max) {
  std::vector<PrimitiveTriple> out;
  for (i64 m = 2; m <= deficit_max / 2 + 1; ++m) {
    for (i64 n = 1 + m % 2; n < m; n += 2) {
      if (checked_mul(2, checked_mul(n, m - n)) > deficit_max) continue;
      if (std::gcd(m, n) != 1) continue;
      out.push_back(euclid_triple(m, n));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All primitive triples with the given value as a leg, via divisor scans of
// the Euclid formulas. Even leg: 2mn = leg; odd leg: (m-n)(m+n) = leg.
inline std::vector<PrimitiveTriple> euclid_triples_with_leg(i64 leg, bool even_leg) {
  std::vector<PrimitiveTriple> out;
  if (even_leg) {
    if (leg < 2 || leg % 2 != 0) return out;
    i64 half = leg / 2;
    for (i64 n = 1; n <= half / n; ++n) {
      if (half % n != 0) continue;
      i64 m = half / n;
      if (m <= n) continue;
      if (std::gcd(m, n) != 1 || (m - n) % 2 == 0) continue;
      out.push_back(euclid_triple(m, n));
    }
  } else {
    if (leg < 3 || leg % 2 == 0) return out;
    for (i64 d1 = 1; d1 <= leg / d1; ++d1) {
      if (leg % d1 != 0) continue;
      i64 d2 = leg / d1;
      if (d2 <= d1) continue;
      i64 m = (d1 + d2) / 2;
      i64 n = (d2 - d1) / 2;
      if (n < 1 || std::gcd(m, n) != 1 || (m - n) % 2 == 0) continue;
      out.push_back(euclid_triple(m, n));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gnomon
