#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "gnomon/factorization.hpp"
#include "gnomon/triple.hpp"

namespace gnomon {

enum class LegParity { odd, even };

namespace detail {

// Unitary coprime factorizations n = u * v with u < v: each prime-power
// component of n goes wholly to one side. Returns the (u, v) pairs.
inline std::vector<std::pair<i64, i64>> unitary_pairs(i64 n) {
  Factorization fac = factorize(n);
  std::vector<i64> blocks;
  blocks.reserve(fac.size());
  for (const auto& pp : fac) {
    i64 block = 1;
    for (int i = 0; i < pp.exponent; ++i) block = checked_mul(block, pp.prime);
    blocks.push_back(block);
  }
  std::vector<std::pair<i64, i64>> out;
  const int r = static_cast<int>(blocks.size());
  for (std::uint64_t mask = 0; mask < (1ull << r); ++mask) {
    i64 u = 1;
    for (int i = 0; i < r; ++i) {
      if (mask & (1ull << i)) u = checked_mul(u, blocks[i]);
    }
    i64 v = n / u;
    if (u < v) out.emplace_back(u, v);
  }
  return out;
}

}  // namespace detail

// All params whose even leg is exactly y: unitary splits y/2 = u * v with
// v > u give t = u, l = v - u (odd because u and v have opposite parity).
// Empty unless 4 divides y. Sorted by S.
inline std::vector<TripleParams> even_leg_triples(i64 y) {
  if (y < 1) {
    throw std::domain_error("even_leg_triples: leg must be positive, got " +
                            std::to_string(y));
  }
  std::vector<TripleParams> out;
  if (y % 4 != 0) return out;
  for (auto [u, v] : detail::unitary_pairs(y / 2)) {
    out.push_back(make_params(u, v - u));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All params whose odd leg is exactly x: unitary splits x = u * v with v > u
// give l = u, t = (v - u) / 2. Empty when x is even or x = 1 (which would
// force t = 0). Sorted by S.
inline std::vector<TripleParams> odd_leg_triples(i64 x) {
  if (x < 1) {
    throw std::domain_error("odd_leg_triples: leg must be positive, got " +
                            std::to_string(x));
  }
  std::vector<TripleParams> out;
  if (x % 2 == 0 || x == 1) return out;
  for (auto [u, v] : detail::unitary_pairs(x)) {
    out.push_back(make_params((v - u) / 2, u));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Occurrence count of a leg value across all primitive triples: 2^(n-1) for
// representable legs, with n the number of distinct primes of the leg (for an
// even leg 4 | leg makes that equal to the count on leg/2); 0 for the
// unrepresentable ones (odd 1; even not divisible by 4).
inline i64 count_leg_occurrences(i64 leg, LegParity parity) {
  if (leg < 1) {
    throw std::domain_error("count_leg_occurrences: leg must be positive, got " +
                            std::to_string(leg));
  }
  if ((parity == LegParity::odd) != (leg % 2 != 0)) {
    throw std::domain_error("count_leg_occurrences: parity flag does not match leg " +
                            std::to_string(leg));
  }
  if (parity == LegParity::odd && leg == 1) return 0;
  if (parity == LegParity::even && leg % 4 != 0) return 0;
  return i64{1} << (distinct_prime_count(leg) - 1);
}

// Move a fixed leg into a different primitive triple by re-choosing its
// partition factor: t' for an even leg, l' for an odd leg. The new factor
// must be one that the leg's enumeration actually produces.
inline TripleParams transform(const TripleParams& p, LegParity parity,
                              i64 new_factor) {
  PrimitiveTriple tr = triple_from_params(p);
  if (parity == LegParity::even) {
    for (const auto& q : even_leg_triples(tr.y)) {
      if (q.t == new_factor) return q;
    }
    throw std::domain_error("transform: " + std::to_string(new_factor) +
                            " is not a valid t for even leg " + std::to_string(tr.y));
  }
  for (const auto& q : odd_leg_triples(tr.x)) {
    if (q.l == new_factor) return q;
  }
  throw std::domain_error("transform: " + std::to_string(new_factor) +
                          " is not a valid l for odd leg " + std::to_string(tr.x));
}

}  // namespace gnomon
