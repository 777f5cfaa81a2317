#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gnomon/arith.hpp"

namespace gnomon {

struct PrimePower {
  i64 prime = 0;
  int exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

using Factorization = std::vector<PrimePower>;

// Trial division. Fine for this library: the numbers factored are table
// parameters and leg values, not cryptographic moduli. Primes appear in
// ascending order; factorize(1) is the empty product.
inline Factorization factorize(i64 n) {
  if (n < 1) {
    throw std::domain_error("factorize: argument must be positive, got " +
                            std::to_string(n));
  }
  Factorization out;
  auto strip = [&](i64 p) {
    if (n % p != 0) return;
    PrimePower pp{p, 0};
    while (n % p == 0) {
      n /= p;
      ++pp.exponent;
    }
    out.push_back(pp);
  };
  strip(2);
  strip(3);
  // d <= n/d instead of d*d <= n keeps the loop bound overflow-free.
  for (i64 d = 5; d <= n / d; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

inline int distinct_prime_count(i64 n) {
  return static_cast<int>(factorize(n).size());
}

inline int distinct_odd_prime_count(i64 n) {
  int count = 0;
  for (const auto& pp : factorize(n)) {
    if (pp.prime != 2) ++count;
  }
  return count;
}

// The multiplicative blocks of an even generating square S = 2^a0 * p1^a1 *
// ... * pr^ar: two_power is what remains of the power of two after peeling
// the defining factor 2, plus one block per odd prime power. Coprime
// splittings of S move whole blocks, never parts of one, and the residual
// power of two is stuck on the even side. Invariant: two_power * 2 * product
// of blocks == S.
struct OddBlockSet {
  i64 two_power = 1;           // 2^(a0-1), so 1 when a0 = 1
  std::vector<i64> blocks;     // pi^ai, ascending by prime
};

inline OddBlockSet odd_blocks(i64 S) {
  if (S < 2 || S % 2 != 0) {
    throw std::domain_error("odd_blocks: S must be a positive even number, got " +
                            std::to_string(S));
  }
  OddBlockSet out;
  for (const auto& pp : factorize(S)) {
    i64 block = 1;
    for (int i = 0; i < pp.exponent; ++i) block = checked_mul(block, pp.prime);
    if (pp.prime == 2) {
      out.two_power = block / 2;
    } else {
      out.blocks.push_back(block);
    }
  }
  return out;
}

// All ways to write S = 2*t*l with gcd(t, l) = 1 and l odd, as (t, l) pairs
// sorted by ascending t. The residual power of two always lands in t; each
// odd prime-power block goes wholly to t or wholly to l, giving exactly 2^r
// pairs for r distinct odd primes.
inline std::vector<std::pair<i64, i64>> coprime_partitions(i64 S) {
  OddBlockSet bs = odd_blocks(S);
  const auto& blocks = bs.blocks;
  const int r = static_cast<int>(blocks.size());
  std::vector<std::pair<i64, i64>> out;
  out.reserve(static_cast<std::size_t>(1) << r);
  for (std::uint64_t mask = 0; mask < (1ull << r); ++mask) {
    i64 t = bs.two_power;
    i64 l = 1;
    for (int i = 0; i < r; ++i) {
      if (mask & (1ull << i)) {
        l = checked_mul(l, blocks[i]);
      } else {
        t = checked_mul(t, blocks[i]);
      }
    }
    out.emplace_back(t, l);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gnomon
