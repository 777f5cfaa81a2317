#pragma once

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "gnomon/arith.hpp"

namespace gnomon {

// A primitive Pythagorean triple is generated from an even square S = 2tl
// with gcd(t, l) = 1 and l odd:
//
//   x = S + l^2 = l(l + 2t)     (odd leg)
//   y = S + 2t^2 = 2t(t + l)    (even leg, divisible by 4)
//   a = S + l^2 + 2t^2          (hypotenuse)
//
// The map (t, l) -> (x, y, a) is a bijection onto the primitive triples.

struct TripleParams {
  i64 S = 0;
  i64 t = 0;
  i64 l = 0;

  friend auto operator<=>(const TripleParams&, const TripleParams&) = default;
};

struct PrimitiveTriple {
  i64 x = 0;
  i64 y = 0;
  i64 a = 0;

  friend auto operator<=>(const PrimitiveTriple&, const PrimitiveTriple&) = default;
};

inline void require_params(const TripleParams& p) {
  if (p.t < 1 || p.l < 1) {
    throw std::domain_error("triple params: t and l must be positive, got t=" +
                            std::to_string(p.t) + " l=" + std::to_string(p.l));
  }
  if (p.l % 2 == 0) {
    throw std::domain_error("triple params: l must be odd, got l=" +
                            std::to_string(p.l));
  }
  if (std::gcd(p.t, p.l) != 1) {
    throw std::domain_error("triple params: t and l must be coprime, got t=" +
                            std::to_string(p.t) + " l=" + std::to_string(p.l));
  }
  if (p.S != checked_mul(2, checked_mul(p.t, p.l))) {
    throw std::domain_error("triple params: S must equal 2*t*l, got S=" +
                            std::to_string(p.S) + " t=" + std::to_string(p.t) +
                            " l=" + std::to_string(p.l));
  }
}

inline TripleParams make_params(i64 t, i64 l) {
  TripleParams p{checked_mul(2, checked_mul(t, l)), t, l};
  require_params(p);
  return p;
}

inline PrimitiveTriple triple_from_params(const TripleParams& p) {
  require_params(p);
  i64 x = checked_add(p.S, checked_sq(p.l));
  i64 y = checked_add(p.S, checked_mul(2, checked_sq(p.t)));
  i64 a = checked_add(x, checked_mul(2, checked_sq(p.t)));
  return {x, y, a};
}

// True when x^2 + y^2 = a^2 with x odd, y even, all positive and pairwise
// coprime. Squares are compared in __int128 so values near the i64 limit
// cannot wrap. Never throws; malformed candidates simply fail.
inline bool validate_primitive(i64 x, i64 y, i64 a) {
  if (x < 1 || y < 1 || a < 1) return false;
  if (x % 2 == 0 || y % 2 != 0) return false;
  if (std::gcd(x, y) != 1) return false;  // with x^2+y^2=a^2 this covers a
  auto sq = [](i64 v) { return static_cast<__int128>(v) * v; };
  return sq(x) + sq(y) == sq(a);
}

inline bool validate_primitive(const PrimitiveTriple& tr) {
  return validate_primitive(tr.x, tr.y, tr.a);
}

// Inverse map: S = x + y - a, t = sqrt((a - x)/2), l = sqrt(a - y).
// Rejects anything that is not a primitive triple of the standard shape.
inline TripleParams params_from_triple(const PrimitiveTriple& tr) {
  if (!validate_primitive(tr)) {
    throw std::domain_error("params_from_triple: (" + std::to_string(tr.x) +
                            ", " + std::to_string(tr.y) + ", " +
                            std::to_string(tr.a) +
                            ") is not a primitive triple with odd x, even y");
  }
  i64 S = checked_add(tr.x, tr.y) - tr.a;
  i64 half_gap = (tr.a - tr.x) / 2;
  auto t = exact_sqrt(half_gap);
  auto l = exact_sqrt(tr.a - tr.y);
  if (!t || !l) {
    // Unreachable for a validated primitive triple; kept as a guard against
    // future edits weakening validate_primitive.
    throw std::domain_error("params_from_triple: inverse square roots failed");
  }
  TripleParams p{S, *t, *l};
  require_params(p);
  return p;
}

// Correspondence with the classical two-parameter form x = m^2 - n^2,
// y = 2mn, a = m^2 + n^2 (m > n >= 1, coprime, opposite parity):
// m = l + t, n = t.
inline std::pair<i64, i64> mn_from_params(const TripleParams& p) {
  require_params(p);
  return {checked_add(p.l, p.t), p.t};
}

inline TripleParams params_from_mn(i64 m, i64 n) {
  if (n < 1 || m <= n) {
    throw std::domain_error("params_from_mn: need m > n >= 1, got m=" +
                            std::to_string(m) + " n=" + std::to_string(n));
  }
  if (std::gcd(m, n) != 1 || (m - n) % 2 == 0) {
    throw std::domain_error(
        "params_from_mn: m and n must be coprime with opposite parity, got m=" +
        std::to_string(m) + " n=" + std::to_string(n));
  }
  return make_params(n, m - n);
}

}  // namespace gnomon
