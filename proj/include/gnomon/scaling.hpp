#pragma once

#include <stdexcept>
#include <string>

#include "gnomon/arith.hpp"
#include "gnomon/progression.hpp"
#include "gnomon/triple.hpp"

namespace gnomon {

// A primitive triple scaled by a common multiplier k, with the gnomon
// descriptors of the scaled legs.
struct ScaledTriple {
  PrimitiveTriple base;
  i64 k = 1;
  i64 kx = 0;
  i64 ky = 0;
  i64 ka = 0;
  GnomonDescriptor g_kx;
  GnomonDescriptor g_ky;

  friend bool operator==(const ScaledTriple&, const ScaledTriple&) = default;
};

// Scaling acts on thickness and middle term: T_kx = k*l^2, T_ky = 2k*t^2,
// middle_kx = k*(l+2t)^2, middle_ky = 2k*(l+t)^2. The first term is then
// forced by s1 = middle - (T - 1); it is NOT k times the unscaled first term.
inline ScaledTriple scale(const TripleParams& p, i64 k) {
  if (k < 1) {
    throw std::domain_error("scale: k must be positive, got " + std::to_string(k));
  }
  ScaledTriple out;
  out.base = triple_from_params(p);
  out.k = k;
  out.kx = checked_mul(k, out.base.x);
  out.ky = checked_mul(k, out.base.y);
  out.ka = checked_mul(k, out.base.a);
  i64 T_kx = checked_mul(k, checked_sq(p.l));
  i64 mid_kx = checked_mul(k, checked_sq(checked_add(p.l, checked_mul(2, p.t))));
  i64 T_ky = checked_mul(2, checked_mul(k, checked_sq(p.t)));
  i64 mid_ky = checked_mul(2, checked_mul(k, checked_sq(checked_add(p.l, p.t))));
  out.g_kx = {mid_kx - (T_kx - 1), 2, T_kx};
  out.g_ky = {mid_ky - (T_ky - 1), 2, T_ky};
  return out;
}

}  // namespace gnomon
