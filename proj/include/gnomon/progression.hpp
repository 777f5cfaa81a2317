#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gnomon/arith.hpp"
#include "gnomon/triple.hpp"

namespace gnomon {

// A gnomon (the L-shaped border that completes a square to a larger square)
// peels into unit-thickness gnomons whose areas are consecutive odd numbers.
// Three integers describe it completely.
struct GnomonDescriptor {
  i64 s1 = 0;  // first term, odd
  i64 d = 2;   // step, always 2
  i64 T = 0;   // thickness = number of terms

  friend bool operator==(const GnomonDescriptor&, const GnomonDescriptor&) = default;
};

inline void require_descriptor(const GnomonDescriptor& g) {
  if (g.d != 2) {
    throw std::domain_error("gnomon descriptor: step must be 2, got " +
                            std::to_string(g.d));
  }
  if (g.T < 1) {
    throw std::domain_error("gnomon descriptor: thickness must be positive, got " +
                            std::to_string(g.T));
  }
  if (g.s1 < 1 || g.s1 % 2 == 0) {
    throw std::domain_error("gnomon descriptor: first term must be odd and positive, got " +
                            std::to_string(g.s1));
  }
}

// Sum of the progression = area of the gnomon: T*s1 + T*(T-1).
inline i64 ap_sum(const GnomonDescriptor& g) {
  require_descriptor(g);
  return checked_add(checked_mul(g.T, g.s1), checked_mul(g.T, g.T - 1));
}

// Arithmetic mean of the terms: s1 + (T - 1). The actual central term when T
// is odd; for even T it is the even value between the two central odd terms.
// Satisfies middle_term(g) * T = ap_sum(g).
inline i64 middle_term(const GnomonDescriptor& g) {
  require_descriptor(g);
  return checked_add(g.s1, g.T - 1);
}

inline i64 last_term(const GnomonDescriptor& g) {
  require_descriptor(g);
  return checked_add(g.s1, checked_mul(g.d, g.T - 1));
}

// Materialized term list. Test helper; T grows as 2t^2, so production code
// sticks to the descriptor.
inline std::vector<i64> terms(const GnomonDescriptor& g) {
  require_descriptor(g);
  std::vector<i64> out;
  out.reserve(static_cast<std::size_t>(g.T));
  for (i64 i = 0; i < g.T; ++i) {
    out.push_back(checked_add(g.s1, checked_mul(g.d, i)));
  }
  return out;
}

// The two gnomons jointly tiling the hypotenuse square: g_x has area x^2 and
// sits on y^2, g_y has area y^2 and sits on x^2. They share the outer side a
// and therefore the last progression term 2a-1.
struct ConnectedGnomons {
  GnomonDescriptor g_x;  // s1 = 2y+1, T = l^2
  GnomonDescriptor g_y;  // s1 = 2x+1, T = 2t^2

  friend bool operator==(const ConnectedGnomons&, const ConnectedGnomons&) = default;
};

inline ConnectedGnomons descriptors_from_params(const TripleParams& p) {
  PrimitiveTriple tr = triple_from_params(p);
  GnomonDescriptor gx{checked_add(checked_mul(2, tr.y), 1), 2, checked_sq(p.l)};
  GnomonDescriptor gy{checked_add(checked_mul(2, tr.x), 1), 2,
                      checked_mul(2, checked_sq(p.t))};
  return {gx, gy};
}

// Reconstruction: x = (g_y.s1 - 1)/2, y = (g_x.s1 - 1)/2, a = (last + 1)/2.
// Descriptors may arrive from external input, so everything is recomputed and
// checked rather than trusted.
inline PrimitiveTriple triple_from_descriptors(const ConnectedGnomons& c) {
  require_descriptor(c.g_x);
  require_descriptor(c.g_y);
  i64 last_x = last_term(c.g_x);
  i64 last_y = last_term(c.g_y);
  if (last_x != last_y) {
    throw std::domain_error("triple_from_descriptors: last terms differ, " +
                            std::to_string(last_x) + " vs " + std::to_string(last_y));
  }
  PrimitiveTriple tr{(c.g_y.s1 - 1) / 2, (c.g_x.s1 - 1) / 2, (last_x + 1) / 2};
  if (!validate_primitive(tr) || ap_sum(c.g_x) != checked_sq(tr.x) ||
      ap_sum(c.g_y) != checked_sq(tr.y)) {
    throw std::domain_error("triple_from_descriptors: descriptors do not form a "
                            "primitive triple, got (" + std::to_string(tr.x) + ", " +
                            std::to_string(tr.y) + ", " + std::to_string(tr.a) + ")");
  }
  return tr;
}

}  // namespace gnomon
