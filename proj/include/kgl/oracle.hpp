#pragma once

// Brute-force dim H^0(KGL_n, L) for n = 1, 2 from the explicit blow-up model.
//
// n = 1: KGL_1 = P^1 with Z_0, Y_0 the two boundary points, so
//   dim H^0(O(m_0 Z_0 + l_0 Y_0)) = max(0, m_0 + l_0 + 1).
//
// n = 2: KGL_2 is P^4 = Proj k[x00, x11, x12, x21, x22] blown up at the point
// p = (1:0:0:0:0) (exceptional divisor Y_0) and along the quadric surface
// S = {x00 = q = 0}, q = x11 x22 - x12 x21 (exceptional divisor Z_1).
// Pulling back:
//   {x00 = 0}  ->  Z_0 + Z_1
//   {q = 0}    ->  Y_1 + 2 Y_0 + Z_1
// (q is a rank-four quadric cone with vertex p, smooth along S). A section of
// O(m0 Z0 + m1 Z1 + l0 Y0 + l1 Y1) is F / (x00^a q^b) with deg F = a + 2b and
//   (i)   x00^{a - m0} | F
//   (ii)  F in (x00, q)^{a + b - m1}
//   (iii) F vanishes to order >= 2b - l0 at p
//   (iv)  q^{b - l1} | F
// (negative exponents impose nothing). S is a smooth complete intersection,
// so the ordinary power in (ii) is the symbolic power. Every section has this
// form once a >= max(0, m0) and b >= max(0, l1).

#include "kgl/core.hpp"

namespace kgl {

Integer oracle_dim_n1(const Integer& m0, const Integer& l0);

/// Degree and vanishing orders of conditions (i)-(iv), all clipped at 0.
struct BlowupConditions {
  long degree = 0;
  long x00_order = 0;      // (i)
  long surface_order = 0;  // (ii)
  long point_order = 0;    // (iii)
  long quadric_order = 0;  // (iv)
};

/// b = max(0, l1, ceil(l0 / 2)) + extra_b, a = max(0, m0, m1 - b) + extra_a.
BlowupConditions blowup_conditions(const Integer& m0, const Integer& m1, const Integer& l0, const Integer& l1,
                                   long extra_a = 0, long extra_b = 0);

/// Dimension of the degree-d forms satisfying (i)-(iv), by exact rank
/// computations over the monomial basis.
Integer oracle_dim_n2(const BlowupConditions& conditions);

Integer oracle_dim_n2(const Integer& m0, const Integer& m1, const Integer& l0, const Integer& l1);

/// Largest form degree the n = 2 oracle accepts.
inline constexpr long kMaxOracleDegree = 24;

}  // namespace kgl
