#pragma once

// Divisor and Picard-group arithmetic on KGL_n.
//
// Pic(KGL_n) is generated by Z_0..Z_{n-1}, Y_0..Y_{n-1} subject to the single
// relation
//     sum (n-i) Z_i = sum (n-i) Y_i.
// The Y_{n-1} coefficient of the relation is -1, so eliminating Y_{n-1}
// leaves the free basis Z_0..Z_{n-1}, Y_0..Y_{n-2}.

#include <span>

#include "kgl/core.hpp"

namespace kgl {

struct PicClass {
  IntVec z;  // coefficients of Z_0..Z_{n-1}
  IntVec y;  // coefficients of Y_0..Y_{n-2}

  int n() const noexcept { return static_cast<int>(z.size()); }
  bool is_zero() const;
  PicClass operator+(const PicClass& other) const;
  PicClass operator-(const PicClass& other) const;
  bool operator==(const PicClass& other) const { return z == other.z && y == other.y; }
};

/// div prod_{i=1}^n (d_i / d_{i-1})^{a_{n-i+1}}, d_i the leading i x i minor.
DivisorExpr divisor_of_monomial(std::span<const Integer> a);

/// Normal form of sum zZ_i Z_i + sum zY_i Y_i (both of length n).
PicClass pic_normal_form(std::span<const Integer> zZ, std::span<const Integer> zY);

/// Normal form of the underlying bundle; the (e, d) twists are trivial bundles.
PicClass pic_normal_form(const LineBundleClass& bundle);

bool pic_equal(const LineBundleClass& first, const LineBundleClass& second);

/// m_i = n - i, l_i = -(n - i): the class that vanishes in Pic.
LineBundleClass relation_class(int n);

/// omega = (x)_{i=0}^{n-1} (M_i (x) L_i)^{i(i-n)-1}.
LineBundleClass dualizing_class(int n);

/// Class of Delta_i, 1 <= i <= n-1. The step sequence a = (0^{n-i}, 1^i) has
/// Delta_i as the only Delta term of its principal divisor, which pins it.
PicClass delta_class(int n, int i);

/// Class of a divisor expression, with each Delta_i replaced by delta_class.
PicClass pic_class_of(const DivisorExpr& divisor);

/// L as a bundle class: coefficients zZ -> m, zY -> l. The Delta part must vanish.
LineBundleClass bundle_of(const DivisorExpr& divisor);

}  // namespace kgl
