#pragma once

// The toric closure KT of a maximal torus in KGL_n.
//
// Its fan lives in N = Z^n. Rays are +-e_S = +-sum_{i in S} e_i for nonempty
// S in [1, n]; the maximal cones are
//   sigma(alpha, l) = { x : x_alpha(1) <= ... <= x_alpha(l) <= 0
//                           <= x_alpha(l+1) <= ... <= x_alpha(n) }
// for permutations alpha and splits l in [0, n].
//
// Boundary restriction rule: the ray -e_S carries Z_{n-|S|} and the ray +e_S
// carries Y_{n-|S|}, each with multiplicity one.
//
// Sign convention: a divisor D = sum a_rho D_rho has support function h with
// h(v_rho) = -a_rho; on each maximal cone h is <m_sigma, .>. D is nef iff
// <m_sigma, v_rho> >= -a_rho for every sigma and every ray rho, and ample iff
// the inequality is strict for every ray outside sigma.

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "kgl/core.hpp"

namespace kgl {

inline constexpr int kMaxFanRank = 6;

/// +-e_S with S encoded as a bitmask (bit i-1 set iff i in S).
struct RayKey {
  int sign = 1;
  std::uint32_t mask = 0;

  auto operator<=>(const RayKey&) const = default;
};

struct Ray {
  RayKey key;
  std::vector<int> support;  // S, sorted, 1-based
  std::vector<int> vector;   // coordinates in Z^n
};

struct MaxCone {
  std::vector<int> perm;     // alpha(1..n), 1-based values
  int split = 0;             // l
  std::vector<std::size_t> rays;  // indices into Fan::rays(), in chain order
};

class Fan {
 public:
  int n() const noexcept { return n_; }
  const std::vector<Ray>& rays() const noexcept { return rays_; }
  const std::vector<MaxCone>& cones() const noexcept { return cones_; }

  std::size_t ray_index(const RayKey& key) const;
  bool cone_has_ray(std::size_t cone, std::size_t ray) const;

  /// Membership via the defining inequalities of sigma(alpha, l).
  bool cone_contains(std::size_t cone, std::span<const long> point) const;

  /// Tab-separated listing of rays and cones.
  std::string table() const;

 private:
  friend Fan build_fan(int n);

  int n_ = 0;
  std::vector<Ray> rays_;
  std::vector<MaxCone> cones_;
  std::map<RayKey, std::size_t> index_;
  std::vector<std::vector<bool>> incidence_;  // [cone][ray]
};

/// RankTooLarge unless 1 <= n <= kMaxFanRank.
Fan build_fan(int n);

struct ToricDivisor {
  int n = 0;
  std::map<RayKey, Integer> coeff;

  const Integer& at(const RayKey& key) const;
};

enum class CoefficientRule {
  Standard,
  /// Adds 1 to the coefficient on -e_1. For fault-injection tests only.
  FaultInjected,
};

ToricDivisor restrict_to_toric(const LineBundleClass& bundle, CoefficientRule rule = CoefficientRule::Standard);

/// Compares the toric principal divisor of the character sum a_{n-i+1} e_i^*
/// with the Z/Y coefficients of divisor_of_monomial(a), ray by ray along the
/// interval rays -e_[1,k] and +e_[k,n], for `samples` random a. Throws
/// ConsistencyFailure naming the first counterexample; returns true otherwise.
bool verify_toric_consistency(int n, int samples, std::uint64_t seed = 1,
                              CoefficientRule rule = CoefficientRule::Standard);

struct SupportFunction {
  std::vector<IntVec> linear;  // m_sigma per cone of the fan, same order
};

SupportFunction support_function(const ToricDivisor& divisor, const Fan& fan);

struct Positivity {
  bool nef = false;
  bool ample = false;
};

Positivity positivity(const ToricDivisor& divisor, const Fan& fan);
bool is_nef(const ToricDivisor& divisor, const Fan& fan);
bool is_ample(const ToricDivisor& divisor, const Fan& fan);
bool is_nef(const ToricDivisor& divisor);
bool is_ample(const ToricDivisor& divisor);

/// omega^{-1}(-sum(Z_i + Y_i)) (x) bundle.
LineBundleClass boundary_twist(const LineBundleClass& bundle);

struct NotAmpleReport {
  LineBundleClass bundle;   // m_i = sum_{j>i} a_j, l_i = -sum_{j<=n-i} a_j
  LineBundleClass twisted;  // omega^{-1}(-sum(Z_i + Y_i)) (x) bundle
  bool L_not_ample = false;
  bool twisted_not_ample = false;
  bool all_closed_orbit_sections_nonzero = false;
};

/// a must be nondecreasing (NotDominant otherwise) with 1 <= n <= kMaxFanRank.
NotAmpleReport check_not_ample(std::span<const Integer> a);

/// Exact solution of the square system rows * x = rhs, where rows is an
/// integer matrix of determinant +-1. Used for cone coordinates.
IntVec solve_unimodular(const std::vector<std::vector<int>>& rows, std::span<const Integer> rhs);

}  // namespace kgl
