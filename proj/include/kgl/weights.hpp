#pragma once

// The weight sets A_IJ(L) indexing the simple summands of H^0(O_IJ, L), and
// the weight of the pullback of L to a closed orbit.

#include <optional>
#include <vector>

#include "kgl/core.hpp"

namespace kgl {

/// Direct evaluation of the four defining conditions of A_IJ(L). Requires a
/// valid orbit spec and length-n sequences.
bool satisfies_conditions(const LineBundleClass& bundle, const OrbitSpec& spec, const WeightPair& w);

/// Completes a (1-based a_1..a_n) to the pair (a, b) with
/// a_i - e = -b_{n-i+1} + d.
WeightPair weight_from_a(const LineBundleClass& bundle, IntVec a);

/// All elements of A_IJ(L), sorted lexicographically by a.
std::vector<WeightPair> enumerate_weights(const LineBundleClass& bundle, const OrbitSpec& spec);

/// (a, b) with i_{r,s}^* L = O(a, b). Requires r, s >= 0 and r + s = n.
WeightPair closed_orbit_weight(const LineBundleClass& bundle, int r, int s);

/// Chain-structured lattice point system in unknowns x_1 <= ... <= x_n:
///   bounds on prefix sums x_1 + ... + x_k and suffix sums x_{n-t+1} + ... + x_n.
/// A_IJ(L) is the solution set of such a system in x = a - e.
struct ChainSystem {
  struct Bound {
    int length;                    // k for a prefix, t for a suffix
    std::optional<Integer> lower;  // nullopt: no lower bound
    std::optional<Integer> upper;
  };

  int n = 0;
  std::vector<Bound> prefix;
  std::vector<Bound> suffix;
};

ChainSystem chain_system_for(const LineBundleClass& bundle, const OrbitSpec& spec);

/// Depth-first enumeration of all nondecreasing integer solutions, in
/// lexicographic order. Coordinate ranges are derived first by bound
/// propagation; UnboundedWeightSet if some coordinate stays unbounded.
std::vector<IntVec> enumerate_chain(const ChainSystem& system);

}  // namespace kgl
