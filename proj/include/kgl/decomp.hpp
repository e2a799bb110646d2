#pragma once

// Decomposition of H^0(O_IJ, i^*L) into simple modules, and the two maps
// the decomposition is compatible with: restriction from KGL to O_IJ, and
// multiplication by the canonical sections mu^{m-m'} (x) lambda^{l-l'}.
//
// Both maps are diagonal in the canonical decomposition, so they are
// described by sets of weight pairs rather than matrices.

#include <vector>

#include "kgl/core.hpp"

namespace kgl {

/// A_IJ(L) with the dimension of each summand. Empty A gives total 0.
Decomposition decompose(const LineBundleClass& bundle, const OrbitSpec& spec);

struct RestrictionReport {
  std::vector<WeightPair> common;  // A(L) n A_IJ(L), sorted
  Integer kernel_dim;              // summands of A(L) outside common
  Integer image_dim;
  Integer ambient_extra_dim;       // summands of A_IJ(L) outside common
};

RestrictionReport restriction_report(const LineBundleClass& bundle, const OrbitSpec& spec);

struct InclusionReport {
  bool subset_ok = false;               // A_IJ(L') is contained in A_IJ(L)
  std::vector<WeightPair> new_weights;  // A_IJ(L) \ A_IJ(L'), sorted
  Integer dim_increase;
};

/// Requires equal n, e, d and m'_i <= m_i, l'_i <= l_i with equality for
/// i in I (resp. J); otherwise InclusionHypothesisViolated.
InclusionReport inclusion_report(const LineBundleClass& sub, const LineBundleClass& bundle, const OrbitSpec& spec);

}  // namespace kgl
