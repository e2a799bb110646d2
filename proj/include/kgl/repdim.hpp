#pragma once

// Dimensions of simple modules H^0(Fl, O(a, b)).
//
// A nondecreasing sequence c_1 <= ... <= c_n is read as a dominant weight by
// reversal; only successive differences matter, so both routines are
// invariant under c -> c + k(1, ..., 1).

#include <span>

#include "kgl/core.hpp"

namespace kgl {

/// prod_{i<j} (c_j - c_i + j - i) / (j - i), exact. NotDominant unless c is
/// nondecreasing.
Integer weyl_dim(std::span<const Integer> c);

/// Number of Gelfand-Tsetlin patterns whose top row is c in nonincreasing
/// order. Independent of weyl_dim; used to cross-check it.
Integer gt_dim(std::span<const Integer> c);

/// weyl_dim(a) * weyl_dim(b).
Integer dim_pair(const WeightPair& w);

}  // namespace kgl
