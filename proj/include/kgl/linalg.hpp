#pragma once

// Exact sparse linear algebra over Z (hence over Q): fraction-free row
// echelon form with content normalization, plus the monomial bases and the
// polynomials the blow-up oracle works with.

#include <cstddef>
#include <map>
#include <vector>

#include "kgl/core.hpp"

namespace kgl {

/// column -> nonzero entry
using SparseVector = std::map<std::size_t, Integer>;

/// Divides out the gcd of the entries and makes the leading entry positive.
void normalize(SparseVector& v);

/// Row echelon basis of a subspace of Q^N, kept as primitive integer rows.
/// Each row's pivot is its smallest column.
class IntegerEchelon {
 public:
  IntegerEchelon() = default;

  /// Returns true iff v is not in the current span (the rank grows).
  bool insert(SparseVector v);

  /// A nonzero multiple of v minus an element of the span, with every pivot
  /// column cleared. Zero iff v lies in the span.
  SparseVector reduce(SparseVector v) const;

  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  std::map<std::size_t, SparseVector> rows_;
};

using Exponent = std::vector<int>;

/// The monomials of one degree in a fixed number of variables, indexed in
/// descending lexicographic order of the exponent vectors.
class MonomialSpace {
 public:
  MonomialSpace(int variables, int degree);

  int variables() const noexcept { return variables_; }
  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  const Exponent& exponent(std::size_t index) const { return monomials_.at(index); }
  std::size_t index(const Exponent& exponent) const;
  const std::vector<Exponent>& monomials() const noexcept { return monomials_; }

 private:
  int variables_;
  int degree_;
  std::vector<Exponent> monomials_;
  std::map<Exponent, std::size_t> index_;
};

class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial monomial(Exponent exponent, Integer coefficient = 1);

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial pow(unsigned k) const;

  const std::map<Exponent, Integer>& terms() const noexcept { return terms_; }

  /// Coordinates in the monomial basis of `space`, placed at column offset
  /// `offset`. All terms must have the space's degree.
  SparseVector coordinates(const MonomialSpace& space, std::size_t offset = 0) const;

 private:
  std::map<Exponent, Integer> terms_;
};

}  // namespace kgl
