#pragma once

// Domain types shared by every module.
//
// Index conventions:
//   * boundary divisors Z_i, Y_i and the exponents m_i, l_i use 0-based
//     indices i in [0, n-1];
//   * weight coordinates a_i, b_i are 1-based, i in [1, n]. In C++ they are
//     stored in ordinary 0-based vectors, so a_i lives at a[i - 1].

#include <gmpxx.h>

#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kgl {

using Integer = mpz_class;
using IntVec = std::vector<Integer>;

enum class ErrorCode {
  InvalidArgument,
  EmptyOrbitIntersection,
  UnboundedWeightSet,
  NotDominant,
  InclusionHypothesisViolated,
  RankTooLarge,
  ConsistencyFailure,
  InconsistentCartierData,
};

const char* error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Exponent data of the linearized bundle
///   (x)_i M_i^{m_i} (x) L_i^{l_i} (x) (det E)^e (x) (det F)^d.
class LineBundleClass {
 public:
  LineBundleClass(int n, IntVec m, IntVec l, Integer e = 0, Integer d = 0);

  static LineBundleClass trivial(int n);

  int n() const noexcept { return n_; }
  const IntVec& m() const noexcept { return m_; }
  const IntVec& l() const noexcept { return l_; }
  const Integer& e() const noexcept { return e_; }
  const Integer& d() const noexcept { return d_; }

  /// Tensor product (exponents add).
  LineBundleClass operator+(const LineBundleClass& other) const;

  bool operator==(const LineBundleClass& other) const;

 private:
  int n_;
  IntVec m_;
  IntVec l_;
  Integer e_;
  Integer d_;
};

/// Pair (I, J) naming the orbit closure cut out by Z_i (i in I) and Y_j (j in J).
/// The constructor only range-checks; nonemptiness is checked by validate_orbit.
class OrbitSpec {
 public:
  OrbitSpec(int n, std::set<int> I = {}, std::set<int> J = {});

  /// The closed orbit O_{r,s} = O_{[s,n-1],[r,n-1]}, r + s = n.
  static OrbitSpec closed(int n, int r, int s);

  int n() const noexcept { return n_; }
  const std::set<int>& I() const noexcept { return I_; }
  const std::set<int>& J() const noexcept { return J_; }

  // min(I), min(J) with min of the empty set taken to be n.
  int min_I() const noexcept { return I_.empty() ? n_ : *I_.begin(); }
  int min_J() const noexcept { return J_.empty() ? n_ : *J_.begin(); }

  bool operator==(const OrbitSpec&) const = default;

 private:
  int n_;
  std::set<int> I_;
  std::set<int> J_;
};

/// Throws EmptyOrbitIntersection unless min(I) + min(J) >= n.
void validate_orbit(const OrbitSpec& spec);

/// (a, b) in Z^n x Z^n; names the flag line bundle O(a, b) and, when both are
/// nondecreasing, the simple module H^0(Fl, O(a, b)).
struct WeightPair {
  IntVec a;
  IntVec b;

  int n() const noexcept { return static_cast<int>(a.size()); }

  bool operator==(const WeightPair& other) const { return a == other.a && b == other.b; }
  bool operator<(const WeightPair& other) const;
};

struct DecompositionEntry {
  WeightPair weight;
  Integer dim;
};

/// Multiplicity-free list of simple summands. The total is recomputed from
/// the entries; duplicate weight pairs are rejected.
class Decomposition {
 public:
  Decomposition() = default;
  explicit Decomposition(std::vector<DecompositionEntry> entries);

  const std::vector<DecompositionEntry>& entries() const noexcept { return entries_; }
  const Integer& total_dim() const noexcept { return total_; }
  bool empty() const noexcept { return entries_.empty(); }

 private:
  std::vector<DecompositionEntry> entries_;
  Integer total_ = 0;
};

/// sum zZ_i Z_i + sum zY_i Y_i + sum_{i=1}^{n-1} zDelta_i Delta_i.
/// zDelta[k] holds the coefficient of Delta_{k+1}.
struct DivisorExpr {
  IntVec zZ;
  IntVec zY;
  IntVec zDelta;

  int n() const noexcept { return static_cast<int>(zZ.size()); }
  bool is_zero() const;

  DivisorExpr operator+(const DivisorExpr& other) const;
  bool operator==(const DivisorExpr& other) const;
};

bool is_nondecreasing(std::span<const Integer> values);

}  // namespace kgl
