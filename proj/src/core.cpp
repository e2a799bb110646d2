#include "kgl/core.hpp"

#include <algorithm>

namespace kgl {

const char* error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::EmptyOrbitIntersection: return "EmptyOrbitIntersection";
    case ErrorCode::UnboundedWeightSet: return "UnboundedWeightSet";
    case ErrorCode::NotDominant: return "NotDominant";
    case ErrorCode::InclusionHypothesisViolated: return "InclusionHypothesisViolated";
    case ErrorCode::RankTooLarge: return "RankTooLarge";
    case ErrorCode::ConsistencyFailure: return "ConsistencyFailure";
    case ErrorCode::InconsistentCartierData: return "InconsistentCartierData";
  }
  return "UnknownError";
}

LineBundleClass::LineBundleClass(int n, IntVec m, IntVec l, Integer e, Integer d)
    : n_(n), m_(std::move(m)), l_(std::move(l)), e_(std::move(e)), d_(std::move(d)) {
  if (n_ < 1) throw Error(ErrorCode::InvalidArgument, "rank n must be positive");
  if (m_.size() != static_cast<std::size_t>(n_) || l_.size() != static_cast<std::size_t>(n_))
    throw Error(ErrorCode::InvalidArgument,
                "m and l must both have length n = " + std::to_string(n_));
}

LineBundleClass LineBundleClass::trivial(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "rank n must be positive");
  return LineBundleClass(n, IntVec(n, 0), IntVec(n, 0));
}

LineBundleClass LineBundleClass::operator+(const LineBundleClass& other) const {
  if (other.n_ != n_) throw Error(ErrorCode::InvalidArgument, "rank mismatch");
  IntVec m(m_), l(l_);
  for (int i = 0; i < n_; ++i) {
    m[i] += other.m_[i];
    l[i] += other.l_[i];
  }
  return LineBundleClass(n_, std::move(m), std::move(l), e_ + other.e_, d_ + other.d_);
}

bool LineBundleClass::operator==(const LineBundleClass& other) const {
  return n_ == other.n_ && m_ == other.m_ && l_ == other.l_ && e_ == other.e_ && d_ == other.d_;
}

OrbitSpec::OrbitSpec(int n, std::set<int> I, std::set<int> J)
    : n_(n), I_(std::move(I)), J_(std::move(J)) {
  if (n_ < 1) throw Error(ErrorCode::InvalidArgument, "rank n must be positive");
  auto in_range = [this](int i) { return i >= 0 && i < n_; };
  if (!std::all_of(I_.begin(), I_.end(), in_range) || !std::all_of(J_.begin(), J_.end(), in_range))
    throw Error(ErrorCode::InvalidArgument,
                "I and J must be subsets of [0, " + std::to_string(n_ - 1) + "]");
}

OrbitSpec OrbitSpec::closed(int n, int r, int s) {
  if (r < 0 || s < 0 || r + s != n)
    throw Error(ErrorCode::InvalidArgument, "closed orbit needs r, s >= 0 with r + s = n");
  std::set<int> I, J;
  for (int i = s; i < n; ++i) I.insert(i);
  for (int j = r; j < n; ++j) J.insert(j);
  return OrbitSpec(n, std::move(I), std::move(J));
}

void validate_orbit(const OrbitSpec& spec) {
  if (spec.min_I() + spec.min_J() < spec.n())
    throw Error(ErrorCode::EmptyOrbitIntersection,
                "min(I) + min(J) = " + std::to_string(spec.min_I() + spec.min_J()) +
                    " < n = " + std::to_string(spec.n()));
}

bool WeightPair::operator<(const WeightPair& other) const {
  if (a != other.a) return std::lexicographical_compare(a.begin(), a.end(), other.a.begin(), other.a.end());
  return std::lexicographical_compare(b.begin(), b.end(), other.b.begin(), other.b.end());
}

Decomposition::Decomposition(std::vector<DecompositionEntry> entries) : entries_(std::move(entries)) {
  std::vector<const WeightPair*> seen;
  seen.reserve(entries_.size());
  for (const auto& entry : entries_) {
    if (entry.dim < 0) throw Error(ErrorCode::InvalidArgument, "negative summand dimension");
    total_ += entry.dim;
    seen.push_back(&entry.weight);
  }
  std::sort(seen.begin(), seen.end(), [](auto* x, auto* y) { return *x < *y; });
  auto dup = std::adjacent_find(seen.begin(), seen.end(), [](auto* x, auto* y) { return *x == *y; });
  if (dup != seen.end())
    throw Error(ErrorCode::InvalidArgument, "decomposition has a repeated weight pair");
}

bool DivisorExpr::is_zero() const {
  auto zero = [](const Integer& v) { return v == 0; };
  return std::all_of(zZ.begin(), zZ.end(), zero) && std::all_of(zY.begin(), zY.end(), zero) &&
         std::all_of(zDelta.begin(), zDelta.end(), zero);
}

DivisorExpr DivisorExpr::operator+(const DivisorExpr& other) const {
  if (other.n() != n()) throw Error(ErrorCode::InvalidArgument, "rank mismatch");
  DivisorExpr out = *this;
  for (std::size_t i = 0; i < zZ.size(); ++i) out.zZ[i] += other.zZ[i];
  for (std::size_t i = 0; i < zY.size(); ++i) out.zY[i] += other.zY[i];
  for (std::size_t i = 0; i < zDelta.size(); ++i) out.zDelta[i] += other.zDelta[i];
  return out;
}

bool DivisorExpr::operator==(const DivisorExpr& other) const {
  return zZ == other.zZ && zY == other.zY && zDelta == other.zDelta;
}

bool is_nondecreasing(std::span<const Integer> values) {
  return std::adjacent_find(values.begin(), values.end(),
                            [](const Integer& x, const Integer& y) { return x > y; }) == values.end();
}

}  // namespace kgl
