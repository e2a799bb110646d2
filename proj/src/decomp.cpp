#include "kgl/decomp.hpp"

#include <algorithm>
#include <iterator>

#include "kgl/repdim.hpp"
#include "kgl/weights.hpp"

namespace kgl {

namespace {

Integer total_dim(const std::vector<WeightPair>& weights) {
  Integer total = 0;
  for (const auto& w : weights) total += dim_pair(w);
  return total;
}

std::vector<WeightPair> sorted(std::vector<WeightPair> weights) {
  std::sort(weights.begin(), weights.end());
  return weights;
}

std::vector<WeightPair> set_difference(const std::vector<WeightPair>& x, const std::vector<WeightPair>& y) {
  std::vector<WeightPair> out;
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Decomposition decompose(const LineBundleClass& bundle, const OrbitSpec& spec) {
  std::vector<DecompositionEntry> entries;
  for (auto& w : enumerate_weights(bundle, spec)) {
    Integer dim = dim_pair(w);
    entries.push_back({std::move(w), std::move(dim)});
  }
  return Decomposition(std::move(entries));
}

RestrictionReport restriction_report(const LineBundleClass& bundle, const OrbitSpec& spec) {
  validate_orbit(spec);
  const auto ambient = sorted(enumerate_weights(bundle, OrbitSpec(bundle.n())));
  const auto orbit = sorted(enumerate_weights(bundle, spec));

  RestrictionReport report;
  std::set_intersection(ambient.begin(), ambient.end(), orbit.begin(), orbit.end(),
                        std::back_inserter(report.common));
  report.kernel_dim = total_dim(set_difference(ambient, report.common));
  report.image_dim = total_dim(report.common);
  report.ambient_extra_dim = total_dim(set_difference(orbit, report.common));
  return report;
}

InclusionReport inclusion_report(const LineBundleClass& sub, const LineBundleClass& bundle, const OrbitSpec& spec) {
  validate_orbit(spec);
  const int n = bundle.n();
  if (sub.n() != n || spec.n() != n)
    throw Error(ErrorCode::InclusionHypothesisViolated, "bundles and orbit must share the rank n");
  if (sub.e() != bundle.e() || sub.d() != bundle.d())
    throw Error(ErrorCode::InclusionHypothesisViolated, "determinant twists (e, d) must agree");
  for (int i = 0; i < n; ++i) {
    const std::string idx = std::to_string(i);
    if (sub.m()[i] > bundle.m()[i]) throw Error(ErrorCode::InclusionHypothesisViolated, "m'_" + idx + " > m_" + idx);
    if (sub.l()[i] > bundle.l()[i]) throw Error(ErrorCode::InclusionHypothesisViolated, "l'_" + idx + " > l_" + idx);
    if (spec.I().contains(i) && sub.m()[i] != bundle.m()[i])
      throw Error(ErrorCode::InclusionHypothesisViolated, "m'_" + idx + " != m_" + idx + " although " + idx + " is in I");
    if (spec.J().contains(i) && sub.l()[i] != bundle.l()[i])
      throw Error(ErrorCode::InclusionHypothesisViolated, "l'_" + idx + " != l_" + idx + " although " + idx + " is in J");
  }

  const auto small = sorted(enumerate_weights(sub, spec));
  const auto large = sorted(enumerate_weights(bundle, spec));
  InclusionReport report;
  report.subset_ok = std::includes(large.begin(), large.end(), small.begin(), small.end());
  report.new_weights = set_difference(large, small);
  report.dim_increase = total_dim(report.new_weights);
  return report;
}

}  // namespace kgl
