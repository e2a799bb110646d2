#include "kgl/weights.hpp"

#include <algorithm>

namespace kgl {

namespace {

void require_length(const LineBundleClass& bundle, const WeightPair& w) {
  const auto n = static_cast<std::size_t>(bundle.n());
  if (w.a.size() != n || w.b.size() != n)
    throw Error(ErrorCode::InvalidArgument, "weight pair length differs from n");
}

using MaybeInt = std::optional<Integer>;

// One linear constraint lower <= x_first + ... + x_last <= upper (0-based, inclusive).
struct RangeSum {
  int first;
  int last;
  MaybeInt lower;
  MaybeInt upper;
};

std::vector<RangeSum> range_sums(const ChainSystem& system) {
  std::vector<RangeSum> out;
  for (const auto& p : system.prefix) out.push_back({0, p.length - 1, p.lower, p.upper});
  for (const auto& s : system.suffix) out.push_back({system.n - s.length, system.n - 1, s.lower, s.upper});
  return out;
}

bool tighten_upper(MaybeInt& bound, const Integer& candidate) {
  if (bound && *bound <= candidate) return false;
  bound = candidate;
  return true;
}

bool tighten_lower(MaybeInt& bound, const Integer& candidate) {
  if (bound && *bound >= candidate) return false;
  bound = candidate;
  return true;
}

// Interval propagation over x_1 <= ... <= x_n and the range sums. Returns
// false if the system is found infeasible. The bounds it produces are always
// implied by the system, so a pass cap only costs tightness, not soundness.
bool propagate(int n, const std::vector<RangeSum>& sums, std::vector<MaybeInt>& lo, std::vector<MaybeInt>& hi) {
  const int max_passes = 64 * n + 64;
  for (int pass = 0; pass < max_passes; ++pass) {
    bool changed = false;
    for (int k = 0; k + 1 < n; ++k) {
      if (lo[k]) changed |= tighten_lower(lo[k + 1], *lo[k]);
    }
    for (int k = n - 1; k > 0; --k) {
      if (hi[k]) changed |= tighten_upper(hi[k - 1], *hi[k]);
    }
    for (const auto& c : sums) {
      for (int k = c.first; k <= c.last; ++k) {
        if (c.upper) {
          Integer rest = 0;
          bool finite = true;
          for (int j = c.first; j <= c.last && finite; ++j) {
            if (j == k) continue;
            if (lo[j]) rest += *lo[j];
            else finite = false;
          }
          if (finite) changed |= tighten_upper(hi[k], *c.upper - rest);
        }
        if (c.lower) {
          Integer rest = 0;
          bool finite = true;
          for (int j = c.first; j <= c.last && finite; ++j) {
            if (j == k) continue;
            if (hi[j]) rest += *hi[j];
            else finite = false;
          }
          if (finite) changed |= tighten_lower(lo[k], *c.lower - rest);
        }
      }
    }
    for (int k = 0; k < n; ++k) {
      if (lo[k] && hi[k] && *lo[k] > *hi[k]) return false;
    }
    if (!changed) break;
  }
  return true;
}

enum class Verdict { Ok, Reject, RejectLarger };

class ChainSearch {
 public:
  ChainSearch(int n, std::vector<RangeSum> sums, IntVec lo, IntVec hi)
      : n_(n), sums_(std::move(sums)), lo_(std::move(lo)), hi_(std::move(hi)), x_(n), prefix_(n + 1, 0) {}

  std::vector<IntVec> run() {
    descend(0);
    return std::move(out_);
  }

 private:
  // Checks every constraint after x_0..x_k are fixed; unfixed coordinates
  // are bounded by [max(lo_j, x_k), hi_j].
  Verdict check(int k) const {
    for (const auto& c : sums_) {
      Integer min_sum = 0, max_sum = 0;
      if (c.first <= k) {
        const int stop = std::min(c.last, k);
        min_sum = prefix_[stop + 1] - prefix_[c.first];
        max_sum = min_sum;
      }
      for (int j = std::max(c.first, k + 1); j <= c.last; ++j) {
        min_sum += std::max(lo_[j], x_[k]);
        max_sum += hi_[j];
      }
      if (c.upper && min_sum > *c.upper) return Verdict::RejectLarger;
      if (c.lower && max_sum < *c.lower) return Verdict::Reject;
    }
    return Verdict::Ok;
  }

  void descend(int k) {
    if (k == n_) {
      out_.push_back(x_);
      return;
    }
    Integer v = k == 0 ? lo_[0] : std::max(lo_[k], x_[k - 1]);
    for (; v <= hi_[k]; ++v) {
      x_[k] = v;
      prefix_[k + 1] = prefix_[k] + v;
      const Verdict verdict = check(k);
      if (verdict == Verdict::RejectLarger) break;
      if (verdict == Verdict::Ok) descend(k + 1);
    }
  }

  int n_;
  std::vector<RangeSum> sums_;
  IntVec lo_;
  IntVec hi_;
  IntVec x_;
  IntVec prefix_;
  std::vector<IntVec> out_;
};

}  // namespace

bool satisfies_conditions(const LineBundleClass& bundle, const OrbitSpec& spec, const WeightPair& w) {
  validate_orbit(spec);
  if (spec.n() != bundle.n()) throw Error(ErrorCode::InvalidArgument, "orbit and bundle ranks differ");
  require_length(bundle, w);
  const int n = bundle.n();
  const Integer& e = bundle.e();
  auto a = [&](int i) -> const Integer& { return w.a[i - 1]; };  // 1-based
  auto b = [&](int i) -> const Integer& { return w.b[i - 1]; };

  // (1)
  for (int i = 1; i < n; ++i) {
    if (a(i) > a(i + 1)) return false;
  }
  // (2)
  for (int i = n - spec.min_J(); i <= n - 1; ++i) {
    Integer sum = 0;
    for (int j = i + 1; j <= n; ++j) sum += a(j) - e;
    if (sum > bundle.m()[i]) return false;
    if (spec.I().contains(i) && sum != bundle.m()[i]) return false;
  }
  // (3)
  for (int i = n - spec.min_I(); i <= n - 1; ++i) {
    Integer sum = 0;
    for (int j = 1; j <= n - i; ++j) sum += a(j) - e;
    if (sum < -bundle.l()[i]) return false;
    if (spec.J().contains(i) && sum != -bundle.l()[i]) return false;
  }
  // (4)
  for (int i = 1; i <= n; ++i) {
    if (a(i) - e != -b(n - i + 1) + bundle.d()) return false;
  }
  return true;
}

WeightPair weight_from_a(const LineBundleClass& bundle, IntVec a) {
  const int n = bundle.n();
  if (a.size() != static_cast<std::size_t>(n)) throw Error(ErrorCode::InvalidArgument, "a must have length n");
  IntVec b(n);
  for (int p = 0; p < n; ++p) b[n - 1 - p] = bundle.d() + bundle.e() - a[p];
  return WeightPair{std::move(a), std::move(b)};
}

ChainSystem chain_system_for(const LineBundleClass& bundle, const OrbitSpec& spec) {
  validate_orbit(spec);
  if (spec.n() != bundle.n()) throw Error(ErrorCode::InvalidArgument, "orbit and bundle ranks differ");
  const int n = bundle.n();
  ChainSystem system;
  system.n = n;
  // Condition (3): prefix sums of length k = n - i, i in [n - min(I), n - 1].
  for (int i = n - spec.min_I(); i <= n - 1; ++i) {
    const Integer bound = -bundle.l()[i];
    system.prefix.push_back({n - i, bound, spec.J().contains(i) ? std::optional<Integer>(bound) : std::nullopt});
  }
  // Condition (2): suffix sums of length t = n - i, i in [n - min(J), n - 1].
  for (int i = n - spec.min_J(); i <= n - 1; ++i) {
    const Integer& bound = bundle.m()[i];
    system.suffix.push_back({n - i, spec.I().contains(i) ? std::optional<Integer>(bound) : std::nullopt, bound});
  }
  return system;
}

std::vector<IntVec> enumerate_chain(const ChainSystem& system) {
  const int n = system.n;
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "chain system needs n >= 1");
  for (const auto* family : {&system.prefix, &system.suffix}) {
    for (const auto& bound : *family) {
      if (bound.length < 1 || bound.length > n)
        throw Error(ErrorCode::InvalidArgument, "range-sum length outside [1, n]");
    }
  }
  const auto sums = range_sums(system);
  for (const auto& c : sums) {
    if (c.lower && c.upper && *c.lower > *c.upper) return {};
  }

  std::vector<MaybeInt> lo(n), hi(n);
  if (!propagate(n, sums, lo, hi)) return {};
  IntVec lo_fixed(n), hi_fixed(n);
  for (int k = 0; k < n; ++k) {
    if (!lo[k] || !hi[k])
      throw Error(ErrorCode::UnboundedWeightSet,
                  "coordinate x_" + std::to_string(k + 1) + " is not bounded by the constraints");
    lo_fixed[k] = *lo[k];
    hi_fixed[k] = *hi[k];
  }
  return ChainSearch(n, sums, std::move(lo_fixed), std::move(hi_fixed)).run();
}

std::vector<WeightPair> enumerate_weights(const LineBundleClass& bundle, const OrbitSpec& spec) {
  const auto solutions = enumerate_chain(chain_system_for(bundle, spec));
  std::vector<WeightPair> out;
  out.reserve(solutions.size());
  for (auto x : solutions) {
    for (auto& v : x) v += bundle.e();
    out.push_back(weight_from_a(bundle, std::move(x)));
  }
  return out;
}

WeightPair closed_orbit_weight(const LineBundleClass& bundle, int r, int s) {
  const int n = bundle.n();
  if (r < 0 || s < 0 || r + s != n)
    throw Error(ErrorCode::InvalidArgument, "closed orbit needs r, s >= 0 with r + s = n");
  // m_n = l_n = 0.
  auto m = [&](int i) { return i == n ? Integer(0) : bundle.m()[i]; };
  auto l = [&](int i) { return i == n ? Integer(0) : bundle.l()[i]; };
  IntVec a(n);
  for (int i = 1; i <= s; ++i) a[i - 1] = bundle.e() + l(n - i + 1) - l(n - i);
  for (int i = s + 1; i <= n; ++i) a[i - 1] = bundle.e() + m(i - 1) - m(i);
  return weight_from_a(bundle, std::move(a));
}

}  // namespace kgl
