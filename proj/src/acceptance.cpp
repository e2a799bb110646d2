#include "kgl/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "kgl/decomp.hpp"
#include "kgl/divisors.hpp"
#include "kgl/oracle.hpp"
#include "kgl/repdim.hpp"
#include "kgl/toric.hpp"
#include "kgl/weights.hpp"

namespace kgl {

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

// Calls f on every vector in [lo, hi]^n; stops early when f returns false.
bool for_each_in_box(int n, long lo, long hi, const std::function<bool(const std::vector<long>&)>& f) {
  if (hi < lo) return true;
  std::vector<long> v(n, lo);
  while (true) {
    if (!f(v)) return false;
    int k = n - 1;
    while (k >= 0 && v[k] == hi) v[k--] = lo;
    if (k < 0) return true;
    ++v[k];
  }
}

IntVec to_ints(const std::vector<long>& v) { return IntVec(v.begin(), v.end()); }

std::string show(const IntVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get_str();
  return out + ")";
}

std::string show(const LineBundleClass& L) { return "m=" + show(L.m()) + " l=" + show(L.l()); }

std::string show(const std::set<int>& s) {
  std::string out = "{";
  for (int i : s) out += (out.size() > 1 ? "," : "") + std::to_string(i);
  return out + "}";
}

bool contains(const std::vector<WeightPair>& sorted, const WeightPair& w) {
  return std::binary_search(sorted.begin(), sorted.end(), w);
}

bool is_subset(const std::vector<WeightPair>& sub, const std::vector<WeightPair>& sorted) {
  return std::all_of(sub.begin(), sub.end(), [&](const WeightPair& w) { return contains(sorted, w); });
}

Integer total_of(const std::vector<WeightPair>& weights) {
  Integer total = 0;
  for (const auto& w : weights) total += dim_pair(w);
  return total;
}

Integer binomial(long top, long bottom) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
  return out;
}

// Random valid orbit spec for rank n.
OrbitSpec random_orbit(int n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.3);
  while (true) {
    std::set<int> I, J;
    for (int i = 0; i < n; ++i) {
      if (coin(rng)) I.insert(i);
      if (coin(rng)) J.insert(i);
    }
    OrbitSpec spec(n, I, J);
    if (spec.min_I() + spec.min_J() >= n) return spec;
  }
}

IntVec random_vector(int n, long lo, long hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntVec v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

long determinant(std::vector<std::vector<long>> a) {
  // Bareiss elimination; exact for integer matrices.
  const std::size_t n = a.size();
  long sign = 1, previous = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
    previous = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

Outcome oracle_grid_n2(const AcceptanceConfig& cfg) {
  const long lo = -cfg.grid_radius, hi = cfg.grid_radius + 1;
  long cases = 0;
  std::string failure;
  for_each_in_box(4, lo, hi, [&](const std::vector<long>& v) {
    ++cases;
    const Integer expected = oracle_dim_n2(v[0], v[1], v[2], v[3]);
    const LineBundleClass L(2, {v[0], v[1]}, {v[2], v[3]});
    const Integer got = decompose(L, OrbitSpec(2)).total_dim();
    if (got == expected) return true;
    failure = show(L) + ": decompose " + got.get_str() + ", oracle " + expected.get_str();
    return false;
  });
  if (!failure.empty()) return {false, failure};
  return {true, std::to_string(cases) + " cases over [" + std::to_string(lo) + "," + std::to_string(hi) +
                    "]^4 agree"};
}

Outcome oracle_grid_n1(const AcceptanceConfig& cfg) {
  const long r = cfg.grid_radius + 3;
  long cases = 0;
  std::string failure;
  for_each_in_box(2, -r, r, [&](const std::vector<long>& v) {
    ++cases;
    const Integer expected = oracle_dim_n1(v[0], v[1]);
    const LineBundleClass L(1, {v[0]}, {v[1]});
    const Integer got = decompose(L, OrbitSpec(1)).total_dim();
    const Integer closed_form = std::max(0L, v[0] + v[1] + 1);
    if (got == expected && got == closed_form) return true;
    failure = show(L) + ": decompose " + got.get_str() + ", oracle " + expected.get_str();
    return false;
  });
  if (!failure.empty()) return {false, failure};
  return {true, std::to_string(cases) + " cases over [" + std::to_string(-r) + "," + std::to_string(r) + "]^2 agree"};
}

Outcome hyperplane_pullbacks(const AcceptanceConfig&) {
  std::string totals;
  for (long k = 0; k <= 4; ++k) {
    const Integer got = decompose(LineBundleClass(2, {k, k}, {0, 0}), OrbitSpec(2)).total_dim();
    const Integer expected = binomial(k + 4, 4);
    if (got != expected)
      return {false, "k=" + std::to_string(k) + ": total " + got.get_str() + ", expected " + expected.get_str()};
    totals += (k ? "," : "") + got.get_str();
  }
  return {true, "totals " + totals};
}

Outcome weyl_vs_gt(const AcceptanceConfig& cfg) {
  const long hi = 2L * cfg.grid_radius;
  long cases = 0;
  std::string failure;
  for (int n = 1; n <= 4 && failure.empty(); ++n) {
    for_each_in_box(n, 0, hi, [&](const std::vector<long>& v) {
      if (!std::is_sorted(v.begin(), v.end())) return true;
      ++cases;
      const IntVec c = to_ints(v);
      const Integer w = weyl_dim(c), g = gt_dim(c);
      if (w == g) return true;
      failure = "c=" + show(c) + ": weyl " + w.get_str() + ", gt " + g.get_str();
      return false;
    });
  }
  if (!failure.empty()) return {false, failure};
  return {true, std::to_string(cases) + " dominant weights in [0," + std::to_string(hi) + "]^n, n<=4"};
}

Outcome closed_orbit_singletons(const AcceptanceConfig& cfg) {
  const long lo = -cfg.grid_radius, hi = cfg.grid_radius + 1;
  long checks = 0, nonempty = 0;
  std::string failure;
  for_each_in_box(4, lo, hi, [&](const std::vector<long>& v) {
    const LineBundleClass L(2, {v[0], v[1]}, {v[2], v[3]});
    for (int r = 0; r <= 2; ++r) {
      const int s = 2 - r;
      ++checks;
      const auto weights = enumerate_weights(L, OrbitSpec::closed(2, r, s));
      const WeightPair expected = closed_orbit_weight(L, r, s);
      const bool dominant = is_nondecreasing(expected.a);
      bool ok = weights.size() <= 1 && (weights.empty() || weights.front() == expected);
      ok = ok && (weights.size() == 1) == dominant;
      if (!ok) {
        failure = show(L) + " (r,s)=(" + std::to_string(r) + "," + std::to_string(s) + "): " +
                  std::to_string(weights.size()) + " weights, closed-orbit weight a=" + show(expected.a);
        return false;
      }
      nonempty += static_cast<long>(weights.size());
    }
    return true;
  });
  if (!failure.empty()) return {false, failure};
  return {true, std::to_string(checks) + " closed orbits, " + std::to_string(nonempty) + " singletons, rest empty"};
}

Outcome restriction_accounting(const AcceptanceConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> rank(1, 4);
  const long lo = -cfg.grid_radius, hi = cfg.grid_radius + 1;
  for (int sample = 0; sample < 200; ++sample) {
    const int n = rank(rng);
    const LineBundleClass L(n, random_vector(n, lo, hi, rng), random_vector(n, lo, hi, rng));
    const OrbitSpec spec = random_orbit(n, rng);
    const auto ambient = enumerate_weights(L, OrbitSpec(n));
    const auto orbit = enumerate_weights(L, spec);
    const RestrictionReport report = restriction_report(L, spec);
    const bool ok = report.kernel_dim + report.image_dim == total_of(ambient) &&
                    report.image_dim + report.ambient_extra_dim == total_of(orbit) &&
                    is_subset(report.common, ambient) && is_subset(report.common, orbit) &&
                    report.image_dim == total_of(report.common);
    if (!ok) return {false, "sample " + std::to_string(sample) + ": " + show(L) + " I=" + show(spec.I()) + " J=" + show(spec.J())};
  }
  return {true, "200 random (L,I,J), n<=4"};
}

Outcome inclusion_monotonicity(const AcceptanceConfig& cfg) {
  std::mt19937_64 rng(cfg.seed + 1);
  std::uniform_int_distribution<int> rank(1, 4);
  std::uniform_int_distribution<int> drop(0, 2);
  const long lo = -cfg.grid_radius, hi = cfg.grid_radius + 1;
  long strict = 0;
  for (int sample = 0; sample < 200; ++sample) {
    const int n = rank(rng);
    const LineBundleClass L(n, random_vector(n, lo, hi, rng), random_vector(n, lo, hi, rng));
    const OrbitSpec spec = random_orbit(n, rng);
    IntVec mp = L.m(), lp = L.l();
    for (int i = 0; i < n; ++i) {
      if (!spec.I().contains(i)) mp[i] -= drop(rng);
      if (!spec.J().contains(i)) lp[i] -= drop(rng);
    }
    const LineBundleClass Lp(n, mp, lp, L.e(), L.d());
    const auto small = enumerate_weights(Lp, spec);
    const auto large = enumerate_weights(L, spec);
    const InclusionReport report = inclusion_report(Lp, L, spec);
    const Integer small_total = decompose(Lp, spec).total_dim();
    const Integer large_total = decompose(L, spec).total_dim();
    const bool ok = report.subset_ok && is_subset(small, large) && small_total <= large_total &&
                    small_total + report.dim_increase == large_total;
    if (!ok) return {false, "sample " + std::to_string(sample) + ": L'=" + show(Lp) + " L=" + show(L)};
    if (small_total < large_total) ++strict;
  }
  return {true, "200 random (L',L,I,J), n<=4; " + std::to_string(strict) + " strict inclusions"};
}

Outcome toric_consistency(const AcceptanceConfig& cfg) {
  const CoefficientRule rule = cfg.corrupt_toric_rule ? CoefficientRule::FaultInjected : CoefficientRule::Standard;
  for (int n = 1; n <= 5; ++n) {
    if (!verify_toric_consistency(n, 100, cfg.seed + static_cast<std::uint64_t>(n), rule))
      return {false, "n=" + std::to_string(n)};
  }
  return {true, "n=1..5, 100 samples each"};
}

Outcome non_ampleness(const AcceptanceConfig& cfg) {
  const long r = cfg.grid_radius;
  long cases = 0;
  std::string failure;
  for (int n = 2; n <= 3 && failure.empty(); ++n) {
    for_each_in_box(n, -r, r, [&](const std::vector<long>& v) {
      if (!std::is_sorted(v.begin(), v.end())) return true;
      ++cases;
      const NotAmpleReport report = check_not_ample(to_ints(v));
      if (report.L_not_ample && report.twisted_not_ample && report.all_closed_orbit_sections_nonzero) return true;
      failure = "a=" + show(to_ints(v)) + ": L_not_ample=" + std::to_string(report.L_not_ample) +
                " twisted_not_ample=" + std::to_string(report.twisted_not_ample) +
                " sections_nonzero=" + std::to_string(report.all_closed_orbit_sections_nonzero);
      return false;
    });
  }
  if (!failure.empty()) return {false, failure};
  return {true, std::to_string(cases) + " nondecreasing a in [" + std::to_string(-r) + "," + std::to_string(r) +
                    "]^n, n=2,3"};
}

Outcome fan_sanity(const AcceptanceConfig& cfg) {
  std::mt19937_64 rng(cfg.seed + 2);
  std::uniform_int_distribution<long> coordinate(-50, 50);
  for (int n = 1; n <= 4; ++n) {
    const Fan fan = build_fan(n);
    const std::size_t rays = 2 * ((std::size_t{1} << n) - 1);
    const std::size_t cones = static_cast<std::size_t>(factorial(n) * (n + 1));
    if (fan.rays().size() != rays || fan.cones().size() != cones)
      return {false, "n=" + std::to_string(n) + ": " + std::to_string(fan.rays().size()) + " rays, " +
                         std::to_string(fan.cones().size()) + " cones"};
    for (std::size_t c = 0; c < fan.cones().size(); ++c) {
      std::vector<std::vector<long>> matrix;
      for (std::size_t ray : fan.cones()[c].rays) {
        const auto& v = fan.rays()[ray].vector;
        matrix.emplace_back(v.begin(), v.end());
      }
      const long det = determinant(matrix);
      if (det != 1 && det != -1) return {false, "n=" + std::to_string(n) + " cone " + std::to_string(c) + " det " + std::to_string(det)};
    }
    for (int sample = 0; sample < 1000; ++sample) {
      std::vector<long> x(n);
      for (auto& xi : x) xi = coordinate(rng);
      std::size_t hits = 0;
      for (std::size_t c = 0; c < fan.cones().size(); ++c) hits += fan.cone_contains(c, x) ? 1 : 0;
      std::vector<long> sorted = x;
      std::sort(sorted.begin(), sorted.end());
      const bool generic = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() &&
                           std::find(sorted.begin(), sorted.end(), 0L) == sorted.end();
      if (hits == 0 || (generic && hits != 1))
        return {false, "n=" + std::to_string(n) + ": a vector lies in " + std::to_string(hits) + " cones"};
    }
  }
  return {true, "n=1..4: counts, unimodularity, 1000 random vectors covered"};
}

Outcome picard_relation(const AcceptanceConfig&) {
  for (int n = 1; n <= 6; ++n) {
    if (!pic_normal_form(relation_class(n)).is_zero()) return {false, "relation class n=" + std::to_string(n)};
    IntVec steps(n);
    for (int i = 0; i < n; ++i) steps[i] = n - i;
    const LineBundleClass det_E(n, steps, IntVec(n, 0), 1, 0);
    const LineBundleClass det_F(n, IntVec(n, 0), steps, 0, 1);
    if (!pic_equal(det_E, det_F)) return {false, "det E and det F classes differ at n=" + std::to_string(n)};
  }
  const PicClass omega = pic_normal_form(dualizing_class(2));
  const PicClass expected{{-5, -4}, {3}};
  if (!(omega == expected))
    return {false, "dualizing class n=2: Z=" + show(omega.z) + " Y=" + show(omega.y)};
  return {true, "relation vanishes and det classes agree for n<=6; omega_2 = -5Z0-4Z1+3Y0"};
}

struct Criterion {
  int id;
  const char* name;
  Outcome (*run)(const AcceptanceConfig&);
  std::optional<double> budget;
};

constexpr int kFullRadius = 2;

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& config) {
  if (config.grid_radius < 0) throw Error(ErrorCode::InvalidArgument, "grid radius must be >= 0");
  const Criterion criteria[] = {
      {1, "oracle grid n=2", oracle_grid_n2, 120.0},
      {2, "oracle grid n=1", oracle_grid_n1, 1.0},
      {3, "hyperplane pullbacks", hyperplane_pullbacks, 1.0},
      {4, "Weyl = Gelfand-Tsetlin", weyl_vs_gt, 30.0},
      {5, "closed-orbit singletons", closed_orbit_singletons, std::nullopt},
      {6, "restriction accounting", restriction_accounting, std::nullopt},
      {7, "inclusion monotonicity", inclusion_monotonicity, std::nullopt},
      {8, "toric consistency", toric_consistency, 10.0},
      {9, "non-ampleness", non_ampleness, 60.0},
      {10, "fan sanity", fan_sanity, std::nullopt},
      {11, "Picard relation", picard_relation, std::nullopt},
  };
  std::vector<CriterionResult> results;
  for (const Criterion& c : criteria) {
    CriterionResult result;
    result.id = c.id;
    result.name = c.name;
    if (config.grid_radius <= kFullRadius) result.budget_seconds = c.budget;
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome outcome = c.run(config);
      result.passed = outcome.passed;
      result.detail = outcome.detail;
    } catch (const Error& e) {
      result.passed = false;
      result.detail = e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (result.passed && result.budget_seconds && result.seconds > *result.budget_seconds) {
      result.passed = false;
      char buffer[64];
      std::snprintf(buffer, sizeof buffer, "; over the %.0f s budget", *result.budget_seconds);
      result.detail += buffer;
    }
    results.push_back(std::move(result));
  }
  return results;
}

std::string format_result(const CriterionResult& result) {
  char timing[32];
  std::snprintf(timing, sizeof timing, "(%.2f s)", result.seconds);
  std::ostringstream out;
  out << (result.passed ? "PASS" : "FAIL") << "  " << (result.id < 10 ? " " : "") << result.id << "  " << result.name
      << ": " << result.detail << "  " << timing;
  return out.str();
}

}  // namespace kgl
