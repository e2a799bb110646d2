#include "kgl/toric.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

#include "kgl/divisors.hpp"
#include "kgl/weights.hpp"

namespace kgl {

namespace {

constexpr int kMaxRestrictRank = 16;

std::uint32_t full_mask(int n) { return (std::uint32_t{1} << n) - 1; }

std::vector<int> ray_vector(int n, const RayKey& key) {
  std::vector<int> v(n, 0);
  for (int i = 0; i < n; ++i) {
    if (key.mask & (std::uint32_t{1} << i)) v[i] = key.sign;
  }
  return v;
}

Integer pairing(std::span<const Integer> m, std::span<const int> v) {
  Integer out = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) out += m[i] * v[i];
  }
  return out;
}

std::string format_ray(const Ray& ray) {
  std::ostringstream os;
  os << (ray.key.sign < 0 ? "-e{" : "+e{");
  for (std::size_t i = 0; i < ray.support.size(); ++i) os << (i ? "," : "") << ray.support[i];
  os << "}";
  return os.str();
}

}  // namespace

std::size_t Fan::ray_index(const RayKey& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) throw Error(ErrorCode::InvalidArgument, "ray not in fan");
  return it->second;
}

bool Fan::cone_has_ray(std::size_t cone, std::size_t ray) const { return incidence_.at(cone).at(ray); }

bool Fan::cone_contains(std::size_t cone, std::span<const long> point) const {
  const MaxCone& c = cones_.at(cone);
  if (point.size() != static_cast<std::size_t>(n_)) throw Error(ErrorCode::InvalidArgument, "point has wrong rank");
  auto x = [&](int pos) { return point[c.perm[pos] - 1]; };  // pos is 0-based into alpha
  for (int k = 0; k + 1 < n_; ++k) {
    if (k + 1 == c.split) continue;  // the 0 separator is checked below
    if (x(k) > x(k + 1)) return false;
  }
  if (c.split > 0 && x(c.split - 1) > 0) return false;
  if (c.split < n_ && x(c.split) < 0) return false;
  return true;
}

std::string Fan::table() const {
  std::ostringstream os;
  os << "# rays: " << rays_.size() << "\n";
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    os << "ray\t" << i << "\t" << format_ray(rays_[i]) << "\t(";
    for (std::size_t k = 0; k < rays_[i].vector.size(); ++k) os << (k ? "," : "") << rays_[i].vector[k];
    os << ")\n";
  }
  os << "# maximal cones: " << cones_.size() << "\n";
  for (std::size_t c = 0; c < cones_.size(); ++c) {
    const MaxCone& cone = cones_[c];
    os << "cone\t" << c << "\talpha=(";
    for (std::size_t k = 0; k < cone.perm.size(); ++k) os << (k ? "," : "") << cone.perm[k];
    os << ")\tl=" << cone.split << "\trays=";
    for (std::size_t k = 0; k < cone.rays.size(); ++k) os << (k ? " " : "") << format_ray(rays_[cone.rays[k]]);
    os << "\n";
  }
  return os.str();
}

Fan build_fan(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "rank n must be positive");
  if (n > kMaxFanRank)
    throw Error(ErrorCode::RankTooLarge, "fan construction is limited to n <= " + std::to_string(kMaxFanRank));
  Fan fan;
  fan.n_ = n;
  for (std::uint32_t mask = 1; mask <= full_mask(n); ++mask) {
    for (int sign : {-1, 1}) {
      Ray ray;
      ray.key = RayKey{sign, mask};
      for (int i = 0; i < n; ++i) {
        if (mask & (std::uint32_t{1} << i)) ray.support.push_back(i + 1);
      }
      ray.vector = ray_vector(n, ray.key);
      fan.index_.emplace(ray.key, fan.rays_.size());
      fan.rays_.push_back(std::move(ray));
    }
  }

  std::vector<int> alpha(n);
  std::iota(alpha.begin(), alpha.end(), 1);
  std::set<std::vector<std::size_t>> seen;
  do {
    for (int split = 0; split <= n; ++split) {
      MaxCone cone{alpha, split, {}};
      std::uint32_t mask = 0;
      for (int k = 1; k <= split; ++k) {  // -e_{alpha([1,k])}
        mask |= std::uint32_t{1} << (alpha[k - 1] - 1);
        cone.rays.push_back(fan.index_.at(RayKey{-1, mask}));
      }
      for (int k = split + 1; k <= n; ++k) {  // +e_{alpha([k,n])}
        std::uint32_t tail = 0;
        for (int j = k; j <= n; ++j) tail |= std::uint32_t{1} << (alpha[j - 1] - 1);
        cone.rays.push_back(fan.index_.at(RayKey{1, tail}));
      }
      std::vector<std::size_t> ray_set(cone.rays);
      std::sort(ray_set.begin(), ray_set.end());
      if (seen.insert(std::move(ray_set)).second) fan.cones_.push_back(std::move(cone));
    }
  } while (std::next_permutation(alpha.begin(), alpha.end()));

  fan.incidence_.assign(fan.cones_.size(), std::vector<bool>(fan.rays_.size(), false));
  for (std::size_t c = 0; c < fan.cones_.size(); ++c) {
    for (std::size_t r : fan.cones_[c].rays) fan.incidence_[c][r] = true;
  }
  return fan;
}

const Integer& ToricDivisor::at(const RayKey& key) const {
  auto it = coeff.find(key);
  if (it == coeff.end()) throw Error(ErrorCode::InvalidArgument, "ray has no coefficient");
  return it->second;
}

ToricDivisor restrict_to_toric(const LineBundleClass& bundle, CoefficientRule rule) {
  const int n = bundle.n();
  if (n > kMaxRestrictRank)
    throw Error(ErrorCode::RankTooLarge, "toric restriction is limited to n <= " + std::to_string(kMaxRestrictRank));
  ToricDivisor out;
  out.n = n;
  for (std::uint32_t mask = 1; mask <= full_mask(n); ++mask) {
    const int boundary = n - std::popcount(mask);
    out.coeff.emplace(RayKey{-1, mask}, bundle.m()[boundary]);
    out.coeff.emplace(RayKey{1, mask}, bundle.l()[boundary]);
  }
  if (rule == CoefficientRule::FaultInjected) out.coeff[RayKey{-1, 1}] += 1;
  return out;
}

bool verify_toric_consistency(int n, int samples, std::uint64_t seed, CoefficientRule rule) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "rank n must be positive");
  if (n > 5) throw Error(ErrorCode::RankTooLarge, "consistency check is limited to n <= 5");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-5, 5);

  for (int sample = 0; sample < samples; ++sample) {
    IntVec a(n);
    for (auto& v : a) v = dist(rng);
    const DivisorExpr divisor = divisor_of_monomial(a);
    const ToricDivisor restricted =
        restrict_to_toric(LineBundleClass(n, divisor.zZ, divisor.zY), rule);

    // Character u = sum_i a_{n-i+1} e_i^*.
    IntVec u(n);
    for (int i = 1; i <= n; ++i) u[i - 1] = a[n - i];

    std::vector<RayKey> interval_rays;
    for (int k = 1; k <= n; ++k) {
      interval_rays.push_back(RayKey{-1, full_mask(k)});
      interval_rays.push_back(RayKey{1, full_mask(n) & ~full_mask(k - 1)});
    }
    for (const RayKey& key : interval_rays) {
      const Integer expected = pairing(u, ray_vector(n, key));
      const Integer& actual = restricted.at(key);
      if (actual != expected) {
        std::ostringstream os;
        os << "a=(";
        for (int i = 0; i < n; ++i) os << (i ? "," : "") << a[i];
        os << "), ray " << (key.sign < 0 ? "-" : "+") << "mask " << key.mask << ": restricted coefficient "
           << actual << " but character pairing " << expected;
        throw Error(ErrorCode::ConsistencyFailure, os.str());
      }
    }
  }
  return true;
}

IntVec solve_unimodular(const std::vector<std::vector<int>>& rows, std::span<const Integer> rhs) {
  const std::size_t n = rows.size();
  if (rhs.size() != n) throw Error(ErrorCode::InvalidArgument, "system is not square");
  std::vector<std::vector<mpq_class>> aug(n, std::vector<mpq_class>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw Error(ErrorCode::InvalidArgument, "system is not square");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = rows[i][j];
    aug[i][n] = rhs[i];
  }
  mpq_class det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && aug[pivot][col] == 0) ++pivot;
    if (pivot == n) throw Error(ErrorCode::InvalidArgument, "singular cone matrix");
    if (pivot != col) {
      std::swap(aug[pivot], aug[col]);
      det = -det;
    }
    det *= aug[col][col];
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      const mpq_class factor = aug[r][col] / aug[col][col];
      for (std::size_t j = col; j <= n; ++j) aug[r][j] -= factor * aug[col][j];
    }
  }
  if (det != 1 && det != -1) throw Error(ErrorCode::InvalidArgument, "cone matrix is not unimodular");
  IntVec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    mpq_class v = aug[i][n] / aug[i][i];
    out[i] = v.get_num();  // integral because det = +-1
  }
  return out;
}

SupportFunction support_function(const ToricDivisor& divisor, const Fan& fan) {
  if (divisor.n != fan.n()) throw Error(ErrorCode::InvalidArgument, "divisor and fan ranks differ");
  SupportFunction out;
  out.linear.reserve(fan.cones().size());
  for (const MaxCone& cone : fan.cones()) {
    std::vector<std::vector<int>> rows;
    IntVec rhs;
    for (std::size_t r : cone.rays) {
      rows.push_back(fan.rays()[r].vector);
      rhs.push_back(-divisor.at(fan.rays()[r].key));
    }
    out.linear.push_back(solve_unimodular(rows, rhs));
  }
  // Agreement on shared faces: every cone through a ray must give the same value there.
  for (std::size_t c = 0; c < fan.cones().size(); ++c) {
    for (std::size_t r : fan.cones()[c].rays) {
      const Ray& ray = fan.rays()[r];
      if (pairing(out.linear[c], ray.vector) != -divisor.at(ray.key))
        throw Error(ErrorCode::InconsistentCartierData,
                    "linear data of cone " + std::to_string(c) + " disagrees on ray " + format_ray(ray));
    }
  }
  return out;
}

Positivity positivity(const ToricDivisor& divisor, const Fan& fan) {
  const SupportFunction h = support_function(divisor, fan);
  Positivity out{true, true};
  for (std::size_t c = 0; c < fan.cones().size(); ++c) {
    for (std::size_t r = 0; r < fan.rays().size(); ++r) {
      if (fan.cone_has_ray(c, r)) continue;
      const Ray& ray = fan.rays()[r];
      const Integer value = pairing(h.linear[c], ray.vector);
      const Integer floor = -divisor.at(ray.key);
      if (value < floor) out.nef = false;
      if (value <= floor) out.ample = false;
    }
  }
  return out;
}

bool is_nef(const ToricDivisor& divisor, const Fan& fan) { return positivity(divisor, fan).nef; }
bool is_ample(const ToricDivisor& divisor, const Fan& fan) { return positivity(divisor, fan).ample; }
bool is_nef(const ToricDivisor& divisor) { return is_nef(divisor, build_fan(divisor.n)); }
bool is_ample(const ToricDivisor& divisor) { return is_ample(divisor, build_fan(divisor.n)); }

LineBundleClass boundary_twist(const LineBundleClass& bundle) {
  const int n = bundle.n();
  const LineBundleClass omega = dualizing_class(n);
  IntVec m(n), l(n);
  for (int i = 0; i < n; ++i) {
    m[i] = bundle.m()[i] - omega.m()[i] - 1;
    l[i] = bundle.l()[i] - omega.l()[i] - 1;
  }
  return LineBundleClass(n, m, l, bundle.e(), bundle.d());
}

NotAmpleReport check_not_ample(std::span<const Integer> a) {
  const int n = static_cast<int>(a.size());
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "a must be nonempty");
  if (!is_nondecreasing(a)) throw Error(ErrorCode::NotDominant, "a must be nondecreasing");
  const Fan fan = build_fan(n);

  IntVec m(n, 0), l(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) m[i] += a[j - 1];
    for (int j = 1; j <= n - i; ++j) l[i] -= a[j - 1];
  }
  const LineBundleClass bundle(n, m, l);
  const LineBundleClass twisted = boundary_twist(bundle);

  NotAmpleReport report{bundle, twisted};
  report.L_not_ample = !is_ample(restrict_to_toric(bundle), fan);
  report.twisted_not_ample = !is_ample(restrict_to_toric(twisted), fan);
  report.all_closed_orbit_sections_nonzero = true;
  for (int r = 0; r <= n; ++r) {
    const WeightPair w = closed_orbit_weight(bundle, r, n - r);
    if (!is_nondecreasing(w.a) || !is_nondecreasing(w.b)) report.all_closed_orbit_sections_nonzero = false;
  }
  return report;
}

}  // namespace kgl
