#include "kgl/repdim.hpp"

#include <map>

namespace kgl {

namespace {

void require_dominant(std::span<const Integer> c) {
  if (c.empty()) throw Error(ErrorCode::InvalidArgument, "weight must be nonempty");
  if (!is_nondecreasing(c)) throw Error(ErrorCode::NotDominant, "weight is not nondecreasing");
}

// Patterns below a nonincreasing row `top`, keyed on the row shifted so its
// last entry is 0.
class GtCounter {
 public:
  Integer count(const IntVec& top) {
    if (top.size() <= 1) return 1;
    IntVec key(top);
    const Integer shift = key.back();
    for (auto& v : key) v -= shift;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Integer total = 0;
    IntVec row(key.size() - 1);
    sum_rows(key, row, 0, total);
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  // Interlacing: top[i] >= row[i] >= top[i + 1].
  void sum_rows(const IntVec& top, IntVec& row, std::size_t i, Integer& total) {
    if (i == row.size()) {
      total += count(row);
      return;
    }
    for (Integer v = top[i + 1]; v <= top[i]; ++v) {
      row[i] = v;
      sum_rows(top, row, i + 1, total);
    }
  }

  std::map<IntVec, Integer> memo_;
};

}  // namespace

Integer weyl_dim(std::span<const Integer> c) {
  require_dominant(c);
  const std::size_t n = c.size();
  Integer num = 1, den = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      num *= c[j] - c[i] + static_cast<long>(j - i);
      den *= static_cast<long>(j - i);
    }
  }
  Integer out = num / den;
  if (out * den != num) throw Error(ErrorCode::ConsistencyFailure, "Weyl product is not integral");
  return out;
}

Integer gt_dim(std::span<const Integer> c) {
  require_dominant(c);
  IntVec top(c.rbegin(), c.rend());
  GtCounter counter;
  return counter.count(top);
}

Integer dim_pair(const WeightPair& w) {
  if (w.a.size() != w.b.size()) throw Error(ErrorCode::InvalidArgument, "a and b lengths differ");
  return weyl_dim(w.a) * weyl_dim(w.b);
}

}  // namespace kgl
