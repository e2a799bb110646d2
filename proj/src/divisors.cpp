#include "kgl/divisors.hpp"

#include <algorithm>

namespace kgl {

bool PicClass::is_zero() const {
  auto zero = [](const Integer& v) { return v == 0; };
  return std::all_of(z.begin(), z.end(), zero) && std::all_of(y.begin(), y.end(), zero);
}

PicClass PicClass::operator+(const PicClass& other) const {
  if (other.n() != n()) throw Error(ErrorCode::InvalidArgument, "rank mismatch");
  PicClass out = *this;
  for (std::size_t i = 0; i < z.size(); ++i) out.z[i] += other.z[i];
  for (std::size_t i = 0; i < y.size(); ++i) out.y[i] += other.y[i];
  return out;
}

PicClass PicClass::operator-(const PicClass& other) const {
  if (other.n() != n()) throw Error(ErrorCode::InvalidArgument, "rank mismatch");
  PicClass out = *this;
  for (std::size_t i = 0; i < z.size(); ++i) out.z[i] -= other.z[i];
  for (std::size_t i = 0; i < y.size(); ++i) out.y[i] -= other.y[i];
  return out;
}

DivisorExpr divisor_of_monomial(std::span<const Integer> a) {
  const int n = static_cast<int>(a.size());
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "a must be nonempty");
  auto at = [&](int j) -> const Integer& { return a[j - 1]; };  // 1-based
  DivisorExpr out{IntVec(n, 0), IntVec(n, 0), IntVec(n - 1, 0)};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.zZ[i] -= at(j);
    for (int j = 1; j <= n - i; ++j) out.zY[i] += at(j);
  }
  for (int i = 1; i <= n - 1; ++i) out.zDelta[i - 1] = at(n - i + 1) - at(n - i);
  return out;
}

PicClass pic_normal_form(std::span<const Integer> zZ, std::span<const Integer> zY) {
  const int n = static_cast<int>(zZ.size());
  if (n < 1 || zY.size() != zZ.size())
    throw Error(ErrorCode::InvalidArgument, "Z and Y coefficient vectors must both have length n >= 1");
  // Add y_{n-1} times the relation sum (n-i) Z_i - sum (n-i) Y_i.
  const Integer t = zY[n - 1];
  PicClass out{IntVec(zZ.begin(), zZ.end()), IntVec(zY.begin(), zY.end() - 1)};
  for (int i = 0; i < n; ++i) out.z[i] += t * (n - i);
  for (int i = 0; i < n - 1; ++i) out.y[i] -= t * (n - i);
  return out;
}

PicClass pic_normal_form(const LineBundleClass& bundle) { return pic_normal_form(bundle.m(), bundle.l()); }

bool pic_equal(const LineBundleClass& first, const LineBundleClass& second) {
  if (first.n() != second.n()) throw Error(ErrorCode::InvalidArgument, "rank mismatch");
  return pic_normal_form(first) == pic_normal_form(second);
}

LineBundleClass relation_class(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "rank n must be positive");
  IntVec m(n), l(n);
  for (int i = 0; i < n; ++i) {
    m[i] = n - i;
    l[i] = -(n - i);
  }
  return LineBundleClass(n, std::move(m), std::move(l));
}

LineBundleClass dualizing_class(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "rank n must be positive");
  IntVec m(n);
  for (int i = 0; i < n; ++i) m[i] = i * (i - n) - 1;
  return LineBundleClass(n, m, m);
}

PicClass delta_class(int n, int i) {
  if (n < 2 || i < 1 || i > n - 1) throw Error(ErrorCode::InvalidArgument, "Delta_i needs 1 <= i <= n-1");
  IntVec step(n, 0);
  for (int j = n - i; j < n; ++j) step[j] = 1;
  const DivisorExpr principal = divisor_of_monomial(step);
  // 0 = [principal] = zZ.Z + zY.Y + Delta_i.
  const PicClass zy = pic_normal_form(principal.zZ, principal.zY);
  return PicClass{IntVec(n, 0), IntVec(n - 1, 0)} - zy;
}

PicClass pic_class_of(const DivisorExpr& divisor) {
  const int n = divisor.n();
  if (divisor.zY.size() != static_cast<std::size_t>(n) ||
      divisor.zDelta.size() != static_cast<std::size_t>(std::max(n - 1, 0)))
    throw Error(ErrorCode::InvalidArgument, "divisor expression has inconsistent lengths");
  PicClass out = pic_normal_form(divisor.zZ, divisor.zY);
  for (int i = 1; i <= n - 1; ++i) {
    const Integer& c = divisor.zDelta[i - 1];
    if (c == 0) continue;
    const PicClass delta = delta_class(n, i);
    for (int k = 0; k < n; ++k) out.z[k] += c * delta.z[k];
    for (int k = 0; k < n - 1; ++k) out.y[k] += c * delta.y[k];
  }
  return out;
}

LineBundleClass bundle_of(const DivisorExpr& divisor) {
  if (std::any_of(divisor.zDelta.begin(), divisor.zDelta.end(), [](const Integer& v) { return v != 0; }))
    throw Error(ErrorCode::InvalidArgument, "divisor has Delta components; not a boundary combination");
  return LineBundleClass(divisor.n(), divisor.zZ, divisor.zY);
}

}  // namespace kgl
