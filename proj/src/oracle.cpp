#include "kgl/oracle.hpp"

#include <algorithm>

#include "kgl/linalg.hpp"

namespace kgl {

namespace {

constexpr int kVariables = 5;  // x00, x11, x12, x21, x22

Polynomial variable(int index) {
  Exponent e(kVariables, 0);
  e[index] = 1;
  return Polynomial::monomial(std::move(e));
}

Polynomial quadric() {
  // q = x11 x22 - x12 x21
  Exponent diag(kVariables, 0), anti(kVariables, 0);
  diag[1] = diag[4] = 1;
  anti[2] = anti[3] = 1;
  return Polynomial::monomial(diag, 1) + Polynomial::monomial(anti, -1);
}

long to_long(const Integer& value) {
  if (!value.fits_slong_p()) throw Error(ErrorCode::InvalidArgument, "oracle input out of range");
  return value.get_si();
}

long clip(const Integer& value) { return value > 0 ? to_long(value) : 0; }

}  // namespace

Integer oracle_dim_n1(const Integer& m0, const Integer& l0) {
  Integer degree = m0 + l0;
  return degree >= 0 ? Integer(degree + 1) : Integer(0);
}

BlowupConditions blowup_conditions(const Integer& m0, const Integer& m1, const Integer& l0, const Integer& l1,
                                   long extra_a, long extra_b) {
  if (extra_a < 0 || extra_b < 0) throw Error(ErrorCode::InvalidArgument, "pole orders can only be raised");
  Integer half_l0;
  mpz_cdiv_q_ui(half_l0.get_mpz_t(), l0.get_mpz_t(), 2);
  Integer b = std::max({Integer(0), l1, half_l0}) + extra_b;
  Integer a = std::max({Integer(0), m0, Integer(m1 - b)}) + extra_a;

  BlowupConditions c;
  c.degree = to_long(a + 2 * b);
  if (c.degree > kMaxOracleDegree)
    throw Error(ErrorCode::InvalidArgument, "oracle degree " + std::to_string(c.degree) + " exceeds " +
                                                std::to_string(kMaxOracleDegree));
  c.x00_order = clip(a - m0);
  c.surface_order = clip(a + b - m1);
  c.point_order = clip(2 * b - l0);
  c.quadric_order = clip(b - l1);
  return c;
}

Integer oracle_dim_n2(const BlowupConditions& c) {
  const long d = c.degree;
  if (d < 0 || d > kMaxOracleDegree) throw Error(ErrorCode::InvalidArgument, "oracle degree out of range");
  const MonomialSpace space(kVariables, static_cast<int>(d));
  const std::size_t columns = space.size();
  const Polynomial q = quadric();
  const Polynomial x00 = variable(0);

  // Coordinates forbidden by the monomial conditions (i) and (iii).
  std::vector<bool> outside(columns, false);
  for (std::size_t i = 0; i < columns; ++i) {
    const int x00_degree = space.exponent(i)[0];
    outside[i] = x00_degree < c.x00_order || (d - x00_degree) < c.point_order;
  }

  // (ii): the degree-d part of (x00, q)^c is spanned by x00^j q^{c-j} * monomials.
  IntegerEchelon surface;
  const long k = c.surface_order;
  if (k > 0) {
    for (long j = 0; j <= k; ++j) {
      const long rest = d - j - 2 * (k - j);
      if (rest < 0) continue;
      const Polynomial generator = x00.pow(j) * q.pow(k - j);
      const MonomialSpace multipliers(kVariables, static_cast<int>(rest));
      for (const Exponent& mono : multipliers.monomials())
        surface.insert((generator * Polynomial::monomial(mono)).coordinates(space));
    }
  }

  // (iv): F = q^t G. The answer is the dimension of the kernel of
  //   G -> (F mod (ii), F restricted to the forbidden coordinates).
  const long t = c.quadric_order;
  if (d - 2 * t < 0) return 0;
  const Polynomial qt = q.pow(static_cast<unsigned>(t));
  const MonomialSpace domain(kVariables, static_cast<int>(d - 2 * t));
  IntegerEchelon image;
  for (const Exponent& mono : domain.monomials()) {
    const SparseVector f = (qt * Polynomial::monomial(mono)).coordinates(space);
    SparseVector combined;
    if (k > 0) combined = f;
    for (const auto& [col, value] : f) {
      if (outside[col]) combined.emplace(columns + col, value);
    }
    if (k > 0) combined = surface.reduce(std::move(combined));
    image.insert(std::move(combined));
  }
  return Integer(static_cast<unsigned long>(domain.size() - image.rank()));
}

Integer oracle_dim_n2(const Integer& m0, const Integer& m1, const Integer& l0, const Integer& l1) {
  return oracle_dim_n2(blowup_conditions(m0, m1, l0, l1));
}

}  // namespace kgl
