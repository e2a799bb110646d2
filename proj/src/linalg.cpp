#include "kgl/linalg.hpp"

#include <functional>
#include <numeric>

namespace kgl {

void normalize(SparseVector& v) {
  if (v.empty()) return;
  Integer g = 0;
  for (const auto& [col, value] : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), value.get_mpz_t());
    if (g == 1) break;
  }
  const bool flip = v.begin()->second < 0;
  if (g == 1 && !flip) return;
  if (flip) g = -g;
  for (auto& [col, value] : v) mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), g.get_mpz_t());
}

SparseVector IntegerEchelon::reduce(SparseVector v) const {
  auto it = v.begin();
  while (it != v.end()) {
    const std::size_t col = it->first;
    auto row_it = rows_.find(col);
    if (row_it == rows_.end()) {
      ++it;
      continue;
    }
    const SparseVector& row = row_it->second;
    const Integer pivot = row.begin()->second;
    const Integer factor = it->second;
    // v <- pivot * v - factor * row clears column col; row only touches columns >= col.
    if (pivot != 1) {
      for (auto& [c, value] : v) value *= pivot;
    }
    for (const auto& [c, value] : row) {
      auto [slot, inserted] = v.try_emplace(c, 0);
      slot->second -= factor * value;
      if (slot->second == 0) v.erase(slot);
    }
    normalize(v);
    it = v.upper_bound(col);
  }
  return v;
}

bool IntegerEchelon::insert(SparseVector v) {
  SparseVector rest = reduce(std::move(v));
  if (rest.empty()) return false;
  normalize(rest);
  const std::size_t lead = rest.begin()->first;
  rows_.emplace(lead, std::move(rest));
  return true;
}

MonomialSpace::MonomialSpace(int variables, int degree) : variables_(variables), degree_(degree) {
  if (variables < 1 || degree < 0) throw Error(ErrorCode::InvalidArgument, "monomial space needs vars >= 1, degree >= 0");
  Exponent e(variables, 0);
  // Descending lexicographic order: the first variable's exponent decreases slowest.
  std::function<void(int, int)> fill = [&](int var, int remaining) {
    if (var == variables - 1) {
      e[var] = remaining;
      index_.emplace(e, monomials_.size());
      monomials_.push_back(e);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[var] = k;
      fill(var + 1, remaining - k);
    }
  };
  fill(0, degree);
}

std::size_t MonomialSpace::index(const Exponent& exponent) const {
  auto it = index_.find(exponent);
  if (it == index_.end()) throw Error(ErrorCode::InvalidArgument, "monomial not in this space");
  return it->second;
}

Polynomial Polynomial::monomial(Exponent exponent, Integer coefficient) {
  Polynomial p;
  if (coefficient != 0) p.terms_.emplace(std::move(exponent), std::move(coefficient));
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out = *this;
  for (const auto& [e, c] : other.terms_) {
    auto [slot, inserted] = out.terms_.try_emplace(e, 0);
    slot->second += c;
    if (slot->second == 0) out.terms_.erase(slot);
  }
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  Polynomial out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : other.terms_) {
      if (e1.size() != e2.size()) throw Error(ErrorCode::InvalidArgument, "variable count mismatch");
      Exponent e(e1.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      auto [slot, inserted] = out.terms_.try_emplace(std::move(e), 0);
      slot->second += c1 * c2;
      if (slot->second == 0) out.terms_.erase(slot);
    }
  }
  return out;
}

Polynomial Polynomial::pow(unsigned k) const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "power of the zero polynomial");
  Polynomial out = monomial(Exponent(terms_.begin()->first.size(), 0));
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

SparseVector Polynomial::coordinates(const MonomialSpace& space, std::size_t offset) const {
  SparseVector out;
  for (const auto& [e, c] : terms_) out.emplace(offset + space.index(e), c);
  return out;
}

}  // namespace kgl
