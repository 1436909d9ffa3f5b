#pragma once

// Integer Laurent polynomials, stored sparsely (exponent -> coefficient,
// no zero coefficients).  Comparison "up to units +-t^k" goes through the
// canonical form: lowest exponent 0, positive leading coefficient.

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dunwoody {

class IntegerLaurentPoly {
 public:
  IntegerLaurentPoly() = default;

  static IntegerLaurentPoly monomial(const mpz_class& coeff, long exp) {
    IntegerLaurentPoly p;
    p.add(exp, coeff);
    return p;
  }

  void add(long exp, const mpz_class& coeff) {
    if (coeff == 0) return;
    auto it = coeffs_.find(exp);
    if (it == coeffs_.end()) {
      coeffs_.emplace(exp, coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  const std::map<long, mpz_class>& coeffs() const { return coeffs_; }
  bool isZero() const { return coeffs_.empty(); }
  long lowestExp() const { return coeffs_.begin()->first; }
  long highestExp() const { return coeffs_.rbegin()->first; }

  mpz_class evalAtOne() const {
    mpz_class v = 0;
    for (const auto& [e, c] : coeffs_) v += c;
    return v;
  }

  mpz_class evalAtMinusOne() const {
    mpz_class v = 0;
    for (const auto& [e, c] : coeffs_) v += (e % 2 == 0) ? c : -c;
    return v;
  }

  // Canonical unit-normal form: lowest exponent 0, positive leading
  // coefficient.
  IntegerLaurentPoly unitNormal() const {
    IntegerLaurentPoly out;
    if (isZero()) return out;
    const long shift = lowestExp();
    const int sign = coeffs_.rbegin()->second > 0 ? 1 : -1;
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e - shift, sign * c);
    return out;
  }

  bool equalsUpToUnits(const IntegerLaurentPoly& o) const {
    return unitNormal().coeffs_ == o.unitNormal().coeffs_;
  }

  // p(1/t), the exponent-reversed polynomial.
  IntegerLaurentPoly reversed() const {
    IntegerLaurentPoly out;
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(-e, c);
    return out;
  }

  bool isPalindromic() const { return equalsUpToUnits(reversed()); }

  std::string str() const {
    if (isZero()) return "0";
    std::string out;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      const auto& [e, c] = *it;
      if (!out.empty()) out += c > 0 ? " + " : " - ";
      else if (c < 0) out += "-";
      const mpz_class a = abs(c);
      if (a != 1 || e == 0) out += a.get_str();
      if (e != 0) {
        if (a != 1) out += "*";
        out += "t";
        if (e != 1) out += "^" + std::to_string(e);
      }
    }
    return out;
  }

 private:
  std::map<long, mpz_class> coeffs_;
};

namespace detail {

// Dense non-Laurent polynomial helpers (coefficient of t^i at index i).
using DensePoly = std::vector<mpz_class>;

inline DensePoly densePolyMul(const DensePoly& x, const DensePoly& y) {
  DensePoly out(x.size() + y.size() - 1, 0);
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  return out;
}

// Exact division; throws when the remainder is nonzero.
inline DensePoly densePolyDivExact(DensePoly num, const DensePoly& den) {
  if (den.empty() || den.back() == 0)
    throw std::invalid_argument("polynomial division by zero");
  if (num.size() < den.size())
    throw std::invalid_argument("polynomial division is not exact");
  DensePoly quo(num.size() - den.size() + 1, 0);
  for (size_t k = quo.size(); k-- > 0;) {
    if (num[k + den.size() - 1] % den.back() != 0)
      throw std::invalid_argument("polynomial division is not exact");
    quo[k] = num[k + den.size() - 1] / den.back();
    for (size_t j = 0; j < den.size(); ++j) num[k + j] -= quo[k] * den[j];
  }
  for (const mpz_class& c : num)
    if (c != 0)
      throw std::invalid_argument("polynomial division is not exact");
  return quo;
}

// t^k - 1.
inline DensePoly densePolyPowMinusOne(long k) {
  DensePoly p(static_cast<size_t>(k) + 1, 0);
  p[0] = -1;
  p[static_cast<size_t>(k)] = 1;
  return p;
}

}  // namespace detail

}  // namespace dunwoody
