#pragma once

// Independent knot-theoretic oracle: Alexander polynomials of 2-bridge and
// torus knots, and the homology order of cyclic branched covers, used to
// cross-validate the diagram pipeline end to end.
//
// The 2-bridge knot b(alpha, beta) (alpha odd, gcd(alpha, beta) = 1, beta
// conventionally even, defined up to beta mod 2*alpha) has knot group
// <u, v | u W = W v> with W = v^{e_1} u^{e_2} v^{e_3} ... u^{e_{alpha-1}} and
// e_i = (-1)^floor(i*beta'/alpha), where beta' is the odd representative of
// beta mod 2*alpha (the sign word is only valid for an odd slope; b(alpha,
// beta) and b(alpha, beta + alpha) are the same knot).  The Alexander
// polynomial is the Fox derivative of the relator u W v^{-1} W^{-1} with
// respect to u, abelianized by u, v -> t.
//
// The homology of the n-fold cyclic branched cover has order
// |prod_{j=1}^{n-1} Delta(zeta_n^j)|, computed exactly as
// |det Delta(P_n)| / |Delta(1)| with P_n the n x n cyclic permutation matrix
// (never through complex floating point); a zero determinant means infinite
// homology.

#include <numeric>
#include <optional>

#include "dunwoody/exact_matrix.hpp"
#include "dunwoody/laurent.hpp"

namespace dunwoody {

struct TwoBridgeKnot {
  long alpha;  // odd, > 0
  long beta;   // even representative in [0, 2*alpha), gcd(alpha, beta) = 1

  TwoBridgeKnot(long alpha_, long beta_) : alpha(alpha_) {
    if (alpha <= 0 || alpha % 2 == 0)
      throw std::invalid_argument("2-bridge knot: alpha must be odd and > 0");
    beta = ((beta_ % (2 * alpha)) + 2 * alpha) % (2 * alpha);
    if (std::gcd(alpha, beta) != 1)
      throw std::invalid_argument(
          "2-bridge knot: alpha and beta must be coprime");
    if (beta % 2 != 0) beta = (beta + alpha) % (2 * alpha);
  }

  long oddSlope() const { return (beta + alpha) % (2 * alpha); }
};

inline IntegerLaurentPoly alexanderTwoBridge(const TwoBridgeKnot& k) {
  const long alpha = k.alpha, slope = k.oddSlope();
  // Relator u W v^{-1} W^{-1} as (isU, exponent) letters.
  std::vector<std::pair<bool, int>> word;
  std::vector<std::pair<bool, int>> w;
  for (long i = 1; i < alpha; ++i) {
    const int e = (i * slope / alpha) % 2 == 0 ? +1 : -1;
    w.emplace_back(i % 2 == 0, e);  // v^{e_1} u^{e_2} v^{e_3} ...
  }
  word.emplace_back(true, +1);
  word.insert(word.end(), w.begin(), w.end());
  word.emplace_back(false, -1);
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    word.emplace_back(it->first, -it->second);
  // Abelianized Fox derivative with respect to u: d(u)/du = 1,
  // d(u^-1)/du = -u^-1, d(v^+-1)/du = 0, d(xy)/du = d(x)/du + ab(x) d(y)/du.
  IntegerLaurentPoly delta;
  long prefix = 0;
  for (const auto& [isU, e] : word) {
    if (isU) {
      if (e > 0)
        delta.add(prefix, 1);
      else
        delta.add(prefix - 1, -1);
    }
    prefix += e;
  }
  delta = delta.unitNormal();
  const mpz_class atOne = delta.evalAtOne();
  if (atOne != 1 && atOne != -1)
    throw std::logic_error("2-bridge Alexander polynomial: Delta(1) != +-1");
  if (!delta.isPalindromic())
    throw std::logic_error("2-bridge Alexander polynomial: not palindromic");
  return delta;
}

inline IntegerLaurentPoly alexanderTorus(long p, long q) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1)
    throw std::invalid_argument("torus knot: p, q must be coprime and >= 2");
  // (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)), an exact division.
  using namespace detail;
  const DensePoly num =
      densePolyMul(densePolyPowMinusOne(p * q), densePolyPowMinusOne(1));
  const DensePoly den =
      densePolyMul(densePolyPowMinusOne(p), densePolyPowMinusOne(q));
  const DensePoly quo = densePolyDivExact(num, den);
  IntegerLaurentPoly delta;
  for (size_t i = 0; i < quo.size(); ++i)
    delta.add(static_cast<long>(i), quo[i]);
  delta = delta.unitNormal();
  const mpz_class atOne = delta.evalAtOne();
  if (atOne != 1 && atOne != -1)
    throw std::logic_error("torus Alexander polynomial: Delta(1) != +-1");
  return delta;
}

// |H_1| of the n-fold cyclic branched cover; empty means infinite.
inline std::optional<mpz_class> branchedCoverOrder(
    const IntegerLaurentPoly& delta, long n) {
  if (n < 2) throw std::invalid_argument("branched cover order requires n >= 2");
  const mpz_class atOne = delta.evalAtOne();
  if (atOne != 1 && atOne != -1)
    throw std::invalid_argument("branched cover order requires Delta(1) = +-1");
  // det Delta(P_n) = Delta(1) * prod_{j=1}^{n-1} Delta(zeta_n^j); the
  // evaluation at the cyclic permutation matrix is the circulant with first
  // row indexed by exponents mod n.
  MatZ m(static_cast<size_t>(n), std::vector<mpz_class>(n, 0));
  for (const auto& [e, c] : delta.coeffs()) {
    const long em = ((e % n) + n) % n;
    for (long i = 0; i < n; ++i) m[i][(i + em) % n] += c;
  }
  mpz_class det = determinant(m);
  if (det == 0) return std::nullopt;
  return abs(det);  // |Delta(1)| = 1
}

}  // namespace dunwoody
