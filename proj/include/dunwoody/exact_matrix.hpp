#pragma once

// Exact integer matrix utilities over arbitrary-precision integers:
// determinant (fraction-free elimination) and Smith normal form.  Entry
// growth in these computations is exponential in the matrix size, so
// fixed-width integers are not an option.

#include <gmpxx.h>

#include <cstdlib>
#include <vector>

namespace dunwoody {

using MatZ = std::vector<std::vector<mpz_class>>;

inline mpz_class determinant(MatZ m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  mpz_class prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        mpz_class num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = q;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Diagonal of the Smith normal form (non-negative, d_1 | d_2 | ...),
// truncated/padded to min(rows, cols) entries.
inline std::vector<mpz_class> smithDiagonal(MatZ m) {
  const size_t rows = m.size();
  const size_t cols = rows == 0 ? 0 : m[0].size();
  const size_t rank = rows < cols ? rows : cols;
  std::vector<mpz_class> diag(rank, 0);
  size_t t = 0;
  while (t < rank) {
    // Pivot: nonzero entry of minimal absolute value in the remaining block.
    size_t pi = t, pj = t;
    bool found = false;
    mpz_class best = 0;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j)
        if (m[i][j] != 0) {
          mpz_class a = abs(m[i][j]);
          if (!found || a < best) {
            best = a;
            pi = i;
            pj = j;
            found = true;
          }
        }
    if (!found) break;  // remaining block is zero
    std::swap(m[t], m[pi]);
    for (size_t i = t; i < rows; ++i) std::swap(m[i][t], m[i][pj]);
    // Reduce column and row by the pivot; repeat until both are clear (each
    // pass strictly shrinks |pivot| or clears an entry).
    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        mpz_class q = m[i][t] / m[t][t];  // truncated division
        for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {  // remainder: make it the new, smaller pivot
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        mpz_class q = m[t][j] / m[t][t];
        for (size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (size_t i = t; i < rows; ++i) std::swap(m[i][t], m[i][j]);
          clean = false;
        }
      }
    }
    // Divisibility: the pivot must divide every remaining entry; if not,
    // fold the offending row into the pivot row and re-clear.
    bool divides = true;
    for (size_t i = t + 1; i < rows && divides; ++i)
      for (size_t j = t + 1; j < cols && divides; ++j)
        if (m[i][j] % m[t][t] != 0) {
          for (size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
          divides = false;
        }
    if (!divides) continue;  // redo this pivot position
    diag[t] = abs(m[t][t]);
    ++t;
  }
  // Enforce the divisibility chain across the diagonal (defensive; the
  // elimination above already guarantees it).
  for (size_t i = 0; i < rank; ++i)
    for (size_t j = i + 1; j < rank; ++j)
      if (diag[i] != 0 && diag[j] % diag[i] != 0) {
        mpz_class g = gcd(diag[i], diag[j]);
        diag[j] = diag[i] / g * diag[j];
        diag[i] = g;
      }
  return diag;
}

}  // namespace dunwoody
