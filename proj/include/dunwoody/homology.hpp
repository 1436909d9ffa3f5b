#pragma once

// First homology of the closed manifold of an admissible 6-tuple: the
// cokernel of the n x n relation matrix of the cyclic presentation, with
// entry (k, i) the exponent sum of generator x_{i+1} in relator k.  The
// matrix is circulant (entry depends only on (i - k) mod n) and every row
// sums to the exponent sum of the base word.

#include <optional>
#include <string>

#include "dunwoody/exact_matrix.hpp"
#include "dunwoody/presentation.hpp"

namespace dunwoody {

struct RelationMatrix {
  MatZ entries;  // n x n

  long size() const { return static_cast<long>(entries.size()); }
};

inline RelationMatrix relationMatrix(const CyclicPresentation& pres) {
  const long n = pres.n;
  RelationMatrix m;
  m.entries.assign(n, std::vector<mpz_class>(n, 0));
  for (long k = 0; k < n; ++k)
    for (const Letter& l : pres.relators[k].letters)
      m.entries[k][l.generator - 1] += l.exponent;
  const mpz_class eps = exponentSum(pres.baseWord);
  for (long k = 0; k < n; ++k) {
    mpz_class rowSum = 0;
    for (long i = 0; i < n; ++i) {
      rowSum += m.entries[k][i];
      if (m.entries[k][i] != m.entries[0][((i - k) % n + n) % n])
        throw std::logic_error("relation matrix is not circulant");
    }
    if (rowSum != eps)
      throw std::logic_error("relation matrix row sum != exponent sum");
  }
  return m;
}

struct AbelianGroupDecomp {
  std::vector<mpz_class> torsion;  // d_1 | d_2 | ..., each > 1
  long freeRank = 0;

  bool isTrivial() const { return torsion.empty() && freeRank == 0; }

  // Group order; empty means infinite (never encoded as 0).
  std::optional<mpz_class> order() const {
    if (freeRank > 0) return std::nullopt;
    mpz_class prod = 1;
    for (const mpz_class& t : torsion) prod *= t;
    return prod;
  }

  std::string str() const {
    if (isTrivial()) return "0";
    std::string out;
    for (const mpz_class& t : torsion) {
      if (!out.empty()) out += " + ";
      out += "Z/" + t.get_str();
    }
    for (long i = 0; i < freeRank; ++i) {
      if (!out.empty()) out += " + ";
      out += "Z";
    }
    return out;
  }
};

inline AbelianGroupDecomp smithNormalForm(const RelationMatrix& m) {
  AbelianGroupDecomp decomp;
  for (const mpz_class& dv : smithDiagonal(m.entries)) {
    if (dv == 0)
      ++decomp.freeRank;
    else if (dv > 1)
      decomp.torsion.push_back(dv);
  }
  return decomp;
}

inline AbelianGroupDecomp firstHomology(const SixTuple& sigma) {
  return smithNormalForm(relationMatrix(buildPresentation(sigma)));
}

}  // namespace dunwoody
