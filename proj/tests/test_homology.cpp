#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dunwoody/dunwoody.hpp"

using namespace dunwoody;

namespace {

AbelianGroupDecomp snfOf(const MatZ& m) {
  RelationMatrix rel;
  rel.entries = m;
  AbelianGroupDecomp decomp;
  for (const mpz_class& dv : smithDiagonal(rel.entries)) {
    if (dv == 0)
      ++decomp.freeRank;
    else if (dv > 1)
      decomp.torsion.push_back(dv);
  }
  return decomp;
}

}  // namespace

TEST_CASE("relation matrix of a one-generator presentation") {
  CyclicPresentation pres = buildPresentation(SixTuple(0, 0, 3, 1, 1, 0));
  RelationMatrix m = relationMatrix(pres);
  REQUIRE(m.size() == 1);
  CHECK(abs(m.entries[0][0]) == 3);
}

TEST_CASE("relation matrix counts letters with signs") {
  CyclicPresentation pres;
  pres.n = 2;
  pres.baseWord = CyclicWord{2, {{1, +1}, {2, +1}, {1, +1}}};
  pres.relators = {pres.baseWord, pres.baseWord.shifted(1)};
  RelationMatrix m = relationMatrix(pres);
  CHECK(m.entries[0][0] == 2);
  CHECK(m.entries[0][1] == 1);
  CHECK(m.entries[1][0] == 1);
  CHECK(m.entries[1][1] == 2);
}

TEST_CASE("smith normal form: basic shapes") {
  CHECK(snfOf({{1, 0}, {0, 1}}).isTrivial());
  CHECK(snfOf({{5}}).str() == "Z/5");
  CHECK(snfOf({{1}}).isTrivial());
  CHECK(snfOf({{0}}).str() == "Z");
  CHECK_FALSE(snfOf({{0}}).order().has_value());
  AbelianGroupDecomp d = snfOf({{2, 0}, {0, 4}});
  REQUIRE(d.torsion.size() == 2);
  CHECK(d.torsion[0] == 2);
  CHECK(d.torsion[1] == 4);
}

TEST_CASE("smith normal form: divisibility chain and known cokernels") {
  {
    // diag(6, 10) ~ Z/2 + Z/30.
    AbelianGroupDecomp d = snfOf({{6, 0}, {0, 10}});
    REQUIRE(d.torsion.size() == 2);
    CHECK(d.torsion[0] == 2);
    CHECK(d.torsion[1] == 30);
  }
  {
    // A full-rank matrix: torsion order equals |det|.
    MatZ m = {{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
    AbelianGroupDecomp d = snfOf(m);
    CHECK(d.freeRank == 0);
    CHECK(*d.order() == abs(determinant(m)));
    for (size_t i = 1; i < d.torsion.size(); ++i)
      CHECK(d.torsion[i] % d.torsion[i - 1] == 0);
  }
  {
    // Rank-deficient matrix: free part present, order infinite.
    AbelianGroupDecomp d = snfOf({{1, 2}, {2, 4}});
    CHECK(d.freeRank == 1);
    CHECK_FALSE(d.order().has_value());
  }
}

TEST_CASE("smith normal form is invariant under permutations") {
  MatZ m = {{4, 2, 0}, {2, 8, 2}, {0, 2, 12}};
  const auto ref = smithDiagonal(m);
  MatZ rowPerm = {m[2], m[0], m[1]};
  CHECK(smithDiagonal(rowPerm) == ref);
  MatZ colPerm = m;
  for (auto& row : colPerm) std::swap(row[0], row[2]);
  CHECK(smithDiagonal(colPerm) == ref);
}

TEST_CASE("determinant: exact integer elimination") {
  CHECK(determinant({{2, 3}, {4, 5}}) == -2);
  CHECK(determinant({{1, 2}, {2, 4}}) == 0);
  CHECK(determinant({{0, 1}, {1, 0}}) == -1);
  // Vandermonde matrix at powers of two: intermediate Bareiss values exceed
  // 64 bits, and the determinant has a closed product form.
  MatZ big(6, std::vector<mpz_class>(6, 0));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) big[i][j] = mpz_class(1) << (i * j);
  mpz_class expected = 1;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      expected *= (mpz_class(1) << j) - (mpz_class(1) << i);
  CHECK(determinant(big) == expected);
}

TEST_CASE("first homology of the reference tuples") {
  {
    AbelianGroupDecomp h = firstHomology(SixTuple(1, 0, 0, 1, 1, 0));
    CHECK(h.freeRank == 1);
    CHECK(h.torsion.empty());
    CHECK_FALSE(h.order().has_value());
  }
  for (long c = 2; c <= 8; ++c)
    for (long r = 1; r < c; ++r) {
      if (std::gcd(c, r) != 1) continue;
      AbelianGroupDecomp h = firstHomology(SixTuple(0, 0, c, 1, r, 0));
      REQUIRE(h.torsion.size() == 1);
      CHECK(h.torsion[0] == c);
      CHECK(h.freeRank == 0);
    }
  // Connected sums of simply-connected pieces: trivial homology for all n.
  for (long n = 1; n <= 6; ++n)
    CHECK(firstHomology(SixTuple(0, 0, 1, n, 0, 0)).isTrivial());
}

TEST_CASE("double covers of the one-vertical family have order 2a+1") {
  for (long a = 1; a <= 4; ++a)
    for (long r = 1; r < 2 * a + 1; ++r) {
      if (std::gcd(2 * a + 1, 2 * r) != 1) continue;
      AdmissibilityReport quot = isAdmissible(SixTuple(a, 0, 1, 1, r, 0));
      REQUIRE(quot.qSigma);
      const long s = ((-(*quot.qSigma)) % 2 + 2) % 2;
      AbelianGroupDecomp h = firstHomology(SixTuple(a, 0, 1, 2, r, s));
      REQUIRE(h.order());
      CHECK(*h.order() == 2 * a + 1);
    }
}

TEST_CASE("determinant cross-check on relation matrices") {
  for (long a = 0; a <= 2; ++a)
    for (long b = 0; b <= 2; ++b)
      for (long c = 0; c <= 2; ++c) {
        if (a + b + c == 0) continue;
        const long d = 2 * a + b + c;
        for (long n = 1; n <= 4; ++n)
          for (long r = 0; r < d; ++r)
            for (long s = 0; s < n; ++s) {
              SixTuple sg(a, b, c, n, r, s);
              if (!isAdmissible(sg).admissible) continue;
              RelationMatrix m = relationMatrix(buildPresentation(sg));
              const mpz_class det = determinant(m.entries);
              AbelianGroupDecomp h = smithNormalForm(m);
              if (det == 0) {
                CHECK(h.freeRank > 0);
              } else {
                REQUIRE(h.order());
                CHECK(*h.order() == abs(det));
              }
            }
      }
}

TEST_CASE("homology order is invariant under relabelling the start cycle") {
  // Cyclic relabelling of generators permutes the relators; the cokernel is
  // unchanged.
  SixTuple sg(1, 2, 3, 4, 4, 0);
  CyclicPresentation pres = buildPresentation(sg);
  AbelianGroupDecomp ref = smithNormalForm(relationMatrix(pres));
  for (long k = 1; k < sg.n; ++k) {
    CyclicPresentation shifted = pres;
    shifted.baseWord = pres.baseWord.shifted(k);
    shifted.relators.clear();
    for (long j = 0; j < sg.n; ++j)
      shifted.relators.push_back(shifted.baseWord.shifted(j));
    AbelianGroupDecomp h = smithNormalForm(relationMatrix(shifted));
    CHECK(h.torsion == ref.torsion);
    CHECK(h.freeRank == ref.freeRank);
  }
}
