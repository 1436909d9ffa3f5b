#pragma once

// Classification of the genus-one quotient manifold M' of an admissible
// tuple (a,b,c,1,r,0), and the branched-covering report: for admissible
// (a,b,c,n,r,s) the manifold is the n-fold cyclic covering of M' branched
// over a knot depending only on (a,b,c,r).
//
// With e the exponent sum of the base word (equal to the crossing invariant
// p), the quotient is the 3-sphere when e = +-1, S^1 x S^2 when e = 0 and a
// lens space L(alpha, beta) with alpha = |e| otherwise.  The lens slope beta
// is extracted directly from the embedded curve D on the genus-one surface:
// cutting the surface along the glued curve C leaves an annulus on which the
// crossing arcs of D are parallel essential arcs and the same-side arcs cut
// off discs.  Lifting the crossing arcs monotonically (one full turn of the
// annulus boundary per period d) and resolving the same-side arcs innermost
// first gives the total signed boundary displacement of D; dividing by d
// yields the winding W of D around the meridian, well defined modulo alpha
// Dehn twists, and beta = -W (mod alpha) in the orientation fixed by the
// clockwise upper labelling.  Every step carries built-in self-checks
// (cyclic order of endpoints, integrality of W, coprimality of the slope);
// a failure is reported as a defect, never silently repaired.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "dunwoody/homology.hpp"

namespace dunwoody {

struct ManifoldClass {
  enum class Tag { ThreeSphere, S1xS2, Lens, GenusN } tag;
  long alpha = 0;  // Lens only
  long beta = 0;   // Lens only, 0 < beta < alpha
  long genus = 0;  // GenusN only

  static ManifoldClass threeSphere() { return {Tag::ThreeSphere, 0, 0, 0}; }
  static ManifoldClass s1xs2() { return {Tag::S1xS2, 0, 0, 0}; }
  static ManifoldClass lens(long alpha, long beta) {
    if (alpha <= 1 || beta <= 0 || beta >= alpha || std::gcd(alpha, beta) != 1)
      throw std::invalid_argument("invalid lens parameters");
    return {Tag::Lens, alpha, beta, 0};
  }
  static ManifoldClass genusN(long genus) { return {Tag::GenusN, 0, 0, genus}; }

  bool operator==(const ManifoldClass& o) const {
    return tag == o.tag && alpha == o.alpha && beta == o.beta &&
           genus == o.genus;
  }

  std::string str() const {
    switch (tag) {
      case Tag::ThreeSphere:
        return "S3";
      case Tag::S1xS2:
        return "S1xS2";
      case Tag::Lens:
        return "L(" + std::to_string(alpha) + "," + std::to_string(beta) + ")";
      case Tag::GenusN:
        return "genus-" + std::to_string(genus) + " (unclassified)";
    }
    return "?";
  }
};

// Homeomorphism classification of lens spaces: L(a,b) ~ L(a,b') iff
// b' = +-b^{+-1} (mod a).
inline bool lensEquivalent(long alpha1, long beta1, long alpha2, long beta2) {
  if (alpha1 != alpha2) return false;
  const long a = alpha1;
  auto mod = [a](long x) { return ((x % a) + a) % a; };
  long inv = 0;  // beta1^{-1} mod a
  for (long x = 1; x < a; ++x)
    if (mod(beta1 * x) == 1) {
      inv = x;
      break;
    }
  const long b2 = mod(beta2);
  return b2 == mod(beta1) || b2 == mod(-beta1) || b2 == inv || b2 == mod(-inv);
}

namespace detail {

// Signed total boundary displacement of the curve D_1 on the annulus obtained
// by cutting the genus-one surface along C, divided by d (the winding number
// of D around the meridian).  Throws on any self-check failure.
inline long annulusWinding(const GluedDiagram& dg) {
  const long d = dg.sigma().d;
  struct Crossing {
    long upper, lower;
    int dir;  // +1 downward, -1 upward
  };
  std::vector<Crossing> crossing;
  std::vector<std::pair<long, long>> sameUpper, sameLower;
  for (const Traversal& t : traceCanonicalD1(dg)) {
    if (t.dep.side != t.arr.side) {
      if (t.dep.side == Side::Upper)
        crossing.push_back({t.dep.label, t.arr.label, +1});
      else
        crossing.push_back({t.arr.label, t.dep.label, -1});
    } else if (t.dep.side == Side::Upper) {
      sameUpper.emplace_back(t.dep.label, t.arr.label);
    } else {
      sameLower.emplace_back(t.dep.label, t.arr.label);
    }
  }
  long long total = 0;
  if (!crossing.empty()) {
    // The crossing arcs are parallel: sorted along the upper boundary their
    // lower endpoints must lift monotonically, one full turn per period d.
    std::sort(crossing.begin(), crossing.end(),
              [](const Crossing& x, const Crossing& y) {
                return x.upper < y.upper;
              });
    long firstLift = 0, x = 0;
    for (size_t i = 0; i < crossing.size(); ++i) {
      long lift = crossing[i].lower;
      if (i == 0) {
        firstLift = lift;
      } else {
        while (lift <= x) lift += d;
        while (lift - d > x) lift -= d;
      }
      x = lift;
      total += static_cast<long long>(crossing[i].dir) *
               (lift - crossing[i].upper);
    }
    if (crossing.size() > 1) {
      const long span = x - firstLift;
      if (!(0 < span && span < d))
        throw std::logic_error(
            "lens slope: crossing arcs are not cyclically aligned");
    }
  }
  // Same-side arcs bound discs in the annulus; peel them innermost first.
  // The endpoints of the crossing arcs stay active as obstructions.
  for (int side = 0; side < 2; ++side) {
    auto& same = side == 0 ? sameUpper : sameLower;
    std::set<long> active;
    for (const Crossing& cr : crossing)
      active.insert(side == 0 ? cr.upper : cr.lower);
    for (const auto& [x1, x2] : same) {
      active.insert(x1);
      active.insert(x2);
    }
    auto intervalEmpty = [&](long u1, long u2) {
      for (long j = (u1 + 1) % d; j != u2; j = (j + 1) % d)
        if (active.count(j)) return false;
      return true;
    };
    std::vector<std::pair<long, long>> rem = same;
    while (!rem.empty()) {
      bool progress = false;
      for (size_t idx = 0; idx < rem.size(); ++idx) {
        const auto [x1, x2] = rem[idx];
        const bool posOk = intervalEmpty(x1, x2);
        const bool negOk = intervalEmpty(x2, x1);
        long dx;
        if (posOk && !negOk)
          dx = ((x2 - x1) % d + d) % d;
        else if (negOk && !posOk)
          dx = -(((x1 - x2) % d + d) % d);
        else if (posOk && negOk) {
          const long fwd = ((x2 - x1) % d + d) % d, bwd = ((x1 - x2) % d + d) % d;
          dx = fwd <= bwd ? fwd : -bwd;
        } else {
          continue;  // not innermost yet
        }
        total += dx;
        active.erase(x1);
        active.erase(x2);
        rem.erase(rem.begin() + static_cast<long>(idx));
        progress = true;
        break;
      }
      if (!progress)
        throw std::logic_error("lens slope: same-side arcs are not nested");
    }
  }
  if (total % d != 0)
    throw std::logic_error("lens slope: winding is not an integer");
  return static_cast<long>(total / d);
}

}  // namespace detail

inline ManifoldClass classifyGenusOne(const SixTuple& sigma) {
  if (sigma.n != 1)
    throw std::invalid_argument("genus-one classification requires n = 1");
  const GluedDiagram dg = buildDiagram(sigma);
  const AdmissibilityReport rep = checkConditions(dg, traceDCycles(dg));
  if (!rep.admissible)
    throw std::invalid_argument("genus-one classification requires an " +
                                std::string("admissible tuple"));
  const long eps = exponentSum(extractWord(dg, rep));
  if (eps == 1 || eps == -1) return ManifoldClass::threeSphere();
  if (eps == 0) return ManifoldClass::s1xs2();
  const long alpha = eps > 0 ? eps : -eps;
  const long w = detail::annulusWinding(dg);
  long beta = ((eps > 0 ? -w : w) % alpha + alpha) % alpha;
  if (std::gcd(alpha, beta) != 1)
    throw std::logic_error("lens slope: slope not coprime to order at " +
                           sigma.str());
  return ManifoldClass::lens(alpha, beta);
}

// Classification of M(sigma) itself: only the genus-one case is decided.
inline ManifoldClass classify(const SixTuple& sigma) {
  if (sigma.n == 1) return classifyGenusOne(sigma);
  return ManifoldClass::genusN(sigma.n);
}

struct CoveringReport {
  SixTuple sigma;
  SixTuple quotientTuple;      // (a, b, c, 1, r, 0)
  ManifoldClass quotientClass;
  long foldCount = 1;
  std::array<long, 4> branchKnotId;  // (a, b, c, r)
  struct Intermediate {
    long nPrime;
    SixTuple tuple;
    bool admissible;
  };
  std::vector<Intermediate> intermediateQuotients;
};

inline CoveringReport coveringReport(const SixTuple& sigma) {
  const AdmissibilityReport rep = isAdmissible(sigma);
  if (!rep.admissible)
    throw std::invalid_argument("covering report requires an admissible tuple");
  CoveringReport out;
  out.sigma = sigma;
  out.quotientTuple = SixTuple(sigma.a, sigma.b, sigma.c, 1, sigma.r, 0);
  out.quotientClass = classifyGenusOne(out.quotientTuple);
  out.foldCount = sigma.n;
  out.branchKnotId = {sigma.a, sigma.b, sigma.c, sigma.r};
  for (long np = 1; np <= sigma.n; ++np) {
    if (sigma.n % np != 0) continue;
    SixTuple inter(sigma.a, sigma.b, sigma.c, np, sigma.r, sigma.s % np);
    out.intermediateQuotients.push_back(
        {np, inter, isAdmissible(inter).admissible});
  }
  return out;
}

// The family sigma_n = (a, b, c, n, r, -p*q mod n), defined whenever the
// genus-one tuple is admissible with p = +-1; every member is admissible and
// covers the 3-sphere.
inline std::vector<CoveringReport> sphereCoveringFamily(long a, long b, long c,
                                                    long r, long nMax) {
  const SixTuple base(a, b, c, 1, r, 0);
  const AdmissibilityReport rep = isAdmissible(base);
  if (!rep.admissible || !rep.pSigma || (*rep.pSigma != 1 && *rep.pSigma != -1))
    throw std::invalid_argument(
        "sphere-covering family requires an admissible genus-one tuple with "
        "p = +-1");
  const long p = *rep.pSigma, q = *rep.qSigma;
  std::vector<CoveringReport> out;
  for (long n = 1; n <= nMax; ++n) {
    const long s = ((-p * q) % n + n) % n;
    const SixTuple sigma(a, b, c, n, r, s);
    CoveringReport cr = coveringReport(sigma);
    if (!(cr.quotientClass == ManifoldClass::threeSphere()))
      throw std::logic_error("sphere-covering family: quotient is not S3");
    out.push_back(std::move(cr));
  }
  return out;
}

}  // namespace dunwoody
