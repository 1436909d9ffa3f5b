#pragma once

// Admissibility of a 6-tuple: the glued diagram is a genus-n Heegaard diagram
// iff (1) the traced curve system has exactly n cycles and (2) the surface
// minus the traced curves is connected.
//
// Two label conditions on the canonically oriented D_1 enter the theory:
//   (i')  the labels of the vertices visited by D_1 are all of 1..d;
//   (ii') the vertices of D_1 have pairwise different labels.
// When (i') holds, the signed arc-type counts over the first d arcs of D_1
// define the invariants
//   p = (#crossing-down) - (#crossing-up)      (depends only on a,b,c,r)
//   q = (#index-forward) - (#index-backward)   (depends only on a,b,c,r)
// and (ii') holds iff q + s*p = 0 (mod n).  For d odd, admissibility is
// equivalent to (i') and (ii'); for d even that equivalence fails (there are
// tuples satisfying both label conditions whose complement is disconnected),
// so the decision procedure always evaluates conditions (1) and (2) directly
// and only cross-asserts the odd-d shortcut.

#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "dunwoody/traced_curves.hpp"

namespace dunwoody {

struct AdmissibilityReport {
  SixTuple sigma;
  long mCycles = 0;
  bool complementConnected = false;
  bool cond1 = false;           // m == n
  bool cond2 = false;           // complement of the curve system connected
  bool condIPrime = false;      // labels of D_1 cover 1..d
  bool condIIPrime = false;     // labels of D_1 pairwise distinct
  bool admissible = false;      // cond1 && cond2
  // Signed arc-type counts over the first d arcs of D_1; present iff (i').
  std::optional<long> pSigma, qSigma;
  long pPrime = 0, pDoublePrime = 0;  // crossing-down / crossing-up counts
  long qPrime = 0, qDoublePrime = 0;  // index-forward / index-backward counts
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(size_t n) : parent_(n) {
    for (size_t i = 0; i < n; ++i) parent_[i] = static_cast<long>(i);
  }
  long find(long x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(long x, long y) {
    x = find(x);
    y = find(y);
    if (x != y) parent_[x] = y;
  }
  long componentCount() {
    long count = 0;
    for (size_t i = 0; i < parent_.size(); ++i)
      if (find(static_cast<long>(i)) == static_cast<long>(i)) ++count;
    return count;
  }

 private:
  std::vector<long> parent_;
};

}  // namespace detail

// Condition (2): cutting the surface along the traced curves leaves the faces
// of the embedded 4-valent graph merged across the curve edges.  When the
// open graph is disconnected the per-component outer-face orbits all lie in
// one region and are merged first.
inline bool complementConnected(const GluedDiagram& dg) {
  if (!dg.eulerCheckPasses())
    throw std::logic_error("glued diagram: Euler identity violated at " +
                           dg.sigma().str());
  detail::UnionFind uf(static_cast<size_t>(dg.faceCount()));
  const auto outer = dg.outerRegionHalfEdges();
  for (const long h : outer) uf.unite(dg.faceOf(outer.front()), dg.faceOf(h));
  const long n = dg.sigma().n, d = dg.sigma().d;
  for (long curve = 0; curve < n; ++curve)
    for (long label = 0; label < d; ++label)
      uf.unite(dg.faceOf(dg.curveHalfEdge(curve, label, 0)),
               dg.faceOf(dg.curveHalfEdge(curve, label, 1)));
  return uf.componentCount() == 1;
}

// Labels visited by the canonically oriented D_1, in traversal order (label
// of each arrival vertex).
inline std::vector<long> d1Labels(const GluedDiagram& dg) {
  std::vector<long> labels;
  for (const Traversal& t : traceCanonicalD1(dg))
    labels.push_back(dg.vertexLabel(dg.gluedVertex(t.arr)));
  return labels;
}

// Signed arc-type counts over the first d arcs of D_1.  Requires (i'): the
// initial segment of d arcs is only meaningful when D_1 visits every label.
inline void computePQ(const GluedDiagram& dg, AdmissibilityReport& rep) {
  if (!rep.condIPrime)
    throw std::invalid_argument(
        "p/q are defined only when D_1 visits every label (condition (i'))");
  const auto d1 = traceCanonicalD1(dg);
  const long d = dg.sigma().d;
  for (long h = 0; h < d; ++h) {
    const int ct = d1[h].crossType();
    if (ct > 0) ++rep.pPrime;
    if (ct < 0) ++rep.pDoublePrime;
    const int it = indexType(dg, d1[h]);
    if (it > 0) ++rep.qPrime;
    if (it < 0) ++rep.qDoublePrime;
  }
  rep.pSigma = rep.pPrime - rep.pDoublePrime;
  rep.qSigma = rep.qPrime - rep.qDoublePrime;
}

// (ii') via the closed formula q + s*p = 0 (mod n); valid under (i').
inline bool checkIIPrimeFormula(const SixTuple& sigma, long p, long q) {
  return ((q + sigma.s * p) % sigma.n + sigma.n) % sigma.n == 0;
}

inline AdmissibilityReport checkConditions(const GluedDiagram& dg,
                                           const TracedCurves& curves) {
  AdmissibilityReport rep;
  rep.sigma = dg.sigma();
  rep.mCycles = curves.cycleCount();
  rep.cond1 = rep.mCycles == dg.sigma().n;
  rep.complementConnected = complementConnected(dg);
  rep.cond2 = rep.complementConnected;
  rep.admissible = rep.cond1 && rep.cond2;
  const auto labels = d1Labels(dg);
  const std::set<long> distinct(labels.begin(), labels.end());
  rep.condIPrime = static_cast<long>(distinct.size()) == dg.sigma().d;
  rep.condIIPrime = distinct.size() == labels.size();
  if (rep.condIPrime) computePQ(dg, rep);
  return rep;
}

inline AdmissibilityReport isAdmissible(const SixTuple& sigma) {
  const GluedDiagram dg = buildDiagram(sigma);
  const AdmissibilityReport rep = checkConditions(dg, traceDCycles(dg));
  if (rep.admissible && !(rep.condIPrime && rep.condIIPrime))
    throw std::logic_error("admissible tuple violating label conditions: " +
                           sigma.str());
  if (sigma.d % 2 == 1) {
    // Odd-d shortcut: (1) and (2) together are equivalent to (i') and (ii').
    if (rep.admissible != (rep.condIPrime && rep.condIIPrime))
      throw std::logic_error("odd-d admissibility shortcut violated at " +
                             sigma.str());
    if (sigma.n == 1 && rep.admissible != rep.cond1)
      throw std::logic_error("odd-d genus-one shortcut violated at " +
                             sigma.str());
  }
  if (rep.condIPrime &&
      rep.condIIPrime != checkIIPrimeFormula(sigma, *rep.pSigma, *rep.qSigma))
    throw std::logic_error("label-distinctness formula disagreement at " +
                           sigma.str());
  return rep;
}

}  // namespace dunwoody
