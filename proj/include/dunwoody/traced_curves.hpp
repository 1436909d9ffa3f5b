#pragma once

// Tracing of the second curve system: the band arcs are pairwise connected
// through their endpoints (at each glued vertex an arc arriving on one side
// of the surface continues along the arc leaving on the other side),
// realizing m cycles D_1..D_m on the glued surface.
//
// Each directed traversal is tagged with two type signs:
//   crossing type: +1 if the arc is traversed from an upper cycle to a lower
//   cycle, -1 for lower to upper, 0 if both endpoints are on the same side;
//   index type: +1 if the arc is traversed from cycle index i towards i+1,
//   -1 for i+1 towards i, 0 for vertical arcs (C'_i to C''_i).
// For n <= 2 the index direction is ambiguous from the indices alone and is
// resolved by the band orientation: departure from the stored source end of
// the arc means the i -> i+1 direction.
//
// The canonical orientation of D_1 starts at the vertex of curve C_1 labelled
// a+b+1 (1-based), leaving along its upper-side band arc.

#include <vector>

#include "dunwoody/glued_diagram.hpp"

namespace dunwoody {

struct Traversal {
  long arc;     // band-arc index
  ArcEnd dep;   // departure (open) end
  ArcEnd arr;   // arrival (open) end

  int crossType() const {
    if (dep.side == Side::Upper && arr.side == Side::Lower) return +1;
    if (dep.side == Side::Lower && arr.side == Side::Upper) return -1;
    return 0;
  }
};

struct TracedCurves {
  std::vector<std::vector<Traversal>> cycles;

  long cycleCount() const { return static_cast<long>(cycles.size()); }
  long totalArcCount() const {
    long t = 0;
    for (const auto& c : cycles) t += static_cast<long>(c.size());
    return t;
  }
};

namespace detail {

// Follow the cycle of band arcs through the departure end `depArcEnd`
// (encoded arcIndex*2 + pos).  Calls visit(traversal) until the walk returns
// to the start.
template <typename Visit>
inline void walkCycle(const GluedDiagram& dg, long startArcEnd, Visit&& visit) {
  const OpenGraph& g = dg.graph();
  long dep = startArcEnd;
  do {
    Traversal t;
    t.arc = dep / 2;
    t.dep = g.endOf(dep);
    t.arr = g.otherEndOf(dep);
    visit(t);
    const long v = dg.gluedVertex(t.arr);
    dep = (t.arr.side == Side::Upper) ? dg.lowerBandEnd(v) : dg.upperBandEnd(v);
  } while (dep != startArcEnd);
}

}  // namespace detail

inline int indexType(const GluedDiagram& dg, const Traversal& t) {
  if (dg.graph().arcs()[t.arc].kind == BandKind::Vertical) return 0;
  const long n = dg.sigma().n;
  const long i1 = t.dep.cycle, i2 = t.arr.cycle;
  const bool fwd = (i1 + 1) % n == i2;
  const bool bwd = (i2 + 1) % n == i1;
  if (fwd && !bwd) return +1;
  if (bwd && !fwd) return -1;
  // n <= 2: both hold; the stored source end of the arc is the i -> i+1 end.
  return dg.graph().arcs()[t.arc].end[0] == t.dep ? +1 : -1;
}

inline TracedCurves traceDCycles(const GluedDiagram& dg) {
  TracedCurves out;
  std::vector<char> used(dg.graph().arcs().size(), 0);
  for (size_t ai = 0; ai < dg.graph().arcs().size(); ++ai) {
    if (used[ai]) continue;
    out.cycles.emplace_back();
    detail::walkCycle(dg, static_cast<long>(ai) * 2, [&](const Traversal& t) {
      used[t.arc] = 1;
      out.cycles.back().push_back(t);
    });
  }
  return out;
}

// The cycle through the glued vertex (curve, label), oriented to leave along
// the vertex's upper-side band arc.
inline std::vector<Traversal> traceFrom(const GluedDiagram& dg, long curve,
                                        long label) {
  std::vector<Traversal> cycle;
  const long v = curve * dg.sigma().d + label;
  detail::walkCycle(dg, dg.upperBandEnd(v),
                    [&](const Traversal& t) { cycle.push_back(t); });
  return cycle;
}

// Canonically oriented D_1: starts at the vertex of C_1 labelled a+b+1
// (1-based; internal label (a+b) mod d).
inline std::vector<Traversal> traceCanonicalD1(const GluedDiagram& dg) {
  const SixTuple& sg = dg.sigma();
  return traceFrom(dg, 0, (sg.a + sg.b) % sg.d);
}

// Image of traced curves under the k-th power of the cycle-shift
// automorphism.
inline TracedCurves applyRho(const GluedDiagram& dg, const TracedCurves& curves,
                             long k) {
  const long n = dg.sigma().n;
  k = ((k % n) + n) % n;
  auto shiftEnd = [&](ArcEnd e) {
    e.cycle = (e.cycle + k) % n;
    return e;
  };
  TracedCurves out;
  out.cycles.reserve(curves.cycles.size());
  for (const auto& cyc : curves.cycles) {
    out.cycles.emplace_back();
    out.cycles.back().reserve(cyc.size());
    for (const Traversal& t : cyc)
      out.cycles.back().push_back(
          Traversal{dg.shiftArc(t.arc, k), shiftEnd(t.dep), shiftEnd(t.arr)});
  }
  return out;
}

}  // namespace dunwoody
