#pragma once

// Gluing of the open graph: cycle C'_i is glued to C''_{i-s} (mod n) so that
// equally labelled vertices are identified.  The result is a 4-valent graph
// embedded in a closed orientable genus-n surface T_n, carried here as a
// rotation system.  Glued vertex (i, l) is the image of label l on C'_i; the
// identified curves C_1..C_n are the glued cycles.
//
// Half-edge encoding (4nd half-edges in total):
//   [0, 2nd)      band-arc half-edges: arcIndex * 2 + pos
//   [2nd, 4nd)    curve half-edges: 2nd + (i*d + l)*2 + w, the w-end of the
//                 curve edge of C_i joining labels l and l+1 (w = 0 at l,
//                 w = 1 at l+1)
//
// Rotation at vertex (i, l): [curve edge towards l+1, upper band end,
// curve edge towards l-1, lower band end].  The rotation system is invariant
// under the index shift i -> i+1 on cycles and arcs (the combinatorial
// rotation of order n).
//
// When the open graph is disconnected the glued embedding is not cellular:
// the single unbounded region of the planar figure is traced as one face
// orbit per component, and the Euler identity becomes
//   V - E + F = (2 - 2n) + 2*(components - 1).

#include <stdexcept>
#include <vector>

#include "dunwoody/open_graph.hpp"

namespace dunwoody {

class GluedDiagram {
 public:
  explicit GluedDiagram(OpenGraph graph)
      : graph_(std::move(graph)), sigma_(graph_.sigma()) {
    const long n = sigma_.n, d = sigma_.d;
    upperEnd_.assign(static_cast<size_t>(n * d), -1);
    lowerEnd_.assign(static_cast<size_t>(n * d), -1);
    const auto& arcs = graph_.arcs();
    for (size_t ai = 0; ai < arcs.size(); ++ai) {
      for (int pos = 0; pos < 2; ++pos) {
        const ArcEnd& e = arcs[ai].end[pos];
        const long v = gluedVertex(e);
        auto& slot = (e.side == Side::Upper) ? upperEnd_[v] : lowerEnd_[v];
        if (slot != -1)
          throw std::logic_error("glued diagram: duplicate band end at vertex");
        slot = static_cast<long>(ai) * 2 + pos;
      }
    }
    for (long v = 0; v < n * d; ++v)
      if (upperEnd_[v] == -1 || lowerEnd_[v] == -1)
        throw std::logic_error("glued diagram: 4-valence violated");
    traceFaces();
  }

  const SixTuple& sigma() const { return sigma_; }
  const OpenGraph& graph() const { return graph_; }

  long vertexCount() const { return sigma_.n * sigma_.d; }
  long edgeCount() const { return 2 * sigma_.n * sigma_.d; }
  long faceCount() const { return static_cast<long>(faces_.size()); }

  // Glued vertex id (curve * d + label) of an open arc end.
  long gluedVertex(const ArcEnd& e) const {
    const long curve =
        (e.side == Side::Upper) ? e.cycle : (e.cycle + sigma_.s) % sigma_.n;
    return curve * sigma_.d + e.label;
  }
  long vertexCurve(long v) const { return v / sigma_.d; }
  long vertexLabel(long v) const { return v % sigma_.d; }

  // Band half-edge at a glued vertex, encoded as arcIndex*2 + pos.
  long upperBandEnd(long v) const { return upperEnd_[v]; }
  long lowerBandEnd(long v) const { return lowerEnd_[v]; }

  // --- half-edge ids ---
  long bandHalfEdge(long arcEnd) const { return arcEnd; }
  long curveHalfEdge(long curve, long label, int w) const {
    return 2 * sigma_.n * sigma_.d + (curve * sigma_.d + label) * 2 + w;
  }
  bool isCurveHalfEdge(long h) const { return h >= 2 * sigma_.n * sigma_.d; }
  // Curve edge id (curve * d + label, joining label to label+1) of a curve
  // half-edge.
  long curveEdgeOf(long h) const { return (h - 2 * sigma_.n * sigma_.d) / 2; }

  long twin(long h) const {
    if (!isCurveHalfEdge(h)) return (h / 2) * 2 + (1 - h % 2);
    const long base = 2 * sigma_.n * sigma_.d;
    return base + ((h - base) / 2) * 2 + (1 - (h - base) % 2);
  }

  long vertexOf(long h) const {
    if (!isCurveHalfEdge(h)) return gluedVertex(graph_.endOf(h));
    const long base = 2 * sigma_.n * sigma_.d;
    const long e = (h - base) / 2;
    const int w = static_cast<int>((h - base) % 2);
    const long curve = e / sigma_.d, label = e % sigma_.d;
    return curve * sigma_.d + (label + w) % sigma_.d;
  }

  // Rotation at a vertex, as 4 outgoing half-edges in cyclic order.
  std::array<long, 4> rotation(long v) const {
    const long curve = vertexCurve(v), label = vertexLabel(v);
    return {curveHalfEdge(curve, label, 0), upperEnd_[v],
            curveHalfEdge(curve, (label - 1 + sigma_.d) % sigma_.d, 1),
            lowerEnd_[v]};
  }

  // Faces of the embedded 4-valent graph, as orbits of outgoing half-edges
  // under: cross the edge, then take the rotation successor of the arrival.
  const std::vector<std::vector<long>>& faces() const { return faces_; }
  long faceOf(long halfEdge) const { return faceOf_[halfEdge]; }

  // Euler identity for the (possibly non-cellular) embedding in T_n.
  bool eulerCheckPasses() const {
    const long comp = graph_.componentCount();
    return vertexCount() - edgeCount() + faceCount() ==
           (2 - 2 * sigma_.n) + 2 * (comp - 1);
  }

  // The combinatorial rotation: image of a band-arc index under the cycle
  // shift i -> i+k (arcs are stored as n blocks of d, one block per i).
  long shiftArc(long arcIndex, long k) const {
    const long d = sigma_.d, n = sigma_.n;
    const long i = arcIndex / d, off = arcIndex % d;
    return ((i + k) % n) * d + off;
  }
  long shiftVertex(long v, long k) const {
    const long d = sigma_.d, n = sigma_.n;
    return ((v / d + k) % n) * d + v % d;
  }

  // Representative half-edges of the unbounded region of the planar figure,
  // one per component of the open graph, for the non-cellular cases (empty
  // when the open graph is connected).  All of them lie on the same region
  // of the surface complement.
  std::vector<long> outerRegionHalfEdges() const {
    const long a = sigma_.a, b = sigma_.b, d = sigma_.d;
    const long n = sigma_.n, r = sigma_.r, s = sigma_.s;
    if (graph_.componentCount() == 1) return {};
    std::vector<long> out;
    if (b == 0 && sigma_.c == 0) {
      // Two components: the chain of upper cycles and the chain of lower
      // cycles.  Upper witness: the side of curve edge (a-1, a) facing the
      // outer region; lower witness: the opposite side of the corresponding
      // lower curve edge.
      out.push_back(curveHalfEdge(0, (a - 1 + d) % d, 1));
      out.push_back(curveHalfEdge(s % n, ((a - 1 - r) % d + d) % d, 0));
    } else {
      // a = 0 and exactly one of b, c zero: n disjoint upper/lower pairs.
      for (long i = 0; i < n; ++i) out.push_back(curveHalfEdge(i, d - 1, 1));
    }
    return out;
  }

 private:
  void traceFaces() {
    const long total = 4 * sigma_.n * sigma_.d;
    faceOf_.assign(static_cast<size_t>(total), -1);
    // Position of each outgoing half-edge within its vertex rotation.
    std::vector<int> rotPos(static_cast<size_t>(total), -1);
    for (long v = 0; v < vertexCount(); ++v) {
      const auto rot = rotation(v);
      for (int j = 0; j < 4; ++j) rotPos[rot[j]] = j;
    }
    for (long h0 = 0; h0 < total; ++h0) {
      if (faceOf_[h0] != -1) continue;
      const long fi = static_cast<long>(faces_.size());
      faces_.emplace_back();
      long h = h0;
      while (faceOf_[h] == -1) {
        faceOf_[h] = fi;
        faces_.back().push_back(h);
        const long arr = twin(h);
        h = rotation(vertexOf(arr))[(rotPos[arr] + 1) % 4];
      }
    }
  }

  OpenGraph graph_;
  SixTuple sigma_;
  std::vector<long> upperEnd_, lowerEnd_;
  std::vector<std::vector<long>> faces_;
  std::vector<long> faceOf_;
};

inline GluedDiagram glue(OpenGraph graph) { return GluedDiagram(std::move(graph)); }
inline GluedDiagram buildDiagram(const SixTuple& sigma) {
  return GluedDiagram(buildOpenGraph(sigma));
}

}  // namespace dunwoody
