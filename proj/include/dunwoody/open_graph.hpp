#pragma once

// Open trivalent graph Gamma(a, b, c, n): n upper cycles C'_1..C'_n and n
// lower cycles C''_1..C''_n, each with d = 2a + b + c vertices, joined by
// bands of parallel arcs:
//
//   - a horizontal arcs C'_i  -> C'_{i+1}   (upper horizontal, HU)
//   - b oblique    arcs C'_i  -> C''_{i+1}  (OB)
//   - c vertical   arcs C'_i  -> C''_i      (V)
//   - a horizontal arcs C''_i -> C''_{i+1}  (lower horizontal, HL)
//
// Labels are 0-based internally (printed labels are 1-based).  Upper cycles
// are labelled clockwise; going clockwise around C'_i from label 0 the band
// slots are: [0,a) outgoing horizontal, [a,a+b) oblique, [a+b,a+b+c) vertical,
// [a+b+c,d) incoming horizontal.  Lower cycles are labelled counterclockwise
// and the slot at position j carries label (j - r) mod d; going around C''_i
// the slots are: [0,a) outgoing horizontal, [a,a+c) incoming vertical,
// [a+c,a+c+b) incoming oblique, [a+b+c,d) incoming horizontal (the mirror of
// the upper order, so the first incoming-horizontal slot carries label 1-r in
// 1-based terms).
//
// Within a band, planarity forces the endpoint matching: bands joining two
// cycles of the same kind (both horizontal bands) match slots in reversed
// order (k <-> a-1-k), while bands crossing between an upper and a lower
// cycle (oblique, vertical) match slots in the same order (k <-> k), because
// the two cycles carry opposite orientations.  This convention is pinned by
// the conformance suite: it is the unique choice (among all band orders and
// per-band reflections) consistent with every reference example.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dunwoody/sixtuple.hpp"

namespace dunwoody {

enum class Side : uint8_t { Upper, Lower };

enum class BandKind : uint8_t {
  HorizontalUpper,
  Oblique,
  Vertical,
  HorizontalLower
};

// One endpoint of a band arc, addressed by (side, cycle index, vertex label).
struct ArcEnd {
  Side side;
  long cycle;  // 0..n-1
  long label;  // 0..d-1
  bool operator==(const ArcEnd& o) const {
    return side == o.side && cycle == o.cycle && label == o.label;
  }
};

struct BandArc {
  BandKind kind;
  // end[0] is the source end (on cycle index i of the band C_i -> C_{i+1} or
  // C'_i -> C''_i); end[1] is the target end.
  std::array<ArcEnd, 2> end;
};

class OpenGraph {
 public:
  explicit OpenGraph(const SixTuple& sigma) : sigma_(sigma) {
    const long a = sigma.a, b = sigma.b, c = sigma.c, n = sigma.n;
    const long d = sigma.d, r = sigma.r;
    arcs_.reserve(static_cast<size_t>(n) * d);
    // Lower-cycle slot blocks (positions, before the -r label shift).
    const long posHL = 0;          // outgoing horizontal
    const long posV = a;           // incoming vertical
    const long posOB = a + c;      // incoming oblique
    const long posHLin = a + b + c;  // incoming horizontal
    auto lowLabel = [d, r](long pos) { return ((pos - r) % d + d) % d; };
    for (long i = 0; i < n; ++i) {
      const long ip = (i + 1) % n;
      for (long k = 0; k < a; ++k)  // upper horizontal, order-reversing
        arcs_.push_back({BandKind::HorizontalUpper,
                         {ArcEnd{Side::Upper, i, k},
                          ArcEnd{Side::Upper, ip, a + b + c + (a - 1 - k)}}});
      for (long k = 0; k < b; ++k)  // oblique, order-preserving
        arcs_.push_back({BandKind::Oblique,
                         {ArcEnd{Side::Upper, i, a + k},
                          ArcEnd{Side::Lower, ip, lowLabel(posOB + k)}}});
      for (long k = 0; k < c; ++k)  // vertical, order-preserving
        arcs_.push_back({BandKind::Vertical,
                         {ArcEnd{Side::Upper, i, a + b + k},
                          ArcEnd{Side::Lower, i, lowLabel(posV + k)}}});
      for (long k = 0; k < a; ++k)  // lower horizontal, order-reversing
        arcs_.push_back(
            {BandKind::HorizontalLower,
             {ArcEnd{Side::Lower, i, lowLabel(posHL + k)},
              ArcEnd{Side::Lower, ip, lowLabel(posHLin + (a - 1 - k))}}});
    }
    // Index arc ends per vertex slot and verify 3-regularity (each slot meets
    // exactly one band arc).
    endOfSlot_.assign(static_cast<size_t>(2 * n * d), -1);
    for (size_t ai = 0; ai < arcs_.size(); ++ai) {
      for (int pos = 0; pos < 2; ++pos) {
        const long idx = slotIndex(arcs_[ai].end[pos]);
        if (endOfSlot_[idx] != -1)
          throw std::logic_error("open graph: vertex slot collision at " +
                                 sigma.str());
        endOfSlot_[idx] = static_cast<long>(ai * 2 + pos);
      }
    }
    for (long idx : endOfSlot_)
      if (idx == -1)
        throw std::logic_error("open graph: unfilled vertex slot at " +
                               sigma.str());
  }

  const SixTuple& sigma() const { return sigma_; }
  const std::vector<BandArc>& arcs() const { return arcs_; }

  // The arc end occupying a given vertex slot, encoded as arcIndex*2 + pos.
  long arcEndAt(const ArcEnd& slot) const { return endOfSlot_[slotIndex(slot)]; }
  long arcEndAt(Side side, long cycle, long label) const {
    return arcEndAt(ArcEnd{side, cycle, label});
  }

  const ArcEnd& endOf(long arcEnd) const {
    return arcs_[arcEnd / 2].end[arcEnd % 2];
  }
  const ArcEnd& otherEndOf(long arcEnd) const {
    return arcs_[arcEnd / 2].end[1 - arcEnd % 2];
  }

  // Connected components of the open graph (cycles as nodes).
  long componentCount() const {
    const long n = sigma_.n;
    std::vector<long> parent(static_cast<size_t>(2 * n));
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<long>(i);
    auto find = [&parent](long x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    auto node = [n](const ArcEnd& e) {
      return (e.side == Side::Upper ? 0 : n) + e.cycle;
    };
    for (const BandArc& arc : arcs_) {
      long x = find(node(arc.end[0])), y = find(node(arc.end[1]));
      if (x != y) parent[x] = y;
    }
    long count = 0;
    for (size_t i = 0; i < parent.size(); ++i)
      if (find(static_cast<long>(i)) == static_cast<long>(i)) ++count;
    return count;
  }

 private:
  long slotIndex(const ArcEnd& e) const {
    return (e.side == Side::Upper ? 0 : sigma_.n * sigma_.d) +
           e.cycle * sigma_.d + e.label;
  }

  SixTuple sigma_;
  std::vector<BandArc> arcs_;
  std::vector<long> endOfSlot_;
};

inline OpenGraph buildOpenGraph(const SixTuple& sigma) {
  return OpenGraph(sigma);
}

}  // namespace dunwoody
