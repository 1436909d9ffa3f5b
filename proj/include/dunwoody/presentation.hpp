#pragma once

// The word w read along the canonically oriented D_1 and the cyclic
// presentation it generates: n generators x_1..x_n with relators the index
// shifts of w (relator k adds k-1 to every generator index, mod n).  The
// letter contributed by an arc traversal is x_i when the arc leaves the upper
// cycle C'_i and x_{j+s}^{-1} when it leaves the lower cycle C''_j (so that
// the index names the glued curve the arc departs from).
//
// Words are stored unreduced, exactly as read from the diagram; free
// reduction would destroy the arc-by-arc correspondence with D_1.

#include <string>
#include <vector>

#include "dunwoody/admissibility.hpp"

namespace dunwoody {

struct Letter {
  long generator;  // 1..n
  int exponent;    // +1 or -1
  bool operator==(const Letter& o) const {
    return generator == o.generator && exponent == o.exponent;
  }
};

struct CyclicWord {
  long n = 1;  // generator count
  std::vector<Letter> letters;

  bool operator==(const CyclicWord& o) const {
    return n == o.n && letters == o.letters;
  }

  long length() const { return static_cast<long>(letters.size()); }

  // Word with k added to every generator index (mod n, 1-based).
  CyclicWord shifted(long k) const {
    CyclicWord out{n, letters};
    for (Letter& l : out.letters)
      l.generator = (l.generator - 1 + k) % n + 1;
    return out;
  }

  // Plain-text form: x3 for a generator, X3 for its inverse.
  std::string str() const {
    std::string out;
    for (const Letter& l : letters)
      out += (l.exponent > 0 ? "x" : "X") + std::to_string(l.generator);
    return out;
  }
};

inline long exponentSum(const CyclicWord& w) {
  long sum = 0;
  for (const Letter& l : w.letters) sum += l.exponent;
  return sum;
}

namespace detail {

// Word read along the cycle through the vertex of C_{curve+1} labelled
// a+b+1, in the canonical orientation.
inline CyclicWord readWordAlong(const GluedDiagram& dg, long curve) {
  const SixTuple& sg = dg.sigma();
  CyclicWord w;
  w.n = sg.n;
  for (const Traversal& t : traceFrom(dg, curve, (sg.a + sg.b) % sg.d)) {
    if (t.dep.side == Side::Upper)
      w.letters.push_back({t.dep.cycle + 1, +1});
    else
      w.letters.push_back({(t.dep.cycle + sg.s) % sg.n + 1, -1});
  }
  return w;
}

}  // namespace detail

inline CyclicWord extractWord(const GluedDiagram& dg,
                              const AdmissibilityReport& rep) {
  if (!rep.admissible)
    throw std::invalid_argument("word extraction requires an admissible tuple");
  return detail::readWordAlong(dg, 0);
}

struct CyclicPresentation {
  long n = 1;
  CyclicWord baseWord;
  std::vector<CyclicWord> relators;  // relator k = baseWord shifted by k-1

  // Plain-text form: one relator per line.
  std::string str() const {
    std::string out;
    for (const CyclicWord& rel : relators) out += rel.str() + "\n";
    return out;
  }
};

inline CyclicPresentation buildPresentation(const SixTuple& sigma) {
  const GluedDiagram dg = buildDiagram(sigma);
  const AdmissibilityReport rep = checkConditions(dg, traceDCycles(dg));
  const CyclicWord w = extractWord(dg, rep);
  CyclicPresentation pres;
  pres.n = sigma.n;
  pres.baseWord = w;
  for (long k = 0; k < sigma.n; ++k) {
    CyclicWord rel = w.shifted(k);
    // The shift is geometric: the relator must equal the direct reading of
    // the k-th traced cycle.
    if (!(rel == detail::readWordAlong(dg, k)))
      throw std::logic_error("relator does not match its traced cycle at " +
                             sigma.str());
    pres.relators.push_back(std::move(rel));
  }
  return pres;
}

}  // namespace dunwoody
