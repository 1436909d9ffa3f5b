#pragma once

// Parameter vector sigma = (a, b, c, n, r, s) for the Dunwoody construction.
//
// a, b, c are non-negative arc multiplicities with a + b + c > 0, n > 0 is the
// number of upper (and lower) cycles, r is taken mod d = 2a + b + c, and s is
// taken mod n.  Original r and s are retained for reporting.

#include <numeric>
#include <stdexcept>
#include <string>

namespace dunwoody {

struct SixTuple {
  long a = 0;
  long b = 0;
  long c = 0;
  long n = 1;
  long r = 0;  // normalized to [0, d)
  long s = 0;  // normalized to [0, n)
  long d = 0;  // 2a + b + c
  long rawR = 0;
  long rawS = 0;

  SixTuple() = default;

  SixTuple(long a_, long b_, long c_, long n_, long r_, long s_)
      : a(a_), b(b_), c(c_), n(n_), rawR(r_), rawS(s_) {
    if (n <= 0) throw std::invalid_argument("six-tuple: n must be positive");
    if (a < 0) throw std::invalid_argument("six-tuple: a must be non-negative");
    if (b < 0) throw std::invalid_argument("six-tuple: b must be non-negative");
    if (c < 0) throw std::invalid_argument("six-tuple: c must be non-negative");
    if (a + b + c == 0)
      throw std::invalid_argument("six-tuple: a + b + c must be positive");
    d = 2 * a + b + c;
    r = ((r_ % d) + d) % d;
    s = ((s_ % n) + n) % n;
  }

  bool operator==(const SixTuple& o) const {
    return a == o.a && b == o.b && c == o.c && n == o.n && r == o.r && s == o.s;
  }

  std::string str() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
           std::to_string(c) + "," + std::to_string(n) + "," +
           std::to_string(r) + "," + std::to_string(s) + ")";
  }
};

}  // namespace dunwoody
