#pragma once

#include <iosfwd>

#include "mp2/rational.hpp"

namespace mp2 {

// Exact 2x2 rational matrix of determinant 1.
struct Mat2Q {
  Rat a, b, c, d;

  Mat2Q() : a(1), b(0), c(0), d(1) {}
  Mat2Q(Rat a_, Rat b_, Rat c_, Rat d_);

  static Mat2Q identity() { return Mat2Q(); }
  // elementary elements of SL2(Q)
  static Mat2Q x(const Rat& u) { return Mat2Q(1, u, 0, 1); }
  static Mat2Q y(const Rat& u) { return Mat2Q(1, 0, u, 1); }
  static Mat2Q w(const Rat& t);
  static Mat2Q h(const Rat& t);

  Mat2Q inverse() const { return Mat2Q(d, -b, -c, a); }
  friend Mat2Q operator*(const Mat2Q& m, const Mat2Q& n);
  friend bool operator==(const Mat2Q& m, const Mat2Q& n) {
    return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
  }
  friend bool operator!=(const Mat2Q& m, const Mat2Q& n) { return !(m == n); }
};

std::ostream& operator<<(std::ostream& os, const Mat2Q& m);

}  // namespace mp2
