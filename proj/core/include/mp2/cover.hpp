#pragma once

#include "mp2/hilbert.hpp"
#include "mp2/mat2.hpp"

namespace mp2 {

// Kubota's 2-cocycle sigma_v(g1, g2) on SL2(Q_v), valued in {+1,-1}.
int kubota_sigma(const Mat2Q& g1, const Mat2Q& g2, const Place& v);

// the correction factor s(g) entering the cocycle and the adelic splitting
int kubota_s(const Mat2Q& g, const Place& v);

// Element of the two-fold cover of SL2(Q_2): a matrix with a sign, multiplied
// through the cocycle at the place 2. The section lift of g is (g, +1).
struct MetaElt {
  Mat2Q mat;
  int sign = 1;

  MetaElt() = default;
  MetaElt(Mat2Q m, int s);

  static MetaElt lift(const Mat2Q& m) { return MetaElt(m, 1); }
  static MetaElt x(const Rat& u) { return lift(Mat2Q::x(u)); }
  static MetaElt y(const Rat& u) { return lift(Mat2Q::y(u)); }
  static MetaElt w(const Rat& t) { return lift(Mat2Q::w(t)); }
  static MetaElt h(const Rat& t) { return lift(Mat2Q::h(t)); }

  friend bool operator==(const MetaElt& a, const MetaElt& b) {
    return a.sign == b.sign && a.mat == b.mat;
  }
  friend bool operator!=(const MetaElt& a, const MetaElt& b) { return !(a == b); }
};

MetaElt mp_mult(const MetaElt& a, const MetaElt& b);
MetaElt mp_inv(const MetaElt& a);

enum class Subgroup { K, K0, K1, K4 };

// K  : full inverse image of SL2(Z_2)          (sign free)
// K0 : v2(c) >= 2 inside K                      (sign free)
// K1 : K0 with a = 1 mod 4, section image       (sign +1)
// K4 : matrix = 1 mod 4, section image          (sign +1)
bool subgroup_member(const MetaElt& g, Subgroup which);

// For g with matrix part = 1 mod 4: the unique eps with g = eps * k, k in K(4).
int mu2_part_mod_K4(const MetaElt& g);

// Whether the unique splitting of SL2(Q) into the adelic cover is respected:
// prod_v sigma_v(g1,g2) == s_A(g1 g2) / (s_A(g1) s_A(g2)).  Always true; the
// check recomputes both sides from scratch over the finite support.
bool rational_splitting_check(const Mat2Q& g1, const Mat2Q& g2);

}  // namespace mp2
