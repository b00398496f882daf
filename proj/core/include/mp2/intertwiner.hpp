#pragma once

#include "mp2/gamma.hpp"
#include "mp2/ratfunc.hpp"

namespace mp2 {

// phi_j normalization constants
inline int intertwiner_d(int j) {
  if (j == 2) return 1;
  if (j == -1) return -2;
  throw std::domain_error("intertwiner: j must be 2 or -1");
}

// The unit-shell character average in the intertwining integral,
//   sum over v in (Z/8)^x of (2,v)_2^m gamma(h(-v)),
// which vanishes for odd m and equals 2 sqrt(2) zeta for even m.
Cyc8 character_sum(long m, const GammaChar& gamma);

// Partial sum of M(s) phi_j(1) through the shell m = M, as a polynomial in
// X = 2^{-s}: zeta/sqrt(2) + d_j * sum_{m=2}^{M} X^m * character_sum(m)/8.
// Divided by d_j this is the truncated eigenvalue.
Poly m_series_partial(int j, long M, const GammaChar& gamma);

// Closed-form eigenvalues of M(s) on phi_2 and phi_-1:
//   c_2  =  (zeta/sqrt2)   (1 - X^2/2)/(1 - X^2)
//   c_-1 = -(zeta/(2sqrt2))(1 - 2X^2)/(1 - X^2)
RatFunc m_closed_form(int j, const GammaChar& gamma);

// X-values in the open unit disc killing c_j: empty for j = 2, and
// {+-1/sqrt2} for j = -1 (the Steinberg points 2^s0 = eps sqrt2).
std::vector<Cyc8> kernel_points(int j);

}  // namespace mp2
