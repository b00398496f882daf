#pragma once

#include "mp2/cyc8.hpp"
#include "mp2/linalg.hpp"
#include "mp2/ratfunc.hpp"

namespace mp2 {

// The 2-dimensional module of the Hecke algebra attached to an unramified
// parameter x (x stands for 2^s).  Basis order: (phi_2 line, phi_-1 line).
// T_w = diag(2,-1) is forced; Z is the scalar z = x + 1/x; U1 is pinned by
// the defining relations up to the off-diagonal normalization u12 = 1.
template <class S>
struct PSModule {
  S x;
  S z;
  Mat<S> tw, u1, zmat;

  static PSModule make(const S& x) {
    if (x == S(0)) throw std::domain_error("PSModule: x must be nonzero");
    PSModule m;
    m.x = x;
    m.z = x + S(1) / x;
    S s2 = S(Cyc8::sqrt2());
    S a = s2 * m.z / S(3);
    m.tw = {{S(2), S(0)}, {S(0), S(-1)}};
    m.u1 = {{a, S(1)}, {S(1) - S(2) * m.z * m.z / S(9), -a}};
    m.zmat = {{m.z, S(0)}, {S(0), m.z}};
    return m;
  }

  // U1^2 = 1, (T_w+1)(T_w-2) = 0, and 2Z = U0 U1 + U1 U0 - sqrt(2) U1
  // with U0 = sqrt(2) T_w.
  bool relations_hold() const {
    auto id = mat_identity<S>(2);
    if (!mat_is_zero(mat_sub(mat_mul(u1, u1), id))) return false;
    auto p = mat_mul(mat_add(tw, id), mat_sub(tw, mat_scale(id, S(2))));
    if (!mat_is_zero(p)) return false;
    S s2 = S(Cyc8::sqrt2());
    auto u0 = mat_scale(tw, s2);
    auto lhs = mat_sub(mat_add(mat_mul(u0, u1), mat_mul(u1, u0)), mat_scale(u1, s2));
    return mat_is_zero(mat_sub(lhs, mat_scale(zmat, S(2))));
  }

  // an invariant line exists iff u21 = 1 - 2z^2/9 vanishes
  bool reducible() const { return u1[1][0] == S(0); }

  // value of U1 on the stable phi_2 line (only meaningful when reducible)
  S stable_line_u1() const { return u1[0][0]; }
};

using PSModuleC = PSModule<Cyc8>;
using PSModuleF = PSModule<RatFunc>;

inline PSModuleC principal_series_module(const Cyc8& x) { return PSModuleC::make(x); }
// the symbolic module at x = X
inline PSModuleF principal_series_module_symbolic() { return PSModuleF::make(RatFunc::X()); }

// z = x + 1/x, the complete invariant of the unramified subquotient.
template <class S>
S shimura_parameter(const PSModule<S>& m) {
  return m.z;
}

}  // namespace mp2
