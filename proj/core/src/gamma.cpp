#include "mp2/gamma.hpp"

namespace mp2 {

GammaChar::GammaChar(bool plus_i) : plus_i_(plus_i) {
  g_minus1_ = plus_i ? Cyc8::i() : -Cyc8::i();
  zeta_ = (Cyc8(1) + g_minus1_) * Cyc8::inv_sqrt2();
}

Cyc8 GammaChar::eval(const Rat& t) const {
  if (t == 0) throw std::domain_error("GammaChar::eval: t must be nonzero");
  static const Place two = Place::at(2);
  auto d = dyadic_decompose(t);
  // gamma(h(2^n v)) = (2^n, v)_2 * gamma(h(v)); gamma is trivial on h(2^n)
  Cyc8 val(1);
  if (d.valuation != 0 && hilbert(pow2(d.valuation), d.unit, two) == -1) val = Cyc8(-1);
  if (unit_mod4(d.unit) == 3) {
    // h(v) = h(-1) h(-v) (-1,-v)_2 with -v = 1 mod 4
    val *= g_minus1_;
    if (hilbert(Rat(-1), -d.unit, two) == -1) val = -val;
  }
  return val;
}

Cyc8 GammaChar::eval_K0(const MetaElt& g) const {
  if (!subgroup_member(g, Subgroup::K0))
    throw std::domain_error("GammaChar::eval_K0: element is not in K0");
  int a4 = unit_mod4(g.mat.a);
  if (a4 == 1) {
    // (matrix, +1) lies in K1, so gamma is the sign
    return Cyc8(g.sign);
  }
  // peel off the central h(-1)
  MetaElt rest = mp_mult(mp_inv(MetaElt::h(Rat(-1))), g);
  return g_minus1_ * eval_K0(rest);
}

}  // namespace mp2
