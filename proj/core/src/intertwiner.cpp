#include "mp2/intertwiner.hpp"

#include "mp2/hilbert.hpp"

namespace mp2 {

Cyc8 character_sum(long m, const GammaChar& gamma) {
  if (m < 0) throw std::domain_error("character_sum: m must be nonnegative");
  static const Place two = Place::at(2);
  Cyc8 acc(0);
  for (int v : {1, 3, 5, 7}) {
    Cyc8 term = gamma.eval(Rat(-v));
    if (m % 2 == 1 && hilbert(Rat(2), Rat(v), two) == -1) term = -term;
    acc += term;
  }
  return acc;
}

Poly m_series_partial(int j, long M, const GammaChar& gamma) {
  int d = intertwiner_d(j);
  Poly p(gamma.zeta() * Cyc8::inv_sqrt2());
  // the m = 1 shell vanishes: phi_j is zero on the y(2)-coset
  for (long m = 2; m <= M; ++m) {
    Cyc8 coef = character_sum(m, gamma) * Cyc8(Rat(1, 8)) * Cyc8(d);
    p = p + Poly::monomial(static_cast<int>(m), coef);
  }
  return p;
}

RatFunc m_closed_form(int j, const GammaChar& gamma) {
  intertwiner_d(j);
  Poly one_minus_x2{{Cyc8(1), Cyc8(0), Cyc8(-1)}};
  if (j == 2) {
    Poly num{{Cyc8(1), Cyc8(0), Cyc8(Rat(-1, 2))}};
    RatFunc f(num, one_minus_x2);
    return f * RatFunc(gamma.zeta() * Cyc8::inv_sqrt2());
  }
  Poly num{{Cyc8(1), Cyc8(0), Cyc8(-2)}};
  RatFunc f(num, one_minus_x2);
  return f * RatFunc(-(gamma.zeta() * Cyc8::inv_sqrt2() * Cyc8(Rat(1, 2))));
}

std::vector<Cyc8> kernel_points(int j) {
  intertwiner_d(j);
  if (j == 2) return {};
  return {Cyc8::inv_sqrt2(), -Cyc8::inv_sqrt2()};
}

}  // namespace mp2
