#pragma once

#include "mp2/cover.hpp"
#include "mp2/cyc8.hpp"

namespace mp2 {

// A genuine central character of the cover at p = 2, determined by its value
// i or -i on h(-1).  zeta = (1 + gamma(-1))/sqrt(2) is a primitive 8th root
// of unity; the extension to the torus normalizer sends w(1) to zeta.
class GammaChar {
 public:
  // plus_i = true selects gamma(-1) = i
  explicit GammaChar(bool plus_i = true);

  const Cyc8& minus_one() const { return g_minus1_; }
  const Cyc8& zeta() const { return zeta_; }
  Cyc8 zeta_bar() const { return zeta_.conj(); }
  bool is_plus_i() const { return plus_i_; }

  // gamma(h(t)) for nonzero rational t
  Cyc8 eval(const Rat& t) const;

  // gamma on an element of K0 (sign included); throws if g is not in K0
  Cyc8 eval_K0(const MetaElt& g) const;
  Cyc8 eval_K0_bar(const MetaElt& g) const { return eval_K0(g).conj(); }

 private:
  bool plus_i_;
  Cyc8 g_minus1_;
  Cyc8 zeta_;
};

}  // namespace mp2
