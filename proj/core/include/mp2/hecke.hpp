#pragma once

#include <map>
#include <vector>

#include "mp2/cosets.hpp"
#include "mp2/cyc8.hpp"
#include "mp2/gamma.hpp"

namespace mp2 {

// Basis label of the genuine Hecke algebra: T(n) is the class of h(2^n),
// U(n) the class of w(2^-n).
struct HeckeLabel {
  CosetKind kind = CosetKind::T;  // T or W only
  long n = 0;

  static HeckeLabel T(long n) { return {CosetKind::T, n}; }
  static HeckeLabel U(long n) { return {CosetKind::W, n}; }
  CosetLabel coset() const { return CosetLabel{kind, n}; }

  friend bool operator==(const HeckeLabel& a, const HeckeLabel& b) {
    return a.kind == b.kind && a.n == b.n;
  }
  friend bool operator<(const HeckeLabel& a, const HeckeLabel& b) {
    return a.kind != b.kind ? a.kind < b.kind : a.n < b.n;
  }
};

// Finitely supported Q(zeta_8)-combination of basis labels; zero terms pruned.
class HeckeElt {
 public:
  HeckeElt() = default;
  explicit HeckeElt(const HeckeLabel& l, const Cyc8& c = Cyc8(1)) { add(l, c); }

  static HeckeElt one() { return HeckeElt(HeckeLabel::T(0)); }
  static HeckeElt T(long n) { return HeckeElt(HeckeLabel::T(n)); }
  static HeckeElt U(long n) { return HeckeElt(HeckeLabel::U(n)); }
  // T_w = U_0 / sqrt(2)
  static HeckeElt Tw() { return HeckeElt(HeckeLabel::U(0), Cyc8::inv_sqrt2()); }

  void add(const HeckeLabel& l, const Cyc8& c);
  Cyc8 coeff(const HeckeLabel& l) const;
  const std::map<HeckeLabel, Cyc8>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  HeckeElt operator-() const;
  friend HeckeElt operator+(const HeckeElt& a, const HeckeElt& b);
  friend HeckeElt operator-(const HeckeElt& a, const HeckeElt& b);
  HeckeElt operator*(const Cyc8& s) const;
  friend bool operator==(const HeckeElt& a, const HeckeElt& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const HeckeElt& a, const HeckeElt& b) { return !(a == b); }

  std::string str() const;

 private:
  std::map<HeckeLabel, Cyc8> terms_;
};

// Reduced alternating word in the generators U0, U1 with a scalar in front.
// Letters: 0 for U0, 1 for U1; adjacent letters differ.
struct AltWord {
  Cyc8 scalar = Cyc8(1);
  std::vector<int> letters;
};

// label -> reduced word (unit scalar); every reduced word is a single label.
AltWord word_bridge(const HeckeLabel& l);
HeckeLabel label_of_word(const std::vector<int>& letters);

// Normal-form product from the presentation U0^2 = sqrt(2) U0 + 4, U1^2 = 1.
HeckeElt hmul(const HeckeElt& a, const HeckeElt& b);

HeckeElt hecke_power(const HeckeElt& a, long k);

// Point evaluation of the basis function X_L and of combinations, using the
// gamma-equivariant double coset functions.
Cyc8 hecke_eval(const HeckeLabel& l, const MetaElt& at, const GammaChar& gamma);
Cyc8 hecke_eval(const HeckeElt& a, const MetaElt& at, const GammaChar& gamma);

// Convolution f1 * f2 evaluated at a point, as a sum over the left cosets of
// the support of f1.  Requires every label of f1 to satisfy |n| <= 3.
Cyc8 convolution_oracle(const HeckeElt& f1, const HeckeElt& f2, const MetaElt& at,
                        const GammaChar& gamma);

// Z = (T1 + T_-1 - sqrt(2) U1)/2, central.
HeckeElt center_Z();
bool is_central(const HeckeElt& z, long range = 5);

// Two-sided inverse for T(n), U(n), and elements supported on {T(0), U(0)}
// with nonzero quadratic data; throws std::domain_error otherwise.
HeckeElt hecke_invert(const HeckeElt& a);

// F2 = (T_w + 1)/3 and F_-1 = (2 - T_w)/3.
std::pair<HeckeElt, HeckeElt> idempotent_split();

// The four algebra characters, T_w in {2,-1} x U1 in {1,-1}.
struct HeckeCharacter {
  Cyc8 tw;  // 2 or -1
  Cyc8 u1;  // +1 or -1
  bool steinberg() const { return tw == Cyc8(-1); }
  // for Steinberg characters, the epsilon with U1 = -eps
  int epsilon() const;
  Cyc8 eval(const HeckeElt& a) const;
  Cyc8 eval_word(const AltWord& w) const;
};

std::vector<HeckeCharacter> one_dim_characters();

}  // namespace mp2
