#include "mp2/hecke.hpp"

#include <sstream>

namespace mp2 {

void HeckeElt::add(const HeckeLabel& l, const Cyc8& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(l);
  if (it == terms_.end()) {
    terms_.emplace(l, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Cyc8 HeckeElt::coeff(const HeckeLabel& l) const {
  auto it = terms_.find(l);
  return it == terms_.end() ? Cyc8(0) : it->second;
}

HeckeElt HeckeElt::operator-() const {
  HeckeElt out;
  for (auto& [l, c] : terms_) out.terms_.emplace(l, -c);
  return out;
}

HeckeElt operator+(const HeckeElt& a, const HeckeElt& b) {
  HeckeElt out = a;
  for (auto& [l, c] : b.terms_) out.add(l, c);
  return out;
}

HeckeElt operator-(const HeckeElt& a, const HeckeElt& b) { return a + (-b); }

HeckeElt HeckeElt::operator*(const Cyc8& s) const {
  HeckeElt out;
  if (s.is_zero()) return out;
  for (auto& [l, c] : terms_) out.terms_.emplace(l, c * s);
  return out;
}

std::string HeckeElt::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [l, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c << ")*" << (l.kind == CosetKind::T ? "T" : "U") << "(" << l.n << ")";
    first = false;
  }
  return os.str();
}

AltWord word_bridge(const HeckeLabel& l) {
  AltWord w;
  long n = l.n;
  if (l.kind == CosetKind::T) {
    if (n >= 0) {
      for (long k = 0; k < n; ++k) {
        w.letters.push_back(0);
        w.letters.push_back(1);
      }
    } else {
      // T(-m) = U1 (U0 U1)^(m-1) U0
      w.letters.push_back(1);
      for (long k = 0; k < -n - 1; ++k) {
        w.letters.push_back(0);
        w.letters.push_back(1);
      }
      w.letters.push_back(0);
    }
  } else {
    // U(n) = U1 T(n-1)
    if (n - 1 >= 0) {
      w.letters.push_back(1);
      for (long k = 0; k < n - 1; ++k) {
        w.letters.push_back(0);
        w.letters.push_back(1);
      }
    } else {
      // U1 * (U1 (U0U1)^(m-1) U0) = (U0 U1)^(m-1) U0 with m = 1-n
      for (long k = 0; k < -n; ++k) {
        w.letters.push_back(0);
        w.letters.push_back(1);
      }
      w.letters.pop_back();
    }
  }
  return w;
}

HeckeLabel label_of_word(const std::vector<int>& letters) {
  for (std::size_t i = 0; i + 1 < letters.size(); ++i)
    if (letters[i] == letters[i + 1])
      throw std::domain_error("label_of_word: word is not reduced");
  long len = static_cast<long>(letters.size());
  if (len == 0) return HeckeLabel::T(0);
  if (len % 2 == 0) return letters[0] == 0 ? HeckeLabel::T(len / 2) : HeckeLabel::T(-len / 2);
  return letters[0] == 1 ? HeckeLabel::U((len + 1) / 2) : HeckeLabel::U(-(len - 1) / 2);
}

namespace {

// multiply out a concatenation, resolving the junction via the quadratic
// relations; words on both sides are reduced
void concat_reduce(std::vector<int> left, const Cyc8& scalar, std::vector<int> right,
                   HeckeElt& acc) {
  while (!left.empty() && !right.empty() && left.back() == right.front()) {
    int u = left.back();
    left.pop_back();
    right.erase(right.begin());
    if (u == 1) {
      // U1^2 = 1: nothing else to do
    } else {
      // U0^2 = sqrt(2) U0 + 4: branch
      std::vector<int> mid = left;
      mid.push_back(0);
      concat_reduce(mid, scalar * Cyc8::sqrt2(), right, acc);
      Cyc8 four = scalar * Cyc8(4);
      // fall through with the 4 * left*right branch
      // (loop continues reducing the new junction)
      // handled by recursing:
      concat_reduce(left, four, right, acc);
      return;
    }
  }
  std::vector<int> word = std::move(left);
  word.insert(word.end(), right.begin(), right.end());
  acc.add(label_of_word(word), scalar);
}

}  // namespace

HeckeElt hmul(const HeckeElt& a, const HeckeElt& b) {
  HeckeElt out;
  for (auto& [la, ca] : a.terms()) {
    AltWord wa = word_bridge(la);
    for (auto& [lb, cb] : b.terms()) {
      AltWord wb = word_bridge(lb);
      concat_reduce(wa.letters, ca * cb, wb.letters, out);
    }
  }
  return out;
}

HeckeElt hecke_power(const HeckeElt& a, long k) {
  if (k < 0) return hecke_power(hecke_invert(a), -k);
  HeckeElt r = HeckeElt::one();
  for (long i = 0; i < k; ++i) r = hmul(r, a);
  return r;
}

Cyc8 hecke_eval(const HeckeLabel& l, const MetaElt& at, const GammaChar& gamma) {
  if (classify_double_coset(at) != l.coset()) return Cyc8(0);
  Cyc8 gbar_rep = (l.kind == CosetKind::W) ? gamma.zeta_bar() : Cyc8(1);
  for (const MetaElt& r : coset_decomposition(l.coset())) {
    MetaElt k0p = mp_mult(mp_inv(r), at);
    if (subgroup_member(k0p, Subgroup::K0)) {
      // at = (prefix * rep) * k0'; the prefix lies in K1 where gamma is 1
      return gbar_rep * gamma.eval_K0_bar(k0p);
    }
  }
  throw std::logic_error("hecke_eval: point not found in its own coset decomposition");
}

Cyc8 hecke_eval(const HeckeElt& a, const MetaElt& at, const GammaChar& gamma) {
  Cyc8 acc(0);
  for (auto& [l, c] : a.terms()) acc += c * hecke_eval(l, at, gamma);
  return acc;
}

Cyc8 convolution_oracle(const HeckeElt& f1, const HeckeElt& f2, const MetaElt& at,
                        const GammaChar& gamma) {
  Cyc8 acc(0);
  for (auto& [l, c] : f1.terms()) {
    if (std::abs(l.n) > 3)
      throw std::domain_error("convolution_oracle: left factor support must have |n| <= 3");
    for (const MetaElt& r : coset_decomposition(l.coset())) {
      Cyc8 v1 = hecke_eval(l, r, gamma);
      Cyc8 v2 = hecke_eval(f2, mp_mult(mp_inv(r), at), gamma);
      acc += c * v1 * v2;
    }
  }
  return acc;
}

HeckeElt center_Z() {
  HeckeElt z;
  z.add(HeckeLabel::T(1), Cyc8(Rat(1, 2)));
  z.add(HeckeLabel::T(-1), Cyc8(Rat(1, 2)));
  z.add(HeckeLabel::U(1), -(Cyc8::sqrt2() * Cyc8(Rat(1, 2))));
  return z;
}

bool is_central(const HeckeElt& z, long range) {
  for (long n = -range; n <= range; ++n) {
    for (HeckeElt b : {HeckeElt::T(n), HeckeElt::U(n)}) {
      if (hmul(z, b) != hmul(b, z)) return false;
    }
  }
  return true;
}

HeckeElt hecke_invert(const HeckeElt& a) {
  if (a.is_zero()) throw std::domain_error("hecke_invert: zero is not invertible");

  // single basis label
  if (a.terms().size() == 1) {
    auto [l, c] = *a.terms().begin();
    Cyc8 cinv = c.inverse();
    if (l.kind == CosetKind::W) {
      // U(n) = U1 T(n-1) so U(n)^-1 = T(n-1)^-1 U1
      HeckeElt t_inv = hecke_invert(HeckeElt::T(l.n - 1));
      return hmul(t_inv, HeckeElt::U(1)) * cinv;
    }
    if (l.n == 0) return HeckeElt::one() * cinv;
    // T(1)^-1 = U1 U0^-1 = U1 (U0 - sqrt2)/4, then powers
    HeckeElt u0inv;
    u0inv.add(HeckeLabel::U(0), Cyc8(Rat(1, 4)));
    u0inv.add(HeckeLabel::T(0), -(Cyc8::sqrt2() * Cyc8(Rat(1, 4))));
    HeckeElt t1inv = hmul(HeckeElt::U(1), u0inv);
    HeckeElt t1 = HeckeElt::T(1);
    HeckeElt r = HeckeElt::one();
    for (long i = 0; i < std::abs(l.n); ++i) r = hmul(r, l.n > 0 ? t1inv : t1);
    return r * cinv;
  }

  // a + b T_w with the quadratic relation T_w^2 = T_w + 2:
  // supported on {T(0), U(0)}
  bool small_support = true;
  for (auto& [l, c] : a.terms())
    if (!(l == HeckeLabel::T(0) || l == HeckeLabel::U(0))) small_support = false;
  if (small_support) {
    Cyc8 aa = a.coeff(HeckeLabel::T(0));
    Cyc8 bb = a.coeff(HeckeLabel::U(0)) * Cyc8::inv_sqrt2();  // T_w coefficient
    // invertible iff the two character values a+2b and a-b are nonzero
    Cyc8 chi2 = aa + Cyc8(2) * bb, chim1 = aa - bb;
    if (chi2.is_zero() || chim1.is_zero())
      throw std::domain_error("hecke_invert: element kills a character (not invertible)");
    // solve (a + b Tw)(c + d Tw) = 1
    Cyc8 det = aa * aa + aa * bb - Cyc8(2) * bb * bb;
    Cyc8 cc = (aa + bb) / det;
    Cyc8 dd = -bb / det;
    HeckeElt out;
    out.add(HeckeLabel::T(0), cc);
    out.add(HeckeLabel::U(0), dd * Cyc8::inv_sqrt2());
    return out;
  }
  throw std::domain_error("hecke_invert: unsupported element shape");
}

std::pair<HeckeElt, HeckeElt> idempotent_split() {
  Cyc8 third(Rat(1, 3));
  HeckeElt f2 = (HeckeElt::Tw() + HeckeElt::one()) * third;
  HeckeElt fm1 = (HeckeElt::one() * Cyc8(2) - HeckeElt::Tw()) * third;
  return {f2, fm1};
}

int HeckeCharacter::epsilon() const {
  if (!steinberg()) throw std::domain_error("epsilon: not a Steinberg character");
  return u1 == Cyc8(-1) ? 1 : -1;
}

Cyc8 HeckeCharacter::eval_word(const AltWord& w) const {
  Cyc8 v = w.scalar;
  Cyc8 u0v = tw * Cyc8::sqrt2();
  for (int letter : w.letters) v *= (letter == 0 ? u0v : u1);
  return v;
}

Cyc8 HeckeCharacter::eval(const HeckeElt& a) const {
  Cyc8 acc(0);
  for (auto& [l, c] : a.terms()) {
    AltWord w = word_bridge(l);
    w.scalar *= c;
    acc += eval_word(w);
  }
  return acc;
}

std::vector<HeckeCharacter> one_dim_characters() {
  std::vector<HeckeCharacter> chars;
  for (int tw : {2, -1})
    for (int u1 : {1, -1}) chars.push_back(HeckeCharacter{Cyc8(tw), Cyc8(u1)});
  return chars;
}

}  // namespace mp2
