#pragma once

#include <vector>

#include "mp2/cyc8.hpp"

namespace mp2 {

// Dense univariate polynomial over Q(zeta_8), no trailing zero coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(const Cyc8& c) { set(0, c); }
  Poly(std::vector<Cyc8> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly X() { return monomial(1, Cyc8(1)); }
  static Poly monomial(int deg, const Cyc8& c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Cyc8 coeff(int k) const { return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Cyc8(0); }
  void set(int k, const Cyc8& v);
  const Cyc8& leading() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator*(const Cyc8& s) const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return a.c_ != b.c_; }

  // synthetic division: *this = q*d + r with deg r < deg d
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly reversed() const;  // X^deg * p(1/X)
  Cyc8 eval(const Cyc8& x) const;

  const std::vector<Cyc8>& coeffs() const { return c_; }

 private:
  void trim();
  std::vector<Cyc8> c_;
};

Poly poly_gcd(Poly a, Poly b);

// Reduced fraction of polynomials in one indeterminate X over Q(zeta_8).
// Normal form: gcd(num, den) = 1 and den monic.
class RatFunc {
 public:
  RatFunc() : num_(Cyc8(0)), den_(Cyc8(1)) {}
  RatFunc(int n) : num_(Cyc8(n)), den_(Cyc8(1)) {}
  RatFunc(const Cyc8& c) : num_(c), den_(Cyc8(1)) {}
  RatFunc(Poly num, Poly den);

  static RatFunc X() { return RatFunc(Poly::X(), Poly(Cyc8(1))); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b);
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc inverse() const;
  // f(1/X), again in normal form
  RatFunc substitute_inverse() const;
  // value at X = x; throws on a pole
  Cyc8 eval(const Cyc8& x) const;

  // Taylor coefficients at X = 0 through the given order (inclusive).
  // Requires den(0) != 0.
  std::vector<Cyc8> series(int order) const;

 private:
  Poly num_, den_;
};

// Taylor expansion helper exposed for the series/closed-form comparisons.
std::vector<Cyc8> ratfunc_series(const RatFunc& f, int order);

}  // namespace mp2
