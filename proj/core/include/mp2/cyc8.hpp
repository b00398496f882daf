#pragma once

#include <array>
#include <iosfwd>

#include "mp2/rational.hpp"

namespace mp2 {

// Element of Q(zeta) with zeta a primitive 8th root of unity:
// c0 + c1*zeta + c2*zeta^2 + c3*zeta^3, zeta^4 = -1.
//
// The whole algebraic side of the project lives over this field: it contains
// i = zeta^2, sqrt(2) = zeta - zeta^3, and both genuine central character
// values (1 +- i)/sqrt(2).
class Cyc8 {
 public:
  Cyc8() : c_{0, 0, 0, 0} {}
  Cyc8(const Rat& r) : c_{r, 0, 0, 0} {}
  Cyc8(int n) : c_{Rat(n), 0, 0, 0} {}
  Cyc8(const Rat& c0, const Rat& c1, const Rat& c2, const Rat& c3) : c_{c0, c1, c2, c3} {}

  static Cyc8 zeta() { return Cyc8(0, 1, 0, 0); }
  static Cyc8 i() { return Cyc8(0, 0, 1, 0); }
  static Cyc8 sqrt2() { return Cyc8(0, 1, 0, -1); }
  static Cyc8 inv_sqrt2() { return Cyc8(0, Rat(1, 2), 0, Rat(-1, 2)); }
  // zeta^k for any integer k
  static Cyc8 zeta_pow(long k);

  const Rat& operator[](int k) const { return c_[k]; }
  Rat& operator[](int k) { return c_[k]; }

  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
  bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
  // value as a rational; throws if not rational
  Rat rational_part() const;

  Cyc8 operator-() const { return Cyc8(-c_[0], -c_[1], -c_[2], -c_[3]); }
  Cyc8& operator+=(const Cyc8& o);
  Cyc8& operator-=(const Cyc8& o);
  Cyc8& operator*=(const Cyc8& o);
  Cyc8& operator/=(const Cyc8& o);

  friend Cyc8 operator+(Cyc8 a, const Cyc8& b) { return a += b; }
  friend Cyc8 operator-(Cyc8 a, const Cyc8& b) { return a -= b; }
  friend Cyc8 operator*(Cyc8 a, const Cyc8& b) { return a *= b; }
  friend Cyc8 operator/(Cyc8 a, const Cyc8& b) { return a /= b; }
  friend bool operator==(const Cyc8& a, const Cyc8& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Cyc8& a, const Cyc8& b) { return a.c_ != b.c_; }

  // Galois conjugate zeta -> zeta^k, k odd
  Cyc8 galois(int k) const;
  // complex conjugation zeta -> zeta^-1
  Cyc8 conj() const { return galois(7); }
  Cyc8 inverse() const;

  // evaluation at zeta = exp(i*pi/4), for the analytic oracle
  std::pair<double, double> to_complex() const;

  std::string str() const;

 private:
  std::array<Rat, 4> c_;
};

std::ostream& operator<<(std::ostream& os, const Cyc8& z);

}  // namespace mp2
