#include "mp2/cyc8.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace mp2 {

Cyc8 Cyc8::zeta_pow(long k) {
  k %= 8;
  if (k < 0) k += 8;
  Cyc8 z;
  if (k < 4)
    z[static_cast<int>(k)] = 1;
  else
    z[static_cast<int>(k - 4)] = -1;
  return z;
}

Rat Cyc8::rational_part() const {
  if (!is_rational()) throw std::domain_error("Cyc8: value is not rational");
  return c_[0];
}

Cyc8& Cyc8::operator+=(const Cyc8& o) {
  for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
  return *this;
}

Cyc8& Cyc8::operator-=(const Cyc8& o) {
  for (int k = 0; k < 4; ++k) c_[k] -= o.c_[k];
  return *this;
}

Cyc8& Cyc8::operator*=(const Cyc8& o) {
  std::array<Rat, 4> r{0, 0, 0, 0};
  for (int a = 0; a < 4; ++a) {
    if (c_[a] == 0) continue;
    for (int b = 0; b < 4; ++b) {
      if (o.c_[b] == 0) continue;
      int e = a + b;
      Rat t = c_[a] * o.c_[b];
      if (e < 4)
        r[e] += t;
      else
        r[e - 4] -= t;  // zeta^4 = -1
    }
  }
  c_ = r;
  return *this;
}

Cyc8 Cyc8::galois(int k) const {
  Cyc8 out;
  for (int a = 0; a < 4; ++a) {
    if (c_[a] == 0) continue;
    int e = (a * k) % 8;
    if (e < 4)
      out.c_[e] += c_[a];
    else
      out.c_[e - 4] -= c_[a];
  }
  return out;
}

Cyc8 Cyc8::inverse() const {
  if (is_zero()) throw std::domain_error("Cyc8: division by zero");
  // product of the three nontrivial Galois conjugates; a * b is the norm in Q
  Cyc8 b = galois(3) * galois(5) * galois(7);
  Cyc8 n = (*this) * b;
  Rat nr = n.rational_part();
  Cyc8 out = b;
  for (int k = 0; k < 4; ++k) out.c_[k] /= nr;
  return out;
}

Cyc8& Cyc8::operator/=(const Cyc8& o) { return *this *= o.inverse(); }

std::pair<double, double> Cyc8::to_complex() const {
  const double s = std::sqrt(0.5);
  // zeta^k = cos(k*pi/4) + i sin(k*pi/4)
  const double re[4] = {1.0, s, 0.0, -s};
  const double im[4] = {0.0, s, 1.0, s};
  double x = 0, y = 0;
  for (int k = 0; k < 4; ++k) {
    double ck = static_cast<double>(c_[k]);
    x += ck * re[k];
    y += ck * im[k];
  }
  return {x, y};
}

std::string Cyc8::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyc8& z) {
  static const char* pw[4] = {"", "*z", "*z^2", "*z^3"};
  bool first = true;
  for (int k = 0; k < 4; ++k) {
    if (z[k] == 0) continue;
    if (!first && z[k] > 0) os << "+";
    os << rat_to_string(z[k]) << pw[k];
    first = false;
  }
  if (first) os << "0";
  return os;
}

}  // namespace mp2
