#include "mp2/ratfunc.hpp"

namespace mp2 {

Poly Poly::monomial(int deg, const Cyc8& c) {
  Poly p;
  p.set(deg, c);
  return p;
}

void Poly::set(int k, const Cyc8& v) {
  if (k >= static_cast<int>(c_.size())) c_.resize(k + 1, Cyc8(0));
  c_[k] = v;
  trim();
}

const Cyc8& Poly::leading() const {
  if (is_zero()) throw std::domain_error("Poly: zero polynomial has no leading coefficient");
  return c_.back();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Cyc8> c(std::max(a.c_.size(), b.c_.size()), Cyc8(0));
  for (std::size_t k = 0; k < c.size(); ++k)
    c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Cyc8> c(a.c_.size() + b.c_.size() - 1, Cyc8(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(c));
}

Poly Poly::operator*(const Cyc8& s) const {
  Poly p = *this;
  for (auto& c : p.c_) c *= s;
  p.trim();
  return p;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
  Poly q, r = *this;
  Cyc8 lead_inv = d.leading().inverse();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int k = r.degree() - d.degree();
    Cyc8 f = r.leading() * lead_inv;
    q = q + Poly::monomial(k, f);
    r = r - d * Poly::monomial(k, f);
  }
  return {q, r};
}

Poly Poly::reversed() const {
  std::vector<Cyc8> c(c_.rbegin(), c_.rend());
  return Poly(std::move(c));
}

Cyc8 Poly::eval(const Cyc8& x) const {
  Cyc8 v(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return a * a.leading().inverse();  // monic gcd
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(Cyc8(1));
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  Cyc8 s = den_.leading().inverse();
  num_ = num_ * s;
  den_ = den_ * s;
}

RatFunc RatFunc::operator-() const {
  RatFunc f;
  f.num_ = -num_;
  f.den_ = den_;
  return f;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

bool operator==(const RatFunc& a, const RatFunc& b) {
  return a.num_ == b.num_ && a.den_ == b.den_;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::substitute_inverse() const {
  // f(1/X) = rev(num)(X) * X^(deg den - deg num) / rev(den)(X)
  int dn = num_.degree(), dd = den_.degree();
  Poly n = num_.reversed(), d = den_.reversed();
  if (dd >= dn)
    n = n * Poly::monomial(dd - dn, Cyc8(1));
  else
    d = d * Poly::monomial(dn - dd, Cyc8(1));
  return RatFunc(n, d);
}

Cyc8 RatFunc::eval(const Cyc8& x) const {
  Cyc8 dv = den_.eval(x);
  if (dv.is_zero()) throw std::domain_error("RatFunc: pole at evaluation point");
  return num_.eval(x) / dv;
}

std::vector<Cyc8> RatFunc::series(int order) const {
  if (order < 0) throw std::domain_error("RatFunc::series: negative order");
  Cyc8 d0 = den_.coeff(0);
  if (d0.is_zero()) throw std::domain_error("RatFunc::series: pole at X = 0");
  Cyc8 d0inv = d0.inverse();
  std::vector<Cyc8> c(order + 1, Cyc8(0));
  for (int k = 0; k <= order; ++k) {
    Cyc8 acc = num_.coeff(k);
    for (int j = 1; j <= k && j <= den_.degree(); ++j) acc -= den_.coeff(j) * c[k - j];
    c[k] = acc * d0inv;
  }
  return c;
}

std::vector<Cyc8> ratfunc_series(const RatFunc& f, int order) { return f.series(order); }

}  // namespace mp2
