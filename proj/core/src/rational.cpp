#include "mp2/rational.hpp"

#include <cctype>

namespace mp2 {

long v2(const Int& n) {
  if (n == 0) throw std::domain_error("v2: zero has no finite valuation");
  return static_cast<long>(boost::multiprecision::lsb(abs(n)));
}

long v2(const Rat& q) { return v2(num(q)) - v2(den(q)); }

long vp(const Int& n, const Int& p) {
  if (n == 0) throw std::domain_error("vp: zero has no finite valuation");
  Int m = abs(n);
  long v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

long vp(const Rat& q, const Int& p) { return vp(num(q), p) - vp(den(q), p); }

DyadicDecomposition dyadic_decompose(const Rat& q) {
  if (q == 0) throw std::domain_error("dyadic_decompose: zero input");
  long vn = v2(num(q));
  long vd = v2(den(q));
  DyadicDecomposition d;
  d.valuation = vn - vd;
  d.unit = Rat(num(q) >> vn, den(q) >> vd);
  return d;
}

int unit_mod8(const Rat& u) {
  Int n = num(u) % 8, d = den(u) % 8;
  if (n < 0) n += 8;
  if (d < 0) d += 8;
  if (n % 2 == 0 || d % 2 == 0)
    throw std::domain_error("unit_mod8: argument is not a 2-adic unit");
  // every odd residue is its own inverse mod 8
  return static_cast<int>((n * d) % 8);
}

int unit_mod4(const Rat& u) { return unit_mod8(u) % 4; }

bool is_2integral(const Rat& q) { return den(q) % 2 != 0; }

bool congruent_mod_2k(const Rat& q, const Int& r, int k) {
  if (!is_2integral(q)) return false;
  Rat diff = q - Rat(r);
  if (diff == 0) return true;
  return v2(diff) >= k;
}

Rat pow2(long e) {
  Int p = Int(1) << static_cast<unsigned>(e >= 0 ? e : -e);
  return e >= 0 ? Rat(p) : Rat(1, p);
}

Rat rat_pow(const Rat& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("rat_pow: negative power of zero");
    return rat_pow(Rat(den(base), num(base)), -e);
  }
  Rat r = 1, b = base;
  long n = e;
  while (n > 0) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

int jacobi(Int a, Int n) {
  if (n <= 0 || n % 2 == 0) throw std::domain_error("jacobi: modulus must be odd positive");
  a %= n;
  if (a < 0) a += n;
  int t = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      Int r = n % 8;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

int legendre_unit(const Rat& u, const Int& p) {
  return jacobi(num(u), p) * jacobi(den(u), p);
}

std::vector<Int> odd_prime_factors(Int n) {
  std::vector<Int> out;
  n = abs(n);
  if (n == 0) throw std::domain_error("odd_prime_factors: zero input");
  while (n % 2 == 0) n /= 2;
  for (Int p = 3; p * p <= n; p += 2) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::string rat_to_string(const Rat& q) {
  std::string s = num(q).str();
  if (den(q) != 1) s += "/" + den(q).str();
  return s;
}

Rat rat_from_string(const std::string& s) {
  auto bad = [&]() { return std::invalid_argument("malformed rational: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto check_int = [&](const std::string& t) {
    if (t.empty()) throw bad();
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw bad();
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) throw bad();
  };
  if (slash == std::string::npos) {
    check_int(s);
    return Rat(Int(s));
  }
  std::string sn = s.substr(0, slash), sd = s.substr(slash + 1);
  check_int(sn);
  check_int(sd);
  Int d(sd);
  if (d == 0) throw bad();
  return Rat(Int(sn), d);
}

}  // namespace mp2
