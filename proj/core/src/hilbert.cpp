#include "mp2/hilbert.hpp"

#include <algorithm>

namespace mp2 {

Place Place::at(Int prime) {
  if (prime < 2) throw std::domain_error("Place::at: not a prime");
  if (prime > 2 && prime % 2 == 0) throw std::domain_error("Place::at: not a prime");
  return Place{false, std::move(prime)};
}

namespace {

// (u-1)/2 mod 2 and (u^2-1)/8 mod 2 for a 2-adic unit u
int eps2(const Rat& u) {
  int m = unit_mod4(u);
  return m == 3 ? 1 : 0;
}

int omega2(const Rat& u) {
  int m = unit_mod8(u);
  return (m == 1 || m == 7) ? 0 : 1;
}

}  // namespace

int hilbert(const Rat& a, const Rat& b, const Place& v) {
  if (a == 0 || b == 0) throw std::domain_error("hilbert: arguments must be nonzero");
  if (v.infinite) return (a < 0 && b < 0) ? -1 : 1;

  if (v.is_two()) {
    auto da = dyadic_decompose(a);
    auto db = dyadic_decompose(b);
    long e = eps2(da.unit) * eps2(db.unit) + da.valuation * omega2(db.unit) +
             db.valuation * omega2(da.unit);
    return (e % 2 == 0) ? 1 : -1;
  }

  const Int& p = v.p;
  long alpha = vp(a, p), beta = vp(b, p);
  Rat u = a / rat_pow(Rat(p), alpha);
  Rat w = b / rat_pow(Rat(p), beta);
  long e = alpha * beta * ((static_cast<long>(p % 4 == 3)) ? 1 : 0);
  int s = (e % 2 == 0) ? 1 : -1;
  if (beta % 2 != 0) s *= legendre_unit(u, p);
  if (alpha % 2 != 0) s *= legendre_unit(w, p);
  return s;
}

std::vector<Place> places_of_support(const Rat& a, const Rat& b) {
  std::vector<Place> places;
  places.push_back(Place::real());
  places.push_back(Place::at(2));
  std::vector<Int> primes;
  for (const Int& n : {num(a), den(a), num(b), den(b)})
    for (auto& p : odd_prime_factors(n))
      if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  for (auto& p : primes) places.push_back(Place::at(p));
  return places;
}

int hilbert_product_all_places(const Rat& a, const Rat& b) {
  int s = 1;
  for (const auto& v : places_of_support(a, b)) s *= hilbert(a, b, v);
  return s;
}

}  // namespace mp2
