#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mp2 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

// 2-adic valuation of a nonzero integer.
long v2(const Int& n);
// 2-adic valuation of a nonzero rational.
long v2(const Rat& q);
// p-adic valuation at an odd prime.
long vp(const Int& n, const Int& p);
long vp(const Rat& q, const Int& p);

// q = 2^valuation * unit with unit an odd/odd rational.
struct DyadicDecomposition {
  long valuation = 0;
  Rat unit = 1;
};

DyadicDecomposition dyadic_decompose(const Rat& q);

// Residue of a 2-adic unit rational (odd/odd) in (Z/8)^x resp. (Z/4)^x.
int unit_mod8(const Rat& u);
int unit_mod4(const Rat& u);

// true iff q lies in Z_2 (odd denominator).
bool is_2integral(const Rat& q);
// true iff q lies in Z_2 and q ≡ r (mod 2^k), i.e. v2(q - r) >= k.
bool congruent_mod_2k(const Rat& q, const Int& r, int k);

Rat pow2(long e);
Rat rat_pow(const Rat& base, long e);

// Jacobi symbol (a|n) for odd n > 0.
int jacobi(Int a, Int n);
// Legendre symbol (u|p) of a p-adic unit rational at an odd prime p.
int legendre_unit(const Rat& u, const Int& p);

// Odd prime factors of a nonzero integer, by trial division.
std::vector<Int> odd_prime_factors(Int n);

// Canonical "p/q" string (reduced, sign on the numerator, bare "p" when q = 1).
std::string rat_to_string(const Rat& q);
// Parses "p", "-p", "p/q"; throws std::invalid_argument on malformed input.
Rat rat_from_string(const std::string& s);

}  // namespace mp2
