#include "mp2/cover.hpp"

#include <algorithm>

namespace mp2 {

namespace {

// x(g) = c if c != 0, else d; never zero for determinant-1 matrices
Rat bruhat_x(const Mat2Q& g) { return g.c != 0 ? g.c : g.d; }

long place_valuation(const Rat& q, const Place& v) {
  return v.is_two() ? v2(q) : vp(q, v.p);
}

}  // namespace

int kubota_s(const Mat2Q& g, const Place& v) {
  if (v.infinite) return 1;
  if (g.c == 0 || g.d == 0) return 1;
  if (place_valuation(g.c, v) % 2 == 0) return 1;
  return hilbert(g.c, g.d, v);
}

int kubota_sigma(const Mat2Q& g1, const Mat2Q& g2, const Place& v) {
  Mat2Q g12 = g1 * g2;
  Rat x12 = bruhat_x(g12), x1 = bruhat_x(g1), x2 = bruhat_x(g2);
  int s = hilbert(x12 * x1, x12 * x2, v);
  return s * kubota_s(g1, v) * kubota_s(g2, v) * kubota_s(g12, v);
}

MetaElt::MetaElt(Mat2Q m, int s) : mat(std::move(m)), sign(s) {
  if (s != 1 && s != -1) throw std::domain_error("MetaElt: sign must be +-1");
}

MetaElt mp_mult(const MetaElt& a, const MetaElt& b) {
  static const Place two = Place::at(2);
  return MetaElt(a.mat * b.mat, a.sign * b.sign * kubota_sigma(a.mat, b.mat, two));
}

MetaElt mp_inv(const MetaElt& a) {
  static const Place two = Place::at(2);
  Mat2Q minv = a.mat.inverse();
  return MetaElt(minv, a.sign * kubota_sigma(a.mat, minv, two));
}

bool subgroup_member(const MetaElt& g, Subgroup which) {
  const Mat2Q& m = g.mat;
  bool integral = is_2integral(m.a) && is_2integral(m.b) && is_2integral(m.c) && is_2integral(m.d);
  if (!integral) return false;
  switch (which) {
    case Subgroup::K:
      return true;
    case Subgroup::K0:
      return m.c == 0 || v2(m.c) >= 2;
    case Subgroup::K1:
      return (m.c == 0 || v2(m.c) >= 2) && congruent_mod_2k(m.a, 1, 2) && g.sign == 1;
    case Subgroup::K4:
      return congruent_mod_2k(m.a, 1, 2) && congruent_mod_2k(m.b, 0, 2) &&
             congruent_mod_2k(m.c, 0, 2) && congruent_mod_2k(m.d, 1, 2) && g.sign == 1;
  }
  return false;
}

int mu2_part_mod_K4(const MetaElt& g) {
  MetaElt unsigned_part(g.mat, 1);
  if (!subgroup_member(unsigned_part, Subgroup::K4))
    throw std::domain_error("mu2_part_mod_K4: matrix part is not congruent to 1 mod 4");
  return g.sign;
}

bool rational_splitting_check(const Mat2Q& g1, const Mat2Q& g2) {
  Mat2Q g12 = g1 * g2;

  // places where any cocycle ingredient can be nontrivial
  std::vector<Int> primes;
  auto collect = [&](const Rat& q) {
    if (q == 0) return;
    for (auto& p : odd_prime_factors(num(q) * den(q)))
      if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
  };
  for (const Mat2Q* m : {&g1, &g2, &g12}) {
    collect(m->a);
    collect(m->b);
    collect(m->c);
    collect(m->d);
  }
  std::vector<Place> places{Place::real(), Place::at(2)};
  for (auto& p : primes) places.push_back(Place::at(p));

  int lhs = 1, s1 = 1, s2 = 1, s12 = 1;
  for (const auto& v : places) {
    lhs *= kubota_sigma(g1, g2, v);
    s1 *= kubota_s(g1, v);
    s2 *= kubota_s(g2, v);
    s12 *= kubota_s(g12, v);
  }
  return lhs == s12 * s1 * s2;
}

}  // namespace mp2
