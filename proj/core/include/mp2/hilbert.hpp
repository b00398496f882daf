#pragma once

#include <vector>

#include "mp2/rational.hpp"

namespace mp2 {

// A place of Q: the real place or a finite prime.
struct Place {
  bool infinite = false;
  Int p = 0;  // 2 or an odd prime when finite

  static Place real() { return Place{true, 0}; }
  static Place at(Int prime);

  bool is_two() const { return !infinite && p == 2; }
  friend bool operator==(const Place& a, const Place& b) {
    return a.infinite == b.infinite && a.p == b.p;
  }
};

// Hilbert symbol (a,b)_v for nonzero rationals, valued in {+1,-1}.
int hilbert(const Rat& a, const Rat& b, const Place& v);

// All places where (a,b)_v could be nontrivial: the real place, 2, and the
// odd primes dividing either argument.
std::vector<Place> places_of_support(const Rat& a, const Rat& b);

// Product over all places; equals +1 by reciprocity (exposed for tests/CLI).
int hilbert_product_all_places(const Rat& a, const Rat& b);

}  // namespace mp2
