#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mp2/cover.hpp"

namespace mp2 {

// K0-double cosets of the cover.  T(n) is the class of h(2^n), W(n) the class
// of w(2^-n); the remaining classes are decorated by y(2) on one or both
// sides and carry no Hecke functions.
enum class CosetKind { T, W, Y, HY, YH, YW, WY, YWY };

struct CosetLabel {
  CosetKind kind = CosetKind::T;
  long n = 0;

  static CosetLabel T(long n) { return {CosetKind::T, n}; }
  static CosetLabel W(long n) { return {CosetKind::W, n}; }

  bool hecke_supported() const { return kind == CosetKind::T || kind == CosetKind::W; }
  // representative with sign +1
  MetaElt representative() const;
  // wire name: "T", "W", "y(2)", "h(2^n)y(2)", ...
  std::string kind_name() const;

  friend bool operator==(const CosetLabel& a, const CosetLabel& b) {
    return a.kind == b.kind && a.n == b.n;
  }
  friend bool operator!=(const CosetLabel& a, const CosetLabel& b) { return !(a == b); }
  friend bool operator<(const CosetLabel& a, const CosetLabel& b) {
    return a.kind != b.kind ? a.kind < b.kind : a.n < b.n;
  }
};

std::optional<CosetKind> coset_kind_from_name(const std::string& name);

// Total classifier: the K0-double coset of the matrix part of g.
// The sign component never matters for the class.
CosetLabel classify_double_coset(const MetaElt& g);
CosetLabel classify_double_coset(const Mat2Q& g);

// log2 of the number of left K0-cosets in the double coset:
// ell(T(n)) = 2|n|, ell(W(n)) = 2|1-n|.
long ell(const CosetLabel& label);
// Provenance note where the length value is disputed (W(1)).
std::optional<std::string> ell_note(const CosetLabel& label);

// Left coset representatives: K0 g K0 = union r_i K0 with 2^ell classes,
//   T(n), n>=0 : x(u) h(2^n),    u mod 2^(2n)
//   T(n), n<0  : y(4u) h(2^n),   u mod 2^(2|n|)
//   W(n), n<=0 : x(u) w(2^-n),   u mod 2^(2|n|+2)
//   W(n), n>=1 : y(4u) w(2^-n),  u mod 2^(2n-2)
// Y-decorated labels are rejected.
std::vector<MetaElt> coset_decomposition(const CosetLabel& label);

}  // namespace mp2
