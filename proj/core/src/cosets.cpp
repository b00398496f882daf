#include "mp2/cosets.hpp"

#include <array>
#include <map>
#include <mutex>

namespace mp2 {

namespace {

// w(1/2) normalizes K0 and squares to the central -1, so left/right
// translation by it permutes the K0-double cosets.  Together with the
// K-Cartan invariant kappa (the largest denominator exponent in the matrix)
// this yields four integers constant on every double coset; on the class
// list they turn out to be a complete invariant, which is how classify
// avoids carrying out the row-column reduction element by element.
const Mat2Q& eta() {
  static const Mat2Q e = Mat2Q::w(Rat(1, 2));
  return e;
}

long kappa(const Mat2Q& m) {
  long k = 0;
  bool seen = false;
  for (const Rat* e : {&m.a, &m.b, &m.c, &m.d}) {
    if (*e == 0) continue;
    long v = v2(*e);
    if (!seen || -v > k) k = -v;
    seen = true;
  }
  return k < 0 ? 0 : k;
}

std::array<long, 4> invariant_tuple(const Mat2Q& g) {
  const Mat2Q& e = eta();
  Mat2Q eg = e * g;
  return {kappa(g), kappa(eg), kappa(g * e), kappa(eg * e)};
}

constexpr long kTableRange = 48;

Mat2Q label_matrix(const CosetLabel& l) {
  const Mat2Q y2 = Mat2Q::y(2);
  switch (l.kind) {
    case CosetKind::T:
      return Mat2Q::h(pow2(l.n));
    case CosetKind::W:
      return Mat2Q::w(pow2(-l.n));
    case CosetKind::Y:
      return y2;
    case CosetKind::HY:
      return Mat2Q::h(pow2(l.n)) * y2;
    case CosetKind::YH:
      return y2 * Mat2Q::h(pow2(-l.n));
    case CosetKind::YW:
      return y2 * Mat2Q::w(pow2(-l.n));
    case CosetKind::WY:
      return Mat2Q::w(pow2(-l.n)) * y2;
    case CosetKind::YWY:
      return y2 * Mat2Q::w(pow2(-l.n)) * y2;
  }
  throw std::logic_error("label_matrix: bad kind");
}

const std::map<std::array<long, 4>, CosetLabel>& classify_table() {
  static std::map<std::array<long, 4>, CosetLabel> table;
  static std::once_flag once;
  std::call_once(once, [] {
    auto insert = [&](const CosetLabel& l) {
      auto key = invariant_tuple(label_matrix(l));
      auto [it, fresh] = table.emplace(key, l);
      if (!fresh)
        throw std::logic_error("coset classifier: invariant collision between " +
                               it->second.kind_name() + " and " + l.kind_name());
    };
    for (long n = -kTableRange; n <= kTableRange; ++n) {
      insert(CosetLabel::T(n));
      insert(CosetLabel::W(n));
    }
    insert(CosetLabel{CosetKind::Y, 0});
    for (long n = 1; n <= kTableRange; ++n) {
      insert(CosetLabel{CosetKind::HY, n});
      insert(CosetLabel{CosetKind::YH, n});
      insert(CosetLabel{CosetKind::YW, n});
      insert(CosetLabel{CosetKind::WY, n});
      insert(CosetLabel{CosetKind::YWY, n});
    }
  });
  return table;
}

}  // namespace

MetaElt CosetLabel::representative() const { return MetaElt::lift(label_matrix(*this)); }

std::string CosetLabel::kind_name() const {
  switch (kind) {
    case CosetKind::T: return "T";
    case CosetKind::W: return "W";
    case CosetKind::Y: return "y(2)";
    case CosetKind::HY: return "h(2^n)y(2)";
    case CosetKind::YH: return "y(2)h(2^-n)";
    case CosetKind::YW: return "y(2)w(2^-n)";
    case CosetKind::WY: return "w(2^-n)y(2)";
    case CosetKind::YWY: return "y(2)w(2^-n)y(2)";
  }
  throw std::logic_error("CosetLabel: bad kind");
}

std::optional<CosetKind> coset_kind_from_name(const std::string& name) {
  for (CosetKind k : {CosetKind::T, CosetKind::W, CosetKind::Y, CosetKind::HY, CosetKind::YH,
                      CosetKind::YW, CosetKind::WY, CosetKind::YWY}) {
    if (CosetLabel{k, 1}.kind_name() == name) return k;
  }
  return std::nullopt;
}

CosetLabel classify_double_coset(const Mat2Q& g) {
  auto key = invariant_tuple(g);
  const auto& table = classify_table();
  auto it = table.find(key);
  if (it != table.end()) return it->second;
  if (key[0] > kTableRange - 4)
    throw std::domain_error("classify_double_coset: valuations exceed the table range");
  throw std::domain_error("classify_double_coset: element matches no listed double coset");
}

CosetLabel classify_double_coset(const MetaElt& g) { return classify_double_coset(g.mat); }

long ell(const CosetLabel& label) {
  switch (label.kind) {
    case CosetKind::T:
      return 2 * std::abs(label.n);
    case CosetKind::W:
      return 2 * std::abs(1 - label.n);
    default:
      throw std::domain_error("ell: only T and W classes carry a length");
  }
}

std::optional<std::string> ell_note(const CosetLabel& label) {
  if (label.kind == CosetKind::W && label.n == 1)
    return std::string(
        "w(2^-1) normalizes K0, so its double coset is a single coset and ell = 0; "
        "the value 1 also appears in print for this class and is taken to be a typo.");
  return std::nullopt;
}

std::vector<MetaElt> coset_decomposition(const CosetLabel& label) {
  if (!label.hecke_supported())
    throw std::domain_error("coset_decomposition: class " + label.kind_name() +
                            " carries no Hecke function");
  long e = ell(label);
  if (e > 24) throw std::domain_error("coset_decomposition: class too deep to enumerate");
  Int count = Int(1) << static_cast<unsigned>(e);
  MetaElt rep = label.representative();
  bool upper = (label.kind == CosetKind::T) ? (label.n >= 0) : (label.n <= 0);
  std::vector<MetaElt> reps;
  for (Int u = 0; u < count; ++u) {
    MetaElt pre = upper ? MetaElt::x(Rat(u)) : MetaElt::y(Rat(4 * u));
    reps.push_back(mp_mult(pre, rep));
  }
  return reps;
}

}  // namespace mp2
