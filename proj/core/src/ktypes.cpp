#include "mp2/ktypes.hpp"

#include <map>

namespace mp2 {

namespace {

int mod4_of(const Rat& q) {
  Int n = num(q) % 4, d = den(q) % 4;
  if (n < 0) n += 4;
  if (d < 0) d += 4;
  if (d % 2 == 0) throw std::domain_error("mod4_of: not a 2-adic integer");
  return static_cast<int>((n * d) % 4);  // odd d is its own inverse mod 4
}

std::array<int, 4> residue_key(const Mat2Q& m) {
  return {mod4_of(m.a), mod4_of(m.b), mod4_of(m.c), mod4_of(m.d)};
}

}  // namespace

FiniteQuotient::FiniteQuotient() {
  // canonical lifts: first determinant-1 integer matrix per residue class,
  // scanning by growing sup-norm so the identity class lifts to the identity
  std::map<std::array<int, 4>, int> index_of;
  for (int bound = 0; bound <= 8 && lifts_.size() < 48; ++bound) {
    for (int a = -bound; a <= bound; ++a)
      for (int b = -bound; b <= bound; ++b)
        for (int c = -bound; c <= bound; ++c)
          for (int d = -bound; d <= bound; ++d) {
            if (std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)}) != bound) continue;
            if (a * d - b * c != 1) continue;
            Mat2Q m(a, b, c, d);
            auto key = residue_key(m);
            if (index_of.count(key)) continue;
            index_of[key] = static_cast<int>(lifts_.size());
            lifts_.push_back(m);
          }
  }
  if (lifts_.size() != 48)
    throw std::logic_error("FiniteQuotient: expected 48 classes of SL2(Z/4)");

  int order = 96;
  mult_.assign(order, std::vector<int>(order, 0));
  inv_.assign(order, 0);
  id_ = 2 * class_index(Mat2Q::identity());
  for (int e1 = 0; e1 < order; ++e1)
    for (int e2 = 0; e2 < order; ++e2)
      mult_[e1][e2] = id_of(mp_mult(element(e1), element(e2)));
  for (int e = 0; e < order; ++e) inv_[e] = id_of(mp_inv(element(e)));

  k0_mask_.assign(order, false);
  for (int e = 0; e < order; ++e) {
    if (mod4_of(lifts_[class_of(e)].c) == 0) {
      k0_mask_[e] = true;
      k0_ids_.push_back(e);
    }
  }
  if (k0_ids_.size() != 16) throw std::logic_error("FiniteQuotient: expected |K0/K(4)| = 16");
}

int FiniteQuotient::class_index(const Mat2Q& m) const {
  auto key = residue_key(m);
  for (std::size_t i = 0; i < lifts_.size(); ++i)
    if (residue_key(lifts_[i]) == key) return static_cast<int>(i);
  throw std::domain_error("FiniteQuotient: matrix is not in SL2(Z/4)");
}

int FiniteQuotient::id_of(const MetaElt& g) const {
  int cls = class_index(g.mat);
  // sign relative to the canonical lift, read off mod K(4)
  MetaElt rel = mp_mult(mp_inv(MetaElt::lift(lifts_[cls])), g);
  int s = mu2_part_mod_K4(rel);
  return 2 * cls + (s == -1 ? 1 : 0);
}

const FiniteQuotient& finite_quotient() {
  static const FiniteQuotient q;
  return q;
}

KTypeDecomposition finite_quotient_ktypes(const GammaChar& gamma) {
  const FiniteQuotient& Q = finite_quotient();
  const int order = Q.order();

  // gamma on the K0-image of the quotient
  std::vector<Cyc8> gamma_k0(order, Cyc8(0));
  for (int e : Q.k0_ids()) gamma_k0[e] = gamma.eval_K0(Q.element(e));

  // right coset space K0\K: orbits of left multiplication by K0
  std::vector<int> coset_rep_of(order, -1);
  std::vector<int> reps;
  for (int e = 0; e < order; ++e) {
    if (coset_rep_of[e] >= 0) continue;
    int r = static_cast<int>(reps.size());
    reps.push_back(e);
    for (int k : Q.k0_ids()) coset_rep_of[Q.mult(k, e)] = r;
  }
  const int dim = static_cast<int>(reps.size());

  // class function of K0 w(1) K0 with X-normalization, i.e. sqrt(2) T_w
  std::vector<Cyc8> u0(order, Cyc8(0));
  std::vector<bool> u0_set(order, false);
  int w_id = Q.id_of(MetaElt::w(1));
  Cyc8 zbar = gamma.zeta_bar();
  for (int k : Q.k0_ids())
    for (int kp : Q.k0_ids()) {
      int e = Q.mult(Q.mult(k, w_id), kp);
      Cyc8 v = gamma_k0[k].conj() * zbar * gamma_k0[kp].conj();
      if (u0_set[e]) {
        if (u0[e] != v)
          throw std::logic_error("finite_quotient_ktypes: inconsistent double coset function");
      } else {
        u0[e] = v;
        u0_set[e] = true;
      }
    }

  // phi_i supported on K0 g_i with phi_i(k0 g_i) = gamma(k0)
  auto phi = [&](int i, int e) -> Cyc8 {
    int t = Q.mult(e, Q.inverse(reps[i]));
    return Q.in_k0(t) ? gamma_k0[t] : Cyc8(0);
  };

  // (pi_L(f-hat) phi)(g) = (1/16) sum_q f(q) phi(q g), and T_w = U0/sqrt(2)
  Cyc8 norm = Cyc8::inv_sqrt2() * Cyc8(Rat(1, 16));
  Mat<Cyc8> m(dim, std::vector<Cyc8>(dim, Cyc8(0)));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Cyc8 acc(0);
      for (int q = 0; q < order; ++q) {
        if (!u0_set[q]) continue;
        acc += u0[q] * phi(i, Q.mult(q, reps[j]));
      }
      m[j][i] = acc * norm;
    }

  KTypeDecomposition out;
  out.group_order = order;
  out.index_K_over_K0 = dim;
  out.tw_matrix = m;
  out.trace = mat_trace(m);
  Mat<Cyc8> m2 = mat_sub(m, mat_scale(mat_identity<Cyc8>(dim), Cyc8(2)));
  Mat<Cyc8> mm1 = mat_add(m, mat_identity<Cyc8>(dim));
  out.dim_V2 = dim - static_cast<int>(mat_rank(m2));
  out.dim_Vminus1 = dim - static_cast<int>(mat_rank(mm1));
  return out;
}

bool y_coset_obstruction_holds() {
  const FiniteQuotient& Q = finite_quotient();
  int xy = Q.id_of(mp_mult(MetaElt::x(2), MetaElt::y(2)));
  int yx = Q.id_of(mp_mult(MetaElt::y(2), MetaElt::x(2)));
  return Q.class_of(xy) == Q.class_of(yx) && Q.sign_of(xy) == -Q.sign_of(yx);
}

}  // namespace mp2
