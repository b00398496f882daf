#pragma once

#include "mp2/cyc8.hpp"
#include "mp2/gamma.hpp"
#include "mp2/linalg.hpp"

namespace mp2 {

// The finite group K/K(4) of order 96: pairs (class of SL2(Z/4), sign) with
// multiplication delegated to exact cocycle arithmetic on canonical integral
// lifts.  Element ids are 2*class_index + (sign < 0).
class FiniteQuotient {
 public:
  FiniteQuotient();

  int order() const { return static_cast<int>(mult_.size()); }
  int identity() const { return id_; }
  int mult(int e1, int e2) const { return mult_[e1][e2]; }
  int inverse(int e) const { return inv_[e]; }
  int sign_of(int e) const { return (e & 1) ? -1 : 1; }
  int class_of(int e) const { return e >> 1; }
  const Mat2Q& lift_of_class(int cls) const { return lifts_[cls]; }

  // id of the class of an element of K (integral entries, any sign)
  int id_of(const MetaElt& g) const;
  MetaElt element(int e) const { return MetaElt(lifts_[class_of(e)], sign_of(e)); }

  // ids whose matrix class has c = 0 mod 4 (image of K0), 16 of them
  const std::vector<int>& k0_ids() const { return k0_ids_; }
  bool in_k0(int e) const { return k0_mask_[e]; }

 private:
  std::vector<Mat2Q> lifts_;           // 48 canonical lifts of SL2(Z/4)
  std::vector<std::vector<int>> mult_; // 96 x 96
  std::vector<int> inv_;
  std::vector<int> k0_ids_;
  std::vector<bool> k0_mask_;
  int id_ = 0;

  int class_index(const Mat2Q& m) const;
};

const FiniteQuotient& finite_quotient();

struct KTypeDecomposition {
  int group_order = 0;
  int index_K_over_K0 = 0;
  Mat<Cyc8> tw_matrix;  // pi_L(T_w-hat) on the 6-dim induced space
  Cyc8 trace;
  int dim_V2 = 0;       // eigenvalue-2 multiplicity
  int dim_Vminus1 = 0;  // eigenvalue -1 multiplicity
};

// Builds Ind_{K0}^K gamma on the finite quotient and decomposes the
// convolution action of the weight-normalized class function of K0 w(1) K0.
KTypeDecomposition finite_quotient_ktypes(const GammaChar& gamma);

// The commutator obstruction that kills Hecke functions on the y(2)-cosets:
// x(2)y(2) and y(2)x(2) agree in SL2(Z/4) but differ by the central sign.
bool y_coset_obstruction_holds();

}  // namespace mp2
