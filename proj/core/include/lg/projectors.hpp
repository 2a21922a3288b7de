#pragma once

#include <array>
#include <memory>

#include "lg/sampled.hpp"
#include "lg/tensor.hpp"

namespace lg {

/// A vector of the 16-dimensional tensor-square module at a sample point,
/// indexed by ket pairs (i, j) in 1..4.  Basis vectors are homogeneous with
/// the stated parity.
struct KetVector16 {
  std::array<std::array<SampledExt, 4>, 4> comp;  // comp[i-1][j-1]
  int parity = 0;
  std::shared_ptr<const SamplePoint> pt;

  const SampledExt& at(int i, int j) const { return comp[i - 1][j - 1]; }
  SampledExt& at(int i, int j) { return comp[i - 1][j - 1]; }
};

/// The symmetry-adapted basis vector Psi^k_j (k = 1 or 3, j = 1..4) with its
/// normalization prefactor stripped: only the bracketed combination of kets.
KetVector16 basis_unnormalized(int k, int j, std::shared_ptr<const SamplePoint> pt);

/// <psi|psi> under the graded dual pairing: the bra coefficients pick up
/// (-1)^{[i][j]} and the pairing contributes (-1)^{[bra j][ket i]}.
SampledExt norm_squared(const KetVector16& v);

/// P_k = sum_j |psi_j><psi_j| / <psi_j|psi_j> with the graded outer-product
/// sign; idempotent, and P_1 P_3 = 0.
Rank4Tensor<SampledExt> projector(int k, const std::shared_ptr<const SamplePoint>& pt);

/// sigma = q^{-2 alpha} P_1 - P_2 + q^{2 alpha + 2} P_3 with
/// P_2 = I - P_1 - P_3; the graded braid generator, rebuilt from the basis.
Rank4Tensor<SampledExt> sigma_constructed(const std::shared_ptr<const SamplePoint>& pt);

/// The trigonometric braid-form R matrix at q^{u/2} = w:
///   checkR(u) = -(q^u - q^{2a})/(1 - q^{u+2a}) P_1 - P_2
///               -(1 - q^{u+2a+2})/(q^u - q^{2a+2}) P_3.
/// Has 36 nonzero entries at generic points.
Rank4Tensor<SampledExt> trig_R(const std::shared_ptr<const SamplePoint>& pt);

Rank4Tensor<SampledExt> identity_sampled();

}  // namespace lg
