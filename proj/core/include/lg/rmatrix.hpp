#pragma once

#include "lg/combinators.hpp"
#include "lg/ext.hpp"
#include "lg/grading.hpp"
#include "lg/tensor.hpp"

namespace lg {

/// The braid generator on the graded module, exactly the 26 displayed
/// entries; coefficient of e^{i k}_{j l} stored at (i, j, k, l).
const Rank4Tensor<ExtScalar>& explicit_sigma();

/// The positive crossing tensor: sigma with the grading on the module
/// removed.  This is what every link recipe contracts.
const Rank4Tensor<ExtScalar>& explicit_sigma_ungraded();

/// The negative crossing tensor (ungraded), transcribed from its display;
/// also 26 nonzero entries.
const Rank4Tensor<ExtScalar>& explicit_sigma_inverse();

/// Caps and cups: Omega^+ = Mho^+ = I, Mho^- = diag(p^2, -p^2, -p^2 q^2,
/// p^2 q^2), Omega^- = (Mho^-)^{-1}.
const CapSet<ExtScalar>& explicit_caps_cups();

/// diag(p^2, p^2, p^2 q^2, p^2 q^2): the representation matrix of q^{-2 h_rho}
/// whose parity-signed form is Mho^-.
Rank2Tensor<ExtScalar> q_minus_2hrho_matrix();

/// The graded permutation: only nonzero entries P^{i j}_{j i} = (-1)^{[j]}.
template <class S>
Rank4Tensor<S> graded_permutation_as(const S& one) {
  Rank4Tensor<S> t = make_rank4<S>(4);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) t.set4(i, j, j, i, parity(j) ? -one : one);
  return t;
}
const Rank4Tensor<ExtScalar>& graded_permutation();

/// Removes (or restores) the module grading: entry (i, j, k, l) picks up the
/// sign (-1)^{[j]([k]+[l])}.  Involutive.
template <class S>
Rank4Tensor<S> ungrade(const Rank4Tensor<S>& t) {
  if (t.dim() != 4) throw std::invalid_argument("ungrade: dimension must be 4");
  Rank4Tensor<S> r(4, 4);
  for (const auto& [key, v] : t.entries()) {
    const int j = key_get(key, 1), k = key_get(key, 2), l = key_get(key, 3);
    if (parity(j) && ((parity(k) + parity(l)) % 2)) {
      S nv = -v;
      r.set(key, std::move(nv));
    } else {
      r.set(key, v);
    }
  }
  return r;
}

/// Composition of ungraded rank-4 operators:
///   (A B)^{i k}_{j l} = sum_{m n} A^{i k}_{m n} B^{m n}_{j l}.
template <class S>
Rank4Tensor<S> compose(const Rank4Tensor<S>& a, const Rank4Tensor<S>& b) {
  return einsum<S>({{&a, "imkn"}, {&b, "mjnl"}}, "ijkl");
}

/// Graded composition, with the parity string from the multiplication rule
/// (e^i_m x e^k_n)(e^m_j x e^n_l) = (-1)^{([k]+[n])([m]+[j])} e^i_j x e^k_l.
template <class S>
Rank4Tensor<S> compose_graded(const Rank4Tensor<S>& a, const Rank4Tensor<S>& b) {
  if (a.dim() != 4 || b.dim() != 4)
    throw std::invalid_argument("compose_graded: dimension must be 4");
  Rank4Tensor<S> r(4, 4);
  std::map<std::pair<int, int>, std::vector<std::pair<TensorKey, const S*>>> by_upper;
  for (const auto& [key, v] : b.entries())
    by_upper[{key_get(key, 0), key_get(key, 2)}].emplace_back(key, &v);
  for (const auto& [ka, va] : a.entries()) {
    const int i = key_get(ka, 0), m = key_get(ka, 1), k = key_get(ka, 2), n = key_get(ka, 3);
    auto it = by_upper.find({m, n});
    if (it == by_upper.end()) continue;
    for (const auto& [kb, vb] : it->second) {
      const int j = key_get(kb, 1), l = key_get(kb, 3);
      const int sign = ((parity(k) + parity(n)) * (parity(m) + parity(j))) % 2;
      S prod = va * *vb;
      if (sign) prod = -prod;
      r.accumulate(TensorND<S>::pack4(i, j, k, l), prod);
    }
  }
  return r;
}

/// Identity operator on V x V as a rank-4 tensor: I^{i k}_{i k} = 1.
template <class S>
Rank4Tensor<S> identity_rank4(int dim, const S& one) {
  Rank4Tensor<S> t(dim, 4);
  for (int i = 1; i <= dim; ++i)
    for (int k = 1; k <= dim; ++k) t.set4(i, i, k, k, one);
  return t;
}

template <class S>
Rank2Tensor<S> identity_rank2(int dim, const S& one) {
  Rank2Tensor<S> m(dim);
  for (int i = 1; i <= dim; ++i)
    for (int j = 1; j <= dim; ++j) m.at(i, j) = (i == j) ? one : S{};
  return m;
}

/// The 16x16 matrix form psi(A)_{4(i-1)+k, 4(j-1)+l} = A^{i k}_{j l}.
template <class S>
Rank2Tensor<S> matrix_of(const Rank4Tensor<S>& t, const S& zero = S{}) {
  const int m = t.dim();
  Rank2Tensor<S> out(m * m);
  for (int i = 1; i <= m * m; ++i)
    for (int j = 1; j <= m * m; ++j) out.at(i, j) = zero;
  for (const auto& [key, v] : t.entries()) {
    const int i = key_get(key, 0), j = key_get(key, 1), k = key_get(key, 2),
              l = key_get(key, 3);
    out.at(m * (i - 1) + k, m * (j - 1) + l) = v;
  }
  return out;
}

/// The crossing kit for the Links--Gould evaluation: positive crossing
/// sigma-bar, negative sigma-bar^{-1}, catalog caps.  Shared and memoized.
const CrossingKit<ExtScalar>& lg_kit();

}  // namespace lg
