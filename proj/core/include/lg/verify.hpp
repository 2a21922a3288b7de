#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lg/projectors.hpp"
#include "lg/rmatrix.hpp"

namespace lg {

struct CheckReport {
  std::string check;
  int points = 0;
  bool pass = false;
  long residual_nonzero_entries = 0;
};

std::string report_json(const std::vector<CheckReport>& reports);

/// Yang--Baxter residual of a crossing tensor in braid form, the pattern of
/// the reference checker:
///   sum_{ijk} A[a,i,b,j] B[j,k,c,f] C[i,d,k,e]
///   - sum_{ijk} C[b,j,c,i] B[a,d,j,k] A[k,e,i,f].
/// For the constant equation A = B = C = X; for the spectral one
/// (A, B, C) = (R(u), R(u+v), R(v)).
template <class S>
TensorND<S> braid_ybe_residual(const TensorND<S>& a, const TensorND<S>& b,
                               const TensorND<S>& c) {
  TensorND<S> t1 = einsum<S>({{&a, "aibj"}, {&b, "jkcf"}, {&c, "idke"}}, "abcdef");
  TensorND<S> t2 = einsum<S>({{&c, "bjci"}, {&b, "adjk"}, {&a, "keif"}}, "abcdef");
  return t1 - t2;
}

/// Symbolic Yang--Baxter check over the Y-extension ring; all 4^6 residual
/// components must vanish exactly.
bool verify_yang_baxter(const Rank4Tensor<ExtScalar>& x);
long yang_baxter_residual_count(const Rank4Tensor<ExtScalar>& x);

/// The cubic skein relation
///   q^{-1} s^3 + (q^{-1} - q^{-2a-1} - q^{2a+1}) s^2
///              + (q - q^{-2a-1} - q^{2a+1}) s + q I = 0
/// with q^{+-(2a+1)} written as p^{+-2} q^{+-1}, evaluated symbolically.
bool verify_skein(const Rank4Tensor<ExtScalar>& sigma_ungraded);

/// The factored eigenvalue form (s - q^{-2a} I)(s + I)(s - q^{2a+2} I) = 0.
bool verify_skein_factored(const Rank4Tensor<ExtScalar>& sigma_ungraded);

/// Loop removal: sum_{ab} sigma[y,x,a,b] (Mho^-)^{b a} = delta^y_x, the
/// mirrored identity for the inverse crossing, and Omega^± Mho^± = I.
bool verify_cap_loop();

/// Graded braid-relation residual on the triple space at a sample point,
/// with the parity strings of graded tensor multiplication.
TensorND<SampledExt> graded_braid_residual(const Rank4Tensor<SampledExt>& sigma_graded);

// Named verification suites.  `points` bounds the number of sample points
// (where applicable) and `seed` fixes the random draw.
CheckReport check_ybe();
CheckReport check_skein();
CheckReport check_inverse();
CheckReport check_caps();
CheckReport check_projectors(int points, std::uint64_t seed);
CheckReport check_sigma_match(int points, std::uint64_t seed);
CheckReport check_limit();
CheckReport check_trig(int points, std::uint64_t seed);
CheckReport check_spectral(int points, std::uint64_t seed);

/// Runs suites by name ("ybe", "skein", "inverse", "caps", "projectors",
/// "sigma-match", "limit", "trig", "spectral" or "all").  Throws
/// std::invalid_argument for unknown names.
std::vector<CheckReport> run_suites(const std::vector<std::string>& names, int points,
                                    std::uint64_t seed);

}  // namespace lg
