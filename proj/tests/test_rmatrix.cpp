#include <random>

#include "doctest.h"
#include "lg/verify.hpp"

using namespace lg;

namespace {

ExtScalar mono(long c, int eq, int ep) {
  return ExtScalar(LaurentPoly::term(Coeff::integer(c), eq, ep, 2));
}
const ExtScalar kOne = mono(1, 0, 0);

}  // namespace

TEST_CASE("graded sigma: displayed entries and sparsity") {
  const auto& s = explicit_sigma();
  CHECK(s.nonzero_count() == 26);
  CHECK(s.at4(1, 1, 1, 1) == mono(1, 0, -2));        // p^-2
  CHECK(s.at4(4, 4, 4, 4) == mono(1, 2, 2));         // p^2 q^2
  CHECK(s.at4(4, 2, 1, 3) == ExtScalar::y());        // +Y e^{4 1}_{2 3}
  CHECK(s.at4(2, 2, 2, 2) == mono(-1, 0, 0));
  CHECK(s.at4(4, 4, 1, 1) == ExtScalar(ExtScalar::y_squared(2)));
}

TEST_CASE("ungrading flips exactly the odd-j, odd-(k+l) entries") {
  const auto& graded = explicit_sigma();
  const auto& ungraded = explicit_sigma_ungraded();
  // The +Y coefficient of e^{4 1}_{2 3} becomes -Y.
  CHECK(graded.at4(4, 2, 1, 3) == ExtScalar::y());
  CHECK(ungraded.at4(4, 2, 1, 3) == -ExtScalar::y());
  // Entries with even [j] are unchanged.
  CHECK(ungraded.at4(1, 1, 1, 1) == graded.at4(1, 1, 1, 1));
  CHECK(ungraded.at4(2, 4, 3, 1) == graded.at4(2, 4, 3, 1));
  CHECK(ungrade(ungrade(graded)) == graded);
}

TEST_CASE("sigma inverse: displayed entries, and the 16x16 product oracle") {
  const auto& si = explicit_sigma_inverse();
  CHECK(si.nonzero_count() == 26);
  CHECK(si.at4(1, 1, 1, 1) == mono(1, 0, 2));        // p^2
  CHECK(si.at4(4, 4, 4, 4) == mono(1, -2, -2));      // p^-2 q^-2
  // Independent oracle: psi(sigma) psi(sigma^{-1}) as dense 16x16 matrices.
  const auto ms = matrix_of(explicit_sigma_ungraded());
  const auto mi = matrix_of(si);
  for (int i = 1; i <= 16; ++i)
    for (int j = 1; j <= 16; ++j) {
      ExtScalar acc;
      for (int k = 1; k <= 16; ++k) acc += ms.at(i, k) * mi.at(k, j);
      CHECK(acc == ((i == j) ? kOne : ExtScalar{}));
    }
}

TEST_CASE("caps and cups") {
  const auto& caps = explicit_caps_cups();
  CHECK(caps.um.at(1, 1) == mono(1, 0, 2));  // Mho^- entry (1,1) = p^2
  CHECK(caps.um.at(2, 2) == mono(-1, 0, 2));
  CHECK(caps.op.at(1, 1) == kOne);
  CHECK(caps.up.at(3, 3) == kOne);
  // Omega^- Mho^- = I.
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      ExtScalar acc;
      for (int k = 1; k <= 4; ++k) acc += caps.om.at(i, k) * caps.um.at(k, j);
      CHECK(acc == ((i == j) ? kOne : ExtScalar{}));
    }
  // Mho^- = (-1)^{[b]} pi(q^{-2 h_rho}) with pi(q^{-2 h_rho}) = diag(p^2, p^2, p^2q^2, p^2q^2).
  const auto hrho = q_minus_2hrho_matrix();
  CHECK(hrho.at(2, 2) == mono(1, 0, 2));
  CHECK(hrho.at(3, 3) == mono(1, 2, 2));
  for (int b = 1; b <= 4; ++b)
    CHECK(caps.um.at(b, b) == (parity(b) ? -hrho.at(b, b) : hrho.at(b, b)));
}

TEST_CASE("graded permutation") {
  const auto& p = graded_permutation();
  CHECK(p.at4(1, 2, 2, 1) == mono(-1, 0, 0));  // coefficient of e^{1 2}_{2 1}, [2] odd
  CHECK(p.at4(1, 1, 1, 1) == kOne);
  CHECK(p.at4(2, 1, 1, 2) == kOne);
  CHECK(p.nonzero_count() == 16);
  // P o P = identity under graded composition.
  CHECK(compose_graded(p, p) == identity_rank4(4, kOne));
}

TEST_CASE("Yang-Baxter equation holds symbolically") {
  CHECK(verify_yang_baxter(explicit_sigma_ungraded()));
  CHECK(verify_yang_baxter(explicit_sigma_inverse()));
  // A perturbed tensor must fail.
  Rank4Tensor<ExtScalar> bad = explicit_sigma_ungraded();
  bad.set4(1, 1, 1, 1, mono(1, 0, 2));
  CHECK_FALSE(verify_yang_baxter(bad));
}

TEST_CASE("cubic skein relation and eigenvalue factorization") {
  CHECK(verify_skein(explicit_sigma_ungraded()));
  CHECK(verify_skein_factored(explicit_sigma_ungraded()));
  CHECK_FALSE(verify_skein(identity_rank4(4, kOne)));
}

TEST_CASE("loop identities") {
  CHECK(verify_cap_loop());
}

TEST_CASE("verification suites pass end to end") {
  for (const auto& r : run_suites({"all"}, 4, 99)) {
    INFO(r.check);
    CHECK(r.pass);
    CHECK(r.residual_nonzero_entries == 0);
  }
  CHECK_THROWS_AS(run_suites({"nosuchsuite"}, 1, 0), std::invalid_argument);
}

TEST_CASE("graded braid relation at sample points") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 3; ++i) {
    auto pt = SamplePoint::random(rng);
    Rank4Tensor<SampledExt> sig = make_rank4<SampledExt>(4);
    for (const auto& [key, v] : explicit_sigma().entries()) sig.set(key, eval_ext(v, pt));
    CHECK(graded_braid_residual(sig).nonzero_count() == 0);
  }
}

TEST_CASE("verification report serializes to the documented schema") {
  const auto reports = run_suites({"ybe"}, 0, 0);
  const std::string json = report_json(reports);
  CHECK(json ==
        R"([{"check":"ybe","points":0,"pass":true,"residual_nonzero_entries":0}])");
}

TEST_CASE("parity table marks exactly indices 2 and 3 odd") {
  CHECK(parity(1) == 0);
  CHECK(parity(2) == 1);
  CHECK(parity(3) == 1);
  CHECK(parity(4) == 0);
}

TEST_CASE("a sign flip in the cups breaks the loop identity") {
  const auto& sig = explicit_sigma_ungraded();
  CapSet<ExtScalar> caps = explicit_caps_cups();
  caps.um.at(2, 2) = -caps.um.at(2, 2);
  bool all_delta = true;
  for (int y = 1; y <= 4 && all_delta; ++y)
    for (int x = 1; x <= 4 && all_delta; ++x) {
      ExtScalar acc;
      for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
          if (const ExtScalar* v = sig.find4(y, x, a, b)) acc += *v * caps.um.at(b, a);
      const ExtScalar expect = (y == x) ? kOne : ExtScalar{};
      if (acc != expect) all_delta = false;
    }
  CHECK_FALSE(all_delta);
}
