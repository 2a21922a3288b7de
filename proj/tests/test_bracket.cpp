#include "doctest.h"
#include "golden.hpp"
#include "lg/bracket.hpp"
#include "lg/verify.hpp"

using namespace lg;

namespace {

LaurentPoly amono(long re, long im, int e) {
  return LaurentPoly::term(Coeff::gaussian(re, im), e, 0, 1);
}

}  // namespace

TEST_CASE("bracket cap and crossing tensors") {
  const auto& kit = bracket_kit();
  // Mho^- entry (1,2) = i A.
  CHECK(kit.caps().um.at(1, 2) == amono(0, 1, 1));
  CHECK(kit.caps().um.at(2, 1) == amono(0, -1, -1));
  // R S = I as a 4x4 product (dense oracle over the flattened matrices).
  const auto mr = matrix_of(kit.x(Crossing::Pos));
  const auto ms = matrix_of(kit.x(Crossing::Neg));
  const LaurentPoly one = LaurentPoly::constant(Coeff::gaussian(1, 0), 1);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      LaurentPoly acc;
      for (int k = 1; k <= 4; ++k) acc += mr.at(i, k) * ms.at(k, j);
      CHECK(acc == ((i == j) ? one : LaurentPoly()));
    }
  // The dimension-2 crossing satisfies the same Yang-Baxter residual check.
  const auto& r = kit.x(Crossing::Pos);
  CHECK(braid_ybe_residual(r, r, r).nonzero_count() == 0);
}

TEST_CASE("bracket of the unknot is the loop value") {
  const LaurentPoly b = bracket_value(*find_link("unknot"));
  // Direct two-term closure sum: both cap matrices are {{0,iA},{-iA^-1,0}},
  // so the trace closure is (iA)^2 + (-iA^-1)^2 = -A^2 - A^-2.
  CHECK(b == -amono(1, 0, 2) - amono(1, 0, -2));
}

TEST_CASE("mirroring a recipe swaps A and A^-1 in the bracket") {
  const auto& kit = bracket_kit();
  const CrossingKit<LaurentPoly> mirror(kit.x(Crossing::Neg), kit.x(Crossing::Pos),
                                        kit.caps());
  const LaurentPoly one = LaurentPoly::constant(Coeff::gaussian(1, 0), 1);
  for (const std::string name : {"3_1", "5_2"}) {
    const LinkEntry e = *find_link(name);
    const auto t = abstract_tensor(mirror, e.id, one);
    LaurentPoly mirrored;
    for (int x = 1; x <= 2; ++x)
      for (int y = 1; y <= 2; ++y)
        for (int z = 1; z <= 2; ++z)
          mirrored += t.at(y, x) * kit.caps().om.at(z, y) * kit.caps().up.at(z, x);
    CHECK(mirrored == bracket_value(e).involute_q());
  }
}

TEST_CASE("golden Jones table") {
  for (const auto& [name, expect] : golden::jones_table()) {
    const LinkEntry e = *find_link(name);
    INFO(name);
    CHECK(jones(e) == LaurentPoly::parse(expect, PolyFormat::Plain, "t"));
  }
}

TEST_CASE("Jones outputs are real and on the right exponent grid") {
  for (const auto& e : catalog()) {
    const LaurentPoly v = jones(e);
    CHECK(v.kind() == CoeffKind::Integer);  // imaginary parts cancelled
    const std::int64_t step = (e.components % 2 == 0) ? 2 : 4;  // half vs whole integers
    for (const auto& [exp, c] : v.terms()) {
      (void)c;
      CHECK(exp.eq % step == 0);
      CHECK(exp.ep == 0);
    }
  }
  CHECK(jones(*find_link("unknot")) == LaurentPoly::term(Coeff::integer(1), 0, 0, 4));
}
