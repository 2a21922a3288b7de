#include <benchmark/benchmark.h>

#include "lg/bracket.hpp"
#include "lg/linkcat.hpp"
#include "lg/projectors.hpp"
#include "lg/verify.hpp"

using namespace lg;

namespace {

const ExtScalar kOne(LaurentPoly::constant(Coeff::integer(1), 2));

// A fresh kit per iteration so combinator memoization does not hide the work.
CrossingKit<ExtScalar> fresh_kit() {
  return CrossingKit<ExtScalar>(explicit_sigma_ungraded(), explicit_sigma_inverse(),
                                explicit_caps_cups());
}

void BM_abstract_tensor(benchmark::State& state, LinkId id) {
  for (auto _ : state) {
    CrossingKit<ExtScalar> kit = fresh_kit();
    benchmark::DoNotOptimize(abstract_tensor(kit, id, kOne));
  }
}

void BM_pretzel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CrossingKit<ExtScalar> kit = fresh_kit();
    benchmark::DoNotOptimize(pretzel_tensor(kit, 3, 5, n));
  }
}

void BM_jones_trefoil(benchmark::State& state) {
  const LinkEntry trefoil = *find_link("trefoil");
  const LinkEntry unknot = *find_link("unknot");
  for (auto _ : state) {
    CrossingKit<LaurentPoly> kit(bracket_kit().x(Crossing::Pos), bracket_kit().x(Crossing::Neg),
                                 bracket_kit().caps());
    const LaurentPoly one = LaurentPoly::constant(Coeff::gaussian(1, 0), 1);
    auto t = abstract_tensor(kit, trefoil.id, one);
    benchmark::DoNotOptimize(t);
  }
  (void)unknot;
}

void BM_ybe_residual(benchmark::State& state) {
  const auto& s = explicit_sigma_ungraded();
  for (auto _ : state) benchmark::DoNotOptimize(braid_ybe_residual(s, s, s));
}

void BM_projector_build(benchmark::State& state) {
  std::mt19937_64 rng(42);
  auto pt = SamplePoint::random(rng);
  for (auto _ : state) benchmark::DoNotOptimize(sigma_constructed(pt));
}

void BM_poly_mul(benchmark::State& state) {
  // Multiply two mid-sized invariants, the dominant inner operation.
  const LaurentPoly a = links_gould(*find_link("6_2")).polynomial;
  const LaurentPoly b = links_gould(*find_link("6_3")).polynomial;
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}

}  // namespace

BENCHMARK_CAPTURE(BM_abstract_tensor, trefoil, LinkId::Trefoil);
BENCHMARK_CAPTURE(BM_abstract_tensor, figure_eight, LinkId::FigureEight);
BENCHMARK_CAPTURE(BM_abstract_tensor, eight_seventeen, LinkId::EightSeventeen);
BENCHMARK_CAPTURE(BM_abstract_tensor, kt, LinkId::KT);
BENCHMARK(BM_pretzel)->Arg(7)->Arg(11)->Arg(13);
BENCHMARK(BM_jones_trefoil);
BENCHMARK(BM_ybe_residual);
BENCHMARK(BM_projector_build);
BENCHMARK(BM_poly_mul);

BENCHMARK_MAIN();
