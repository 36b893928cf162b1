#include <benchmark/benchmark.h>

#include <cmath>
#include <cstdint>
#include <cstdlib>

#include "sgr/baselines.hpp"
#include "sgr/index_set.hpp"
#include "sgr/sampling_operator.hpp"
#include "sgr/spectral.hpp"
#include "sgr/testbed.hpp"
#include "sgr/trig_interp.hpp"

namespace {

void BM_EnergySetEnumeration(benchmark::State& state) {
  const double xi = static_cast<double>(state.range(0));
  for (auto _ : state) {
    const sgr::IndexSet s =
        sgr::energy_set({3, 2.0, 0.0, 1.0, 0.0}, xi);
    benchmark::DoNotOptimize(s.size());
  }
}
BENCHMARK(BM_EnergySetEnumeration)->Arg(10)->Arg(20)->Arg(30);

void BM_AliasFolding(benchmark::State& state) {
  sgr::Coeffs1D f;
  // Dense line of frequencies so folding touches every residue class.
  for (int l = -2048; l <= 2048; ++l)
    f.add(l, {1.0 / (1.0 + std::abs(l)), 0.0});
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const sgr::Coeffs1D folded = sgr::alias_coeffs(m, f);
    benchmark::DoNotOptimize(folded.support_size());
  }
}
BENCHMARK(BM_AliasFolding)->Arg(16)->Arg(64)->Arg(256);

void BM_ApplyOperator(benchmark::State& state) {
  const sgr::SpectralFunction f =
      sgr::materialize(sgr::CubePoly{.L = 16, .seed = 11}, 2);
  const sgr::IndexSet s = sgr::smolyak_set(2, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const sgr::SpectralFunction g = sgr::apply_Q(f, s);
    benchmark::DoNotOptimize(g.support_size());
  }
}
BENCHMARK(BM_ApplyOperator)->Arg(3)->Arg(5)->Arg(7);

void BM_DistinctGrid(benchmark::State& state) {
  const sgr::IndexSet s = sgr::smolyak_set(2, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const sgr::GridReport rep = sgr::sampling_grid(s);
    benchmark::DoNotOptimize(rep.distinct_count);
  }
}
BENCHMARK(BM_DistinctGrid)->Arg(4)->Arg(6)->Arg(8);

void BM_SupNormEstimate(benchmark::State& state) {
  const sgr::SpectralFunction f = sgr::materialize(
      sgr::BlockExtremal{.a = 1.5,
                         .b = 0.0,
                         .K = static_cast<int>(state.range(0)),
                         .delta = 0.5},
      2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sgr::norm(f, sgr::NormKind::linf_estimate()));
  }
}
BENCHMARK(BM_SupNormEstimate)->Arg(6)->Arg(8)->Arg(10);

void BM_ApproxNumbers(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const sgr::SingularSpectrum sp =
        sgr::approx_numbers({2, 2.0, 0.0, 1.0, 0.0},
                            sgr::TargetKind::Isotropic, cutoff);
    benchmark::DoNotOptimize(sp.n_max);
  }
}
BENCHMARK(BM_ApproxNumbers)->Arg(64)->Arg(128)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
