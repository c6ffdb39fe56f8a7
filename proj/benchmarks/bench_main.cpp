#include <benchmark/benchmark.h>

#include "frobcoh/cohomology.hpp"
#include "frobcoh/deformation.hpp"
#include "frobcoh/random.hpp"
#include "frobcoh/yangbaxter.hpp"
#include "frobcoh_cli/builtins.hpp"

using namespace frobcoh;

namespace {

const char* const kAlgebras[] = {"complex", "poly:3", "qpoly:i", "group:S3"};

FrobeniusAlgebra load(int index) { return validate(cli::resolve_builtin(kAlgebras[index])); }

void BM_Validate(benchmark::State& state) {
  const auto pres = cli::resolve_builtin(kAlgebras[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(validate(pres));
  state.SetLabel(kAlgebras[state.range(0)]);
}
BENCHMARK(BM_Validate)->DenseRange(0, 3);

void BM_Compose(benchmark::State& state) {
  RandomSource rng(1);
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const LinMap f = rng.linmap(FieldSpec::rationals(), d, 2, 2), g = rng.linmap(FieldSpec::rationals(), d, 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(compose(g, f));
}
BENCHMARK(BM_Compose)->Arg(2)->Arg(3)->Arg(4);

void BM_DifferentialRank(benchmark::State& state) {
  const auto alg = load(static_cast<int>(state.range(0)));
  const unsigned degree = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(differential_rank(alg, degree, Variant::N));
  state.SetLabel(std::string(kAlgebras[state.range(0)]) + " D" + std::to_string(degree));
}
BENCHMARK(BM_DifferentialRank)
    ->Args({0, 1})
    ->Args({0, 2})
    ->Args({1, 2})
    ->Args({2, 2})
    ->Args({3, 1})
    ->Unit(benchmark::kMillisecond);

void BM_ChainIdentityD3D2(benchmark::State& state) {
  const auto alg = load(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chain_identity(alg, 2, Variant::N));
  state.SetLabel(kAlgebras[state.range(0)]);
}
BENCHMARK(BM_ChainIdentityD3D2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CheckYbe(benchmark::State& state) {
  const auto alg = load(static_cast<int>(state.range(0)));
  const RMatrix r = r_delta_mu(alg);
  for (auto _ : state) benchmark::DoNotOptimize(check_ybe(r));
  state.SetLabel(kAlgebras[state.range(0)]);
}
BENCHMARK(BM_CheckYbe)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

void BM_ConstraintSpace(benchmark::State& state) {
  const auto alg = load(0);
  for (auto _ : state) benchmark::DoNotOptimize(deformation_constraint_space(alg));
}
BENCHMARK(BM_ConstraintSpace)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
