#include <benchmark/benchmark.h>

#include "entcast/broadcasting.hpp"
#include "entcast/chsh_oracle.hpp"
#include "entcast/criteria.hpp"
#include "entcast/protocol_runner.hpp"
#include "entcast/telecloning.hpp"

namespace {

using namespace entcast;

constexpr double kInvSqrt2 = 0.70710678118654752440;

void bench_run_broadcast(benchmark::State& state) {
    const Reflectivity r(1.0 / 3.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_broadcast(0.6, 0.8, r));
    }
}
BENCHMARK(bench_run_broadcast);

void bench_closed_forms(benchmark::State& state) {
    const Reflectivity r(0.3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(closed_form_rho_a1b1(0.6, 0.8, r));
        benchmark::DoNotOptimize(closed_form_rho_cd(0.6, 0.8, r));
    }
}
BENCHMARK(bench_closed_forms);

void bench_ppt_and_criteria(benchmark::State& state) {
    const DensityOperator rho = closed_form_rho_a1b1(0.6, 0.8, Reflectivity(0.3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ppt_separable(rho));
        benchmark::DoNotOptimize(chsh_M(rho));
        benchmark::DoNotOptimize(teleportation_N(rho));
    }
}
BENCHMARK(bench_ppt_and_criteria);

void bench_telecloning_enumeration(benchmark::State& state) {
    const CloneParams params(0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_telecloning_all(0.6, 0.8, params));
    }
}
BENCHMARK(bench_telecloning_enumeration);

void bench_teleportation_sample(benchmark::State& state) {
    const DensityOperator channel =
        closed_form_rho_a1b1(kInvSqrt2, kInvSqrt2, Reflectivity(1.0 / 3.0));
    std::mt19937_64 rng(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            simulate_standard_teleportation(channel, haar_random_qubit(rng)));
    }
}
BENCHMARK(bench_teleportation_sample);

void bench_chsh_oracle(benchmark::State& state) {
    const DensityOperator rho = closed_form_rho_a1b1(0.6, 0.8, Reflectivity(0.31));
    for (auto _ : state) {
        benchmark::DoNotOptimize(chsh_bruteforce_max(rho, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(bench_chsh_oracle)->Arg(200)->Arg(600);

}  // namespace

BENCHMARK_MAIN();
