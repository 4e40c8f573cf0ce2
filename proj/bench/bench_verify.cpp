#include "artifact/product.hpp"
#include "artifact/verify.hpp"

#include <benchmark/benchmark.h>

using namespace artifact;

namespace {

// threads = 1 is the serial reference path; 0 lets OpenMP pick
void BM_verify_all(benchmark::State& st) {
    SuiteConfig cfg;
    cfg.threads = (int)st.range(0);
    for (auto _ : st) {
        Report r = run(cfg);
        if (!r.ok()) st.SkipWithError("verification failed");
        benchmark::DoNotOptimize(r.checks.size());
    }
}
BENCHMARK(BM_verify_all)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_pairing_oracle(benchmark::State& st) {
    SuiteConfig cfg;
    cfg.threads = (int)st.range(0);
    cfg.suites = {"pairing-oracle"};
    cfg.i_max = 8;
    for (auto _ : st) benchmark::DoNotOptimize(run(cfg).checks.size());
}
BENCHMARK(BM_pairing_oracle)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_sigma_oracle_corner22(benchmark::State& st) {
    ProductRep P(make_L1());
    for (auto _ : st) benchmark::DoNotOptimize(P.sigma_oracle({2, 2}, (int)st.range(0)));
}
BENCHMARK(BM_sigma_oracle_corner22)->Arg(-2)->Arg(0)->Arg(2);

void BM_rho_certificate(benchmark::State& st) {
    ProductRep P(make_L1());
    int l = (int)st.range(0);
    for (auto _ : st) benchmark::DoNotOptimize(triangular_certificate(P, l).corners.size());
}
BENCHMARK(BM_rho_certificate)->DenseRange(-4, 4, 2);

}  // namespace

BENCHMARK_MAIN();
