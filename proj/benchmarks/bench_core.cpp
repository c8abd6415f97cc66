#include <benchmark/benchmark.h>

#include <memory>

#include "interference/lim_test.hpp"
#include "interference/mixtures.hpp"
#include "interference/network.hpp"
#include "interference/risk.hpp"
#include "interference/rng.hpp"
#include "interference/separation.hpp"

using namespace interference;

namespace {

std::shared_ptr<const Network> regular(std::size_t n, std::size_t k) {
    return std::make_shared<const Network>(gen_k_regular(n, k, 12345));
}

void BM_KRegularGeneration(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gen_k_regular(n, 4, seed++));
    }
}
BENCHMARK(BM_KRegularGeneration)->Arg(1000)->Arg(10000);

void BM_ExposureStratified(benchmark::State& state) {
    const auto net = regular(1024, 4);
    const ExposureSpec spec = ExposureSpec::stratified(net);
    rng::Stream stream(7);
    const Intervention z = sample(Design::bernoulli(1024, 0.5), stream);
    for (auto _ : state) {
        std::uint32_t acc = 0;
        for (std::size_t i = 0; i < 1024; ++i) acc += exposure_of(spec, i, z);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_ExposureStratified);

void BM_LimTestPipeline(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto net = regular(n, 4);
    const LimModel model = LimModel::uniform(net, {0.0, 0.0, 1.0});
    const Design design = Design::bernoulli(n, 0.5);
    rng::Stream stream(11);
    for (auto _ : state) {
        const Intervention z = sample(design, stream);
        const std::vector<double> y = evaluate_outcomes(model, z);
        benchmark::DoNotOptimize(run_lim_test(*net, z, y, 0.5));
    }
}
BENCHMARK(BM_LimTestPipeline)->Arg(1024)->Arg(16384)->Arg(100000);

void BM_MixtureDrawEvaluate(benchmark::State& state) {
    const std::size_t n = 1000;
    const auto net = regular(n, 4);
    const ExposureSpec coarse = ExposureSpec::own_treatment(n);
    const ExposureSpec fine = ExposureSpec::stratified(net);
    const MixturePair pair = general_mixtures(coarse, fine, check_refinement(coarse, fine));
    rng::Stream stream(3);
    const Design design = Design::bernoulli(n, 0.5);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        const Intervention z = sample(design, stream);
        benchmark::DoNotOptimize(pair.draw(MixtureSide::Alt, seed++).evaluate(z));
    }
}
BENCHMARK(BM_MixtureDrawEvaluate);

void BM_RiskLowerBoundExact(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const MixturePair pair = sutva_mixtures(n);
    const Design design = Design::bernoulli(n, 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(risk_lower_bound(pair, design));
    }
}
BENCHMARK(BM_RiskLowerBoundExact)->Arg(8)->Arg(10);

void BM_RefinementSeparationExact(benchmark::State& state) {
    const auto net = regular(10, 3);
    const ExposureSpec coarse = ExposureSpec::own_treatment(10);
    const ExposureSpec fine = ExposureSpec::stratified(net);
    rng::Stream stream(9);
    std::vector<std::vector<double>> coeffs(10);
    for (std::size_t i = 0; i < 10; ++i) {
        coeffs[i].resize(fine.exposure_count(i));
        for (double& c : coeffs[i]) c = 2.0 * stream.uniform01() - 1.0;
    }
    const ExposureOutcomeModel model(fine, coeffs);
    for (auto _ : state) {
        benchmark::DoNotOptimize(refinement_separation_exact(model, coarse));
    }
}
BENCHMARK(BM_RefinementSeparationExact);

}  // namespace

BENCHMARK_MAIN();
