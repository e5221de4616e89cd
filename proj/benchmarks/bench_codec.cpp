#include "deeppolar/sim.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace deeppolar;

namespace {

BitVector random_bits(std::size_t n, std::mt19937_64& rng) {
    auto v = BitVector(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, (rng() & 1) != 0);
    return v;
}

DeepPolarCode dp128_64() {
    CodeConfig cfg;
    cfg.layers = {{16, 13, 0}, {128, 51, 8}};
    cfg.profile = ProfileSpec::parse("seq:5g");
    return build_code(cfg);
}

void bm_polar_transform(benchmark::State& state) {
    std::mt19937_64 rng(1);
    auto u = random_bits(std::size_t(state.range(0)), rng);
    for (auto _ : state) {
        polar_transform_inplace(u);
        benchmark::DoNotOptimize(u.words().data());
    }
}
BENCHMARK(bm_polar_transform)->Arg(128)->Arg(1024);

void bm_encode(benchmark::State& state) {
    DeepPolarCode code = dp128_64();
    std::mt19937_64 rng(2);
    auto d = random_bits(64, rng);
    for (auto _ : state) benchmark::DoNotOptimize(encode(code, d).words().data());
}
BENCHMARK(bm_encode);

void bm_scl_bpc_decode(benchmark::State& state) {
    DeepPolarCode code = dp128_64();
    auto model = ChannelModel::awgn_ebn0(2.0, code.rate());
    std::mt19937_64 msg_rng(3);
    auto d = random_bits(64, msg_rng);
    auto rng = trial_rng(3, 0, 0);
    auto llr = transmit(encode(code, d), model, rng);
    int list = int(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(scl_bpc_decode(code, llr, list).success);
}
BENCHMARK(bm_scl_bpc_decode)->Arg(1)->Arg(8)->Arg(32);

void bm_weight_distribution(benchmark::State& state) {
    CodeConfig cfg;
    cfg.layers = {{8, 4, 4}, {32, 7, 8}};
    cfg.profile = ProfileSpec::parse("bec:0.5");
    DeepPolarCode code = build_code(cfg);
    for (auto _ : state) benchmark::DoNotOptimize(weight_distribution(code).total());
}
BENCHMARK(bm_weight_distribution);

void bm_bec_ml_decode(benchmark::State& state) {
    CodeConfig cfg;
    cfg.layers = {{8, 4, 4}, {32, 7, 8}};
    cfg.profile = ProfileSpec::parse("bec:0.5");
    DeepPolarCode code = build_code(cfg);
    std::mt19937_64 msg_rng(4);
    auto d = random_bits(11, msg_rng);
    auto rng = trial_rng(4, 0, 0);
    auto llr = transmit(encode(code, d), ChannelModel::bec(0.4), rng);
    for (auto _ : state) benchmark::DoNotOptimize(ml_decode_bec(code, llr).status);
}
BENCHMARK(bm_bec_ml_decode);

} // namespace

BENCHMARK_MAIN();
