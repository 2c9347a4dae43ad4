// Growth of the core enumeration primitives: succ and importance cost
// scale as b^l, which these benchmarks make visible per horizon.

#include "hxplain/env/connect4.hpp"
#include "hxplain/env/frozen_lake.hpp"
#include "hxplain/scoring.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace hxplain;

struct FlFixture {
    fl::FlModel model{fl::map_8x8()};
    fl::QTablePolicy policy;
    FlFixture() : policy([this] {
        fl::TrainParams p;
        p.episodes = 20'000;
        return fl::train_q(model, p);
    }()) {}
};

FlFixture& fl_fixture() {
    static FlFixture fx;
    return fx;
}

void bm_fl_succ(benchmark::State& state) {
    auto& fx = fl_fixture();
    int k = int(state.range(0));
    WeightedStates start = WeightedStates::single(fx.model.initial_state());
    for (auto _ : state)
        benchmark::DoNotOptimize(succ(fx.model, fx.policy, start, k));
}
BENCHMARK(bm_fl_succ)->DenseRange(1, 8);

void bm_fl_importance(benchmark::State& state) {
    auto& fx = fl_fixture();
    int k = int(state.range(0));
    Predicate win = fl::win_predicate(fx.model);
    State s = fx.model.initial_state();
    ActionId a = fx.policy.action(s);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            importance(fx.model, fx.policy, s, a, win, k));
}
BENCHMARK(bm_fl_importance)->DenseRange(1, 6);

void bm_c4_succ(benchmark::State& state) {
    static c4::C4Model model;
    static auto policy = c4::heuristic_policy();
    int k = int(state.range(0));
    WeightedStates start = WeightedStates::single(model.initial_state());
    for (auto _ : state)
        benchmark::DoNotOptimize(succ(model, *policy, start, k));
}
BENCHMARK(bm_c4_succ)->DenseRange(1, 4);

void bm_fl_sampled_importance(benchmark::State& state) {
    auto& fx = fl_fixture();
    Predicate win = fl::win_predicate(fx.model);
    State s = fx.model.initial_state();
    ActionId a = fx.policy.action(s);
    ScoringBudget budget = ScoringBudget::max(std::uint64_t(state.range(0)), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            importance(fx.model, fx.policy, s, a, win, 8, budget));
}
BENCHMARK(bm_fl_sampled_importance)->RangeMultiplier(4)->Range(16, 1024);

} // namespace

BENCHMARK_MAIN();
