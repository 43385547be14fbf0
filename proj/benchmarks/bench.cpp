#include <benchmark/benchmark.h>

#include "hatgames/classifiers.hpp"
#include "hatgames/lll.hpp"
#include "hatgames/oracle.hpp"
#include "hatgames/prisms.hpp"

namespace {

hg::Digraph named(int n) {
    hg::Digraph d;
    for (int i = 0; i < n; ++i) d.add_vertex("v" + std::to_string(i));
    return d;
}

hg::Game cycle(const std::vector<int>& h) {
    const int n = static_cast<int>(h.size());
    hg::Digraph d = named(n);
    for (int i = 0; i < n; ++i) d.add_edge(i, (i + 1) % n);
    return hg::make_game(std::move(d), h);
}

hg::Game star(int center_h, int leaves, int leaf_h) {
    hg::Digraph d = named(leaves + 1);
    std::vector<int> h{center_h};
    for (int i = 1; i <= leaves; ++i) {
        d.add_edge(0, i);
        h.push_back(leaf_h);
    }
    return hg::make_game(std::move(d), h);
}

void bm_solve_cycle4(benchmark::State& state) {
    const int hat = static_cast<int>(state.range(0));
    hg::Game g = cycle({hat, hat, hat, hat});
    for (auto _ : state)
        benchmark::DoNotOptimize(hg::decide_winnable(g).verdict);
}
BENCHMARK(bm_solve_cycle4)->Arg(2)->Arg(3)->Arg(4);

void bm_solve_star(benchmark::State& state) {
    hg::Game g = star(1 << static_cast<int>(state.range(0)),
                      static_cast<int>(state.range(0)), 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(hg::decide_winnable(g).verdict);
}
BENCHMARK(bm_solve_star)->Arg(2)->Arg(3);

void bm_verify_certificate(benchmark::State& state) {
    hg::Game g = cycle({2, 3, 4, 3});
    hg::Outcome o = hg::decide_winnable(g);
    for (auto _ : state)
        benchmark::DoNotOptimize(hg::verify_strategy(g, *o.certificate).wins);
}
BENCHMARK(bm_verify_certificate);

void bm_classify_cycle(benchmark::State& state) {
    hg::Game g = cycle({2, 3, 4, 3, 2, 4, 3, 2});
    for (auto _ : state)
        benchmark::DoNotOptimize(hg::classify_auto(g).verdict);
}
BENCHMARK(bm_classify_cycle);

void bm_star_packing(benchmark::State& state) {
    hg::Game g = star(8, 3, 2);
    for (auto _ : state) benchmark::DoNotOptimize(hg::star_outcome(g).verdict);
}
BENCHMARK(bm_star_packing);

void bm_lll_auto(benchmark::State& state) {
    hg::Game g = cycle({9, 9, 9, 9});
    for (auto _ : state)
        benchmark::DoNotOptimize(hg::lll_unwinnable_test(g).unwinnable);
}
BENCHMARK(bm_lll_auto);

}  // namespace

BENCHMARK_MAIN();
