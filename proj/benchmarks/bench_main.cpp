#include <benchmark/benchmark.h>

#include <vector>

#include "treekkm/cycle.hpp"
#include "treekkm/fixedpoint.hpp"
#include "treekkm/kkm.hpp"
#include "treekkm/sperner.hpp"

// Deterministic instances only, so numbers are comparable across runs. The
// path shapes are worst cases for the walk-based routines: every hop is a
// real step and distances span the whole diameter.

using namespace treekkm;

namespace {

MetricTree unit_path(int n) {
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.push_back({v - 1, v, Rat(1)});
    return MetricTree(n, edges);
}

void BM_tree_distance(benchmark::State& state) {
    int n = (int)state.range(0);
    MetricTree t = unit_path(n);
    TreePoint a = t.point_on_edge(0, Rat(1, 3));
    TreePoint b = t.point_on_edge(n - 2, Rat(2, 3));
    for (auto _ : state) benchmark::DoNotOptimize(t.distance(a, b));
}
BENCHMARK(BM_tree_distance)->Arg(16)->Arg(64)->Arg(256);

void BM_successor_walk(benchmark::State& state) {
    int n = (int)state.range(0);
    MetricTree t = unit_path(n);
    Labelling l;
    for (int v = 0; v < n; ++v) {
        l.label_set.push_back(v);
        std::vector<int> mine;
        for (int a = 0; a <= v; ++a) mine.push_back(a);
        l.labels.push_back(mine);
    }
    for (auto _ : state) benchmark::DoNotOptimize(find_fully_labelled_edge(t, l));
}
BENCHMARK(BM_successor_walk)->Arg(16)->Arg(64)->Arg(256);

void BM_kkm_sperner(benchmark::State& state) {
    int n = (int)state.range(0);
    MetricTree t = unit_path(n);
    Rat mid = Rat(n - 1) / 2;
    KkmCover c;
    c.anchors = {t.vertex_point(0), t.vertex_point(n - 1)};
    c.sets = {ClosedSet::path_between(t, t.vertex_point(0), t.path_point_at(t.path(t.vertex_point(0), t.vertex_point(n - 1)), mid)),
              ClosedSet::path_between(t, t.path_point_at(t.path(t.vertex_point(0), t.vertex_point(n - 1)), mid), t.vertex_point(n - 1))};
    for (auto _ : state) benchmark::DoNotOptimize(kkm_point_via_sperner(t, c, Rat(1, 2)));
}
BENCHMARK(BM_kkm_sperner)->Arg(16)->Arg(64);

void BM_fixed_point_pl(benchmark::State& state) {
    int n = (int)state.range(0);
    MetricTree t = unit_path(n);
    PlMap m;
    for (int v = 0; v < n; ++v) m.images.push_back(t.vertex_point(n - 1 - v));
    for (auto _ : state) benchmark::DoNotOptimize(fixed_point_pl(t, m));
}
BENCHMARK(BM_fixed_point_pl)->Arg(16)->Arg(64)->Arg(256);

void BM_cycle_majority(benchmark::State& state) {
    int n = (int)state.range(0);
    MetricCycle c(n, std::vector<Rat>(n, Rat(1)));
    CycleKkmCover k;
    Rat half = Rat(n) / 2;
    for (int v = 0; v < n; ++v) {
        CycleSet s(c);
        Rat at = c.position(c.vertex_point(v));
        s.add_arc(at - half / 2, at + half / 2 + Rat(1, 4));
        k.sets.push_back(s);
    }
    for (auto _ : state) benchmark::DoNotOptimize(majority_point(c, k));
}
BENCHMARK(BM_cycle_majority)->Arg(16)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
