#include <benchmark/benchmark.h>

#include <random>

#include "semwidth/decomposition.hpp"
#include "semwidth/edge_cover.hpp"
#include "semwidth/generators.hpp"
#include "semwidth/homomorphism.hpp"
#include "semwidth/hypergraph.hpp"
#include "semwidth/semantic.hpp"

using namespace semwidth;

namespace {

Hypergraph bench_hypergraph(int seed, int vertices, int edges) {
    std::mt19937_64 rng(seed);
    VertexSet vs;
    std::vector<Vertex> list;
    for (int i = 0; i < vertices; ++i) {
        list.push_back("v" + std::to_string(i));
        vs.insert(list.back());
    }
    EdgeSet es;
    for (int j = 0; j < edges; ++j) {
        Edge e;
        const int size = 2 + static_cast<int>(rng() % 3);
        for (int k = 0; k < size; ++k) e.insert(list[rng() % vertices]);
        es.insert(std::move(e));
    }
    VertexSet covered;
    for (const Edge& e : es) covered.insert(e.begin(), e.end());
    for (const Vertex& v : list)
        if (!covered.count(v)) es.insert(Edge{v});
    return Hypergraph(std::move(vs), std::move(es));
}

void BM_parse_render(benchmark::State& state) {
    const ConjunctiveQuery q = gen_parity_grid(3, 3);
    const std::string text = render_query(q);
    for (auto _ : state) benchmark::DoNotOptimize(render_query(parse_query(text)));
}
BENCHMARK(BM_parse_render);

void BM_rho_star(benchmark::State& state) {
    const Hypergraph H = bench_hypergraph(1, static_cast<int>(state.range(0)),
                                          static_cast<int>(state.range(0)) + 4);
    for (auto _ : state) benchmark::DoNotOptimize(rho_star(H));
}
BENCHMARK(BM_rho_star)->Arg(6)->Arg(8)->Arg(10);

void BM_fhw_exact(benchmark::State& state) {
    const Hypergraph H = bench_hypergraph(2, static_cast<int>(state.range(0)),
                                          static_cast<int>(state.range(0)) + 2);
    for (auto _ : state) benchmark::DoNotOptimize(fhw_exact(H));
}
BENCHMARK(BM_fhw_exact)->Arg(6)->Arg(8)->Arg(10);

void BM_ghw_grid(benchmark::State& state) {
    const Hypergraph H = hypergraph_of(gen_parity_grid(2, static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(ghw_exact(H));
}
BENCHMARK(BM_ghw_grid)->Arg(3)->Arg(4)->Arg(5);

void BM_core_grid(benchmark::State& state) {
    const ConjunctiveQuery q = gen_parity_grid(static_cast<int>(state.range(0)),
                                               static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(compute_core(q));
}
BENCHMARK(BM_core_grid)->Arg(2)->Arg(3)->Arg(4);

void BM_semantic_rho_star_inflated(benchmark::State& state) {
    const ConjunctiveQuery q = gen_inflation(gen_parity_grid(2, 2),
                                             static_cast<int>(state.range(0)), 17);
    for (auto _ : state)
        benchmark::DoNotOptimize(semantic_width(q, WidthNotion::RhoStar));
}
BENCHMARK(BM_semantic_rho_star_inflated)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
