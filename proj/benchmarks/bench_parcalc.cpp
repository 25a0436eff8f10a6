#include <benchmark/benchmark.h>

#include <random>

#include "parcalc/metrics.hpp"
#include "parcalc/problem_spec.hpp"
#include "parcalc/scheduler.hpp"

namespace {

using namespace parcalc;

// Layered DAG: `size` nodes, edges only point to earlier nodes.
DependencyDag random_dag(std::size_t size, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution edge(0.15);
    std::vector<ElementId> elements;
    std::vector<DependencyEdge> edges;
    auto id = [](std::size_t i) {
        std::string text = std::to_string(i);
        return ElementId("v" + std::string(4 - text.size(), '0') + text);
    };
    for (std::size_t i = 0; i < size; ++i) {
        elements.push_back(id(i));
        for (std::size_t j = 0; j < i; ++j) {
            if (edge(rng)) {
                edges.push_back({id(i), id(j)});
            }
        }
    }
    return build_dag(std::move(elements), std::move(edges));
}

Algorithm unit_algorithm(const DependencyDag& dag) {
    std::vector<Subproblem> parts;
    std::vector<DependencyEdge> deps = dag.edges();
    const auto n = static_cast<std::int64_t>(dag.size());
    for (const auto& element : dag.elements()) {
        parts.push_back({element, {"work", 1}});
    }
    Decomposition d = decompose({"work", n > 1 ? n : 2}, std::move(parts), std::move(deps));
    std::map<ElementId, Operator> assignment;
    for (const auto& element : dag.elements()) {
        assignment.emplace(element, Operator("op", Rational(1)));
    }
    return bind_operators(d, assignment);
}

void BM_BuildDag(benchmark::State& state) {
    const auto size = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(random_dag(size, 42));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildDag)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_Levelize(benchmark::State& state) {
    const auto dag = random_dag(static_cast<std::size_t>(state.range(0)), 42);
    for (auto _ : state) {
        benchmark::DoNotOptimize(levelize(dag));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Levelize)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_ScheduleLevelChunked(benchmark::State& state) {
    const auto dag = random_dag(static_cast<std::size_t>(state.range(0)), 42);
    const auto algorithm = unit_algorithm(dag);
    const auto m_d = levelize(dag);
    for (auto _ : state) {
        benchmark::DoNotOptimize(schedule_level_chunked(algorithm, m_d, 8));
    }
}
BENCHMARK(BM_ScheduleLevelChunked)->RangeMultiplier(2)->Range(16, 256);

void BM_ScheduleGreedy(benchmark::State& state) {
    const auto dag = random_dag(static_cast<std::size_t>(state.range(0)), 42);
    const auto algorithm = unit_algorithm(dag);
    for (auto _ : state) {
        benchmark::DoNotOptimize(schedule_greedy_list(algorithm, dag, 8));
    }
}
BENCHMARK(BM_ScheduleGreedy)->RangeMultiplier(2)->Range(16, 256);

void BM_MetricsReport(benchmark::State& state) {
    const auto dag = random_dag(static_cast<std::size_t>(state.range(0)), 42);
    const auto algorithm = unit_algorithm(dag);
    const auto m = schedule_level_chunked(algorithm, levelize(dag), 8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(report(m));
    }
}
BENCHMARK(BM_MetricsReport)->RangeMultiplier(2)->Range(16, 256);

void BM_ReductionAnalysis(benchmark::State& state) {
    const auto spec = make_reduction_spec(state.range(0), std::nullopt);
    for (auto _ : state) {
        const Instance instance = instantiate(spec);
        const auto m =
            schedule_level_chunked(instance.algorithm, levelize(instance.decomposition.dag()),
                                   static_cast<std::size_t>(state.range(0)) / 2);
        benchmark::DoNotOptimize(report(m));
    }
}
BENCHMARK(BM_ReductionAnalysis)->RangeMultiplier(2)->Range(16, 512);

}  // namespace

BENCHMARK_MAIN();
