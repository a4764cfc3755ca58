#include <oddwalk/kernels.hh>
#include <oddwalk/rng.hh>
#include <oddwalk/sphere.hh>

#include <benchmark/benchmark.h>

#include <cmath>
#include <map>
#include <numbers>

using namespace oddwalk;

namespace
{
    const double eps = std::numbers::pi / 5;

    const SphereSample & sample(int N)
    {
        static std::map<int, SphereSample> cache;
        auto it = cache.find(N);
        if (it == cache.end())
        {
            SplitMix64 rng(11 + N);
            std::vector<std::vector<double>> points(N, std::vector<double>(3));
            for (auto & p : points)
                for (double & c : p)
                    c = rng.gaussian();
            it = cache.emplace(N, SphereSample::from_points(2, points)).first;
        }
        return it->second;
    }

    const Graph & graph(int N)
    {
        static std::map<int, Graph> cache;
        auto it = cache.find(N);
        if (it == cache.end())
            it = cache.emplace(N, sample_approximation(2, eps, N, 11).graph).first;
        return it->second;
    }

    template <bool parallel>
    void adjacency(benchmark::State & state)
    {
        auto & s = sample(state.range(0));
        for (auto _ : state) {
            auto a = parallel ? kernels::dot_below_adjacency(s.coords, s.dim(), -std::cos(eps)) :
                kernels::dot_below_adjacency_serial(s.coords, s.dim(), -std::cos(eps));
            benchmark::DoNotOptimize(a);
        }
    }

    template <bool parallel>
    void nearest(benchmark::State & state)
    {
        auto & q = sample(state.range(0));
        auto & s = sample(200);
        for (auto _ : state) {
            auto a = parallel ? kernels::nearest_sites(q.coords, s.coords, q.dim()) :
                kernels::nearest_sites_serial(q.coords, s.coords, q.dim());
            benchmark::DoNotOptimize(a);
        }
    }

    template <bool parallel>
    void covering(benchmark::State & state)
    {
        auto & q = sample(state.range(0));
        auto & s = sample(200);
        for (auto _ : state) {
            double d = parallel ? kernels::max_nearest_distance(q.coords, s.coords, q.dim()) :
                kernels::max_nearest_distance_serial(q.coords, s.coords, q.dim());
            benchmark::DoNotOptimize(d);
        }
    }

    template <bool parallel>
    void girth(benchmark::State & state)
    {
        auto & g = graph(state.range(0));
        for (auto _ : state) {
            auto d = parallel ? kernels::odd_girth(g) : kernels::odd_girth_serial(g);
            benchmark::DoNotOptimize(d);
        }
    }
}

BENCHMARK(adjacency<false>)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(adjacency<true>)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(nearest<false>)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(nearest<true>)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(covering<false>)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(covering<true>)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(girth<false>)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(girth<true>)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
