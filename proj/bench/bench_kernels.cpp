#include <benchmark/benchmark.h>

#include <cmath>
#include <map>
#include <random>

#include "arstat/fock.hpp"
#include "arstat/kernels.hpp"
#include "arstat/measure.hpp"
#include "arstat/quadrature.hpp"

using namespace arstat;

namespace {

// Ladder product on an r=3 bosonic space; range(0) is n_max.
const Representation& rep_for(int n_max) {
    static std::map<int, Representation> cache;
    auto it = cache.find(n_max);
    if (it == cache.end()) it = cache.emplace(n_max, Representation(make_spec(3, 1, 3, n_max))).first;
    return it->second;
}

std::vector<cplx> random_state(std::size_t dim) {
    std::mt19937 gen(1);
    std::normal_distribution<double> g;
    std::vector<cplx> v(dim);
    for (auto& x : v) x = {g(gen), g(gen)};
    return v;
}

template <auto Multiply>
void BM_multiply(benchmark::State& state) {
    const auto& rep = rep_for(static_cast<int>(state.range(0)));
    const auto comm = rep.raising(0) * rep.lowering(1);
    for (auto _ : state) benchmark::DoNotOptimize(Multiply(comm, rep.raising(2)));
    state.counters["dim"] = static_cast<double>(rep.dim());
}

template <auto Apply>
void BM_apply(benchmark::State& state) {
    const auto& rep = rep_for(static_cast<int>(state.range(0)));
    const auto h = rep.hamiltonian() + rep.raising(0) * rep.lowering(1);
    const auto x = random_state(rep.dim());
    std::vector<cplx> y(rep.dim());
    for (auto _ : state) {
        Apply(h, x, y);
        benchmark::DoNotOptimize(y.data());
    }
    state.counters["dim"] = static_cast<double>(rep.dim());
}

template <auto Integrate>
void BM_moment_quadrature(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto f = [n](double R) { return measure_kernel(3, 2, R) * std::pow(R, 2 * n + 3); };
    quad::Config cfg;
    cfg.initial_panels = 256;
    for (auto _ : state) benchmark::DoNotOptimize(Integrate(f, 0.0, 40.0, cfg).value);
}

}  // namespace

BENCHMARK(BM_multiply<kernels::serial::multiply>)->Name("multiply/serial")->Arg(8)->Arg(16)->Arg(24);
BENCHMARK(BM_multiply<kernels::parallel::multiply>)->Name("multiply/parallel")->Arg(8)->Arg(16)->Arg(24);
BENCHMARK(BM_apply<kernels::serial::apply>)->Name("apply/serial")->Arg(16)->Arg(32);
BENCHMARK(BM_apply<kernels::parallel::apply>)->Name("apply/parallel")->Arg(16)->Arg(32);
BENCHMARK(BM_moment_quadrature<quad::serial::integrate>)->Name("quadrature/serial")->Arg(0)->Arg(5);
BENCHMARK(BM_moment_quadrature<quad::parallel::integrate>)->Name("quadrature/parallel")->Arg(0)->Arg(5);

BENCHMARK_MAIN();
